"""Acceptability scores for novel words.

Four numbers summarize a word's best parse: the parse probability
(product over paths), its natural log, and the probabilities of the
worst and best single path inside that parse. The worst part often
carries the judgment: one terrible onset sinks a word whose rhymes are
all fine.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

from .errors import PhonotaxError
from .parse import ScoredParse, parse_all
from .phonology import PhonemeInventory, Transcription, tokenize
from .train import TrainedModel


@dataclass(frozen=True)
class ScoreReport:
    p_word: float
    ln_p_word: float
    p_worst: float
    p_best: float
    best: ScoredParse


def score_word(model: TrainedModel, t: Transcription) -> ScoreReport:
    """Score a transcription by its best parse."""
    forest = parse_all(t, model)
    best = forest[0]
    return ScoreReport(
        p_word=best.product,
        ln_p_word=math.log(best.product),
        p_worst=min(best.probabilities),
        p_best=max(best.probabilities),
        best=best,
    )


@dataclass(frozen=True)
class BatchRow:
    word_id: str
    report: ScoreReport | None
    error: str | None


def parse_stimuli(document: str) -> list[tuple[str, str]]:
    """Read stimulus lines: ``word_id<TAB>transcription-text``.

    ``#`` comments and blank lines are ignored; an empty document is an
    empty batch, not an error. A line without a tab becomes a row with
    an empty transcription, which then fails per-row downstream rather
    than aborting the batch. Word ids are carried through verbatim;
    uniqueness is the caller's concern.
    """
    rows: list[tuple[str, str]] = []
    for line in document.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        word_id, _, raw = line.partition("\t")
        rows.append((word_id.strip(), raw))
    return rows


def score_batch(
    model: TrainedModel, rows: Iterable[tuple[str, str]], inv: PhonemeInventory
) -> list[BatchRow]:
    """Score many stimuli; a bad row reports its error, never aborts the batch."""
    out: list[BatchRow] = []
    for word_id, raw in rows:
        try:
            report = score_word(model, tokenize(raw, inv))
        except PhonotaxError as err:
            out.append(BatchRow(word_id, None, f"{type(err).__name__}: {err}"))
            continue
        out.append(BatchRow(word_id, report, None))
    return out
