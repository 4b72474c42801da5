"""Parse novel transcriptions against a trained model.

A novel word does not announce its syllable boundaries, so every legal
split of the medial cluster is a candidate segmentation. Each
segmentation is scored under every word template its stress pattern
generates; the parse probability is the product of its path
probabilities, and the forest is ordered best first. Ties break on the
rendered path text so the ordering is reproducible.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .errors import NoNucleus, ThreePlusNuclei, UnsupportedStressPattern
from .grammar import (
    ConstituentKind,
    PathType,
    UnifiedParse,
    WordTemplate,
    format_path,
    sequential_unify,
    templates_for,
)
from .phonology import Token, Transcription, stress_pattern
from .train import TrainedModel

# one word's candidate split: (onset, rhyme) token runs per syllable
Segmentation = tuple[tuple[tuple[Token, ...], tuple[Token, ...]], ...]


def enumerate_segmentations(t: Transcription) -> list[Segmentation]:
    """All candidate onset/rhyme splits, flattened across words.

    A monosyllabic word has exactly one split. A disyllabic word with m
    medial consonants has m+1, ordered by how many of them the second
    onset takes: all of them first, none last. Words combine by cross
    product, so a marked compound of two monosyllables still yields one
    candidate.
    """
    per_word: list[list[Segmentation]] = []
    for word in t.words():
        nuclei = [i for i, tok in enumerate(word) if tok.is_vowel]
        if not nuclei:
            raise NoNucleus("word has no vowel")
        if len(nuclei) > 2:
            raise ThreePlusNuclei(f"word has {len(nuclei)} nuclei; at most two are supported")
        if len(nuclei) == 1:
            n = nuclei[0]
            per_word.append([((word[:n], word[n:]),)])
            continue
        n0, n1 = nuclei
        cluster = word[n0 + 1 : n1]
        candidates: list[Segmentation] = []
        for keep in range(len(cluster) + 1):  # consonants kept by the first rhyme
            first = (word[:n0], word[n0 : n0 + 1 + keep])
            second = (cluster[keep:], word[n1:])
            candidates.append((first, second))
        per_word.append(candidates)
    return [tuple(itertools.chain.from_iterable(combo)) for combo in itertools.product(*per_word)]


@dataclass(frozen=True)
class ScoredParse:
    """A unified parse with its per-path probabilities and their product."""

    parse: UnifiedParse
    probabilities: tuple[float, ...]
    seen: tuple[bool, ...]
    product: float

    @property
    def paths(self) -> tuple[PathType, ...]:
        return self.parse.paths

    @property
    def path_text(self) -> str:
        return " ; ".join(format_path(p) for p in self.paths)


def _score(template: WordTemplate, seg: Segmentation, model: TrainedModel) -> ScoredParse:
    paths: list[PathType] = []
    for cat, (onset, rhyme) in zip(template.categories, seg):
        paths.append(PathType(cat, ConstituentKind.ONSET, tuple(t.symbol for t in onset)))
        paths.append(PathType(cat, ConstituentKind.RHYME, tuple(t.symbol for t in rhyme)))
    unified = sequential_unify(template, paths)
    assert isinstance(unified, UnifiedParse)  # true by construction
    probs = []
    seen = []
    for p in paths:
        prob, was_seen = model.prob(p.cell, p.terminal)
        probs.append(prob)
        seen.append(was_seen)
    return ScoredParse(unified, tuple(probs), tuple(seen), math.prod(probs))


def parse_all(t: Transcription, model: TrainedModel) -> list[ScoredParse]:
    """Score every (template, segmentation) pair, best first.

    An explicit compound boundary commits the parse to a two-word
    template; unmarked input is tried under every template its stress
    pattern generates, so an unmarked strong-strong word competes as
    one word and as a closed compound. Raises UnsupportedStressPattern
    and OutOfScope as the stress pattern dictates.
    """
    pattern = stress_pattern(t)
    templates = templates_for(pattern)
    if t.boundary is not None:
        templates = tuple(tpl for tpl in templates if len(tpl.words) == 2)
        if not templates:
            raise UnsupportedStressPattern(
                "a compound boundary needs two strong monosyllables"
            )
    segmentations = enumerate_segmentations(t)
    forest = [
        _score(template, seg, model)
        for template in templates
        for seg in segmentations
    ]
    forest.sort(key=lambda sp: (-sp.product, sp.path_text))
    return forest


def best_parse(forest: list[ScoredParse]) -> ScoredParse:
    if not forest:
        raise ValueError("empty parse forest")
    return forest[0]
