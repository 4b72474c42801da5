"""Phoneme inventories, transcriptions, and stress patterns.

Transcription text is whitespace-separated tokens. Each token is a
phoneme symbol, optionally followed by a single stress digit on vowels
(1 primary, 2 secondary, 0 unstressed), e.g. ``k ae1 n d @0 l``. A bare
``+`` token marks the boundary between the two halves of a compound;
at most one is allowed. Symbols themselves are free-form UTF-8 (IPA or
ASCII schemes both work) as long as they are declared in the inventory.

Inventory documents are line-oriented: ``symbol<TAB>V|C`` per line,
``#`` comments and blank lines ignored.
"""

from __future__ import annotations

import enum
import hashlib
from dataclasses import dataclass

from .errors import (
    BadStressDigit,
    DuplicateSymbol,
    EmptyDocument,
    EmptyTranscription,
    MissingStress,
    NoNucleus,
    TooManyBoundaries,
    UnknownClass,
    UnknownSymbol,
)

VOWEL = "V"
CONSONANT = "C"

BOUNDARY_MARK = "+"


class Stress(enum.Enum):
    STRONG = "s"
    WEAK = "w"


@dataclass(frozen=True)
class PhonemeInventory:
    """Ordered phoneme set with a V/C class per symbol."""

    symbols: tuple[str, ...]
    classes: dict[str, str]
    digest: str

    def __contains__(self, symbol: str) -> bool:
        return symbol in self.classes

    def is_vowel(self, symbol: str) -> bool:
        return self.classes[symbol] == VOWEL

    @property
    def vowels(self) -> tuple[str, ...]:
        return tuple(s for s in self.symbols if self.classes[s] == VOWEL)

    @property
    def consonants(self) -> tuple[str, ...]:
        return tuple(s for s in self.symbols if self.classes[s] == CONSONANT)


@dataclass(frozen=True)
class Token:
    """One transcription token: a symbol plus an optional stress digit."""

    symbol: str
    stress: int | None
    is_vowel: bool


@dataclass(frozen=True)
class Transcription:
    """Token sequence with an optional compound boundary.

    ``boundary`` is the index of the first token of the second
    phonological word, or None for a single word.
    """

    tokens: tuple[Token, ...]
    boundary: int | None = None

    def words(self) -> tuple[tuple[Token, ...], ...]:
        """Token runs per phonological word (one or two)."""
        if self.boundary is None:
            return (self.tokens,)
        return (self.tokens[: self.boundary], self.tokens[self.boundary :])

    def vowel_count(self) -> int:
        return sum(1 for t in self.tokens if t.is_vowel)


def load_inventory(document: str) -> PhonemeInventory:
    """Parse an inventory document into a PhonemeInventory.

    Raises DuplicateSymbol, UnknownClass, or EmptyDocument. The digest
    is a sha256 over the canonical symbol/class pairs, so comments and
    blank lines do not affect it.
    """
    symbols: list[str] = []
    classes: dict[str, str] = {}
    for lineno, line in enumerate(document.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise UnknownClass(f"line {lineno}: expected 'symbol<TAB>V|C', got {line!r}")
        symbol, cls = parts
        if cls not in (VOWEL, CONSONANT):
            raise UnknownClass(f"line {lineno}: class must be V or C, got {cls!r}")
        if symbol in classes:
            raise DuplicateSymbol(f"line {lineno}: symbol {symbol!r} declared twice")
        symbols.append(symbol)
        classes[symbol] = cls
    if not symbols:
        raise EmptyDocument("inventory document declares no symbols")
    canon = "\n".join(f"{s}\t{classes[s]}" for s in symbols)
    digest = hashlib.sha256(canon.encode("utf-8")).hexdigest()
    return PhonemeInventory(tuple(symbols), classes, digest)


def tokenize(raw: str, inv: PhonemeInventory) -> Transcription:
    """Parse transcription text against an inventory.

    A trailing digit on a token is its stress digit and must sit on a
    vowel; a bare ``+`` marks the compound boundary.
    """
    fields = raw.split()
    if not fields:
        raise EmptyTranscription("empty transcription text")
    tokens: list[Token] = []
    boundary: int | None = None
    for field in fields:
        if field == BOUNDARY_MARK:
            if boundary is not None:
                raise TooManyBoundaries(f"more than one {BOUNDARY_MARK!r} in {raw!r}")
            if not tokens:
                raise EmptyTranscription(f"boundary at start of {raw!r}")
            boundary = len(tokens)
            continue
        stress: int | None = None
        symbol = field
        if field[-1].isdigit():
            symbol, digit = field[:-1], field[-1]
            if digit not in "012":
                raise BadStressDigit(f"stress digit must be 0, 1, or 2: {field!r}")
            stress = int(digit)
        if symbol not in inv:
            raise UnknownSymbol(f"symbol {symbol!r} not in inventory")
        is_vowel = inv.is_vowel(symbol)
        if stress is not None and not is_vowel:
            raise BadStressDigit(f"stress digit on consonant: {field!r}")
        tokens.append(Token(symbol, stress, is_vowel))
    if boundary is not None and boundary == len(tokens):
        raise EmptyTranscription(f"boundary at end of {raw!r}")
    return Transcription(tuple(tokens), boundary)


def format_transcription(t: Transcription) -> str:
    """Inverse of tokenize: canonical whitespace-separated text."""
    fields = []
    for i, tok in enumerate(t.tokens):
        if t.boundary is not None and i == t.boundary:
            fields.append(BOUNDARY_MARK)
        fields.append(tok.symbol if tok.stress is None else f"{tok.symbol}{tok.stress}")
    return " ".join(fields)


def _word_stresses(word: tuple[Token, ...]) -> list[Stress]:
    nuclei = [t for t in word if t.is_vowel]
    if not nuclei:
        raise NoNucleus("phonological word has no vowel")
    if len(nuclei) == 1 and nuclei[0].stress is None:
        # dictionaries leave monosyllables unmarked; they carry main stress
        return [Stress.STRONG]
    out = []
    for tok in nuclei:
        if tok.stress is None:
            raise MissingStress(f"vowel {tok.symbol!r} lacks a stress digit")
        out.append(Stress.WEAK if tok.stress == 0 else Stress.STRONG)
    return out


def stress_pattern(t: Transcription) -> tuple[Stress, ...]:
    """Per-syllable stress, one entry per vowel token.

    Digits 1 and 2 map to STRONG, 0 to WEAK. A word with a single
    undigited vowel defaults to STRONG; a polysyllabic word with any
    undigited vowel raises MissingStress. Rules apply per phonological
    word, so both halves of an unmarked compound default independently.
    """
    pattern: list[Stress] = []
    for word in t.words():
        pattern.extend(_word_stresses(word))
    return tuple(pattern)
