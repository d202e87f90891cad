"""Ordered alphabets, multisets and words.

Letters are the ranks ``1..n`` of an ordered alphabet and a word is a plain
tuple of ranks.  Everything here is a pure function on immutable values.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

Word = Tuple[int, ...]


class WordError(ValueError):
    """Base class for invalid inputs to word operations."""


class EmptyWord(WordError):
    pass


class ParseError(WordError):
    def __init__(self, message: str, position: int = 0):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class Ordering(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


@dataclass(frozen=True)
class Alphabet:
    size: int

    def __post_init__(self):
        if self.size < 1:
            raise WordError("alphabet size must be >= 1")

    @property
    def letters(self) -> range:
        return range(1, self.size + 1)

    def __contains__(self, letter) -> bool:
        return isinstance(letter, int) and 1 <= letter <= self.size

    def check(self, w: Sequence[int]) -> Word:
        for i, a in enumerate(w):
            if a not in self:
                raise WordError(f"letter {a!r} at position {i} outside alphabet 1..{self.size}")
        return tuple(w)


@dataclass(frozen=True)
class MultisetSpec:
    """The multiset ``[1^m1, ..., n^mn]`` over the alphabet ``1..n``."""

    multiplicities: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "multiplicities", tuple(int(m) for m in self.multiplicities))
        if not self.multiplicities:
            raise WordError("a multiset needs an alphabet of size >= 1")
        if any(m < 0 for m in self.multiplicities):
            raise WordError("multiplicities must be non-negative")

    @classmethod
    def from_word(cls, w: Sequence[int], size: int | None = None) -> "MultisetSpec":
        return cls(content(w, size or max(w, default=1)))

    @property
    def alphabet(self) -> Alphabet:
        return Alphabet(len(self.multiplicities))

    @property
    def cardinality(self) -> int:
        return sum(self.multiplicities)

    def __str__(self) -> str:
        return format_multiset(self)


def lex_compare(u: Sequence[int], v: Sequence[int]) -> Tuple[Ordering, bool]:
    """Three-way lexicographic comparison.

    Returns ``(ordering, proper_prefix)`` where ``proper_prefix`` is true when
    the smaller word is a strict prefix of the larger one.
    """
    for a, b in zip(u, v):
        if a != b:
            return (Ordering.LESS if a < b else Ordering.GREATER), False
    if len(u) == len(v):
        return Ordering.EQUAL, False
    return (Ordering.LESS if len(u) < len(v) else Ordering.GREATER), True


def precedes(u: Sequence[int], v: Sequence[int]) -> bool:
    """Strict lexicographic order; a proper prefix precedes its extensions."""
    return lex_compare(u, v)[0] is Ordering.LESS


def _require_nonempty(w: Sequence[int]) -> None:
    if len(w) == 0:
        raise EmptyWord("operation undefined on the empty word")


def conjugates(w: Sequence[int]) -> List[Word]:
    """All rotations of ``w``, the i-th starting at offset i."""
    _require_nonempty(w)
    w = tuple(w)
    return [w[i:] + w[:i] for i in range(len(w))]


def is_conjugate(u: Sequence[int], v: Sequence[int]) -> bool:
    _require_nonempty(u)
    _require_nonempty(v)
    return len(u) == len(v) and tuple(v) in conjugates(u)


def is_primitive(w: Sequence[int]) -> bool:
    """True unless ``w`` is ``u^n`` for some ``n >= 2``."""
    _require_nonempty(w)
    w = tuple(w)
    return _smallest_period(w) == len(w)


def _smallest_period(w: Word) -> int:
    n = len(w)
    for p in range(1, n):
        if n % p == 0 and w[p:] == w[:-p]:
            return p
    return n


def content(w: Sequence[int], size: int | None = None) -> Tuple[int, ...]:
    """Per-letter occurrence counts of ``w``; the exponent vector of its weight."""
    if size is None:
        size = max(w, default=0)
    counts = [0] * size
    for a in w:
        counts[a - 1] += 1
    return tuple(counts)


def add_contents(c1: Sequence[int], c2: Sequence[int]) -> Tuple[int, ...]:
    if len(c1) != len(c2):
        raise WordError("content vectors of different lengths")
    return tuple(a + b for a, b in zip(c1, c2))


def count_permutations(M: MultisetSpec) -> int:
    """Multinomial coefficient N! / (m1! ... mn!)."""
    total = math.factorial(M.cardinality)
    for m in M.multiplicities:
        total //= math.factorial(m)
    return total


# -- text formats -----------------------------------------------------------

def format_word(w: Sequence[int]) -> str:
    if not w:
        return ""
    if max(w) <= 9:
        return "".join(str(a) for a in w)
    # a lone multi-digit letter keeps a trailing comma so it reparses as one letter
    return ",".join(str(a) for a in w) + ("," if len(w) == 1 else "")


def parse_word(text: str) -> Word:
    text = text.strip()
    if not text:
        raise ParseError("empty word", 0)
    if "," in text:
        letters = []
        pos = 0
        chunks = text.split(",")
        if len(chunks) == 2 and not chunks[1].strip():
            chunks = chunks[:1]
        for chunk in chunks:
            s = chunk.strip()
            if not s.isdigit() or int(s) < 1:
                raise ParseError(f"invalid letter {chunk!r}", pos)
            letters.append(int(s))
            pos += len(chunk) + 1
        return tuple(letters)
    for i, ch in enumerate(text):
        if ch not in "123456789":
            raise ParseError(f"invalid letter {ch!r}", i)
    return tuple(int(ch) for ch in text)


def parse_multiset(text: str) -> MultisetSpec:
    """Parse ``"1:2,2:1,3:1"`` into ``[1^2, 2^1, 3^1]``.

    Ranks missing from the list get multiplicity zero.
    """
    text = text.strip()
    if not text:
        raise ParseError("empty multiset", 0)
    entries = {}
    pos = 0
    for chunk in text.split(","):
        try:
            rank_s, mult_s = chunk.split(":")
            rank, mult = int(rank_s), int(mult_s)
        except ValueError:
            raise ParseError(f"expected rank:multiplicity, got {chunk!r}", pos) from None
        if rank < 1 or mult < 0:
            raise ParseError(f"invalid entry {chunk!r}", pos)
        if rank in entries:
            raise ParseError(f"duplicate rank {rank}", pos)
        entries[rank] = mult
        pos += len(chunk) + 1
    size = max(entries)
    return MultisetSpec(tuple(entries.get(r, 0) for r in range(1, size + 1)))


def format_multiset(M: MultisetSpec) -> str:
    return ",".join(f"{r}:{m}" for r, m in enumerate(M.multiplicities, start=1))


def all_words(size: int, length: int) -> Iterable[Word]:
    """Every word of the given length over ``1..size``, in lexicographic order."""
    return itertools.product(range(1, size + 1), repeat=length)
