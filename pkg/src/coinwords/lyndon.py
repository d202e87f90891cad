"""Lyndon words, the Chen-Fox-Lyndon factorization and Lyndon tuples."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from .words import (
    Word,
    WordError,
    _require_nonempty,
    format_word,
    precedes,
)


class NotLyndon(WordError):
    pass


class SingleLetter(WordError):
    pass


class NonDistinctFactors(WordError):
    """The Lyndon factorization repeats a factor, so there is no Lyndon tuple."""

    def __init__(self, word: Sequence[int], factors: Sequence[Word]):
        super().__init__(
            f"{format_word(word)} has repeated Lyndon factors "
            + "".join(f"({format_word(f)})" for f in factors)
        )
        self.word = tuple(word)
        self.factors = list(factors)


class Parity(enum.Enum):
    EVEN = "even"
    ODD = "odd"

    @classmethod
    def of(cls, index: int) -> "Parity":
        return cls.EVEN if index % 2 == 0 else cls.ODD

    def flipped(self) -> "Parity":
        return Parity.ODD if self is Parity.EVEN else Parity.EVEN


def is_lyndon(w: Sequence[int]) -> bool:
    """True iff ``w`` is strictly smaller than each of its proper rotations.

    Strictness also rules out periodic words, whose rotation class contains
    ``w`` itself at a non-zero offset.
    """
    _require_nonempty(w)
    w = tuple(w)
    return all(w < w[i:] + w[:i] for i in range(1, len(w)))


def cfl_factorization(w: Sequence[int]) -> List[Word]:
    """Duval's linear scan; factors come out non-increasing."""
    _require_nonempty(w)
    w = tuple(w)
    n = len(w)
    factors: List[Word] = []
    i = 0
    while i < n:
        j, k = i + 1, i
        while j < n and w[k] <= w[j]:
            k = i if w[k] < w[j] else k + 1
            j += 1
        period = j - k
        while i <= k:
            factors.append(w[i:i + period])
            i += period
    return factors


def standard_factorization(l: Sequence[int]) -> Tuple[Word, Word]:
    """Split a Lyndon word as ``l = r s`` with ``s`` its smallest proper suffix.

    The smallest proper suffix is also the longest proper suffix that is a
    Lyndon word, and both halves are Lyndon.
    """
    l = tuple(l)
    if len(l) == 1:
        raise SingleLetter(f"{format_word(l)} is a single letter")
    if not is_lyndon(l):
        raise NotLyndon(f"{format_word(l)} is not a Lyndon word")
    cut = min(range(1, len(l)), key=lambda i: l[i:])
    return l[:cut], l[cut:]


@dataclass(frozen=True)
class LyndonTuple:
    """Distinct Lyndon words held in strictly increasing lexicographic order."""

    factors: Tuple[Word, ...]

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(tuple(f) for f in self.factors))
        if not self.factors:
            raise WordError("a Lyndon tuple has at least one factor")
        for f in self.factors:
            if not f or not is_lyndon(f):
                raise NotLyndon(f"{format_word(f)} is not a Lyndon word")
        for a, b in zip(self.factors, self.factors[1:]):
            if not precedes(a, b):
                raise WordError("tuple factors must be strictly increasing")

    @property
    def k(self) -> int:
        return len(self.factors)

    @property
    def total_length(self) -> int:
        return sum(len(f) for f in self.factors)

    def __len__(self) -> int:
        return len(self.factors)

    def __getitem__(self, i):
        return self.factors[i]

    def __str__(self) -> str:
        return "(" + ",".join(format_word(f) for f in self.factors) + ")"


def lyndon_tuple(w: Sequence[int]) -> LyndonTuple:
    factors = cfl_factorization(w)
    for a, b in zip(factors, factors[1:]):
        if a == b:
            raise NonDistinctFactors(w, factors)
    return LyndonTuple(tuple(reversed(factors)))


def has_lyndon_tuple(w: Sequence[int]) -> bool:
    factors = cfl_factorization(w)
    return all(a != b for a, b in zip(factors, factors[1:]))


def tuple_to_word(t: LyndonTuple) -> Word:
    """Concatenate the factors largest first."""
    return tuple(a for f in reversed(t.factors) for a in f)


def lyndon_index(w: Sequence[int]) -> int:
    return len(w) - lyndon_tuple(w).k


def parity(w: Sequence[int]) -> Parity:
    return Parity.of(lyndon_index(w))
