"""Permutations of [n]: cycles, cycle index, inversions."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import List, Sequence, Tuple


@dataclass(frozen=True)
class Permutation:
    """One-line form ``(t(1), ..., t(n))``."""

    images: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"{self.images} is not a permutation of 1..{len(self.images)}")

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        text = text.strip()
        if "," in text:
            return cls(tuple(int(x) for x in text.split(",")))
        return cls(tuple(int(ch) for ch in text))


@dataclass(frozen=True)
class CycleDecomposition:
    """Cycles each starting at their minimum, sorted by minimum."""

    cycles: Tuple[Tuple[int, ...], ...]

    @property
    def k(self) -> int:
        return len(self.cycles)

    @property
    def n(self) -> int:
        return sum(len(c) for c in self.cycles)

    def to_permutation(self) -> Permutation:
        images = [0] * self.n
        for c in self.cycles:
            for a, b in zip(c, c[1:] + c[:1]):
                images[a - 1] = b
        return Permutation(tuple(images))

    def __str__(self) -> str:
        sep = "" if self.n <= 9 else ","
        return "".join("(" + sep.join(map(str, c)) + ")" for c in self.cycles)


def cycles(t: Permutation) -> CycleDecomposition:
    seen = [False] * (t.n + 1)
    out: List[Tuple[int, ...]] = []
    for start in range(1, t.n + 1):
        if seen[start]:
            continue
        cycle = []
        i = start
        while not seen[i]:
            seen[i] = True
            cycle.append(i)
            i = t(i)
        out.append(tuple(cycle))
    return CycleDecomposition(tuple(out))


def cycle_index(t: Permutation) -> int:
    return t.n - cycles(t).k


def inversions(t: Permutation) -> int:
    p = t.images
    return sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])


def all_permutations(n: int):
    for p in itertools.permutations(range(1, n + 1)):
        yield Permutation(p)


def even_odd_counts(n: int) -> Tuple[int, int]:
    """Numbers of even and odd permutations of [n], by cycle index."""
    if n < 1:
        raise ValueError("n must be >= 1")
    even = sum(1 for t in all_permutations(n) if cycle_index(t) % 2 == 0)
    return even, math.factorial(n) - even


def cauchy_check(n: int) -> Tuple[int, List[str]]:
    """Compare inversion parity with cycle-index parity over all of S_n."""
    checked, failures = 0, []
    for t in all_permutations(n):
        checked += 1
        inv, ind = inversions(t), cycle_index(t)
        if inv % 2 != ind % 2:
            failures.append(f"{''.join(map(str, t.images))}: inv={inv} index={ind}")
    return checked, failures


def cycle_type_counts(n: int) -> List[int]:
    """``counts[k]`` = permutations of [n] with exactly k cycles, by brute force."""
    counts = [0] * (n + 1)
    for t in all_permutations(n):
        counts[cycles(t).k] += 1
    return counts


def format_permutation(p: Sequence[int]) -> str:
    return ("" if max(p, default=0) <= 9 else ",").join(map(str, p))
