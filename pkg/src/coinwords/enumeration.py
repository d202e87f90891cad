"""Multiset permutations and the even/odd census of their Lyndon tuples."""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Dict, Iterator, List, Sequence, Tuple

from .lyndon import cfl_factorization
from .words import MultisetSpec, Word, WordError, format_multiset


class EmptyMultiset(WordError):
    pass


def _next_arrangement(a: List[int]) -> bool:
    """Step ``a`` to its lexicographic successor in place; False at the last one."""
    i = len(a) - 2
    while i >= 0 and a[i] >= a[i + 1]:
        i -= 1
    if i < 0:
        return False
    j = len(a) - 1
    while a[j] <= a[i]:
        j -= 1
    a[i], a[j] = a[j], a[i]
    a[i + 1:] = reversed(a[i + 1:])
    return True


def _arrangements(multiplicities: Sequence[int]) -> Iterator[Word]:
    a = [r for r, m in enumerate(multiplicities, start=1) for _ in range(m)]
    yield tuple(a)
    while _next_arrangement(a):
        yield tuple(a)


def words_of(M: MultisetSpec) -> Iterator[Word]:
    """Every permutation of ``M`` exactly once, in lexicographic order."""
    if M.cardinality < 1:
        raise EmptyMultiset("multiset has no elements")
    return _arrangements(M.multiplicities)


def words_with_first_letter(M: MultisetSpec, first: int) -> Iterator[Word]:
    rest = list(M.multiplicities)
    rest[first - 1] -= 1
    if rest[first - 1] < 0:
        return
    for w in _arrangements(rest):
        yield (first,) + w


def sharded_map(fn: Callable, M: MultisetSpec, threads: int = 1) -> list:
    """Run ``fn(M, first_letter)`` for every usable first letter, in letter order.

    With ``threads > 1`` the shards run in worker processes; the result list
    does not depend on the worker count.
    """
    shards = [r for r, m in enumerate(M.multiplicities, start=1) if m > 0]
    if threads <= 1 or len(shards) == 1:
        return [fn(M, r) for r in shards]
    with ProcessPoolExecutor(max_workers=min(threads, len(shards))) as pool:
        return list(pool.map(fn, [M] * len(shards), shards))


@dataclass
class ParityCensus:
    even: int = 0
    odd: int = 0
    excluded: int = 0
    by_k: Dict[int, int] = field(default_factory=dict)

    def add(self, other: "ParityCensus") -> "ParityCensus":
        by_k = dict(self.by_k)
        for k, v in other.by_k.items():
            by_k[k] = by_k.get(k, 0) + v
        return ParityCensus(self.even + other.even, self.odd + other.odd,
                            self.excluded + other.excluded, dict(sorted(by_k.items())))

    @property
    def alternating_sum(self) -> int:
        return sum((-1) ** k * v for k, v in self.by_k.items())


def census_of_words(words) -> ParityCensus:
    census = ParityCensus()
    for w in words:
        factors = cfl_factorization(w)
        if any(a == b for a, b in zip(factors, factors[1:])):
            census.excluded += 1
            continue
        k = len(factors)
        census.by_k[k] = census.by_k.get(k, 0) + 1
        if (len(w) - k) % 2 == 0:
            census.even += 1
        else:
            census.odd += 1
    return census


def _census_shard(M: MultisetSpec, first: int) -> ParityCensus:
    return census_of_words(words_with_first_letter(M, first))


def parity_census(M: MultisetSpec, threads: int = 1) -> ParityCensus:
    if M.cardinality < 1:
        raise EmptyMultiset("multiset has no elements")
    total = ParityCensus()
    for part in sharded_map(_census_shard, M, threads):
        total = total.add(part)
    return total


def census_json(M: MultisetSpec, census: ParityCensus) -> dict:
    return {
        "multiset": format_multiset(M),
        "N": M.cardinality,
        "even": census.even,
        "odd": census.odd,
        "excluded": census.excluded,
        "by_k": {str(k): v for k, v in sorted(census.by_k.items())},
        "alternating_sum": census.alternating_sum,
    }


def b_count(M: MultisetSpec, k: int) -> int:
    """Ways to split ``M`` into k distinct aperiodic necklaces."""
    if not 1 <= k <= M.cardinality:
        return 0
    return parity_census(M).by_k.get(k, 0)


def alternating_sum(M: MultisetSpec) -> int:
    return parity_census(M).alternating_sum


# -- independent oracle: direct search over necklace sets -------------------

def _necklaces(M: MultisetSpec) -> List[Tuple[Word, Tuple[int, ...]]]:
    """Aperiodic necklaces that fit inside ``M``, as (min rotation, content)."""
    found = {}
    ranges = [range(m + 1) for m in M.multiplicities]
    for c in itertools.product(*ranges):
        if sum(c) == 0:
            continue
        letters = [r for r, m in enumerate(c, start=1) for _ in range(m)]
        for w in set(itertools.permutations(letters)):
            rotations = {w[i:] + w[:i] for i in range(len(w))}
            if len(rotations) == len(w):
                found[min(rotations)] = c
    return sorted(found.items())


def b_count_oracle(M: MultisetSpec, k: int) -> int:
    """Count k-sets of distinct aperiodic necklaces whose contents add up to M."""
    necklaces = _necklaces(M)
    target = M.multiplicities

    def search(start: int, remaining: Tuple[int, ...], left: int) -> int:
        if left == 0:
            return int(not any(remaining))
        total = 0
        for i in range(start, len(necklaces)):
            c = necklaces[i][1]
            if all(x <= r for x, r in zip(c, remaining)):
                total += search(i + 1, tuple(r - x for r, x in zip(remaining, c)), left - 1)
        return total

    if k < 1:
        return 0
    return search(0, target, k)


@lru_cache(maxsize=None)
def stirling_cycle(n: int, k: int) -> int:
    """Unsigned Stirling number of the first kind."""
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    if n == 0:
        return 1
    if k == 0:
        return 0
    lower = stirling_cycle(n - 1, k - 1) if k - 1 <= n - 1 else 0
    same = stirling_cycle(n - 1, k) if k <= n - 1 else 0
    return lower + (n - 1) * same


def multisets_up_to(max_letters: int, max_n: int, min_n: int = 1) -> Iterator[MultisetSpec]:
    """Every multiset on at most ``max_letters`` letters with ``min_n <= N <= max_n``.

    Only the order of the letters matters, so each alphabet size ``n`` is
    covered by the vectors whose entries are all positive.
    """
    for n in range(1, max_letters + 1):
        for mult in itertools.product(range(1, max_n + 1), repeat=n):
            if min_n <= sum(mult) <= max_n:
                yield MultisetSpec(mult)
