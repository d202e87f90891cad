"""Exit criteria: every identity holds exactly, with zero counterexamples.

Run ``pytest tests/test_acceptance.py -s`` to see one PASS/FAIL line per
criterion.
"""

import itertools
import math
import time

import pytest

from coinwords.enumeration import (
    b_count_oracle,
    multisets_up_to,
    parity_census,
    stirling_cycle,
)
from coinwords.involution import verify_involution
from coinwords.lyndon import cfl_factorization
from coinwords.permutations import cauchy_check, cycle_type_counts, even_odd_counts
from coinwords.witt import lyndon_count, verify_witt
from coinwords.words import MultisetSpec, all_words

from oracles import all_lyndon_decompositions, distinct_arrangements, lyndon_by_rotations

MAX_LETTERS = 3
MAX_N = 8
CENSUS_SECONDS = 10.0
WITT_SECONDS = 5.0


def report(number, name, ok, detail=""):
    print(f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {name} {detail}".rstrip())


def desk_multisets(max_n=MAX_N):
    return list(multisets_up_to(MAX_LETTERS, max_n, min_n=2))


def test_1_multiset_even_odd_identity():
    start = time.perf_counter()
    bad = []
    for M in desk_multisets():
        c = parity_census(M)
        if c.even != c.odd:
            bad.append((str(M), c.even, c.odd))
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < CENSUS_SECONDS
    report(1, "even = odd for every M, n <= 3, 2 <= N <= 8", ok,
           f"({len(desk_multisets())} multisets, {elapsed:.2f}s, {len(bad)} failures)")
    assert bad == []
    assert elapsed < CENSUS_SECONDS


def test_2_involution_soundness():
    checked, failures = 0, []
    for M in desk_multisets():
        r = verify_involution(M)
        checked += r.checked
        failures += r.failures
    report(2, "toggle is a content-preserving parity-flipping involution; merges factor back",
           not failures, f"({checked} words, {len(failures)} failures)")
    assert checked > 0
    assert failures == []


def test_3_coin_arrangements_lemma():
    nonzero = [str(M) for M in desk_multisets() if parity_census(M).alternating_sum != 0]
    mismatches = []
    compared = 0
    for M in desk_multisets(max_n=7):
        census = parity_census(M)
        for k in range(1, M.cardinality + 1):
            compared += 1
            if census.by_k.get(k, 0) != b_count_oracle(M, k):
                mismatches.append((str(M), k))
    ok = not nonzero and not mismatches
    report(3, "alternating sum is 0; b_count equals the necklace-set oracle", ok,
           f"({compared} (M,k) pairs, {len(nonzero) + len(mismatches)} failures)")
    assert nonzero == []
    assert mismatches == []


def test_4_stirling_specialization():
    bad = []
    for n in range(1, 8):
        census = parity_census(MultisetSpec((1,) * n))
        for k in range(1, n + 1):
            if census.by_k.get(k, 0) != stirling_cycle(n, k):
                bad.append((n, k))
    brute3, brute4 = cycle_type_counts(3), cycle_type_counts(4)
    spot = (brute3[1], brute3[2], brute3[3], brute4[2]) == (2, 3, 1, 11)
    spot = spot and (stirling_cycle(3, 1), stirling_cycle(3, 2), stirling_cycle(3, 3), stirling_cycle(4, 2)) == (2, 3, 1, 11)
    report(4, "b_count on sets equals Stirling cycle numbers, n <= 7", not bad and spot)
    assert bad == []
    assert spot


def test_5_witt_identity():
    start = time.perf_counter()
    bad = []
    for k in (1, 2, 3):
        for D in range(1, 7):
            r = verify_witt(k, D)
            if not r.equal:
                bad.append((k, D, r.mismatches()))
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < WITT_SECONDS
    report(5, "Witt product equals 1 - x1 - ... - xk, k <= 3, D <= 6", ok, f"({elapsed:.2f}s)")
    assert bad == []
    assert elapsed < WITT_SECONDS


def test_6_set_case_and_cauchy_parity():
    counts_ok = all(even_odd_counts(n) == (math.factorial(n) // 2,) * 2 for n in range(2, 8))
    checked, failures = cauchy_check(7)
    ok = counts_ok and checked == 5040 and not failures
    report(6, "even = odd = n!/2 for 2 <= n <= 7; inversion parity = cycle-index parity on S_7",
           ok, f"({checked} permutations)")
    assert counts_ok
    assert checked == 5040
    assert failures == []


def test_7_factorization_oracle():
    words = [w for n in range(1, 11) for w in all_words(2, n)]
    words += [w for n in range(1, 9) for w in all_words(3, n)]
    bad = [w for w in words if all_lyndon_decompositions(w) != [cfl_factorization(w)]]
    report(7, "Duval factorization equals the unique brute-force decomposition", not bad,
           f"({len(words)} words)")
    assert bad == []


def test_8_lyndon_count_closed_form():
    bad = []
    compared = 0
    for m in itertools.product(range(MAX_N + 1), repeat=3):
        if not 1 <= sum(m) <= MAX_N:
            continue
        compared += 1
        direct = sum(1 for w in distinct_arrangements(m) if lyndon_by_rotations(w))
        if lyndon_count(m) != direct:
            bad.append(m)
    report(8, "necklace formula for M(m) equals enumeration, |m| <= 8, 3 variables", not bad,
           f"({compared} contents)")
    assert bad == []
