import math

import pytest

from coinwords.permutations import (
    CycleDecomposition,
    Permutation,
    all_permutations,
    cauchy_check,
    cycle_index,
    cycle_type_counts,
    cycles,
    even_odd_counts,
    inversions,
)

from oracles import inversions_naive


def P(s):
    return Permutation.parse(s)


def test_cycles_examples():
    assert str(cycles(P("34152"))) == "(13)(245)"
    assert str(cycles(P("13524"))) == "(1)(2354)"
    assert cycles(P("12345")).k == 5


def test_cycle_index_examples():
    assert cycle_index(P("13524")) == 3
    assert cycle_index(P("21354")) == 2
    assert cycle_index(P("1234")) == 0


def test_inversions_examples():
    assert inversions(P("34152")) == 5
    assert inversions(P("13524")) == 3
    assert inversions(P("123")) == 0


def test_invalid_permutation():
    with pytest.raises(ValueError):
        Permutation((1, 1, 2))


def test_cycles_round_trip():
    for n in range(1, 8):
        decomps = set()
        for t in all_permutations(n):
            d = cycles(t)
            assert d.to_permutation() == t
            assert all(c[0] == min(c) for c in d.cycles)
            assert [c[0] for c in d.cycles] == sorted(c[0] for c in d.cycles)
            decomps.add(d)
        assert len(decomps) == math.factorial(n)


def test_cycle_format_large_n():
    t = Permutation(tuple(range(2, 11)) + (1,))
    assert str(cycles(t)) == "(1,2,3,4,5,6,7,8,9,10)"
    assert CycleDecomposition(((1,), (2,))).to_permutation() == P("12")


def test_even_odd_counts():
    assert even_odd_counts(3) == (3, 3)
    assert even_odd_counts(1) == (1, 0)
    assert even_odd_counts(5) == (60, 60)


def test_cauchy_parity():
    for n in range(1, 8):
        checked, failures = cauchy_check(n)
        assert checked == math.factorial(n)
        assert failures == []
    for t in all_permutations(5):
        assert inversions(t) == inversions_naive(t.images)


def test_cycle_type_counts():
    assert cycle_type_counts(3) == [0, 2, 3, 1]
    assert cycle_type_counts(4)[2] == 11
