import pytest

from coinwords.enumeration import multisets_up_to, words_of
from coinwords.involution import (
    MERGE,
    SPLIT,
    TooShort,
    check_word,
    is_splittable,
    toggle,
    toggle_with_case,
    verify_involution,
)
from coinwords.lyndon import LyndonTuple, NonDistinctFactors, has_lyndon_tuple, lyndon_tuple, parity
from coinwords.words import MultisetSpec, content


def W(s):
    return tuple(int(c) for c in s)


def test_is_splittable_examples():
    assert is_splittable(LyndonTuple((W("112"),)))
    assert not is_splittable(LyndonTuple((W("1"), W("12"))))
    # (122) = (12)(2) and s1 = 2 is not below l2 = 2
    assert not is_splittable(LyndonTuple((W("122"), W("2"))))
    with pytest.raises(TooShort):
        is_splittable(LyndonTuple((W("1"),)))


@pytest.mark.parametrize("w,image,case", [("112", "121", SPLIT), ("121", "112", MERGE),
                                          ("12", "21", SPLIT), ("21", "12", MERGE)])
def test_toggle_examples(w, image, case):
    assert toggle_with_case(W(w)) == (W(image), case)


def test_toggle_errors():
    with pytest.raises(TooShort):
        toggle(W("1"))
    with pytest.raises(NonDistinctFactors):
        toggle(W("211"))


def test_prefix_case_needs_plain_lex_order():
    # s1 = 12 is a proper prefix of l2 = 122; splitting is the right move here
    w = W("122112")
    assert lyndon_tuple(w).factors == (W("112"), W("122"))
    image, case = toggle_with_case(w)
    assert case == SPLIT
    assert lyndon_tuple(image).factors == (W("1"), W("12"), W("122"))
    assert toggle(image) == w


def test_toggle_properties_exhaustive():
    for M in multisets_up_to(3, 8, 2):
        for w in words_of(M):
            if not has_lyndon_tuple(w):
                continue
            w2 = toggle(w)
            assert content(w2, 3) == content(w, 3)
            assert parity(w2) is not parity(w)
            assert toggle(w2) == w
            assert check_word(w) == []


def test_toggle_is_bijection_even_to_odd():
    for M in multisets_up_to(3, 7, 2):
        words = [w for w in words_of(M) if has_lyndon_tuple(w)]
        even = {w for w in words if parity(w).value == "even"}
        odd = set(words) - even
        assert {toggle(w) for w in even} == odd


@pytest.mark.parametrize("mult,checked,excluded", [((2, 1), 2, 1), ((1, 1), 2, 0), ((2, 1, 1), 10, 2)])
def test_verify_involution(mult, checked, excluded):
    report = verify_involution(MultisetSpec(mult))
    assert report.checked == checked
    assert report.excluded == excluded
    assert report.failures == []
    assert report.splits == report.merges == checked // 2
    assert set(report.to_json()) == {"multiset", "checked", "excluded", "splits", "merges", "failures"}


def test_verify_involution_sharded_matches_serial():
    M = MultisetSpec((3, 2, 2))
    assert verify_involution(M, threads=3).to_json() == verify_involution(M).to_json()


def test_verify_involution_rejects_single_letter():
    with pytest.raises(TooShort):
        verify_involution(MultisetSpec((1,)))


def test_literal_printed_condition_fails():
    """The split test written as s1 < l1 never holds, so nothing is ever split."""
    from coinwords.lyndon import standard_factorization
    from coinwords.words import precedes

    for n in range(2, 8):
        for w in words_of(MultisetSpec((n - 1, 1))):
            if has_lyndon_tuple(w) and len(lyndon_tuple(w).factors[0]) > 1:
                l1 = lyndon_tuple(w).factors[0]
                _, s1 = standard_factorization(l1)
                assert not precedes(s1, l1)
