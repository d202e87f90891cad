"""The split/merge involution pairing even words with odd words.

With ``t = (l1, ..., lk)`` the Lyndon tuple of ``w`` and ``l1 = r1 s1`` its
standard factorization, ``l1`` is split into ``(r1, s1, l2, ...)`` when it is
not a letter and ``s1 < l2`` (or ``k = 1``); otherwise ``l1`` and ``l2`` are
merged into ``(l1 l2, l3, ...)``.  Each step changes ``k`` by one and keeps
the letters, so the map flips parity and preserves weight.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Sequence, Tuple

from .lyndon import (
    LyndonTuple,
    has_lyndon_tuple,
    lyndon_tuple,
    parity,
    standard_factorization,
    tuple_to_word,
)
from .words import MultisetSpec, Word, WordError, content, format_multiset, format_word, precedes

SPLIT = "split"
MERGE = "merge"


class TooShort(WordError):
    pass


def is_splittable(t: LyndonTuple) -> bool:
    if t.total_length <= 1:
        raise TooShort("the involution needs words of length >= 2")
    l1 = t.factors[0]
    if len(l1) < 2:
        return False
    _, s1 = standard_factorization(l1)
    return t.k == 1 or precedes(s1, t.factors[1])


def toggle_tuple(t: LyndonTuple) -> Tuple[LyndonTuple, str]:
    """Apply the involution to a tuple; returns the image and the case taken."""
    if is_splittable(t):
        r1, s1 = standard_factorization(t.factors[0])
        return LyndonTuple((r1, s1) + t.factors[1:]), SPLIT
    l1, l2 = t.factors[:2]
    return LyndonTuple((l1 + l2,) + t.factors[2:]), MERGE


def toggle(w: Sequence[int]) -> Word:
    return toggle_with_case(w)[0]


def toggle_with_case(w: Sequence[int]) -> Tuple[Word, str]:
    if len(w) <= 1:
        raise TooShort("the involution needs words of length >= 2")
    image, case = toggle_tuple(lyndon_tuple(w))
    return tuple_to_word(image), case


@dataclass
class InvolutionReport:
    multiset: MultisetSpec
    checked: int = 0
    excluded: int = 0
    splits: int = 0
    merges: int = 0
    failures: List[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def merge(self, other: "InvolutionReport") -> "InvolutionReport":
        return InvolutionReport(
            self.multiset,
            self.checked + other.checked,
            self.excluded + other.excluded,
            self.splits + other.splits,
            self.merges + other.merges,
            self.failures + other.failures,
        )

    def to_json(self) -> dict:
        return {
            "multiset": format_multiset(self.multiset),
            "checked": self.checked,
            "excluded": self.excluded,
            "splits": self.splits,
            "merges": self.merges,
            "failures": self.failures,
        }


def check_word(w: Word) -> List[str]:
    """Problems found when toggling ``w``; empty when everything holds."""
    problems = []
    t = lyndon_tuple(w)
    image, case = toggle_tuple(t)
    w2 = tuple_to_word(image)
    if content(w2, len(content(w))) != content(w):
        problems.append("content changed")
    if parity(w2) is parity(w):
        problems.append("parity not flipped")
    back = tuple_to_word(toggle_tuple(lyndon_tuple(w2))[0])
    if back != w:
        problems.append(f"not an involution: returns {format_word(back)}")
    if case == MERGE:
        l1, l2 = t.factors[:2]
        if standard_factorization(l1 + l2) != (l1, l2):
            problems.append("merged word does not factor back into its two parts")
    return problems


def verify_words(M: MultisetSpec, words) -> InvolutionReport:
    report = InvolutionReport(M)
    for w in words:
        if not has_lyndon_tuple(w):
            report.excluded += 1
            continue
        report.checked += 1
        _, case = toggle_tuple(lyndon_tuple(w))
        if case == SPLIT:
            report.splits += 1
        else:
            report.merges += 1
        problems = check_word(w)
        if problems:
            image = toggle(w)
            report.failures.append({
                "word": format_word(w),
                "tuple": str(lyndon_tuple(w)),
                "image": format_word(image),
                "case": case,
                "problems": problems,
            })
    return report


def verify_involution(M: MultisetSpec, threads: int = 1) -> InvolutionReport:
    """Exhaustively check the involution on every permutation of ``M``."""
    from .enumeration import sharded_map

    if M.cardinality < 2:
        raise TooShort("the involution needs N >= 2")
    reports = sharded_map(_verify_shard, M, threads)
    total = InvolutionReport(M)
    for r in reports:
        total = total.merge(r)
    return total


def _verify_shard(M: MultisetSpec, first: int) -> InvolutionReport:
    from .enumeration import words_with_first_letter

    return verify_words(M, words_with_first_letter(M, first))
