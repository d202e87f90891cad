"""Exact truncated polynomials and the Witt product identity.

The identity checked is

    prod over m != 0 of (1 - x^m)^M(m)  =  1 - x1 - ... - xk

where M(m) counts Lyndon words with content m.  Both sides are expanded in
the ring of integer polynomials truncated above a fixed total degree.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Sequence, Tuple

from .enumeration import _arrangements, parity_census
from .lyndon import is_lyndon
from .words import MultisetSpec, WordError

Exponents = Tuple[int, ...]


class DegreeMismatch(WordError):
    pass


class VariableCountMismatch(WordError):
    pass


def moebius(d: int) -> int:
    if d < 1:
        raise ValueError("moebius is defined for d >= 1")
    result = 1
    p = 2
    while p * p <= d:
        if d % p == 0:
            d //= p
            if d % p == 0:
                return 0
            result = -result
        p += 1
    if d > 1:
        result = -result
    return result


def lyndon_count(m: Sequence[int]) -> int:
    """Number of Lyndon words with content ``m``, by the necklace formula."""
    n = sum(m)
    if n < 1:
        raise ValueError("content must have total degree >= 1")
    g = 0
    for x in m:
        g = math.gcd(g, x)
    total = 0
    for d in range(1, g + 1):
        if g % d:
            continue
        mu = moebius(d)
        if mu == 0:
            continue
        term = math.factorial(n // d)
        for x in m:
            term //= math.factorial(x // d)
        total += mu * term
    assert total % n == 0
    return total // n


def lyndon_count_bruteforce(m: Sequence[int]) -> int:
    return sum(1 for w in _arrangements(m) if is_lyndon(w))


def graded_lex_key(e: Exponents):
    return (sum(e), tuple(-x for x in e))


@dataclass(frozen=True)
class TruncatedPolynomial:
    """Integer polynomial in ``variable_count`` variables, cut off above ``max_degree``."""

    variable_count: int
    max_degree: int
    terms: Dict[Exponents, int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for e, c in self.terms.items():
            e = tuple(e)
            if len(e) != self.variable_count:
                raise VariableCountMismatch(f"exponent {e} has wrong length")
            if c and sum(e) <= self.max_degree:
                clean[e] = c
        object.__setattr__(self, "terms", dict(sorted(clean.items(), key=lambda t: graded_lex_key(t[0]))))

    @classmethod
    def one(cls, variable_count: int, max_degree: int) -> "TruncatedPolynomial":
        return cls(variable_count, max_degree, {(0,) * variable_count: 1})

    def coefficient(self, e: Sequence[int]) -> int:
        return self.terms.get(tuple(e), 0)

    def _check(self, other: "TruncatedPolynomial") -> None:
        if self.variable_count != other.variable_count:
            raise VariableCountMismatch(f"{self.variable_count} vs {other.variable_count} variables")
        if self.max_degree != other.max_degree:
            raise DegreeMismatch(f"truncation {self.max_degree} vs {other.max_degree}")

    def __mul__(self, other: "TruncatedPolynomial") -> "TruncatedPolynomial":
        return poly_mul(self, other)

    def __add__(self, other: "TruncatedPolynomial") -> "TruncatedPolynomial":
        self._check(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, 0) + c
        return TruncatedPolynomial(self.variable_count, self.max_degree, terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedPolynomial):
            return NotImplemented
        return (self.variable_count, self.max_degree, self.terms) == (
            other.variable_count, other.max_degree, other.terms)

    def __hash__(self):
        return hash((self.variable_count, self.max_degree, tuple(self.terms.items())))

    def __str__(self) -> str:
        return format_poly(self)


def poly_mul(a: TruncatedPolynomial, b: TruncatedPolynomial) -> TruncatedPolynomial:
    a._check(b)
    D = a.max_degree
    terms: Dict[Exponents, int] = {}
    for ea, ca in a.terms.items():
        da = sum(ea)
        for eb, cb in b.terms.items():
            if da + sum(eb) > D:
                continue
            e = tuple(x + y for x, y in zip(ea, eb))
            terms[e] = terms.get(e, 0) + ca * cb
    return TruncatedPolynomial(a.variable_count, D, terms)


def poly_binomial_power(m: Sequence[int], e: int, D: int) -> TruncatedPolynomial:
    """``(1 - x^m)^e`` by the binomial theorem, truncated at degree ``D``."""
    m = tuple(m)
    deg = sum(m)
    if deg < 1:
        raise ValueError("monomial must have positive degree")
    terms = {}
    for j in range(min(e, D // deg) + 1):
        terms[tuple(j * x for x in m)] = (-1) ** j * math.comb(e, j)
    return TruncatedPolynomial(len(m), D, terms)


def format_poly(p: TruncatedPolynomial) -> str:
    if not p.terms:
        return "0"
    out = []
    for e, c in p.terms.items():
        factors = [f"x{i}" + (f"^{x}" if x > 1 else "") for i, x in enumerate(e, start=1) if x]
        mono = "*".join(factors)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not out:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append(("- " if c < 0 else "+ ") + body)
    return " ".join(out)


def poly_json(p: TruncatedPolynomial) -> List[dict]:
    return [{"exponents": list(e), "coefficient": c} for e, c in p.terms.items()]


def contents_up_to(k: int, D: int) -> Iterator[Exponents]:
    """Exponent vectors with ``1 <= total degree <= D``, in graded-lex order."""
    vecs = [e for e in itertools.product(range(D + 1), repeat=k) if 1 <= sum(e) <= D]
    return iter(sorted(vecs, key=graded_lex_key))


def witt_product(k: int, D: int) -> TruncatedPolynomial:
    result = TruncatedPolynomial.one(k, D)
    for m in contents_up_to(k, D):
        e = lyndon_count(m)
        if e:
            result = result * poly_binomial_power(m, e, D)
    return result


def witt_rhs(k: int, D: int) -> TruncatedPolynomial:
    terms = {(0,) * k: 1}
    for i in range(k):
        terms[tuple(int(j == i) for j in range(k))] = -1
    return TruncatedPolynomial(k, D, terms)


@dataclass
class WittReport:
    k: int
    D: int
    lhs: TruncatedPolynomial
    rhs: TruncatedPolynomial

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs

    def mismatches(self) -> List[dict]:
        keys = sorted(set(self.lhs.terms) | set(self.rhs.terms), key=graded_lex_key)
        return [{"exponents": list(e), "lhs": self.lhs.coefficient(e), "rhs": self.rhs.coefficient(e)}
                for e in keys if self.lhs.coefficient(e) != self.rhs.coefficient(e)]

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "D": self.D,
            "equal": self.equal,
            "lhs": format_poly(self.lhs),
            "rhs": format_poly(self.rhs),
            "lhs_terms": poly_json(self.lhs),
            "rhs_terms": poly_json(self.rhs),
            "mismatches": self.mismatches(),
        }


def verify_witt(k: int, D: int) -> WittReport:
    if k < 1 or D < 1:
        raise ValueError("need k >= 1 and D >= 1")
    return WittReport(k, D, witt_product(k, D), witt_rhs(k, D))


def weighted_sums(M: MultisetSpec) -> List[dict]:
    """Weighted even and odd sums over the permutations of ``M``.

    Every word over ``M`` has weight ``u^M``, so each side is a single monomial
    and the identity reduces to equal counts for this content class.
    """
    if M.cardinality < 2:
        raise ValueError("the weighted identity needs N >= 2")
    census = parity_census(M)
    return [{
        "content": list(M.multiplicities),
        "even_weight_count": census.even,
        "odd_weight_count": census.odd,
    }]


def weighted_polynomials(k: int, N: int) -> Tuple[TruncatedPolynomial, TruncatedPolynomial]:
    """Sum of ``wt(w)`` over even and over odd N-words on ``k`` letters.

    Gathers :func:`weighted_sums` for every content of degree ``N`` into two
    polynomials in ``u1..uk``.
    """
    even: Dict[Exponents, int] = {}
    odd: Dict[Exponents, int] = {}
    for m in itertools.product(range(N + 1), repeat=k):
        if sum(m) != N:
            continue
        (row,) = weighted_sums(MultisetSpec(m))
        even[m] = row["even_weight_count"]
        odd[m] = row["odd_weight_count"]
    return TruncatedPolynomial(k, N, even), TruncatedPolynomial(k, N, odd)
