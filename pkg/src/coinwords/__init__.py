"""Lyndon words, multiset even/odd identities and their exhaustive checks."""

from .words import (
    Alphabet,
    MultisetSpec,
    Ordering,
    Word,
    content,
    conjugates,
    count_permutations,
    is_conjugate,
    is_primitive,
    lex_compare,
    parse_multiset,
    parse_word,
)
from .lyndon import (
    LyndonTuple,
    NonDistinctFactors,
    Parity,
    cfl_factorization,
    is_lyndon,
    lyndon_index,
    lyndon_tuple,
    parity,
    standard_factorization,
    tuple_to_word,
)
from .involution import is_splittable, toggle, verify_involution
from .enumeration import (
    ParityCensus,
    alternating_sum,
    b_count,
    b_count_oracle,
    parity_census,
    stirling_cycle,
    words_of,
)
from .witt import TruncatedPolynomial, lyndon_count, moebius, verify_witt, weighted_sums

__version__ = "0.1.0"
