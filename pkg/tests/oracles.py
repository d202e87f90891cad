"""Brute-force reference implementations used only by the tests.

None of these call into the Lyndon factorization or the closed forms they
are compared against.
"""

import itertools


def rotations(w):
    return [w[i:] + w[:i] for i in range(len(w))]


def lyndon_by_rotations(w):
    rots = rotations(tuple(w))
    return len(set(rots)) == len(w) and min(rots) == tuple(w)


def lyndon_by_suffixes(w):
    w = tuple(w)
    return all(w < w[i:] for i in range(1, len(w)))


def all_lyndon_decompositions(w):
    """Every way to cut ``w`` into non-increasing Lyndon factors."""
    w = tuple(w)
    out = []

    def go(start, acc):
        if start == len(w):
            out.append(list(acc))
            return
        for end in range(start + 1, len(w) + 1):
            f = w[start:end]
            if lyndon_by_rotations(f) and (not acc or acc[-1] >= f):
                acc.append(f)
                go(end, acc)
                acc.pop()

    go(0, [])
    return out


def distinct_arrangements(multiplicities):
    letters = [r for r, m in enumerate(multiplicities, start=1) for _ in range(m)]
    return sorted(set(itertools.permutations(letters)))


def moebius_sieve(limit):
    mu = [1] * (limit + 1)
    is_prime = [True] * (limit + 1)
    for p in range(2, limit + 1):
        if is_prime[p]:
            for q in range(p, limit + 1, p):
                if q > p:
                    is_prime[q] = False
                mu[q] = -mu[q]
            for q in range(p * p, limit + 1, p * p):
                mu[q] = 0
    return mu


def inversions_naive(p):
    n = len(p)
    return sum(p[i] > p[j] for i in range(n) for j in range(n) if i < j)
