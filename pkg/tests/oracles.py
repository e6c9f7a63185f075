"""Independent oracles shared by the test modules.

Everything here is computed from first principles: classical textbook
recurrences in Fraction arithmetic, brute-force enumeration, and exact
binomial expansions.  None of it touches the package's own construction
paths, so agreement is evidence rather than tautology.
"""

import math
from fractions import Fraction
from itertools import combinations_with_replacement

import numpy as np


def chebyshev_rows(n_max):
    """Exact ascending coefficients of T_0 .. T_{n_max} on [-1, 1]."""
    rows = [[Fraction(1)], [Fraction(0), Fraction(1)]]
    while len(rows) <= n_max:
        prev, cur = rows[-2], rows[-1]
        nxt = [Fraction(0)] * (len(cur) + 1)
        for i, c in enumerate(cur):
            nxt[i + 1] += 2 * c
        for i, c in enumerate(prev):
            nxt[i] -= c
        rows.append(nxt)
    return [tuple(r) for r in rows[: n_max + 1]]


def classical_legendre_rows(n_max):
    """Exact ascending coefficients of the classical Legendre P_0 .. P_{n_max}."""
    rows = [[Fraction(1)], [Fraction(0), Fraction(1)]]
    while len(rows) <= n_max:
        n = len(rows) - 1
        prev, cur = rows[-2], rows[-1]
        nxt = [Fraction(0)] * (len(cur) + 1)
        for i, c in enumerate(cur):
            nxt[i + 1] += Fraction(2 * n + 1, n + 1) * c
        for i, c in enumerate(prev):
            nxt[i] -= Fraction(n, n + 1) * c
        rows.append(nxt)
    return [tuple(r) for r in rows[: n_max + 1]]


def monomial_count(p, n):
    """Number of degree-n monomials in p variables, by enumeration."""
    return sum(1 for _ in combinations_with_replacement(range(p), n))


def weighted_moment_exact(k, a, b):
    """Integral of t^k (1-t)^a (1+t)^b over [-1, 1] for integer a, b >= 0."""
    total = Fraction(0)
    for i in range(a + 1):
        for j in range(b + 1):
            e = k + i + j
            if e % 2 == 0:
                c = math.comb(a, i) * math.comb(b, j) * (-1) ** i
                total += Fraction(2 * c, e + 1)
    return total


def unit_vectors(rng, p, m):
    v = rng.normal(size=(m, p))
    return v / np.linalg.norm(v, axis=1)[:, None]
