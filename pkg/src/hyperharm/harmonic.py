"""Harmonic homogeneous polynomials and orthonormal sphere bases.

The degree-n basis is built from the observation that a harmonic
homogeneous polynomial is determined by its two lowest slices in the
last coordinate: seeds run over monomials in the first p-1 variables and
the remaining slices follow from a two-step downward recursion, all in
rational arithmetic.  Gram matrices on the sphere are therefore exact,
and only the final orthonormalization happens in floating point.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from . import legendre as _legendre
from .geometry import PiRational, gamma_half, monomial_sphere_integral, solid_angle
from .polyalg import ExactPolynomial, FloatPolynomial

__all__ = [
    "HarmonicBasis",
    "count_homogeneous",
    "count_harmonic",
    "harmonic_basis_raw",
    "orthonormalize",
    "legendre_harmonic",
    "addition_theorem_eval",
    "exact_rank",
]

UNIT_SPHERE_TOL = 1e-12


def count_homogeneous(p: int, n: int) -> int:
    """Dimension of the space of homogeneous degree-n polynomials in p variables."""
    if p < 1:
        raise ValueError("need at least one variable")
    if n < 0:
        raise ValueError("degree must be nonnegative")
    return math.comb(p + n - 1, n)


def count_harmonic(p: int, n: int) -> int:
    """Dimension of the space of harmonic homogeneous degree-n polynomials."""
    if p < 2:
        raise ValueError("dimension must be at least 2")
    if n < 0:
        raise ValueError("degree must be nonnegative")
    if n == 0:
        return 1
    return (2 * n + p - 2) * math.comb(n + p - 3, n - 1) // n


def _monomials(q: int, d: int):
    """Exponent multi-indices of total degree d in q variables, ascending lex."""
    if q == 1:
        yield (d,)
        return
    for first in range(d + 1):
        for rest in _monomials(q - 1, d - first):
            yield (first,) + rest


def _assemble(p: int, n: int, start_deg: int, seed: tuple) -> ExactPolynomial:
    h = ExactPolynomial.monomial(p, seed + (0,))
    total = ExactPolynomial.zero(p)
    j = n - start_deg
    while not h.is_zero():
        lifted = {
            alpha[:-1] + (j,): c for alpha, c in h.terms.items()
        }
        total = total + ExactPolynomial(p, lifted)
        h = h.laplacian() * Fraction(-1, (j + 2) * (j + 1))
        j += 2
    return total


@lru_cache(maxsize=None)
def harmonic_basis_raw(p: int, n: int) -> tuple:
    """Exactly harmonic, linearly independent spanning set of degree n."""
    if p < 2:
        raise ValueError("dimension must be at least 2")
    if n < 0:
        raise ValueError("degree must be nonnegative")
    if n == 0:
        return (ExactPolynomial.constant(p, 1),)
    members = [
        _assemble(p, n, n, seed) for seed in _monomials(p - 1, n)
    ]
    if n >= 1:
        members += [
            _assemble(p, n, n - 1, seed) for seed in _monomials(p - 1, n - 1)
        ]
    if len(members) != count_harmonic(p, n):
        raise RuntimeError("seed enumeration does not match the dimension count")
    return tuple(members)


def _parity_class(poly: ExactPolynomial) -> tuple:
    alpha = next(iter(poly.terms))
    return tuple(a % 2 for a in alpha)


def _double_factorial_table(top: int) -> np.ndarray:
    # table[m] = (m-1)!! for even m, which is Gamma((m+1)/2) stripped of
    # its 2-power and sqrt(pi) factors; int64 overflows past (33)!!
    dtype = np.int64 if top <= 34 else object
    table = np.zeros(top + 1, dtype=dtype)
    table[0] = 1
    for m in range(2, top + 1, 2):
        table[m] = table[m - 2] * (m - 1)
    return table


def _gram_exact(raw, p: int) -> tuple:
    """Exact Gram matrix of raw members under the sphere inner product.

    Every monomial integral of total degree 2n over the sphere is a shared
    pi-power constant times an integer product of double factorials, so the
    Gram reduces to integer matrix products taken inside parity classes
    (cross-class entries vanish because some exponent sum is odd).
    """
    size = len(raw)
    n = raw[0].degree()
    common = PiRational(Fraction(2, 2**n), p) / gamma_half(2 * n + p)
    dfact = _double_factorial_table(2 * n)
    zero = PiRational(Fraction(0))
    gram = [[zero] * size for _ in range(size)]
    classes: dict = {}
    for idx, member in enumerate(raw):
        classes.setdefault(_parity_class(member), []).append(idx)
    for indices in classes.values():
        monos = sorted({a for i in indices for a in raw[i].terms})
        index = {a: k for k, a in enumerate(monos)}
        exps = np.array(monos, dtype=np.int64)
        kernel_np = dfact[exps[:, None, :] + exps[None, :, :]].prod(axis=2)
        kernel = np.array(kernel_np.tolist(), dtype=object)
        coeff_rows = []
        denoms = []
        for i in indices:
            scale = math.lcm(*(c.denominator for c in raw[i].terms.values()))
            row = [0] * len(monos)
            for alpha, c in raw[i].terms.items():
                row[index[alpha]] = c.numerator * (scale // c.denominator)
            coeff_rows.append(row)
            denoms.append(scale)
        b = np.array(coeff_rows, dtype=object)
        s = b @ kernel @ b.T
        for a, i in enumerate(indices):
            for a2, j in enumerate(indices[a:], start=a):
                entry = common * Fraction(int(s[a, a2]), denoms[a] * denoms[a2])
                gram[i][j] = entry
                gram[j][i] = entry
    return tuple(tuple(row) for row in gram)


RANK_PRIMES = (2147483647, 2147483629, 2147483587)


def _rank_mod_prime(rows, q: int):
    """Rank of a rational matrix over GF(q); None if q divides a denominator."""
    mat = np.empty((len(rows), len(rows[0])), dtype=np.int64)
    for r, row in enumerate(rows):
        for c, frac in enumerate(row):
            den = frac.denominator % q
            if den == 0:
                return None
            mat[r, c] = frac.numerator % q * pow(den, q - 2, q) % q
    # products stay below 2^62 because q < 2^31, so int64 never overflows
    rank = 0
    n_rows, n_cols = mat.shape
    for col in range(n_cols):
        live = np.nonzero(mat[rank:, col])[0]
        if len(live) == 0:
            continue
        pivot = rank + int(live[0])
        mat[[rank, pivot]] = mat[[pivot, rank]]
        inv = pow(int(mat[rank, col]), q - 2, q)
        mat[rank] = mat[rank] * inv % q
        below = mat[rank + 1 :, col].copy()
        mat[rank + 1 :] = (mat[rank + 1 :] - below[:, None] * mat[rank][None, :]) % q
        rank += 1
        if rank == n_rows:
            break
    return rank


def _rank_exact_fractions(rows) -> int:
    mat = [list(row) for row in rows]
    n_rows = len(mat)
    n_cols = len(mat[0]) if mat else 0
    rank = 0
    for col in range(n_cols):
        pivot = next((r for r in range(rank, n_rows) if mat[r][col]), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        lead = mat[rank][col]
        mat[rank] = [v / lead for v in mat[rank]]
        for r in range(n_rows):
            if r != rank and mat[r][col]:
                factor = mat[r][col]
                mat[r] = [v - factor * w for v, w in zip(mat[r], mat[rank])]
        rank += 1
    return rank


def exact_rank(gram) -> int:
    """Rank of an exact Gram matrix, certified without floating point.

    A full modular rank already certifies full rational rank; the exact
    elimination fallback only runs when every modular attempt comes back
    deficient, which for these matrices means genuinely singular.
    """
    rows = [[entry.coeff for entry in row] for row in gram]
    if not rows:
        return 0
    full = min(len(rows), len(rows[0]))
    for q in RANK_PRIMES:
        modular = _rank_mod_prime(rows, q)
        if modular is not None and modular == full:
            return modular
    return _rank_exact_fractions(rows)


@dataclass(frozen=True)
class HarmonicBasis:
    """Orthonormal degree-n spherical harmonics with their exact ancestry."""

    p: int
    n: int
    members: tuple
    gram_exact: tuple

    def evaluate_members(self, points) -> np.ndarray:
        pts = np.atleast_2d(np.asarray(points, dtype=float))
        return np.column_stack([m.evaluate_array(pts) for m in self.members])

    def to_json(self) -> str:
        return json.dumps(
            {
                "p": self.p,
                "n": self.n,
                "members": [
                    {
                        "terms": [
                            {"alpha": list(a), "coeff": c}
                            for a, c in m.terms.items()
                        ]
                    }
                    for m in self.members
                ],
                "gram": [
                    [
                        {
                            "num": e.coeff.numerator,
                            "den": e.coeff.denominator,
                            "pi_half": e.pi_half,
                        }
                        for e in row
                    ]
                    for row in self.gram_exact
                ],
            }
        )


@lru_cache(maxsize=None)
def orthonormalize(p: int, n: int) -> HarmonicBasis:
    """Orthonormal basis of degree-n spherical harmonics on S^{p-1}."""
    raw = harmonic_basis_raw(p, n)
    gram = _gram_exact(raw, p)
    size = len(raw)
    if exact_rank(gram) != size:
        raise RuntimeError("exact Gram matrix is singular; basis builder is broken")
    g = np.array([[float(entry) for entry in row] for row in gram])
    scale = 1.0 / np.sqrt(np.diag(g))
    coeff = np.diag(scale)
    for i in range(size):
        v = coeff[i]
        for _ in range(2):
            if i:
                proj = coeff[:i] @ (g @ v)
                v = v - proj @ coeff[:i]
        norm_sq = float(v @ g @ v)
        if not (norm_sq > 0 and math.isfinite(norm_sq)):
            raise RuntimeError("orthonormalization collapsed; basis builder is broken")
        coeff[i] = v / math.sqrt(norm_sq)
    monos = sorted({a for m in raw for a in m.terms})
    index = {a: k for k, a in enumerate(monos)}
    raw_mat = np.zeros((size, len(monos)))
    for i, m in enumerate(raw):
        for alpha, c in m.terms.items():
            raw_mat[i, index[alpha]] = float(c)
    member_mat = coeff @ raw_mat
    members = tuple(
        FloatPolynomial(
            p,
            {
                alpha: member_mat[i, k]
                for k, alpha in enumerate(monos)
                if member_mat[i, k]
            },
        )
        for i in range(size)
    )
    return HarmonicBasis(p=p, n=n, members=members, gram_exact=gram)


def legendre_harmonic(p: int, n: int) -> ExactPolynomial:
    """The unique harmonic homogeneous H with H(e_1) = 1, symmetric about e_1.

    Homogenizes the exact degree-n Legendre coefficients: a_k t^k becomes
    a_k x_1^k |x|^(n-k), and parity guarantees n-k is even throughout.
    """
    if p < 2:
        raise ValueError("dimension must be at least 2")
    if n < 0:
        raise ValueError("degree must be nonnegative")
    coeffs = _legendre.legendre_coeffs(p, n).coeffs
    radius_sq = ExactPolynomial(
        p, {tuple(2 if i == j else 0 for i in range(p)): Fraction(1) for j in range(p)}
    )
    total = ExactPolynomial.zero(p)
    for k, a in enumerate(coeffs):
        if not a:
            continue
        if (n - k) % 2:
            raise RuntimeError("parity violation in the coefficient table")
        term = ExactPolynomial.monomial(p, (k,) + (0,) * (p - 1), a)
        total = total + term * radius_sq ** ((n - k) // 2)
    return total


def addition_theorem_eval(basis: HarmonicBasis, xi, eta) -> float:
    """(Omega_{p-1} / N(p,n)) times the paired sum of basis values at xi and eta."""
    xi = np.asarray(xi, dtype=float)
    eta = np.asarray(eta, dtype=float)
    for v in (xi, eta):
        if v.shape != (basis.p,):
            raise ValueError("points must have the basis dimension")
        if abs(np.linalg.norm(v) - 1.0) > UNIT_SPHERE_TOL:
            raise ValueError("points must lie on the unit sphere")
    vals = basis.evaluate_members(np.vstack([xi, eta]))
    scale = solid_angle(basis.p) / count_harmonic(basis.p, basis.n)
    return scale * float(np.dot(vals[0], vals[1]))
