"""Exact multivariate polynomials over the rationals.

The Laplacian, the Euler operator, and the homogeneity and harmonicity
predicates run in Fraction arithmetic, so algebraic identities are decided
exactly instead of within a floating tolerance.  Rotation is the one
deliberately inexact operation: orthogonal matrices generally have
irrational entries, so rotated polynomials carry float coefficients and
live in :class:`FloatPolynomial`.
"""

from __future__ import annotations

import json
from fractions import Fraction

import numpy as np

__all__ = [
    "ExactPolynomial",
    "FloatPolynomial",
    "check_orthogonal",
    "random_orthogonal",
]

ORTHOGONALITY_TOL = 1e-12


def _as_fraction(value) -> Fraction:
    if isinstance(value, float):
        raise TypeError(
            "float coefficient in an exact polynomial; use FloatPolynomial"
        )
    return Fraction(value)


def check_orthogonal(matrix, tol: float = ORTHOGONALITY_TOL) -> np.ndarray:
    """Validate R^T R = I to `tol` entrywise and return R as a float array."""
    r = np.asarray(matrix, dtype=float)
    if r.ndim != 2 or r.shape[0] != r.shape[1]:
        raise ValueError("rotation matrix must be square")
    residual = float(np.max(np.abs(r.T @ r - np.eye(r.shape[0]))))
    if residual > tol:
        raise ValueError(
            f"matrix is not orthogonal: max |R^T R - I| = {residual:.3e}"
        )
    return r


def random_orthogonal(p: int, seed: int = 0) -> np.ndarray:
    """Seeded random orthogonal matrix (QR of a Gaussian matrix, signs fixed)."""
    rng = np.random.default_rng(seed)
    q, r = np.linalg.qr(rng.standard_normal((p, p)))
    # fix the QR sign ambiguity so the result is a deterministic function of the seed
    q = q * np.sign(np.diag(r))
    return q


def _validated_terms(nvars, terms, coerce):
    if nvars < 1:
        raise ValueError("nvars must be >= 1")
    out = {}
    for alpha, c in terms.items():
        key = tuple(int(a) for a in alpha)
        if len(key) != nvars:
            raise ValueError(f"exponent {key} does not have {nvars} entries")
        if any(a < 0 for a in key):
            raise ValueError(f"negative exponent in {key}")
        c = coerce(c)
        if c:
            out[key] = out.get(key, coerce(0)) + c
            if not out[key]:
                del out[key]
    # deterministic term order for evaluation, printing and serialization
    return {k: out[k] for k in sorted(out)}


class ExactPolynomial:
    """Sparse multivariate polynomial with Fraction coefficients.

    Terms map exponent multi-indices (tuples of length `nvars`) to nonzero
    rational coefficients.  Instances are treated as immutable.
    """

    __slots__ = ("nvars", "terms", "_float_cache")

    def __init__(self, nvars: int, terms=None):
        object.__setattr__(self, "nvars", int(nvars))
        object.__setattr__(
            self, "terms", _validated_terms(self.nvars, terms or {}, _as_fraction)
        )
        object.__setattr__(self, "_float_cache", None)

    # -- constructors ------------------------------------------------
    @classmethod
    def zero(cls, nvars: int) -> "ExactPolynomial":
        return cls(nvars, {})

    @classmethod
    def constant(cls, nvars: int, c) -> "ExactPolynomial":
        return cls(nvars, {(0,) * nvars: Fraction(c)})

    @classmethod
    def monomial(cls, nvars: int, alpha, c=1) -> "ExactPolynomial":
        return cls(nvars, {tuple(alpha): Fraction(c)})

    @classmethod
    def variable(cls, nvars: int, i: int) -> "ExactPolynomial":
        alpha = [0] * nvars
        alpha[i] = 1
        return cls(nvars, {tuple(alpha): Fraction(1)})

    # -- ring operations ----------------------------------------------
    def _check_same_space(self, other):
        if self.nvars != other.nvars:
            raise ValueError("polynomials live in different variable counts")

    def __add__(self, other):
        if isinstance(other, ExactPolynomial):
            self._check_same_space(other)
            terms = dict(self.terms)
            for a, c in other.terms.items():
                terms[a] = terms.get(a, Fraction(0)) + c
            return ExactPolynomial(self.nvars, terms)
        return self + ExactPolynomial.constant(self.nvars, other)

    __radd__ = __add__

    def __neg__(self):
        return ExactPolynomial(self.nvars, {a: -c for a, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other if isinstance(other, ExactPolynomial) else -Fraction(other))

    def __mul__(self, other):
        if isinstance(other, ExactPolynomial):
            self._check_same_space(other)
            terms: dict = {}
            for a, ca in self.terms.items():
                for b, cb in other.terms.items():
                    key = tuple(x + y for x, y in zip(a, b))
                    terms[key] = terms.get(key, Fraction(0)) + ca * cb
            return ExactPolynomial(self.nvars, terms)
        c = _as_fraction(other)
        return ExactPolynomial(self.nvars, {a: v * c for a, v in self.terms.items()})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = ExactPolynomial.constant(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    def __eq__(self, other):
        return (
            isinstance(other, ExactPolynomial)
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.nvars, tuple(self.terms.items())))

    # -- queries --------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(a) for a in self.terms), default=-1)

    def is_homogeneous(self):
        """The common total degree of all terms, or None; zero polynomial -> 0."""
        degs = {sum(a) for a in self.terms}
        if not degs:
            return 0
        if len(degs) == 1:
            return degs.pop()
        return None

    def is_harmonic(self) -> bool:
        return self.laplacian().is_zero()

    # -- calculus --------------------------------------------------------
    def partial(self, i: int) -> "ExactPolynomial":
        terms = {}
        for a, c in self.terms.items():
            if a[i]:
                key = a[:i] + (a[i] - 1,) + a[i + 1 :]
                terms[key] = terms.get(key, Fraction(0)) + c * a[i]
        return ExactPolynomial(self.nvars, terms)

    def laplacian(self) -> "ExactPolynomial":
        terms: dict = {}
        for a, c in self.terms.items():
            for i, ai in enumerate(a):
                if ai >= 2:
                    key = a[:i] + (ai - 2,) + a[i + 1 :]
                    terms[key] = terms.get(key, Fraction(0)) + c * ai * (ai - 1)
        return ExactPolynomial(self.nvars, terms)

    def euler_apply(self) -> "ExactPolynomial":
        """Apply sum_i x_i d/dx_i; equals n*q exactly for homogeneous q of degree n."""
        return ExactPolynomial(
            self.nvars, {a: c * sum(a) for a, c in self.terms.items()}
        )

    # -- evaluation ------------------------------------------------------
    def evaluate(self, x):
        """Evaluate at one point; exact when the coordinates are rational."""
        if len(x) != self.nvars:
            raise ValueError("point dimension does not match nvars")
        total = 0
        for a, c in self.terms.items():
            v = c
            for xi, ai in zip(x, a):
                if ai:
                    v = v * xi**ai
            total = total + v
        return total

    def _float_arrays(self):
        cache = self._float_cache
        if cache is None:
            exps = np.array(sorted(self.terms), dtype=np.int64).reshape(
                len(self.terms), self.nvars
            )
            coeffs = np.array([float(self.terms[tuple(e)]) for e in exps])
            cache = (exps, coeffs)
            object.__setattr__(self, "_float_cache", cache)
        return cache

    def evaluate_array(self, points) -> np.ndarray:
        """Vectorized float evaluation at an (m, nvars) array of points."""
        pts = np.atleast_2d(np.asarray(points, dtype=float))
        if pts.shape[1] != self.nvars:
            raise ValueError("point dimension does not match nvars")
        if not self.terms:
            return np.zeros(pts.shape[0])
        exps, coeffs = self._float_arrays()
        return (pts[:, None, :] ** exps[None, :, :]).prod(axis=2) @ coeffs

    # -- rotations ---------------------------------------------------
    def rotate(self, matrix) -> "FloatPolynomial":
        """Substitute x -> Rx; returns a float-coefficient polynomial."""
        r = check_orthogonal(matrix)
        if r.shape[0] != self.nvars:
            raise ValueError("rotation matrix dimension does not match nvars")
        return _substitute_linear(self.terms, r, self.nvars)

    # -- conversion and io ------------------------------------------
    def to_float(self) -> "FloatPolynomial":
        return FloatPolynomial(
            self.nvars, {a: float(c) for a, c in self.terms.items()}
        )

    def to_json_dict(self) -> dict:
        return {
            "nvars": self.nvars,
            "terms": [
                {"alpha": list(a), "num": c.numerator, "den": c.denominator}
                for a, c in self.terms.items()
            ],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "ExactPolynomial":
        terms = {
            tuple(t["alpha"]): Fraction(int(t["num"]), int(t["den"]))
            for t in data["terms"]
        }
        return cls(int(data["nvars"]), terms)

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    @classmethod
    def from_json(cls, text: str) -> "ExactPolynomial":
        return cls.from_json_dict(json.loads(text))

    def __str__(self):
        return _format_terms(self.terms, lambda c: str(c))

    def __repr__(self):
        return f"ExactPolynomial({self.nvars}, {self})"


def _format_terms(terms, fmt) -> str:
    if not terms:
        return "0"
    parts = []
    for a, c in terms.items():
        monos = "*".join(
            f"x{i + 1}" if ai == 1 else f"x{i + 1}^{ai}"
            for i, ai in enumerate(a)
            if ai
        )
        if not monos:
            parts.append(fmt(c))
        elif c == 1:
            parts.append(monos)
        elif c == -1:
            parts.append(f"-{monos}")
        else:
            parts.append(f"{fmt(c)}*{monos}")
    out = parts[0]
    for part in parts[1:]:
        out += f" - {part[1:]}" if part.startswith("-") else f" + {part}"
    return out


class FloatPolynomial:
    """Float-coefficient counterpart of ExactPolynomial (same term layout)."""

    __slots__ = ("nvars", "terms", "_float_cache")

    def __init__(self, nvars: int, terms=None):
        object.__setattr__(self, "nvars", int(nvars))
        object.__setattr__(
            self, "terms", _validated_terms(self.nvars, terms or {}, float)
        )
        object.__setattr__(self, "_float_cache", None)

    @classmethod
    def zero(cls, nvars: int) -> "FloatPolynomial":
        return cls(nvars, {})

    def __add__(self, other):
        if self.nvars != other.nvars:
            raise ValueError("polynomials live in different variable counts")
        terms = dict(self.terms)
        for a, c in other.terms.items():
            terms[a] = terms.get(a, 0.0) + c
        return FloatPolynomial(self.nvars, terms)

    def __mul__(self, scalar):
        c = float(scalar)
        return FloatPolynomial(self.nvars, {a: v * c for a, v in self.terms.items()})

    __rmul__ = __mul__

    def __sub__(self, other):
        return self + other * -1.0

    def degree(self) -> int:
        return max((sum(a) for a in self.terms), default=-1)

    def max_abs_coeff(self) -> float:
        return max((abs(c) for c in self.terms.values()), default=0.0)

    def laplacian(self) -> "FloatPolynomial":
        terms: dict = {}
        for a, c in self.terms.items():
            for i, ai in enumerate(a):
                if ai >= 2:
                    key = a[:i] + (ai - 2,) + a[i + 1 :]
                    terms[key] = terms.get(key, 0.0) + c * ai * (ai - 1)
        return FloatPolynomial(self.nvars, terms)

    def evaluate(self, x) -> float:
        if len(x) != self.nvars:
            raise ValueError("point dimension does not match nvars")
        total = 0.0
        for a, c in self.terms.items():
            v = c
            for xi, ai in zip(x, a):
                if ai:
                    v *= float(xi) ** ai
            total += v
        return total

    def _float_arrays(self):
        cache = self._float_cache
        if cache is None:
            exps = np.array(sorted(self.terms), dtype=np.int64).reshape(
                len(self.terms), self.nvars
            )
            coeffs = np.array([self.terms[tuple(e)] for e in exps])
            cache = (exps, coeffs)
            object.__setattr__(self, "_float_cache", cache)
        return cache

    def evaluate_array(self, points) -> np.ndarray:
        pts = np.atleast_2d(np.asarray(points, dtype=float))
        if pts.shape[1] != self.nvars:
            raise ValueError("point dimension does not match nvars")
        if not self.terms:
            return np.zeros(pts.shape[0])
        exps, coeffs = self._float_arrays()
        return (pts[:, None, :] ** exps[None, :, :]).prod(axis=2) @ coeffs

    def rotate(self, matrix) -> "FloatPolynomial":
        r = check_orthogonal(matrix)
        if r.shape[0] != self.nvars:
            raise ValueError("rotation matrix dimension does not match nvars")
        return _substitute_linear(self.terms, r, self.nvars)

    def __str__(self):
        return _format_terms(self.terms, lambda c: format(c, ".17g"))

    def __repr__(self):
        return f"FloatPolynomial({self.nvars}, {self})"


def _poly_mul_float(a: dict, b: dict) -> dict:
    out: dict = {}
    for ka, ca in a.items():
        for kb, cb in b.items():
            key = tuple(x + y for x, y in zip(ka, kb))
            out[key] = out.get(key, 0.0) + ca * cb
    return out


def _substitute_linear(terms, r: np.ndarray, nvars: int) -> FloatPolynomial:
    """Expand q(Rx) in float arithmetic given q's terms and the matrix R."""
    unit = (0,) * nvars
    # linear forms (Rx)_i = sum_j R[i, j] x_j, with power tables built on demand
    basis = []
    for i in range(nvars):
        form = {}
        for j in range(nvars):
            if r[i, j] != 0.0:
                key = tuple(1 if m == j else 0 for m in range(nvars))
                form[key] = r[i, j]
        basis.append(form)
    powers: list[list[dict]] = [[{unit: 1.0}] for _ in range(nvars)]
    out: dict = {}
    for alpha, c in terms.items():
        term = {unit: float(c)}
        for i, ai in enumerate(alpha):
            while len(powers[i]) <= ai:
                powers[i].append(_poly_mul_float(powers[i][-1], basis[i]))
            if ai:
                term = _poly_mul_float(term, powers[i][ai])
        for key, v in term.items():
            out[key] = out.get(key, 0.0) + v
    return FloatPolynomial(nvars, out)
