#!/usr/bin/env python3
"""Orthogonal families on [-1, 1] under Jacobi-type weights.

Builds families by Gram-Schmidt, extracts their three-term recurrences,
compares with the derivative-formula construction, and closes with the
Bernstein polynomials that drive the density argument.
"""

import math
from fractions import Fraction

import numpy as np

from hyperharm import (
    Weight,
    bernstein,
    best_approximation,
    gram_schmidt,
    inner_product,
    jacobi_rodrigues,
    parseval_report,
    recurrence_coeffs,
)

w = Weight(Fraction(1, 2), Fraction(1, 2))
family = gram_schmidt(w, 6)
print("monic family under (1-t)^(1/2) (1+t)^(1/2)")
for phi in family[:5]:
    print("  ", phi)

rec = recurrence_coeffs(family, w)
print("\nthree-term recurrence (A, B, C per step)")
for k in range(5):
    print(f"  n={k}: A={rec.A[k]:+.6f} B={rec.B[k]:+.6f} C={rec.C[k]:+.6f}")

print("\nderivative formula against Gram-Schmidt, relative weighted error")
for k in range(1, 7):
    rod = jacobi_rodrigues(k, w).monic()
    diff = family[k] + rod * (-1)
    err = math.sqrt(abs(inner_product(diff, diff, w)))
    norm = math.sqrt(inner_product(family[k], family[k], w))
    print(f"  n={k}: {err / norm:.2e}")

# Bernstein operators fix 1 and t exactly and pull everything continuous
# toward it uniformly; watch the sup error on |t - 1/2| shrink
print("\nBernstein approximation of |x - 1/2| on [0, 1]")
grid = np.linspace(0.0, 1.0, 501)
target = np.abs(grid - 0.5)
for k in (4, 16, 64):
    b = bernstein(lambda x: abs(x - Fraction(1, 2)), k)
    sup = np.max(np.abs(b(grid) - target))
    print(f"  n={k}: sup error {sup:.4f}")

print("\nleast-squares projection of t^4 onto degrees <= 2")
proj = best_approximation(lambda t: t**4, Weight(Fraction(0), Fraction(0)), 2)
print("  projection:", proj)
sums, f_norm_sq = parseval_report(lambda t: t**4, Weight(Fraction(0), Fraction(0)), 8)
print("  energy captured by degree:", [f"{s:.6f}" for s in sums[:6]])
print("  true squared norm:", f"{f_norm_sq:.6f}")
