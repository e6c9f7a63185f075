#!/usr/bin/env python3
# The one-dimensional profile family behind zonal harmonics, computed four
# different ways, plus the norm and dimension-shift identities.

import numpy as np

from hyperharm import (
    dimension_shift,
    integral_representation_eval,
    legendre_coeffs,
    legendre_eval,
    legendre_norm_sq,
    legendre_norm_sq_exact,
    ode_residual,
    rodrigues_eval,
)

p, n = 5, 6
ts = np.linspace(-1, 1, 9)

print(f"profile p={p} n={n}")
print("  coefficients:", legendre_coeffs(p, n))

recur = legendre_eval(p, n, ts)
rodri = np.array([rodrigues_eval(p, n, t) for t in ts])
integ = np.array([integral_representation_eval(p, n, t) for t in ts])
print(f"  recurrence vs rodrigues:      {np.max(np.abs(recur - rodri)):.2e}")
print(f"  recurrence vs integral form:  {np.max(np.abs(recur - integ)):.2e}")
print(f"  differential equation residual: {np.max(np.abs(ode_residual(p, n, ts))):.2e}")

print("\nsquared norms under the surface-factor weight")
for k in range(5):
    print(f"  n={k}: exact {legendre_norm_sq_exact(p, k)}  float {legendre_norm_sq(p, k):.12f}")

# raising the dimension by two per step absorbs one derivative of the
# profile, so the shifted family lands exactly on the higher-p table
print("\ndimension shift identity")
for j in range(4):
    lhs = dimension_shift(3, 5, j)
    rhs = legendre_coeffs(3 + 2 * j, 5 - j)
    print(f"  j={j}: shifted == table entry: {lhs == rhs}")

print("\nendpoint values are exactly +1 / (-1)^n")
from fractions import Fraction
for k in range(7):
    poly = legendre_coeffs(4, k)
    print(f"  n={k}: P(1)={poly(Fraction(1))}, P(-1)={poly(Fraction(-1))}")
