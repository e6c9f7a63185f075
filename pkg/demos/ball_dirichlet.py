#!/usr/bin/env python3
"""The Dirichlet problem on the unit ball, solved two independent ways.

Route one expands the boundary data in surface harmonics and extends each
term radially. Route two integrates the boundary data against the interior
kernel. Agreement between them is the cross-check, since they share no code
past the quadrature rule.
"""

from fractions import Fraction

import numpy as np

from hyperharm import (
    BoundaryData,
    ExactPolynomial,
    builtin_boundary,
    green_function,
    poisson_eval,
    project_boundary,
    series_eval,
)

p = 3
poly = ExactPolynomial(
    p,
    {
        (0, 0, 0): Fraction(1),
        (2, 0, 0): Fraction(3),
        (1, 1, 1): Fraction(-2),
    },
)
f = BoundaryData.from_polynomial(poly)

print("boundary data:", poly)
sol = project_boundary(f, n_max=4)
print("expansion coefficients by degree:")
for n, row in enumerate(sol.coeffs):
    shown = "  ".join(f"{c:+.6f}" for c in row)
    print(f"  n={n}: {shown}")
print(f"projection error report: {sol.projection_error:.2e}")

rng = np.random.default_rng(7)
pts = rng.normal(size=(8, p))
pts = 0.7 * pts / np.linalg.norm(pts, axis=1, keepdims=True)
pts *= rng.uniform(0.2, 1.0, size=(8, 1))

series = np.array([series_eval(sol, x) for x in pts])
kernel = poisson_eval(f, pts, quad_degree=48)
print("\ninterior values, series vs kernel integral")
for x, a, b in zip(pts, series, kernel):
    print(f"  |x|={np.linalg.norm(x):.3f}: {a:+.10f}  {b:+.10f}  diff {abs(a-b):.2e}")

# the value at the center is the mean of the boundary data
print(f"\ncenter value: {series_eval(sol, np.zeros(p)):+.10f}")
print("mean of 1 + 3 x1^2 - 2 x1 x2 x3 over the sphere is 1 + 3/3 = 2")

print("\ncallable boundary data goes through the same pipeline")
g = builtin_boundary(3, "exponential")
sol_g = project_boundary(g, n_max=8)
x = np.array([0.3, -0.2, 0.1])
print(f"  series:  {series_eval(sol_g, x):.10f}")
print(f"  kernel:  {poisson_eval(g, x, quad_degree=48):.10f}")
print(f"  reported projection error: {sol_g.projection_error:.2e}")

# the corrected kernel vanishes for observation points on the boundary
print("\ngreen function boundary values (should be zero)")
x0 = np.array([0.4, 0.1, -0.2])
for _ in range(3):
    x = rng.normal(size=3)
    x /= np.linalg.norm(x)
    print(f"  G(x, x0) = {green_function(3, x, x0):+.2e}")
