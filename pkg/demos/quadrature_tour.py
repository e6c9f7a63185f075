#!/usr/bin/env python3
# Tour of the sphere geometry helpers: exact solid angles, product
# quadrature rules, and the angular coordinate maps.

import numpy as np

from hyperharm import (
    QuadratureRule,
    cartesian_to_spherical,
    monomial_sphere_integral,
    solid_angle,
    solid_angle_exact,
    sphere_quadrature,
    spherical_to_cartesian,
)

print("exact surface measures of the unit sphere")
for p in range(1, 7):
    print(f"  p={p}: {solid_angle_exact(p)}  (float {solid_angle(p):.12f})")

# a rule of exactness degree d integrates every polynomial of total
# degree <= d; the weight sum is the degree-0 case
print("\nweight sums against the solid angle")
for p in (2, 3, 4, 5):
    rule = sphere_quadrature(p, 9)
    err = abs(rule.weights.sum() - solid_angle(p))
    print(f"  p={p}: nodes={len(rule.weights)} |sum - omega| = {err:.2e}")

print("\nmonomial moments, rule vs closed form")
rule = sphere_quadrature(4, 8)
for alpha in [(0, 0, 0, 0), (2, 0, 0, 0), (2, 2, 0, 0), (1, 0, 0, 0), (4, 2, 2, 0)]:
    vals = np.prod(rule.nodes ** np.array(alpha), axis=1)
    got = float(np.sum(rule.weights * vals))
    want = float(monomial_sphere_integral(alpha))
    print(f"  alpha={alpha}: quad={got:+.12f} exact={want:+.12f}")

print("\nangular coordinates round trip at p=5")
rng = np.random.default_rng(0)
x = rng.normal(size=5)
x /= np.linalg.norm(x)
pt = cartesian_to_spherical(x)
back = spherical_to_cartesian(pt)
print(f"  x    = {np.array2string(x, precision=6)}")
print(f"  back = {np.array2string(back, precision=6)}")
print(f"  max |diff| = {np.max(np.abs(back - x)):.2e}")

print("\nserialization keeps the rule bit for bit")
rule = sphere_quadrature(3, 5)
again = QuadratureRule.from_csv(rule.to_csv())
print("  csv round trip equal:", np.array_equal(again.nodes, rule.nodes))
