#!/usr/bin/env python3
# Zonal structure on the sphere: the addition identity that collapses a
# whole orthonormal basis into one profile value, and the eigenvalue that
# zonal kernels attach to each harmonic degree.

import numpy as np

from hyperharm import (
    addition_theorem_eval,
    count_harmonic,
    funk_hecke_coeff,
    legendre_eval,
    orthonormalize,
    solid_angle,
    sphere_quadrature,
)

rng = np.random.default_rng(42)

def unit(p):
    v = rng.normal(size=p)
    return v / np.linalg.norm(v)

print("addition identity: basis sum vs profile of the inner product")
for p in (3, 4, 5):
    basis = orthonormalize(p, 3)
    worst = 0.0
    for _ in range(25):
        xi, eta = unit(p), unit(p)
        got = addition_theorem_eval(basis, xi, eta)
        want = legendre_eval(p, 3, float(xi @ eta))
        worst = max(worst, abs(got - want))
    print(f"  p={p}: max deviation over 25 random pairs = {worst:.2e}")

print("\nkernel eigenvalues for f(t) = t^2")
f = lambda t: t * t
for p in (3, 4, 5):
    lams = [funk_hecke_coeff(p, n, f) for n in range(5)]
    print(f"  p={p}: " + "  ".join(f"{lam:+.6f}" for lam in lams))

# averaging a zonal kernel against one basis member reproduces that member
# scaled by the eigenvalue, whatever the member is
print("\naveraging against a member reproduces it (p=4, n=2)")
p, n = 4, 2
basis = orthonormalize(p, n)
rule = sphere_quadrature(p, 10)
eta = unit(p)
lam = funk_hecke_coeff(p, n, f)
fvals = f(rule.nodes @ eta)
for j in range(len(basis.members)):
    member = basis.members[j]
    integral = np.sum(rule.weights * fvals * member.evaluate_array(rule.nodes))
    predicted = lam * member.evaluate_array(eta[None, :])[0]
    print(f"  member {j}: integral {integral:+.10f}  lambda*Y(eta) {predicted:+.10f}")

print("\nsanity: eigenvalue of the constant kernel at n=0 is the full solid angle")
print(f"  p=3: {funk_hecke_coeff(3, 0, lambda t: np.ones_like(t)):.12f}")
print(f"  4*pi = {solid_angle(3):.12f}")
print(f"  degree count at (p=3, n=4): {count_harmonic(3, 4)} members share one eigenvalue")
