import json
from fractions import Fraction

import numpy as np
import pytest

import oracles
from hyperharm.geometry import PiRational, sphere_quadrature
from hyperharm.harmonic import (
    addition_theorem_eval,
    count_harmonic,
    count_homogeneous,
    exact_rank,
    harmonic_basis_raw,
    legendre_harmonic,
    orthonormalize,
)
from hyperharm.legendre import legendre_eval
from hyperharm.polyalg import random_orthogonal


def test_homogeneous_count_matches_enumeration():
    for p in range(1, 6):
        for n in range(0, 8):
            assert count_homogeneous(p, n) == oracles.monomial_count(p, n)


def test_harmonic_count_recursion():
    # the space splits into pieces indexed by monomial spaces one dimension
    # down, giving K(p-1, n) + K(p-1, n-1)
    for p in range(3, 7):
        for n in range(1, 8):
            assert count_harmonic(p, n) == count_homogeneous(
                p - 1, n
            ) + count_homogeneous(p - 1, n - 1)
    assert count_harmonic(3, 2) == 5
    assert count_harmonic(4, 3) == 16
    for p in range(2, 6):
        assert count_harmonic(p, 0) == 1
        assert count_harmonic(p, 1) == p


def test_count_validation():
    with pytest.raises(ValueError):
        count_harmonic(0, 2)
    with pytest.raises(ValueError):
        count_homogeneous(3, -1)


def test_raw_basis_members_are_harmonic_and_homogeneous():
    for p in (2, 3, 4):
        for n in range(0, 6):
            members = harmonic_basis_raw(p, n)
            assert len(members) == count_harmonic(p, n)
            for q in members:
                assert q.degree() == n
                assert q.is_homogeneous() == n
                assert q.laplacian().is_zero()


def test_raw_basis_is_linearly_independent():
    for p in (2, 3, 4, 5):
        for n in range(0, 6):
            basis = orthonormalize(p, n)
            assert exact_rank(basis.gram_exact) == count_harmonic(p, n)


def test_orthonormality_under_surface_measure():
    for p in (2, 3, 4):
        for n in range(0, 5):
            basis = orthonormalize(p, n)
            rule = sphere_quadrature(p, 2 * n)
            vals = basis.evaluate_members(rule.nodes)
            gram = vals.T @ (rule.weights[:, None] * vals)
            eye = np.eye(len(basis.members))
            assert np.max(np.abs(gram - eye)) <= 1e-10, (p, n)


def test_orthonormalize_is_cached():
    assert orthonormalize(3, 4) is orthonormalize(3, 4)
    assert harmonic_basis_raw(4, 3) is harmonic_basis_raw(4, 3)


def test_zonal_member_matches_one_dimensional_profile():
    rng = np.random.default_rng(21)
    for p in (3, 4, 5):
        for n in range(0, 6):
            zonal = legendre_harmonic(p, n)
            assert zonal.laplacian().is_zero()
            assert zonal.degree() == n
            pts = rng.normal(size=(20, p))
            norms = np.linalg.norm(pts, axis=1)
            want = norms**n * legendre_eval(p, n, pts[:, 0] / norms)
            got = zonal.to_float().evaluate_array(pts)
            assert np.max(np.abs(got - want)) <= 1e-10 * max(
                1.0, np.max(norms) ** n
            ), (p, n)
            e1 = [Fraction(0)] * p
            e1[0] = Fraction(1)
            assert zonal.evaluate(e1) == 1


def test_addition_theorem_against_zonal_profile():
    rng = np.random.default_rng(33)
    for p in (3, 4, 5):
        for n in range(0, 7):
            basis = orthonormalize(p, n)
            for _ in range(20):
                xi = oracles.unit_vectors(rng, p, 1)[0]
                eta = oracles.unit_vectors(rng, p, 1)[0]
                got = addition_theorem_eval(basis, xi, eta)
                want = legendre_eval(p, n, float(xi @ eta))
                assert abs(got - want) <= 1e-9, (p, n)


def test_addition_theorem_diagonal_value():
    # summing the squares of an orthonormal basis at one point gives N / Omega
    # times the solid angle factor built into the normalization, so the
    # normalized sum collapses to the profile at t = 1, which is exactly 1
    rng = np.random.default_rng(7)
    for p in (3, 4):
        for n in (1, 3, 5):
            basis = orthonormalize(p, n)
            xi = oracles.unit_vectors(rng, p, 1)[0]
            assert addition_theorem_eval(basis, xi, xi) == pytest.approx(
                1.0, abs=1e-10
            )


def test_addition_theorem_rotation_invariance():
    rng = np.random.default_rng(55)
    for p in (3, 4):
        basis = orthonormalize(p, 4)
        xi = oracles.unit_vectors(rng, p, 1)[0]
        eta = oracles.unit_vectors(rng, p, 1)[0]
        base = addition_theorem_eval(basis, xi, eta)
        for k in range(5):
            rot = random_orthogonal(p, seed=200 + k)
            moved = addition_theorem_eval(basis, rot @ xi, rot @ eta)
            assert abs(moved - base) <= 1e-9


def test_addition_theorem_rejects_off_sphere_points():
    basis = orthonormalize(3, 2)
    with pytest.raises(ValueError):
        addition_theorem_eval(basis, np.array([1.0, 1.0, 0.0]), np.array([1.0, 0.0, 0.0]))


def test_basis_json_round_trip():
    basis = orthonormalize(3, 2)
    doc = json.loads(basis.to_json())
    assert doc["p"] == 3
    assert doc["n"] == 2
    assert len(doc["members"]) == 5
    assert len(doc["gram"]) == 5
    first = doc["members"][0]
    assert all(len(term["alpha"]) == 3 for term in first["terms"])


def test_exact_rank_oracles():
    def entry(v):
        return PiRational(Fraction(v), 2)

    assert exact_rank(((entry(1), entry(2)), (entry(2), entry(4)))) == 1
    assert exact_rank(((entry(1), entry(0)), (entry(0), entry(1)))) == 2
    assert exact_rank(((entry(0),),)) == 0
