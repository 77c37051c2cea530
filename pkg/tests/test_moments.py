import random
from fractions import Fraction

import pytest

from mopkit.arith import ONE, Poly, cq, determinant, rank
from mopkit.errors import AdmissibilityError, SingularLeadingCoefficient
from mopkit.families import FamilySpec
from mopkit.moments import (
    contour_moment_via_basis, expand_in_basis, functionals_for, moment_matrix, normality_determinant,
    normalized_moment, scalar_basis, stirling2_table,
)
from mopkit import families as fam

from conftest import make_spec


def _wilson_params(a, b, c, d):
    return {"a": cq(a), "b": (cq(b),), "c": cq(c), "d": cq(d)}


def test_uniform_jacobi_moments():
    (f,) = functionals_for(FamilySpec.create("Jacobi", alpha=[0], beta=0))
    assert [normalized_moment(f, k) for k in range(6)] == [cq(Fraction(1, k + 1)) for k in range(6)]
    with pytest.raises(ValueError):
        normalized_moment(f, -1)


def test_charlier_moments():
    (f,) = functionals_for(FamilySpec.create("Charlier", a=[2]))
    assert f(2) == cq(6)
    # cross-check by summing the Poisson series directly
    from math import exp, factorial
    direct = sum(exp(-2) * 2 ** x / factorial(x) * x ** 3 for x in range(60))
    assert abs(float(f(3).re) - direct) < 1e-12


def test_hahn_uniform_moments():
    (f,) = functionals_for(FamilySpec.create("Hahn", alpha=[0], beta=0, N=2))
    assert f(0) == ONE and f(1) == ONE and f(2) == cq("5/3")


def test_stirling_table():
    assert stirling2_table(3)[3] == [0, 1, 3, 1]


def test_wilson_contour_moments():
    P = _wilson_params(1, 2, 3, 4)
    assert contour_moment_via_basis("Wilson", P, 0) == ONE
    # p_1(s) = 10 s + 50 orthogonal to 1 forces nu_1 = -5
    assert contour_moment_via_basis("Wilson", P, 1) == cq(-5)
    assert contour_moment_via_basis("Wilson", P, 2) == cq("401/11")


def test_basis_expansion_is_triangular():
    P = _wilson_params(1, 2, 3, 4)
    basis = scalar_basis("Wilson", P, 0, 4)
    s3 = Poly([0, 0, 0, 1], "s")
    coeffs = expand_in_basis(s3, basis)
    assert len(coeffs) == 4
    total = Poly([], "s")
    for c, p in zip(coeffs, basis):
        total = total + p.scale(c)
    assert total == s3
    assert expand_in_basis(basis[2], basis) == [0, 0, 1]


def test_basis_expansion_rejects_degenerate_basis():
    with pytest.raises(SingularLeadingCoefficient):
        expand_in_basis(Poly([0, 1]), [Poly([1]), Poly([1])])


def test_moment_matrix_examples():
    F1 = functionals_for(FamilySpec.create("Jacobi", alpha=[0], beta=0))
    assert moment_matrix(F1, (1,)) == [[ONE]]
    F = functionals_for(FamilySpec.create("JacobiPineiro", alpha=[0, "1/2"], beta=0))
    assert moment_matrix(F, (1, 1)) == [[ONE, cq("1/2")], [ONE, cq("3/5")]]


def test_moment_matrix_rank_for_admissible_parameters():
    rng = random.Random(8)
    for _ in range(10):
        alpha = [cq(f"{rng.randint(1, 40)}/13"), cq(f"{rng.randint(1, 40)}/17")]
        F = functionals_for(FamilySpec.create("JacobiPineiro", alpha=alpha, beta=cq("2/9")))
        for n in [(1, 1), (2, 1), (2, 3)]:
            assert rank(moment_matrix(F, n)) == sum(n)


def test_normality_determinants():
    assert normality_determinant("Jacobi", {"alpha": [cq(0)], "beta": cq(0)}, (1,)) == (ONE, ONE)
    closed, direct = normality_determinant(
        "JacobiPineiro", {"alpha": [cq("1/3"), cq("3/4")], "beta": cq("1/2")}, (2, 1))
    assert closed == direct != 0
    with pytest.raises(AdmissibilityError):
        normality_determinant("Hahn", {}, (1,))


def test_scalar_jacobi_determinants():
    for n in range(1, 6):
        closed, direct = normality_determinant("Jacobi", {"alpha": [cq("2/5")], "beta": cq("-1/3")}, (n,))
        assert closed == direct != 0


def test_racah_moments_use_finite_support():
    spec = make_spec(("Racah", None))
    (f,) = functionals_for(spec)
    assert f.support == "finite" and f(0) == ONE


def test_meixner_pollaczek_first_moment():
    # symmetric weight at w = 1 (phi = pi/2) has zero mean
    (f,) = functionals_for(FamilySpec.create("MeixnerPollaczek", lam="1/2", w=[1]))
    assert f(1) == 0


def test_dual_hahn_lattice():
    spec = make_spec(("DualHahn", None))
    (f,) = functionals_for(spec)
    g, d, N = spec.params["gamma"][0], spec.params["delta"][0], spec.params["N"]
    weights = [fam.dual_hahn_weight(g, d, N, x) for x in range(N + 1)]
    points = [cq(x) * (x + g + d + 1) for x in range(N + 1)]
    total = sum(weights, cq(0))
    mean = sum((w * p for w, p in zip(weights, points)), cq(0)) / total
    assert f(1) == mean


def test_functionals_cover_every_family(family_key):
    spec = make_spec(family_key)
    F = functionals_for(spec)
    assert len(F) == spec.m
    for f in F:
        assert f(0) == ONE
        assert len(f.moments(5)) == 6
