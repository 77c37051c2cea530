import pytest

from mopkit.arith import ONE, Poly, cq
from mopkit.errors import NotNormal
from mopkit.families import FamilySpec, build
from mopkit import families as fam
from mopkit.moments import functionals_for, scalar_basis
from mopkit.oracle import expand_in_scalar_basis, solve_type2, verify_orthogonality

from conftest import make_spec


def test_jacobi_oracle_is_monic_shifted_legendre():
    F = functionals_for(FamilySpec.create("Jacobi", alpha=[0], beta=0))
    p = solve_type2(F, (2,))
    assert p == Poly([cq("1/6"), -1, 1])
    assert p.proportionality(fam.jacobi(2, 0, 0)) == cq("1/6")
    assert solve_type2(F, (0,)) == Poly([1])


def test_hermite_oracle():
    spec = FamilySpec.create("MultipleHermite", c=[1, 2])
    F = functionals_for(spec)
    p = solve_type2(F, (1, 1))
    assert p.degree == 2 and p.lead == ONE
    assert [str(c) for c in p.coeffs] == ["0", "-3/2", "1"]
    assert verify_orthogonality(p, F, (1, 1)).passed


def test_verify_jacobi_pineiro():
    spec = make_spec(("JacobiPineiro", "alpha"))
    p = fam.jacobi_pineiro_M((2, 1), spec.params["alpha"], spec.params["beta"])
    rep = verify_orthogonality(p, functionals_for(spec), (2, 1))
    assert rep.passed
    assert all(r == 0 for row in rep.residuals for r in row)
    assert all(e != 0 for e in rep.extras)
    js = rep.to_json()
    assert js["residuals"] == [["0", "0"], ["0"]]


def test_zero_polynomial_rejected():
    spec = make_spec(("JacobiPineiro", "alpha"))
    rep = verify_orthogonality(Poly([]), functionals_for(spec), (1, 1))
    assert not rep.passed and rep.degree < 0


def test_wrong_candidate_fails():
    spec = make_spec(("JacobiPineiro", "alpha"))
    rep = verify_orthogonality(Poly([1, 1, 1]), functionals_for(spec), (1, 1))
    assert not rep.passed


def test_multiple_wilson_orthogonality_from_contour_moments():
    spec = make_spec(("MultipleWilson", None))
    p = build(spec, (1, 1), "M")
    rep = verify_orthogonality(p, functionals_for(spec), (1, 1))
    assert rep.passed


def test_not_normal_detected():
    # equal weights give a singular stacked moment matrix
    F = functionals_for(FamilySpec.create("Charlier", a=[1, 2]))
    with pytest.raises(NotNormal):
        solve_type2([F[0], F[0]], (1, 1))


def test_basis_expansion_of_basis_element():
    spec = make_spec(("MultipleWilson", None))
    basis = scalar_basis("MultipleWilson", spec.params, 0, 3)
    exp = expand_in_scalar_basis(basis[2], basis, (2, 0), 0)
    assert exp.coefficients == [0, 0, 1]


def test_multiple_wilson_basis_vanishing_pattern():
    spec = make_spec(("MultipleWilson", None))
    p = build(spec, (1, 1))
    for j in range(2):
        exp = expand_in_scalar_basis(p, scalar_basis("MultipleWilson", spec.params, j, 2), (1, 1), j)
        assert exp.pattern_holds
        assert exp.coefficients[0] == 0


def test_jacobi_pineiro_basis_vanishing_pattern():
    spec = make_spec(("JacobiPineiro", "alpha"))
    for n in [(2, 1), (1, 2), (3, 1)]:
        p = build(spec, n)
        for j in range(2):
            basis = scalar_basis("JacobiPineiro", spec.params, j, sum(n))
            assert expand_in_scalar_basis(p, basis, n, j).pattern_holds
