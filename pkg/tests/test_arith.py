from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from mopkit.arith import (
    I, ONE, ZERO, ComplexRational, Poly, cq, determinant, falling_factorial_basis_change,
    make_context, pochhammer, poly_from_roots, precision_bits, rank, solve_linear,
)

rationals = st.fractions(max_denominator=50).filter(lambda f: abs(f) < 100)
complexes = st.builds(ComplexRational, rationals, rationals)
polys = st.lists(complexes, max_size=5).map(Poly)


def test_pochhammer_examples():
    assert pochhammer("7/3", 0) == ONE
    assert pochhammer(-3, 5) == ZERO
    assert pochhammer("1/2", 2) == cq("3/4")


def test_pochhammer_on_polynomials():
    x = Poly.variable()
    assert pochhammer(x, 2) == Poly([0, 1, 1])


def test_poly_examples():
    assert Poly.constant(5).derivative() == Poly([])
    assert Poly([1, -2]).compose_affine(-1, 1) == Poly([-1, 2])
    assert Poly([1, 0, 1]).eval_at(cq("3/2")) == cq("13/4")


def test_falling_factorial_rows():
    assert falling_factorial_basis_change(0) == (1,)
    assert falling_factorial_basis_change(2) == (0, 1, 1)
    assert falling_factorial_basis_change(3) == (0, 1, 3, 1)


@given(st.integers(0, 8), st.integers(-5, 12))
def test_falling_factorial_expansion(k, x):
    row = falling_factorial_basis_change(k)
    total = 0
    for r, s in enumerate(row):
        ff = 1
        for i in range(r):
            ff *= x - i
        total += s * ff
    assert total == x ** k


def test_complex_parsing_and_printing():
    for text in ("3/4", "-2", "1/2+3/5*i", "-i", "2-i", "7/3*i"):
        assert str(cq(text)) == text
    assert cq("1/2+3/5*i") == ComplexRational(Fraction(1, 2), Fraction(3, 5))
    assert I * I == -ONE


def test_floats_rejected():
    with pytest.raises(TypeError):
        cq(0.5)


@given(complexes, complexes, complexes)
def test_field_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    if b:
        assert (a / b) * b == a


@given(polys, polys, complexes)
def test_poly_ring_homomorphism(p, q, x):
    assert (p * q).eval_at(x) == p.eval_at(x) * q.eval_at(x)
    assert (p + q).eval_at(x) == p.eval_at(x) + q.eval_at(x)


@given(polys, complexes, complexes)
def test_affine_composition(p, u, v):
    x = cq("2/7")
    assert p.compose_affine(u, v).eval_at(x) == p.eval_at(u * x + v)


def test_proportionality():
    p = Poly([1, 2, 3])
    assert p.scale("5/2").proportionality(p) == cq("5/2")
    assert Poly([1, 2, 4]).proportionality(p) is None
    assert p.monic().lead == ONE


def test_roots_and_degree():
    p = poly_from_roots([1, "1/2", "i"])
    assert p.degree == 3
    assert p.eval_at(cq("i")) == ZERO


def test_linear_algebra():
    A = [[2, 1], [1, 3]]
    x, consistent, r = solve_linear([[cq(v) for v in row] for row in A], [cq(3), cq(5)])
    assert consistent and r == 2
    assert x == [cq("4/5"), cq("7/5")]
    assert determinant([[cq(v) for v in row] for row in A]) == cq(5)
    assert rank([[cq(1), cq(2)], [cq(2), cq(4)]]) == 1
    _, consistent, _ = solve_linear([[cq(1)], [cq(1)]], [cq(1), cq(2)])
    assert not consistent


def test_precision_env(monkeypatch):
    monkeypatch.setenv("MOPKIT_PRECISION_BITS", "97")
    assert precision_bits() == 97
    assert make_context().prec == 97
    assert precision_bits(64) == 64


@given(complexes)
def test_string_round_trip(z):
    assert cq(str(z)) == z
