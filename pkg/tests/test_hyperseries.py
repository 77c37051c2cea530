import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from mopkit.arith import ONE, ZERO, Poly, cq
from mopkit.errors import CancellationFailure, VanishingLowerPochhammer
from mopkit import families as fam
from mopkit.hyperseries import (
    PairedParameter, Truncation, eval_M, eval_kampe, eval_pFq_terminating, kampe,
    kampe_inner_sum, mseries, truncated_product_coeffs,
)

# non-integer rationals, so no lower Pochhammer symbol can vanish
small = st.builds(lambda p, q: Fraction(p, q) + Fraction(1, 2 * q), st.integers(-20, 20), st.integers(2, 9))


def test_pfq_examples():
    x = Poly.variable()
    assert eval_pFq_terminating([-1, 2], [1], x) == Poly([1, -2])
    assert eval_pFq_terminating([0, "1/3"], ["5/2"], cq("7/2")) == ONE
    assert eval_pFq_terminating([-2, 1], [1], ONE) == ZERO


def test_pfq_lower_parameter_vanishing():
    with pytest.raises(VanishingLowerPochhammer):
        eval_pFq_terminating([-3, 1], [-1], ONE)


def test_chu_vandermonde():
    # 2F1(-n, b; c; 1) = (c-b)_n / (c)_n
    from mopkit.arith import pochhammer
    b, c = cq("2/3"), cq("7/5")
    for n in range(6):
        assert eval_pFq_terminating([-n, b], [c], ONE) == pochhammer(c - b, n) / pochhammer(c, n)


def test_paired_parameter_is_pochhammer_product():
    from mopkit.arith import pochhammer
    a, t = cq("3/4"), cq("2/5")
    tab = PairedParameter(a).table(4)
    for k, p in enumerate(tab):
        assert p.eval_at(t * t) == pochhammer(a - t, k) * pochhammer(a + t, k)


def test_m_series_trivial_cases():
    spec = mseries(f=["1/2"], phi=["3/2"], g=[["1/3"]], psi=[["5/3"]], n=(0, 0), x=(cq(2), cq(3)))
    assert eval_M(spec) == ONE
    spec = mseries(f=["1/2"], phi=["3/2"], g=[["1/3"]], psi=[["5/3"]], n=(2, 3), x=(ZERO, ZERO))
    assert eval_M(spec) == ONE


def test_m_series_single_component_is_pfq():
    spec = mseries(f=["1/2", "1/3"], phi=["3/2"], n=(3,), x=(cq("2/7"),))
    assert eval_M(spec) == eval_pFq_terminating([-3, "1/2", "1/3"], ["3/2"], cq("2/7"))


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 3), st.integers(0, 3), small, small, small, small, small, small)
def test_m_series_equals_kampe_for_two_components(n1, n2, f, phi, g, psi, x, y):
    spec = mseries(f=[f], phi=[phi], g=[[g]], psi=[[psi]], n=(n1, n2), x=(cq(x), cq(y)))
    ks = kampe(f=[f], phi=[phi], g=[-n1], psi=[], h=[-n2, g], xi=[psi], x=x, y=y)
    assert eval_M(spec) == eval_kampe(ks)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 4), st.integers(0, 4), small, small, small, small)
def test_kampe_without_outer_parameters_factorises(n1, n2, g, psi, x, y):
    ks = kampe(g=[-n1, g], psi=[psi], h=[-n2], xi=[], x=x, y=y)
    left = eval_pFq_terminating([-n1, g], [psi], cq(x))
    right = eval_pFq_terminating([-n2], [], cq(y))
    assert eval_kampe(ks) == left * right


def test_kampe_at_zero_arguments():
    ks = kampe(f=["1/2"], phi=["1/3"], g=[-2], psi=[], h=[-3], xi=[], x=0, y=0)
    assert eval_kampe(ks) == ONE


def test_kampe_truncation_detects_nonzero_tail():
    ks = kampe(f=["1/2"], phi=["1/3"], g=["1/5"], psi=["2/3"], h=["1/7"], xi=["3/4"], x=1, y=1,
               truncation=Truncation(2))
    assert kampe_inner_sum(ks, 3) != ZERO
    with pytest.raises(CancellationFailure):
        eval_kampe(ks)


def test_multiple_wilson_kampe_reduces_to_scalar_wilson():
    a, b, c, d = cq(1), cq("1/2"), cq("3/2"), cq(2)
    for n in range(5):
        assert fam.multiple_wilson_kampe((n,), a, [b], c, d) == fam.wilson(n, a, b, c, d)


def test_truncated_product_examples():
    series = [cq(k + 1) for k in range(6)]
    assert truncated_product_coeffs(0, series, 4) == Poly(series[:5])
    assert truncated_product_coeffs(-1, lambda k: ONE if k == 0 else ZERO, 5) == Poly([1, -1])


def test_euler_form_of_jacobi_at_degree_one():
    assert fam.jacobi_pineiro_euler((1,), [0], 0) == Poly([1, -2])


def test_m_series_random_rational_consistency():
    # the M form and the Rodrigues form of Jacobi-Pineiro agree on random draws
    rng = random.Random(11)
    for _ in range(10):
        alpha = [cq(f"{rng.randint(1, 30)}/{rng.choice([7, 11, 13])}") for _ in range(2)]
        if (alpha[0] - alpha[1]).is_integer():
            continue
        beta = cq(f"{rng.randint(1, 20)}/9")
        n = (rng.randint(0, 3), rng.randint(0, 3))
        assert fam.jacobi_pineiro_M(n, alpha, beta) == fam.jacobi_pineiro_rodrigues(n, alpha, beta)


def test_eps_limit_of_removable_quotient():
    from mopkit.hyperseries import EpsParameter
    # sum_k (-2)_k (eps)_k / ((eps)_k k!) = 2F1 with the eps pair cancelled = (1 - x)**2
    x = Poly.variable()
    spec = mseries(f=[EpsParameter(0)], phi=[EpsParameter(0)], n=(2,), x=(x,))
    assert eval_M(spec) == Poly([1, -2, 1])
    assert EpsParameter(cq("1/2")) + 1 - cq("3/2") is not None
