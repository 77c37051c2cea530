import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from mopkit import families as fam
from mopkit.arith import ONE, Poly, cq
from mopkit.errors import AdmissibilityError, UnavailableRepresentation
from mopkit.families import FamilySpec, build, build_all, representations
from mopkit.moments import functionals_for
from mopkit.oracle import solve_type2
from mopkit.sampling import random_spec

from conftest import PARAMS, make_spec


def _strs(p):
    return [str(c) for c in p.coeffs]


# --- scalar Jacobi and Jacobi-Pineiro -------------------------------------


def test_jacobi_examples():
    assert fam.jacobi(0, "1/3", "1/2") == Poly([1])
    assert fam.jacobi(1, 0, 0) == Poly([1, -2])
    assert fam.jacobi(2, 0, 0) == Poly([1, -6, 6])


def test_jacobi_euler_form_matches():
    for n in range(6):
        assert fam.jacobi_euler(n, "1/3", "-1/2") == fam.jacobi(n, "1/3", "-1/2")


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 4), st.integers(1, 40), st.integers(1, 40))
def test_jacobi_pineiro_single_weight_is_jacobi(n, p, q):
    alpha, beta = cq(f"{p}/7"), cq(f"{q}/11")
    expected = fam.jacobi(n, alpha, beta)
    assert fam.jacobi_pineiro_rodrigues((n,), [alpha], beta) == expected
    assert fam.jacobi_pineiro_M((n,), [alpha], beta) == expected
    assert fam.jacobi_pineiro_euler((n,), [alpha], beta) == expected


def test_jacobi_pineiro_zero_index():
    assert fam.jacobi_pineiro_rodrigues((0, 0), ["1/3", "3/4"], "1/2") == Poly([1])
    assert fam.jacobi_pineiro_M((0, 0), ["1/3", "3/4"], "1/2") == Poly([1])


def test_jacobi_pineiro_matches_oracle_at_11():
    spec = FamilySpec.create("JacobiPineiro", alpha=[0, "1/2"], beta=0)
    p = fam.jacobi_pineiro_rodrigues((1, 1), [0, "1/2"], 0)
    assert p.proportionality(solve_type2(functionals_for(spec), (1, 1))) is not None


def test_jacobi_pineiro_three_representations_agree():
    alpha, beta = ["1/3", "3/4"], "1/2"
    r = fam.jacobi_pineiro_rodrigues((2, 1), alpha, beta)
    assert fam.jacobi_pineiro_M((2, 1), alpha, beta) == r
    assert fam.jacobi_pineiro_euler((2, 1), alpha, beta) == r
    # frozen from the moment-system oracle (monic form)
    assert _strs(r.monic()) == ["-16/435", "212/435", "-143/105", "1"]


def test_jacobi_pineiro_rejects_integer_differences():
    with pytest.raises(AdmissibilityError):
        FamilySpec.create("JacobiPineiro", alpha=["1/3", "4/3"], beta="1/2")
    with pytest.raises(AdmissibilityError):
        FamilySpec.create("JacobiPineiro", alpha=["-1", "1/2"], beta="1/2")


def test_jacobi_pineiro_reflection():
    # weights x^a_j (1-x)^b reflect to x^b (1-x)^a_j under x -> 1-x
    alpha, beta = ["1/3", "3/4"], "1/2"
    for n in [(1, 0), (2, 1), (1, 2), (3, 3)]:
        p = fam.jacobi_pineiro_M(n, alpha, beta)
        q = fam.jacobi_pineiro_beta_M(n, beta, alpha).compose_affine(-1, 1)
        assert p.proportionality(q) is not None


def test_jacobi_pineiro_beta_routes_agree():
    for n in [(1, 1), (2, 1), (0, 3)]:
        assert fam.jacobi_pineiro_beta_M(n, "1/3", ["3/4", "1/5"]) == \
            fam.jacobi_pineiro_beta_rodrigues(n, "1/3", ["3/4", "1/5"])


# --- Wilson and its descendants --------------------------------------------


def test_wilson_examples():
    assert fam.wilson(0, 1, 2, 3, 4) == Poly([1])
    p = fam.wilson(1, 1, 2, 3, 4)
    assert p.var == "s" and _strs(p) == ["50", "10"]


def test_wilson_full_permutation_symmetry():
    params = [cq(1), cq("1/2"), cq("3/2"), cq(2)]
    for n in range(4):
        ref = fam.wilson(n, *params)
        perms = list(itertools.permutations(params))
        assert len(perms) == 24
        assert all(fam.wilson(n, *perm) == ref for perm in perms)


def test_multiple_wilson_single_weight_is_wilson():
    for n in range(5):
        w = fam.wilson(n, 1, "1/2", "3/2", 2)
        assert fam.multiple_wilson_M((n,), 1, ["1/2"], "3/2", 2) == w
        assert fam.multiple_wilson_kampe((n,), 1, ["1/2"], "3/2", 2) == w


def test_multiple_wilson_representations_and_oracle():
    args = (1, ["1/2", "5/4"], "3/2", 2)
    assert fam.multiple_wilson_M((0, 0), *args) == Poly([1], "s")
    p = fam.multiple_wilson_M((1, 1), *args)
    assert fam.multiple_wilson_kampe((1, 1), *args) == p
    assert _strs(p.monic()) == ["109/36", "85/18", "1"]


def test_multiple_wilson_symmetric_in_c_and_d():
    for n in [(1, 1), (2, 1)]:
        assert fam.multiple_wilson_M(n, 1, ["1/2", "5/4"], "3/2", 2) == \
            fam.multiple_wilson_M(n, 1, ["1/2", "5/4"], 2, "3/2")


def test_racah_relations_hold_on_random_parameters():
    rng = random.Random(3)
    for variant in ("beta", "gammadelta"):
        for _ in range(5):
            spec = random_spec(("MultipleRacah", variant), rng, 2, 4)
            for n in [(1, 0), (1, 1), (2, 1), (2, 2)]:
                polys = build_all(spec, n)
                assert polys["wilson"] == polys["relation"]


def test_racah_alpha_variant_routes_agree():
    spec = make_spec(("MultipleRacah", "alpha"))
    for n in [(1, 1), (2, 1), (2, 2)]:
        polys = list(build_all(spec, n).values())
        assert all(p == polys[0] for p in polys)


def test_scalar_reductions():
    pairs = [
        ("MultipleContinuousDualHahn", "ContinuousDualHahn", dict(a="1/2", b=["1/3"], c="2/3")),
        ("MultipleDualHahn", "DualHahn", dict(gamma=["1/2"], delta=["1/3"], N=5)),
        ("MultipleMeixnerPollaczek", "MeixnerPollaczek", dict(lam="1/2", w=["1/2"])),
        ("MultipleContinuousHahn", "ContinuousHahn", dict(a="1/2", b=["1/3"], c="2/3", d="5/4")),
        ("MultipleRacah", "Racah", dict(alpha=["1/2"], beta="1/3", gamma=-6, delta="2/7")),
    ]
    for multi, scalar, params in pairs:
        ms, ss = FamilySpec.create(multi, **params), FamilySpec.create(scalar, **params)
        for n in range(4):
            ref = build(ss, (n,))
            for rep in representations(ms):
                assert build(ms, (n,), rep) == ref, (multi, rep, n)


def test_hahn_reflection():
    # Hahn weights swap alpha and beta under x -> N - x
    for n in [(1, 0), (2, 1), (1, 2), (3, 2)]:
        p = fam.multiple_hahn_M(n, ["1/2", "1/3"], "1/4", 6)
        q = fam.multiple_hahn_beta_M(n, "1/4", ["1/2", "1/3"], 6).compose_affine(-1, 6)
        assert p.proportionality(q) is not None


def test_hahn_frozen_value():
    p = build(make_spec(("Hahn", "alpha")), (2, 1))
    assert _strs(p.monic()) == ["-23040/4807", "86670/4807", "-2183/253", "1"]


def test_dual_hahn_frozen_value():
    p = build(make_spec(("MultipleDualHahn", None)), (1, 1))
    assert p.var == "lambda"
    assert _strs(p.monic()) == ["36", "-529/30", "1"]


def test_meixner_pollaczek_frozen_value():
    p = build(make_spec(("MultipleMeixnerPollaczek", None)), (1, 1))
    assert _strs(p.monic()) == ["-17/32", "0", "1"]


def test_charlier_matches_oracle():
    spec = FamilySpec.create("Charlier", a=[1, 2])
    p = build(spec, (1, 1))
    assert _strs(p.monic()) == ["2", "-4", "1"]
    assert p.proportionality(solve_type2(functionals_for(spec), (1, 1))) is not None


def test_hermite_has_no_explicit_form():
    spec = make_spec(("MultipleHermite", None))
    with pytest.raises(UnavailableRepresentation):
        build(spec, (1, 1))


def test_every_family_at_zero_index_is_one(family_key):
    spec = make_spec(family_key)
    n = (0,) * spec.m
    if not representations(spec):
        assert solve_type2(functionals_for(spec), n) == Poly([1])
        return
    for rep, p in build_all(spec, n).items():
        assert p.coeffs == (ONE,), rep
    assert fam.build_limit_family(spec, n).coeffs == (ONE,)


def test_every_representation_proportional_to_oracle(family_key):
    spec = make_spec(family_key)
    ns = [(1,), (2,), (3,)] if spec.m == 1 else [(1, 0), (1, 1), (2, 1), (1, 2)]
    F = functionals_for(spec)
    for n in ns:
        oracle = solve_type2(F, n, spec.variable)
        if not representations(spec):
            continue
        for rep, p in build_all(spec, n).items():
            assert p.degree == sum(n)
            assert p.proportionality(oracle) is not None, (rep, n)


def test_spec_validation_errors():
    with pytest.raises(AdmissibilityError):
        FamilySpec.create("Wilson", a=1, b=["1/2"], c="3/2")
    with pytest.raises(AdmissibilityError):
        FamilySpec.create("NoSuchFamily")
    spec = make_spec(("Hahn", "alpha"))
    with pytest.raises(AdmissibilityError):
        build(spec, (5, 3))
    with pytest.raises(ValueError):
        build(spec, (1, 1, 1))


def test_spec_json_round_trip(family_key):
    spec = make_spec(family_key)
    js = spec.to_json()
    again = FamilySpec.create(js["family"], js["variant"], **js["params"])
    assert again.params == spec.params


def test_removable_singularity_in_m_form():
    # alpha_1 + beta + 1 = 0 with n_1 = 0 makes a lower parameter of the
    # M form vanish together with an upper one; the limit must be taken
    alpha, beta, n = ["-1/8", "5/8", "3/2"], "-7/8", (0, 1, 5)
    r = fam.jacobi_pineiro_rodrigues(n, alpha, beta)
    assert fam.jacobi_pineiro_M(n, alpha, beta) == r == fam.jacobi_pineiro_euler(n, alpha, beta)


@pytest.mark.parametrize("family,variant,params", [
    ("MultipleWilson", None, dict(a="1/4", b=["1/4", "2/3"], c="1/4", d="1/4")),
    ("JacobiPineiro", "beta", dict(alpha="-7/8", beta=["-1/8", "5/8"])),
    ("Hahn", "alpha", dict(alpha=["-1/8", "5/8"], beta="-7/8", N=5)),
    ("MultipleContinuousHahn", None, dict(a="1/4", b=["1/4", "2/3"], c="1/4", d="1/4")),
])
def test_degenerate_partial_sum_parameters_match_oracle(family, variant, params):
    spec = FamilySpec.create(family, variant, **params)
    F = functionals_for(spec)
    for n in [(0, 1), (0, 2), (1, 1), (0, 3)]:
        oracle = solve_type2(F, n, spec.variable)
        for rep, p in build_all(spec, n).items():
            assert p.proportionality(oracle) is not None, (rep, n)
