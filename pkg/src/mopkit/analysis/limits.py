"""Limit relations between the families, checked by measured convergence rates.

Each :class:`LimitEdge` knows how to build, for a size parameter ``T``, the
source polynomial with ``T``-dependent parameters, divided by its
normalisation and written in the target variable.  ``check_limit`` compares
it exactly with the target polynomial at several ``T`` and checks that the
largest coefficient difference decays like ``T**-order``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from ..arith import ONE, Poly, cq, factorial, make_context, pochhammer
from .. import families as fam

DEFAULT_T = (10 ** 2, 10 ** 4, 10 ** 6)
RATIO_SLACK = 4


@dataclass(frozen=True)
class LimitEdge:
    name: str
    source: str
    target: str
    schedule: str
    divisor: str
    substitution: str
    order: int | None                  # None: the relation is exact for every T
    build_source: Callable = field(repr=False, compare=False)
    build_target: Callable = field(repr=False, compare=False)
    default_target: Callable = field(repr=False, compare=False)
    default_n: tuple = (1, 1)
    oracle_only: bool = False

    def to_json(self) -> dict:
        return {"name": self.name, "source": self.source, "target": self.target,
                "schedule": self.schedule, "divisor": self.divisor,
                "substitution": self.substitution,
                "order": "exact" if self.order is None else self.order,
                "oracle_only": self.oracle_only}


@dataclass
class LimitReport:
    edge: str
    n: tuple
    Ts: tuple
    differences: list
    ratios: list
    expected_ratios: list
    passed: bool

    def to_json(self) -> dict:
        return {"edge": self.edge, "n": list(self.n), "T": list(self.Ts),
                "differences": [str(d) for d in self.differences],
                "ratios": [str(r) for r in self.ratios],
                "expected_ratios": [str(r) for r in self.expected_ratios],
                "passed": self.passed}


def _nfact(n):
    out = 1
    for v in n:
        out *= factorial(v)
    return out


def _spec(tag, variant=None, **params):
    return fam.FamilySpec.create(tag, variant, **params)


# --- edge implementations: (T, target spec, n) -> Poly in the target variable ---


def _wilson_to_racah(T, tgt, n):
    # gamma + 1 = a + d = -N puts the Wilson parameters outside the formal
    # admissible set, so this goes through the unchecked series directly
    P = tgt.params
    return fam.multiple_racah_wilson(n, P["alpha"], P["beta"], P["gamma"], P["delta"])


def _wilson_to_cdh(T, tgt, n):
    P = tgt.params
    a, b, c = P["a"], P["b"], P["c"]
    src = fam.multiple_wilson_M(n, a, b, c, T)
    return src / pochhammer(a + T, sum(n))


def _cdh_to_mp(T, tgt, n):
    P = tgt.params
    lam, w = P["lam"], P["w"]
    T = cq(T)
    i = cq("i")
    b = [T * fam.cot_phi(wj) for wj in w]
    src = fam.multiple_continuous_dual_hahn_M(n, lam + i * T, b, lam - i * T)
    # S(y**2) = p(-y**2) with y = x - T, i.e. s = -(x - T)**2
    inner = Poly([-T * T, 2 * T, -1], "x")
    div = ONE * _nfact(n)
    for nj, wj in zip(n, w):
        div = div * pochhammer(T * fam.csc_phi(wj), nj)
    return src.compose(inner) / div


def _wilson_to_continuous_hahn(T, tgt, n):
    P = tgt.params
    a, b, c, d = P["a"], P["b"], P["c"], P["d"]
    src = fam.multiple_wilson_M(n, a - T, [bj + T for bj in b], c - T, d + T)
    inner = Poly([T * T, 2 * T, 1], "t")
    # the explicit continuous Hahn prefactor carries no 1/n!, so neither does the divisor
    return src.compose(inner) / pochhammer(a + c - 2 * T, sum(n))


def _racah_to_hahn(T, tgt, n):
    P = tgt.params
    N = P["N"]
    src = fam.multiple_racah_M(n, P["alpha"], P["beta"], -N - 1, T)
    # lambda(x) = x (x + gamma + delta + 1) = x**2 + (T - N) x
    return src.compose(Poly([0, T - N, 1], "x"))


def _racah_to_dual_hahn(T, tgt, n):
    P = tgt.params
    N, g, d = P["N"], P["gamma"], P["delta"]
    beta = [-dj - N - 1 for dj in d]
    return fam.multiple_racah_gd_wilson(n, T, beta, g, d)


def _hahn_beta_to_meixner1(T, tgt, n):
    P = tgt.params
    beta, c = P["beta"], P["c"]
    return fam.multiple_hahn_beta_M(n, beta - 1, [T * (1 - cj) / cj for cj in c], T)


def _hahn_to_meixner2(T, tgt, n):
    P = tgt.params
    beta, c = P["beta"], P["c"]
    return fam.multiple_hahn_M(n, [bj - 1 for bj in beta], T * (1 - c) / c, T)


def _hahn_to_kravchuk(T, tgt, n):
    P = tgt.params
    p, N = P["p"], P["N"]
    return fam.multiple_hahn_M(n, [pj * T / (1 - pj) for pj in p], T, N)


def _meixner1_to_charlier(T, tgt, n):
    a = tgt.params["a"]
    return fam.multiple_meixner1_M(n, T, [aj / (aj + T) for aj in a])


def _hahn_beta_to_jp_beta(T, tgt, n):
    P = tgt.params
    alpha, beta = P["alpha"], P["beta"]
    src = fam.multiple_hahn_beta_M(n, alpha, beta, T)
    pref = pochhammer(alpha + 1, sum(n)) / _nfact(n)
    return src.compose_affine(T, 0).scale(pref)


def _hahn_to_jp(T, tgt, n):
    P = tgt.params
    alpha, beta = P["alpha"], P["beta"]
    src = fam.multiple_hahn_M(n, alpha, beta, T)
    return src.compose_affine(T, 0).scale(fam._jp_prefactor(n, alpha))


def _jp_to_laguerre1(T, tgt, n):
    src = fam.jacobi_pineiro_M(n, tgt.params["alpha"], T)
    return src.compose_affine(cq(1) / T, 0)


def _jp_beta_to_laguerre2(T, tgt, n):
    P = tgt.params
    src = fam.jacobi_pineiro_beta_M(n, P["alpha"], [cj * T for cj in P["c"]])
    return src.compose_affine(cq(1) / T, 0)


def _jp_to_hermite(T, tgt, n):
    c = tgt.params["c"]
    T = cq(T)
    src = fam.jacobi_pineiro_M(n, [T * T + cj * T for cj in c], T * T)
    return src.compose_affine(1 / (2 * T), cq("1/2")).monic()


def _hermite_oracle(tgt, n):
    from ..moments import functionals_for
    from ..oracle import solve_type2
    return solve_type2(functionals_for(tgt), n, "x")


SCHEME = [
    LimitEdge(
        "wilson-racah", "MultipleWilson", "MultipleRacah[alpha]",
        "a=(gamma+delta+1)/2, d=(gamma-delta+1)/2, b_j=alpha_j+1-a, c=beta+1-d",
        "(a e + b)_n (a+c)_|n| (a+d)_|n|", "s = lambda + a**2 (t = x + a)", None,
        _wilson_to_racah, lambda tgt, n: fam.build(tgt, n, "M"),
        lambda: _spec("MultipleRacah", "alpha", alpha=["1/2", "1/5"], beta="1/3", gamma=-7, delta="2/7"),
        (2, 1)),
    LimitEdge(
        "wilson-cdh", "MultipleWilson", "MultipleContinuousDualHahn",
        "d = T", "(a+d)_|n|", "none", 1,
        _wilson_to_cdh, lambda tgt, n: fam.build(tgt, n, "M"),
        lambda: _spec("MultipleContinuousDualHahn", a="1/2", b=["1/3", "3/4"], c="2/3"), (2, 1)),
    LimitEdge(
        "cdh-meixner-pollaczek", "MultipleContinuousDualHahn", "MultipleMeixnerPollaczek",
        "a = lam + iT, b_j = T cot(phi_j), c = lam - iT", "prod (T csc(phi_j))_{n_j} n!",
        "s = -(x - T)**2", 1,
        _cdh_to_mp, lambda tgt, n: fam.build(tgt, n, "M"),
        lambda: _spec("MultipleMeixnerPollaczek", lam="1/2", w=["1/3", "1/2"]), (2, 1)),
    LimitEdge(
        "wilson-continuous-hahn", "MultipleWilson", "MultipleContinuousHahn",
        "(a, b, c, d) -> (a - T, b + T e, c - T, d + T)", "(a+c-2T)_|n|", "s = (t + T)**2", 1,
        _wilson_to_continuous_hahn, lambda tgt, n: fam.build(tgt, n, "M"),
        lambda: _spec("MultipleContinuousHahn", a="1/3", b=["1/4", "3/5"], c="2/7", d="5/6"), (2, 1)),
    LimitEdge(
        "racah-hahn", "MultipleRacah[alpha]", "Hahn[alpha]",
        "gamma = -N-1, delta = T", "none", "lambda = x**2 + (T - N) x", 1,
        _racah_to_hahn, lambda tgt, n: fam.build(tgt, n, "M"),
        lambda: _spec("Hahn", "alpha", alpha=["1/2", "1/3"], beta="1/4", N=6), (2, 1)),
    LimitEdge(
        "racah-dual-hahn", "MultipleRacah[gammadelta]", "MultipleDualHahn",
        "alpha = T, beta_j = -delta_j - N - 1", "none", "none", 1,
        _racah_to_dual_hahn, lambda tgt, n: fam.build(tgt, n, "M"),
        lambda: _spec("MultipleDualHahn", gamma=["1/2", "1/5"], delta=["1/3", "19/30"], N=6), (2, 1)),
    LimitEdge(
        "hahn-meixner1", "Hahn[beta]", "MeixnerI",
        "alpha = beta - 1, beta_j = N (1 - c_j)/c_j, N = T", "none", "none", 1,
        _hahn_beta_to_meixner1, lambda tgt, n: fam.build(tgt, n, "M"),
        lambda: _spec("MeixnerI", beta="3/2", c=["3/7", "5/11"]), (2, 1)),
    LimitEdge(
        "hahn-meixner2", "Hahn[alpha]", "MeixnerII",
        "alpha_j = beta_j - 1, beta = N (1 - c)/c, N = T", "none", "none", 1,
        _hahn_to_meixner2, lambda tgt, n: fam.build(tgt, n, "M"),
        lambda: _spec("MeixnerII", beta=["3/2", "1/3"], c="3/7"), (2, 1)),
    LimitEdge(
        "hahn-kravchuk", "Hahn[alpha]", "Kravchuk",
        "beta = T, alpha_j = p_j T/(1 - p_j)", "none", "none", 1,
        _hahn_to_kravchuk, lambda tgt, n: fam.build(tgt, n, "M"),
        lambda: _spec("Kravchuk", p=["1/3", "2/5"], N=6), (2, 1)),
    LimitEdge(
        "meixner1-charlier", "MeixnerI", "Charlier",
        "c_j = a_j/(a_j + T), beta = T", "none", "none", 1,
        _meixner1_to_charlier, lambda tgt, n: fam.build(tgt, n, "M"),
        lambda: _spec("Charlier", a=[1, "5/2"]), (2, 1)),
    LimitEdge(
        "hahn-jacobi-pineiro-beta", "Hahn[beta]", "JacobiPineiro[beta]",
        "N = T", "n! / (alpha+1)_|n|", "x -> N x", 1,
        _hahn_beta_to_jp_beta, lambda tgt, n: fam.build(tgt, n, "M"),
        lambda: _spec("JacobiPineiro", "beta", alpha="1/3", beta=["1/2", "1/5"]), (2, 1)),
    LimitEdge(
        "hahn-jacobi-pineiro", "Hahn[alpha]", "JacobiPineiro[alpha]",
        "N = T", "n! / (alpha + e)_n", "x -> N x", 1,
        _hahn_to_jp, lambda tgt, n: fam.build(tgt, n, "M"),
        lambda: _spec("JacobiPineiro", "alpha", alpha=["1/2", "1/5"], beta="1/3"), (2, 1)),
    LimitEdge(
        "jacobi-pineiro-laguerre1", "JacobiPineiro[alpha]", "LaguerreI",
        "beta = T", "none", "x -> x / T", 1,
        _jp_to_laguerre1, lambda tgt, n: fam.build(tgt, n, "M"),
        lambda: _spec("LaguerreI", alpha=["1/2", "1/5"]), (2, 1)),
    LimitEdge(
        "jacobi-pineiro-laguerre2", "JacobiPineiro[beta]", "LaguerreII",
        "beta_j = c_j T", "none", "x -> x / T", 1,
        _jp_beta_to_laguerre2, lambda tgt, n: fam.build(tgt, n, "M"),
        lambda: _spec("LaguerreII", alpha="1/3", c=[1, "5/3"]), (2, 1)),
    LimitEdge(
        "jacobi-pineiro-hermite", "JacobiPineiro[alpha]", "MultipleHermite",
        "beta = T**2, alpha_j = T**2 + c_j T", "monic", "x -> (x + T)/(2T)", 1,
        _jp_to_hermite, _hermite_oracle,
        lambda: _spec("MultipleHermite", c=[1, "7/3"]), (2, 1), oracle_only=True),
]

EDGES = {e.name: e for e in SCHEME}


def scheme_graph() -> dict:
    nodes = []
    for tag, variant in fam.family_keys():
        nodes.append(tag if variant is None else f"{tag}[{variant}]")
    return {"nodes": nodes, "edges": [e.to_json() for e in SCHEME]}


def _max_abs_diff(p: Poly, q: Poly, ctx):
    d = p - q
    worst = ctx.zero
    for c in d.coeffs:
        worst = max(worst, abs(c.to_mpc(ctx)))
    return worst


def check_limit(edge: LimitEdge, n=None, Ts=DEFAULT_T, target=None) -> LimitReport:
    """Measure ``max |coeff(source_T) - coeff(target)|`` for each ``T``."""
    ctx = make_context(128)
    n = tuple(n) if n is not None else edge.default_n
    target = target or edge.default_target()
    tgt = edge.build_target(target, n)
    diffs = [_max_abs_diff(edge.build_source(cq(T), target, n), tgt, ctx) for T in Ts]
    ratios, expected = [], []
    if edge.order is None:
        passed = all(d == 0 for d in diffs)
    else:
        passed = True
        for i in range(len(Ts) - 1):
            exp_ratio = ctx.mpf(Ts[i + 1]) / Ts[i]
            exp_ratio = exp_ratio ** edge.order
            expected.append(exp_ratio)
            if diffs[i + 1] == 0:
                ratio = ctx.inf if diffs[i] else ctx.one
                ratios.append(ratio)
                passed = passed and diffs[i] == 0
                continue
            ratio = diffs[i] / diffs[i + 1]
            ratios.append(ratio)
            passed = passed and (exp_ratio / RATIO_SLACK <= ratio <= exp_ratio * RATIO_SLACK)
    return LimitReport(edge.name, n, tuple(Ts), diffs, ratios, expected, bool(passed))
