"""Numerical check that multiple Wilson polynomials are Jacobi-Pineiro transforms.

For ``Re(c+d) > 0`` and ``0 < |Re t| < Re a``::

    p_n(t**2; a, b, c, d) = k_n int_0^1 P_n^{(alpha, beta)}(u) u**(a-1) (1-u)**beta K(u, t) du

with ``alpha_j = a + b_j - 1``, ``beta = c + d - 1``,
``k_n = n! Gamma(a+c+|n|) Gamma(a+d+|n|)`` and kernel
``K(u, t) = u**-t 2F1(c-t, d-t; c+d; 1-u) / (Gamma(a-t) Gamma(a+t) Gamma(c+d))``.
The transform of ``u**l`` has the closed form
``(a-t)_l (a+t)_l / (Gamma(a+c+l) Gamma(a+d+l))``; all the pieces are
checked separately.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from ..arith import cq, factorial, make_context
from ..errors import HypothesisViolation
from .. import families as fam
from .special import (
    QuadratureConfig, TanhSinhRule, gamma_complex, gauss_sum_numeric, hyp2f1_numeric,
)


@dataclass
class TransformCheck:
    name: str
    value: object
    expected: object
    rel_error: object
    tolerance: float

    @property
    def passed(self) -> bool:
        return self.rel_error <= self.tolerance

    def to_json(self) -> dict:
        return {"name": self.name, "value": str(self.value), "expected": str(self.expected),
                "rel_error": float(self.rel_error), "passed": self.passed}


@dataclass
class TransformReport:
    params: dict
    n: tuple
    checks: list = field(default_factory=list)
    level: int = 0

    @property
    def passed(self) -> bool:
        return bool(self.checks) and all(c.passed for c in self.checks)

    @property
    def max_error(self):
        return max(c.rel_error for c in self.checks)

    def to_json(self) -> dict:
        return {"params": {k: str(v) if not isinstance(v, tuple) else [str(x) for x in v]
                           for k, v in self.params.items()},
                "n": list(self.n), "level": self.level, "passed": self.passed,
                "checks": [c.to_json() for c in self.checks]}


def check_hypotheses(a, c, d, t):
    a, c, d, t = cq(a), cq(c), cq(d), cq(t)
    if not (c + d).re > 0:
        raise HypothesisViolation("need Re(c + d) > 0")
    if not 0 < abs(t.re) < a.re:
        raise HypothesisViolation("need 0 < |Re t| < Re a")


def _rel(ctx, value, expected):
    scale = abs(expected)
    if scale == 0:
        return abs(value)
    return abs(value - expected) / scale


def kernel(u, one_minus_u, t, a, c, d, ctx):
    """``K(u, t; a, 0, c, d)`` with ``1 - u`` supplied separately."""
    tm, am, cm, dm = (cq(v).to_mpc(ctx) for v in (t, a, c, d))
    norm = gamma_complex(am - tm, ctx) * gamma_complex(am + tm, ctx) * gamma_complex(cm + dm, ctx)
    return ctx.power(u, -tm) * hyp2f1_numeric(cm - tm, dm - tm, cm + dm, one_minus_u, ctx) / norm


def transformed_powers(a, c, d, t, L: int, config: QuadratureConfig, ctx=None):
    """``I_l = int_0^1 u**l u**(a-1) (1-u)**(c+d-1) K(u, t) du`` for ``l <= L``."""
    ctx = ctx or make_context(config.precision)
    a, c, d, t = cq(a), cq(c), cq(d), cq(t)
    check_hypotheses(a, c, d, t)
    am, cm, dm, tm = (v.to_mpc(ctx) for v in (a, c, d, t))
    norm = 1 / (gamma_complex(am - tm, ctx) * gamma_complex(am + tm, ctx) * gamma_complex(cm + dm, ctx))
    C = cm + dm
    # For Re t < 0 the series at 1 - u diverges as u -> 0; Euler's
    # transformation 2F1(A,B;C;z) = (1-z)**(C-A-B) 2F1(C-A,C-B;C;z) moves the
    # singular factor into an explicit power of u.
    if t.re < 0:
        A, B, upow = cm + tm, dm + tm, am + tm - 1
    else:
        A, B, upow = cm - tm, dm - tm, am - tm - 1
    theta = min(a.re - abs(t.re), (c + d).re)
    rule = TanhSinhRule(ctx, float(theta), config.max_abscissae)

    def integrand(u, v):
        base = ctx.power(u, upow) * ctx.power(v, C - 1) * hyp2f1_numeric(A, B, C, v, ctx) * norm
        out, p = [], base
        for _ in range(L + 1):
            out.append(p)
            p = p * u
        return out

    values, err, level = rule.integrate(integrand, config)
    return values, level


def closed_power_transform(a, c, d, t, ell: int, ctx):
    am, cm, dm, tm = (cq(v).to_mpc(ctx) for v in (a, c, d, t))
    return ctx.rf(am - tm, ell) * ctx.rf(am + tm, ell) / (
        gamma_complex(am + cm + ell, ctx) * gamma_complex(am + dm + ell, ctx))


def verify_transform(a, b, c, d, t, n, config: QuadratureConfig | None = None) -> TransformReport:
    """Quadrature check of the transform identity and its building blocks."""
    config = config or QuadratureConfig()
    ctx = make_context(config.precision)
    a, c, d, t = cq(a), cq(c), cq(d), cq(t)
    b = tuple(cq(v) for v in b)
    n = tuple(int(v) for v in n)
    total = sum(n)
    L = max(total, 4)
    tol = config.tolerance
    report = TransformReport({"a": a, "b": b, "c": c, "d": d, "t": t}, n)

    I, report.level = transformed_powers(a, c, d, t, L, config, ctx)

    # building blocks: int u^l ... = (a-t)_l (a+t)_l / (Gamma(a+c+l) Gamma(a+d+l))
    for ell in range(L + 1):
        expected = closed_power_transform(a, c, d, t, ell, ctx)
        report.checks.append(TransformCheck(f"power_{ell}", I[ell], expected, _rel(ctx, I[ell], expected), tol))

    # kernel symmetry in t, at a few interior points
    for u in (cq("1/7"), cq("1/2"), cq("5/6")):
        um, vm = u.to_mpc(ctx), (1 - u).to_mpc(ctx)
        k1 = kernel(um, vm, t, a, c, d, ctx)
        k2 = kernel(um, vm, -t, a, c, d, ctx)
        report.checks.append(TransformCheck(f"kernel_symmetry_u={u}", k2, k1, _rel(ctx, k2, k1), tol))

    # Gauss value used in the evaluation of the base integral
    am, cm, dm, tm = (v.to_mpc(ctx) for v in (a, c, d, t))
    gauss = gauss_sum_numeric(cm - tm, dm - tm, am + cm + dm - tm, ctx)
    closed = (gamma_complex(am + cm + dm - tm, ctx) * gamma_complex(am + tm, ctx)
              / (gamma_complex(am + dm, ctx) * gamma_complex(am + cm, ctx)))
    report.checks.append(TransformCheck("gauss_value", gauss, closed, _rel(ctx, gauss, closed), tol))

    # the transform itself
    alpha = [a + bj - 1 for bj in b]
    beta = c + d - 1
    jp = fam.jacobi_pineiro_rodrigues(n, alpha, beta, var="u")
    rhs = ctx.zero
    for i, coeff in enumerate(jp.coeffs):
        rhs += coeff.to_mpc(ctx) * I[i]
    nfact = 1
    for v in n:
        nfact *= factorial(v)
    rhs *= nfact * gamma_complex(am + cm + total, ctx) * gamma_complex(am + dm + total, ctx)
    wilson = fam.multiple_wilson_M(n, a, b, c, d)
    lhs = wilson.eval_at(t * t).to_mpc(ctx)
    report.checks.append(TransformCheck("transform", rhs, lhs, _rel(ctx, rhs, lhs), tol))
    return report
