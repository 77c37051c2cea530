"""Complex Gamma, Gauss 2F1 and a tanh-sinh rule on (0, 1) at high precision.

Gamma is delegated to mpmath, whose complex gamma is accurate to the working
precision; we only add pole detection.  2F1 is summed directly for
``|x| <= 1/2`` and handed to mpmath's transformation-based evaluator
otherwise.  All routines work in a private mpmath context so they never
touch the global precision.
"""
from __future__ import annotations

from dataclasses import dataclass

from ..arith import ComplexRational, make_context, precision_bits
from ..errors import NonConvergence, PoleError

GUARD_BITS = 20


def _mp(ctx, z):
    if isinstance(z, ComplexRational):
        return z.to_mpc(ctx)
    return ctx.mpmathify(z)


def _is_pole(ctx, z) -> bool:
    return ctx.im(z) == 0 and ctx.re(z) <= 0 and ctx.isint(ctx.re(z))


def gamma_complex(z, ctx=None):
    """Gamma at complex ``z``; raises :class:`PoleError` at 0, -1, -2, ..."""
    ctx = ctx or make_context()
    z = _mp(ctx, z)
    if _is_pole(ctx, z):
        raise PoleError(f"Gamma has a pole at {z}")
    return ctx.gamma(z)


def rgamma_complex(z, ctx=None):
    """Reciprocal Gamma, entire (zero at the poles of Gamma)."""
    ctx = ctx or make_context()
    return ctx.rgamma(_mp(ctx, z))


def hyp2f1_series(A, B, C, x, ctx=None, max_terms: int = 100000):
    """Direct Gauss series with a geometric tail bound, for ``|x| < 1``."""
    ctx = ctx or make_context()
    A, B, C, x = (_mp(ctx, v) for v in (A, B, C, x))
    if _is_pole(ctx, C):
        raise PoleError(f"lower parameter {C} is a non-positive integer")
    eps = ctx.ldexp(ctx.one, -ctx.prec - GUARD_BITS // 2)
    ax = abs(x)
    if ax >= 1:
        raise NonConvergence("direct 2F1 series needs |x| < 1")
    total, term = ctx.one, ctx.one
    for k in range(max_terms):
        term = term * (A + k) * (B + k) / ((C + k) * (k + 1)) * x
        total += term
        if term == 0:
            return total
        # once the term ratio is below q < 1 for good, the tail is <= |term| q / (1 - q)
        q = abs((A + k + 1) * (B + k + 1) / ((C + k + 1) * (k + 2))) * ax
        if q < 1 and k > abs(A) + abs(B) + abs(C):
            if abs(term) * q / (1 - q) <= eps * abs(total):
                return total
    raise NonConvergence(f"2F1 series did not converge in {max_terms} terms")


def hyp2f1_numeric(A, B, C, x, ctx=None):
    """``2F1(A, B; C; x)`` for complex parameters and ``0 <= x < 1``."""
    ctx = ctx or make_context()
    xm = _mp(ctx, x)
    if abs(xm) <= 0.5:
        return hyp2f1_series(A, B, C, xm, ctx)
    Cm = _mp(ctx, C)
    if _is_pole(ctx, Cm):
        raise PoleError(f"lower parameter {C} is a non-positive integer")
    try:
        return ctx.hyp2f1(_mp(ctx, A), _mp(ctx, B), Cm, xm)
    except ctx.NoConvergence as exc:
        raise NonConvergence(str(exc)) from exc


def gauss_sum_numeric(A, B, C, ctx=None):
    """``2F1(A, B; C; 1)`` by summing the series with Levin acceleration.

    Independent of the closed Gamma-ratio form; used to cross-check it.
    """
    ctx = ctx or make_context()
    A, B, C = (_mp(ctx, v) for v in (A, B, C))
    if ctx.re(C - A - B) <= 0:
        raise NonConvergence("Gauss series at 1 needs Re(C - A - B) > 0")

    def term(k):
        k = int(k)
        return ctx.rf(A, k) * ctx.rf(B, k) / (ctx.rf(C, k) * ctx.factorial(k))

    return ctx.nsum(term, [0, ctx.inf], method="levin")


@dataclass(frozen=True)
class QuadratureConfig:
    """Double-exponential quadrature settings.

    ``levels`` bounds the number of step halvings; ``tolerance`` is the
    relative target; ``max_abscissae`` caps nodes per level.
    """

    precision: int = 256
    levels: int = 10
    tolerance: float = 1e-12
    max_abscissae: int = 20000
    start_level: int = 3

    def __post_init__(self):
        if self.tolerance < 2.0 ** (-self.precision / 2):
            raise ValueError("tolerance below 2**(-precision/2) is not attainable")


class TanhSinhRule:
    """Nodes ``u = 1/(1+exp(-pi sinh s))`` on (0, 1), with ``1 - u`` kept exact.

    ``theta`` is the smallest endpoint exponent of the integrand (it behaves
    like ``u**(theta-1)`` or ``(1-u)**(theta-1)``); it fixes how far out the
    abscissae must go so the truncated tails are below the working precision.
    """

    def __init__(self, ctx, theta, max_abscissae: int = 20000):
        self.ctx = ctx
        theta = ctx.mpf(theta)
        if theta <= 0:
            raise ValueError("endpoint exponent must be positive")
        digits_nat = (ctx.prec + GUARD_BITS) * ctx.ln2
        self.s_max = ctx.asinh(digits_nat / (ctx.pi * theta) + 1)
        self.max_abscissae = max_abscissae
        self._levels = {}

    def nodes(self, level: int):
        """(u, 1-u, weight) triples new at ``level`` (all nodes for level 0)."""
        if level in self._levels:
            return self._levels[level]
        ctx = self.ctx
        h = ctx.ldexp(ctx.one, -level)
        kmax = int(ctx.ceil(self.s_max / h))
        if 2 * kmax + 1 > self.max_abscissae * 2 ** max(level - 3, 0):
            raise NonConvergence("too many abscissae for the requested precision")
        out = []
        for k in range(-kmax, kmax + 1):
            if level > 0 and k % 2 == 0:
                continue
            s = k * h
            sh = ctx.sinh(s)
            q = ctx.exp(-ctx.pi * sh)
            u = 1 / (1 + q)
            v = q / (1 + q)
            w = ctx.pi * ctx.cosh(s) * q / (1 + q) ** 2
            out.append((u, v, w))
        self._levels[level] = out
        return out

    def integrate(self, f, config: QuadratureConfig):
        """Integrate ``f(u, 1-u)``, halving the step until the estimate settles.

        ``f`` may return a list, in which case every entry is integrated on
        the same nodes.  Returns (value(s), error estimate, level).
        """
        ctx = self.ctx
        total = None
        prev = None
        for level in range(config.levels + 1):
            h = ctx.ldexp(ctx.one, -level)
            part = None
            for u, v, w in self.nodes(level):
                val = f(u, v)
                if isinstance(val, list):
                    contrib = [w * x for x in val]
                    part = contrib if part is None else [p + c for p, c in zip(part, contrib)]
                else:
                    part = w * val if part is None else part + w * val
            if total is None:
                total = part
            else:
                total = [t + p for t, p in zip(total, part)] if isinstance(part, list) else total + part
            est = [t * h for t in total] if isinstance(total, list) else total * h
            if prev is not None and level >= config.start_level:
                err = _max_rel(ctx, est, prev)
                if err <= config.tolerance / 100:
                    return est, err, level
            prev = est
        raise NonConvergence(f"tanh-sinh did not settle within {config.levels} levels")


def _max_rel(ctx, a, b):
    if not isinstance(a, list):
        a, b = [a], [b]
    worst = ctx.zero
    for x, y in zip(a, b):
        scale = max(abs(x), ctx.ldexp(ctx.one, -ctx.prec // 2))
        worst = max(worst, abs(x - y) / scale)
    return worst


def context(bits: int | None = None):
    return make_context(precision_bits(bits))
