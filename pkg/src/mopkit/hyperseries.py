"""Exact evaluation of terminating hypergeometric-type sums.

All evaluators are generic over the coefficient ring: upper parameters and
arguments may be :class:`~mopkit.arith.Poly` values, so a symbolic variable
enters simply as a degree-one polynomial.  Lower parameters must be scalars
because they are divided by.

A pair of upper parameters ``(a - t, a + t)`` is represented by
:class:`PairedParameter`, whose Pochhammer symbol is built directly as a
polynomial in ``s = t**2`` through
``(a - t)_k (a + t)_k = prod_{i<k} ((a + i)**2 - s)``.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .arith import ONE, ZERO, ComplexRational, Poly, cq, factorial, pochhammer_table
from .errors import CancellationFailure, VanishingLowerPochhammer


class PairedParameter:
    """The product ``(a - t)_k (a + t)_k`` as a polynomial in ``X = t**2 - shift``.

    With ``shift = 0`` this is the Wilson pair in ``s = t**2``.  With
    ``shift = a**2`` and ``t = x + a`` it becomes the Racah pair
    ``(-x)_k (x + 2a)_k`` in ``lambda = x (x + 2a)``.
    """

    __slots__ = ("a", "shift", "var")

    def __init__(self, a, shift=0, var: str = "s"):
        self.a = cq(a)
        self.shift = cq(shift)
        self.var = var

    def table(self, kmax: int) -> list:
        out = [Poly.constant(1, self.var)]
        for i in range(kmax):
            c = (self.a + i) * (self.a + i) - self.shift
            out.append(out[-1] * Poly([c, -1], self.var))
        return out

    def __repr__(self):
        return f"PairedParameter({self.a}, shift={self.shift}, var={self.var!r})"


def _table(param, kmax: int) -> list:
    if isinstance(param, PairedParameter):
        return param.table(kmax)
    return pochhammer_table(param, kmax)


def _scalar(param):
    """Return the parameter as ComplexRational, or None if it is symbolic."""
    if isinstance(param, (PairedParameter, Poly)):
        if isinstance(param, Poly) and param.degree <= 0:
            return param[0]
        return None
    return cq(param)


def _termination_bound(params: Sequence) -> float:
    bound = math.inf
    for p in params:
        v = _scalar(p)
        if v is not None and v.is_nonpositive_integer():
            bound = min(bound, int(-v.re))
    return bound


def _one_like(*values):
    for v in values:
        if isinstance(v, Poly):
            return Poly.constant(1, v.var)
    return ONE


def _zero_like(*values):
    for v in values:
        if isinstance(v, Poly):
            return Poly([], v.var)
    return ZERO


# --------------------------------------------------------------------------
# pFq
# --------------------------------------------------------------------------


def eval_pFq_terminating(upper: Sequence, lower: Sequence, z, kmax: int | None = None):
    """Finite sum ``sum_k prod (upper)_k / prod (lower)_k * z**k / k!``.

    The number of terms is taken from the first non-positive integer upper
    parameter unless ``kmax`` is given (needed when the terminating
    parameter is symbolic, e.g. ``-x``).
    """
    bound = _termination_bound(upper) if kmax is None else kmax
    if bound == math.inf:
        raise ValueError("series does not terminate: no non-positive integer upper parameter")
    bound = int(bound)
    up = [_table(p, bound) for p in upper]
    low = [pochhammer_table(cq(q), bound) for q in lower]
    zpow = _one_like(z, *(u[0] for u in up))
    total = _zero_like(z, *(u[0] for u in up))
    for k in range(bound + 1):
        den = ONE
        for tab in low:
            den = den * tab[k]
        num = ONE
        for tab in up:
            num = tab[k] * num
        if not den:
            if num:
                raise VanishingLowerPochhammer(f"lower Pochhammer vanishes at k={k}")
            zpow = zpow * z
            continue
        total = total + num * zpow * (ONE / (den * factorial(k)))
        zpow = zpow * z
    return total


def pfq_coefficients(upper: Sequence, lower: Sequence, degree: int) -> list:
    """Power-series coefficients ``c_0..c_degree`` of a (possibly infinite) pFq."""
    up = [pochhammer_table(cq(p), degree) for p in upper]
    low = [pochhammer_table(cq(q), degree) for q in lower]
    out = []
    for k in range(degree + 1):
        num, den = ONE, ONE * factorial(k)
        for tab in up:
            num = num * tab[k]
        for tab in low:
            den = den * tab[k]
        if not den:
            raise VanishingLowerPochhammer(f"lower Pochhammer vanishes at k={k}")
        out.append(num / den)
    return out


def cauchy_product(a: Sequence, b: Sequence, degree: int) -> list:
    """First ``degree + 1`` coefficients of the product of two power series."""
    out = []
    for k in range(degree + 1):
        acc = ZERO
        for ell in range(k + 1):
            if ell < len(a) and k - ell < len(b):
                acc = acc + cq(a[ell]) * cq(b[k - ell])
        out.append(acc)
    return out


def binomial_series(beta, degree: int) -> list:
    """Coefficients of ``(1 - t)**(-beta) = sum (beta)_l t**l / l!``."""
    tab = pochhammer_table(cq(beta), degree)
    return [tab[ell] / factorial(ell) for ell in range(degree + 1)]


def truncated_product_coeffs(beta, series, degree: int, var: str = "x") -> Poly:
    """Coefficients 0..degree of ``(1 - t)**(-beta) * series(t)`` as a Poly.

    ``series`` is either a sequence of coefficients or a callable ``k -> c_k``.
    """
    if callable(series):
        series = [series(k) for k in range(degree + 1)]
    return Poly(cauchy_product(binomial_series(beta, degree), series, degree), var)


# --------------------------------------------------------------------------
# the m-fold M-series
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class MSeriesSpec:
    """Parameters of the m-fold series ``M^{p;r}_{q,n}``.

    ``g[i][l]`` and ``psi[i][l]`` (l = 0..m-2) carry the Pochhammer index
    ``k_{l+2} + ... + k_m``; ``f`` and ``phi`` carry ``|k|``.
    """

    f: tuple
    phi: tuple
    g: tuple
    psi: tuple
    n: tuple
    x: tuple

    def __post_init__(self):
        m = len(self.n)
        if m < 1:
            raise ValueError("multi-index must have at least one component")
        if len(self.x) != m:
            raise ValueError("need one argument per multi-index component")
        if len(self.g) != len(self.psi):
            raise ValueError("g and psi must have the same number of groups")
        for vec in (*self.g, *self.psi):
            if len(vec) != m - 1:
                raise ValueError(f"each g_i / psi_i needs {m - 1} entries, got {len(vec)}")
        if any(int(nj) != nj or nj < 0 for nj in self.n):
            raise ValueError("multi-index entries must be non-negative integers")

    @property
    def m(self) -> int:
        return len(self.n)


def mseries(f=(), phi=(), g=(), psi=(), n=(), x=()) -> MSeriesSpec:
    return MSeriesSpec(tuple(f), tuple(phi), tuple(tuple(v) for v in g),
                       tuple(tuple(v) for v in psi), tuple(int(v) for v in n), tuple(x))


class EpsParameter:
    """A scalar parameter ``value + eps`` taken in the limit ``eps -> 0``.

    Used when a lower Pochhammer symbol vanishes together with an upper one
    for special parameter values: the quotient is then a removable 0/0 and
    its limit is read off from the leading order in ``eps``.  Only shifts by
    scalars are supported.
    """

    __slots__ = ("value",)

    def __init__(self, value):
        self.value = value.value if isinstance(value, EpsParameter) else cq(value)

    def __add__(self, other):
        if isinstance(other, (EpsParameter, Poly, PairedParameter)):
            return NotImplemented
        return EpsParameter(self.value + cq(other))

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (EpsParameter, Poly, PairedParameter)):
            return NotImplemented
        return EpsParameter(self.value - cq(other))

    def __repr__(self):
        return f"EpsParameter({self.value})"


def _lead_table(param, kmax: int) -> list:
    """``(param)_k`` for ``k <= kmax`` as (order in eps, leading coefficient)."""
    eps = isinstance(param, EpsParameter)
    base = param.value if eps else cq(param)
    order, coeff = 0, ONE
    out = [(0, ONE)]
    for i in range(kmax):
        factor = base + i
        if eps and not factor:
            order += 1
        else:
            coeff = coeff * factor
        out.append((order, coeff))
    return out


def _has_eps(spec: MSeriesSpec) -> bool:
    flat = [*spec.f, *spec.phi, *(v for vec in spec.g for v in vec), *(v for vec in spec.psi for v in vec)]
    return any(isinstance(v, EpsParameter) for v in flat)


def _eval_M_limit(spec: MSeriesSpec):
    """``eps -> 0`` limit of the M-series when some parameters carry ``+ eps``.

    Each term is a product of Pochhammer quotients, so its leading behaviour
    is ``c * eps**order``.  Terms of positive order drop out; a negative order
    means the limit is not fixed at leading order and we refuse.
    """
    n, m = spec.n, spec.m
    total_n = sum(n)
    symbolic = [p for p in spec.f if isinstance(p, (PairedParameter, Poly))]
    scalar_f = [p for p in spec.f if not isinstance(p, (PairedParameter, Poly))]
    symtab = [_table(p, total_n) for p in symbolic]
    ftab = [_lead_table(p, total_n) for p in scalar_f]
    phitab = [_lead_table(q, total_n) for q in spec.phi]
    gtab = [[_lead_table(v, total_n) for v in vec] for vec in spec.g]
    psitab = [[_lead_table(v, total_n) for v in vec] for vec in spec.psi]
    negtab = [[c / factorial(k) for k, c in enumerate(pochhammer_table(cq(-nj), nj))] for nj in n]

    total = _zero_like(*spec.x, *(t[0] for t in symtab))
    for ks in itertools.product(*(range(nj + 1) for nj in n)):
        length = sum(ks)
        tails = [sum(ks[l + 1:]) for l in range(m - 1)]
        order, coef = 0, ONE
        for j, kj in enumerate(ks):
            coef = coef * negtab[j][kj]
        ups = [t[length] for t in ftab] + [grp[l][tail] for grp in gtab for l, tail in enumerate(tails)]
        downs = [t[length] for t in phitab] + [grp[l][tail] for grp in psitab for l, tail in enumerate(tails)]
        for o, c in ups:
            order, coef = order + o, coef * c
        for o, c in downs:
            if not c:
                raise VanishingLowerPochhammer(f"lower Pochhammer vanishes at k={ks}")
            order, coef = order - o, coef / c
        if not coef or order > 0:
            continue
        if order < 0:
            raise CancellationFailure(f"term k={ks} diverges like eps**{order}")
        term = coef
        for tab in symtab:
            term = tab[length] * term
        for j, kj in enumerate(ks):
            term = (spec.x[j] ** kj) * term
        total = total + term
    return total


def eval_M(spec: MSeriesSpec):
    """Exact value of the finite m-fold sum described by ``spec``."""
    n, m = spec.n, spec.m
    if _has_eps(spec):
        return _eval_M_limit(spec)
    total_n = sum(n)
    ftab = [_table(p, total_n) for p in spec.f]
    phitab = [pochhammer_table(cq(q), total_n) for q in spec.phi]
    gtab = [[pochhammer_table(cq(v), total_n) for v in vec] for vec in spec.g]
    psitab = [[pochhammer_table(cq(v), total_n) for v in vec] for vec in spec.psi]
    # (-n_j)_k / k! and x_j**k tables
    negtab = [[c / factorial(k) for k, c in enumerate(pochhammer_table(cq(-nj), nj))] for nj in n]
    xpow = []
    for xj, nj in zip(spec.x, n):
        row = [_one_like(xj)]
        for _ in range(nj):
            row.append(row[-1] * xj)
        xpow.append(row)

    by_length: dict[int, object] = {}
    for ks in itertools.product(*(range(nj + 1) for nj in n)):
        coef = ONE
        for j, kj in enumerate(ks):
            coef = coef * negtab[j][kj]
        tails = [sum(ks[l + 1:]) for l in range(m - 1)]
        num, den = ONE, ONE
        for grp, pgrp in zip(gtab, psitab):
            for l, tail in enumerate(tails):
                num = num * grp[l][tail]
                den = den * pgrp[l][tail]
        if not den:
            raise VanishingLowerPochhammer(f"lower Pochhammer in r-group vanishes at k={ks}")
        coef = coef * num / den
        if not coef:
            continue
        term = coef
        for j, kj in enumerate(ks):
            term = xpow[j][kj] * term
        length = sum(ks)
        by_length[length] = by_length[length] + term if length in by_length else term

    total = _zero_like(*spec.x, *(t[0] for t in ftab))
    for length in sorted(by_length):
        den = ONE
        for tab in phitab:
            den = den * tab[length]
        if not den:
            raise VanishingLowerPochhammer(f"lower Pochhammer vanishes at |k|={length}")
        num = by_length[length] * (ONE / den)
        for tab in ftab:
            num = tab[length] * num
        total = total + num
    return total


# --------------------------------------------------------------------------
# Kampe de Feriet series
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class Truncation:
    """Cancellation-truncation policy.

    Outer terms ``k <= keep`` are summed; for ``keep < k <= k_max`` the full
    inner sum must vanish exactly.
    """

    keep: int
    k_max: int | None = None

    @property
    def limit(self) -> int:
        return self.keep + 5 if self.k_max is None else self.k_max


@dataclass(frozen=True)
class KampeSpec:
    """Double series with outer ``f/phi``, inner-left ``g/psi`` (argument x)
    and inner-right ``h/xi`` (argument y)."""

    f: tuple = ()
    phi: tuple = ()
    g: tuple = ()
    psi: tuple = ()
    h: tuple = ()
    xi: tuple = ()
    x: object = ONE
    y: object = ONE
    truncation: Truncation | None = None


def kampe(f=(), phi=(), g=(), psi=(), h=(), xi=(), x=1, y=1, truncation=None) -> KampeSpec:
    conv = lambda v: v if isinstance(v, (Poly, PairedParameter)) else cq(v)  # noqa: E731
    return KampeSpec(tuple(f), tuple(cq(v) for v in phi), tuple(cq(v) for v in g),
                     tuple(cq(v) for v in psi), tuple(cq(v) for v in h),
                     tuple(cq(v) for v in xi), conv(x), conv(y), truncation)


def _ratio_table(upper, lower, kmax):
    up = [pochhammer_table(p, kmax) for p in upper]
    low = [pochhammer_table(q, kmax) for q in lower]
    out = []
    for k in range(kmax + 1):
        num, den = ONE, ONE * factorial(k)
        for tab in up:
            num = num * tab[k]
        for tab in low:
            den = den * tab[k]
        out.append((num, den))
    return out


def kampe_inner_sum(spec: KampeSpec, k: int):
    """``sum_j [g]_{k-j} [h]_j / ([psi]_{k-j} [xi]_j) x**(k-j)/(k-j)! y**j/j!``."""
    left = _ratio_table(spec.g, spec.psi, k)
    right = _ratio_table(spec.h, spec.xi, k)
    kx, ky = _termination_bound(spec.g), _termination_bound(spec.h)
    total = _zero_like(spec.x, spec.y)
    for j in range(k + 1):
        if j > ky or k - j > kx:
            continue
        (ln, ld), (rn, rd) = left[k - j], right[j]
        if not ld or not rd:
            raise VanishingLowerPochhammer(f"inner lower Pochhammer vanishes at (k, j)=({k}, {j})")
        total = total + (spec.x ** (k - j)) * (spec.y ** j) * (ln * rn / (ld * rd))
    return total


def eval_kampe(spec: KampeSpec):
    """Exact value of the double series under the spec's truncation policy."""
    trunc = spec.truncation
    if trunc is None:
        bound = min(_termination_bound(spec.f),
                    _termination_bound(spec.g) + _termination_bound(spec.h))
        if bound == math.inf:
            raise ValueError("Kampe de Feriet series does not terminate; supply a Truncation")
        keep = int(bound)
    else:
        keep = trunc.keep
        for k in range(keep + 1, trunc.limit + 1):
            tail = kampe_inner_sum(spec, k)
            if tail:
                raise CancellationFailure(f"inner sum at k={k} is {tail}, expected 0")

    ftab = [_table(p, keep) for p in spec.f]
    phitab = [pochhammer_table(q, keep) for q in spec.phi]
    total = _zero_like(spec.x, spec.y, *(t[0] for t in ftab))
    for k in range(keep + 1):
        inner = kampe_inner_sum(spec, k)
        if not inner:
            continue
        den = ONE
        for tab in phitab:
            den = den * tab[k]
        if not den:
            raise VanishingLowerPochhammer(f"outer lower Pochhammer vanishes at k={k}")
        term = inner * (ONE / den)
        for tab in ftab:
            term = tab[k] * term
        total = total + term
    return total
