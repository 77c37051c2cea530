"""Constructors for every polynomial family, with all available representations.

Each constructor returns an exact :class:`~mopkit.arith.Poly`.  Normalisations
follow the hypergeometric prefactors (e.g. ``(alpha+1)_n / n!`` for
Jacobi-Pineiro, ``(a e + b)_n (a+c)_|n| (a+d)_|n|`` for multiple Wilson), so
comparisons against the moment oracle are up to a scalar.

Variable roles: ``x`` for Jacobi/Laguerre/discrete families, ``s = t**2``
for Wilson and continuous dual Hahn, ``lambda = x (x + gamma + delta + 1)``
for Racah and dual Hahn, ``t`` for continuous Hahn.  Wilson-level families
are returned in the formal variable ``s``; the real forms are
``W(x**2) = p(-x**2)``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Mapping, Sequence

from .arith import (
    I, ONE, ZERO, ComplexRational, Poly, cq, factorial, pochhammer,
)
from .errors import (
    AdmissibilityError, CancellationFailure, ResidualExponentError,
    UnavailableRepresentation, VanishingLowerPochhammer,
)
from .hyperseries import (
    EpsParameter, PairedParameter, Truncation, cauchy_product, eval_kampe, eval_M,
    eval_pFq_terminating, kampe, kampe_inner_sum, mseries, pfq_coefficients, truncated_product_coeffs,
)

# --------------------------------------------------------------------------
# helpers
# --------------------------------------------------------------------------


def _vec(values) -> tuple:
    return tuple(cq(v) for v in values)


def _index(n) -> tuple:
    n = tuple(int(v) for v in n)
    if not n or any(v < 0 for v in n):
        raise ValueError(f"invalid multi-index {n}")
    return n


def _partial_sums(n) -> list:
    out, acc = [], 0
    for v in n:
        acc += v
        out.append(acc)
    return out


def _multi_factorial(n) -> int:
    out = 1
    for v in n:
        out *= factorial(v)
    return out


def _var(name: str) -> Poly:
    return Poly.variable(name)


def _as_poly(value, var: str) -> Poly:
    if isinstance(value, Poly):
        return value.with_var(var) if value.degree <= 0 else value
    return Poly.constant(value, var)


def _negint(z: ComplexRational) -> bool:
    """z in {-1, -2, ...}"""
    return z.is_integer() and z.re <= -1


def _nonpos(z: ComplexRational) -> bool:
    """z in {0, -1, -2, ...}"""
    return z.is_nonpositive_integer()


def _require(ok: bool, message: str):
    if not ok:
        raise AdmissibilityError(message)


def _distinct_mod_integers(values, name: str):
    for i in range(len(values)):
        for k in range(i + 1, len(values)):
            _require(not (values[i] - values[k]).is_integer(),
                     f"{name}[{i}] - {name}[{k}] must not be an integer")


def _distinct(values, name: str):
    _require(len(set(values)) == len(values), f"entries of {name} must be distinct")


def _drop_last(v):
    return list(v[:-1])


def _drop_first(v):
    return list(v[1:])


def _check_tail(coeffs, degree: int, what: str):
    for k in range(degree + 1, len(coeffs)):
        if coeffs[k]:
            raise CancellationFailure(f"{what}: coefficient {k} is {coeffs[k]}, expected 0")


# --------------------------------------------------------------------------
# Jacobi and Jacobi-Pineiro
# --------------------------------------------------------------------------


def check_jacobi(alpha, beta):
    alpha, beta = cq(alpha), cq(beta)
    for name, v in (("alpha", alpha), ("beta", beta), ("alpha+beta+1", alpha + beta + 1)):
        _require(not _negint(v), f"{name} must not be a negative integer")


def jacobi(n: int, alpha, beta, var: str = "x") -> Poly:
    """Shifted Jacobi polynomial on [0, 1] via its terminating 2F1."""
    alpha, beta = cq(alpha), cq(beta)
    check_jacobi(alpha, beta)
    pref = pochhammer(alpha + 1, n) / factorial(n)
    val = eval_pFq_terminating([-n, alpha + beta + n + 1], [alpha + 1], _var(var))
    return _as_poly(val, var).scale(pref)


def jacobi_euler(n: int, alpha, beta, var: str = "x", extra: int = 5) -> Poly:
    """Same polynomial via ``(1-x)**(-beta) 2F1(alpha+1+n, -beta-n; alpha+1; x)``."""
    alpha, beta = cq(alpha), cq(beta)
    check_jacobi(alpha, beta)
    D = n + extra
    series = pfq_coefficients([alpha + 1 + n, -beta - n], [alpha + 1], D)
    prod = truncated_product_coeffs(beta, series, D, var)
    _check_tail(prod.coeffs, n, "Euler form")
    pref = pochhammer(alpha + 1, n) / factorial(n)
    return Poly(prod.coeffs[: n + 1], var).scale(pref)


def check_jacobi_pineiro(alpha: Sequence, beta):
    alpha = _vec(alpha)
    for a in alpha:
        check_jacobi(a, beta)
    _distinct_mod_integers(alpha, "alpha")


def _rodrigues(n, t_ops, u_ops, gamma0, delta0, gamma_end, delta_end, var):
    """Apply weighted derivative operators to ``t**gamma0 (1-t)**delta0``.

    ``t_ops`` are (n_j, a_j) for ``t**-a_j D**n_j t**(n_j + a_j)`` and
    ``u_ops`` are (n_j, b_j) for ``(1-t)**-b_j D**n_j (1-t)**(n_j + b_j)``.
    The state ``(gamma, delta, f)`` stands for ``t**gamma (1-t)**delta f(t)``.
    """
    t = _var(var)
    one_minus = Poly([1, -1], var)
    t_one_minus = t * one_minus
    gamma, delta, f = gamma0, delta0, Poly.constant(1, var)

    def differentiate(gamma, delta, f):
        f = (one_minus * f).scale(gamma) - (t * f).scale(delta) + t_one_minus * f.derivative()
        return gamma - 1, delta - 1, f

    for nj, aj in reversed(t_ops):
        gamma = gamma + nj + aj
        for _ in range(nj):
            gamma, delta, f = differentiate(gamma, delta, f)
        gamma = gamma - aj
    for nj, bj in reversed(u_ops):
        delta = delta + nj + bj
        for _ in range(nj):
            gamma, delta, f = differentiate(gamma, delta, f)
        delta = delta - bj
    gamma, delta = gamma - gamma_end, delta - delta_end
    if gamma or delta:
        raise ResidualExponentError(f"residual exponents ({gamma}, {delta}) are not (0, 0)")
    return f / _multi_factorial(n)


def _eval_M_regularised(make, param):
    """``eval_M(make(param))``; if a removable 0/0 shows up, take ``param -> param + eps``."""
    try:
        return eval_M(make(param))
    except VanishingLowerPochhammer:
        return eval_M(make(EpsParameter(param)))


def jacobi_pineiro_rodrigues(n, alpha, beta, var: str = "x") -> Poly:
    """Jacobi-Pineiro polynomial from its Rodrigues formula, exactly."""
    n, alpha, beta = _index(n), _vec(alpha), cq(beta)
    _require(len(alpha) == len(n), "alpha and n must have the same length")
    check_jacobi_pineiro(alpha, beta)
    total = sum(n)
    return _rodrigues(n, list(zip(n, alpha)), [], ZERO, beta + total, ZERO, beta, var)


def _jp_prefactor(n, alpha):
    out = ONE
    for nj, aj in zip(n, alpha):
        out = out * pochhammer(aj + 1, nj)
    return out / _multi_factorial(n)


def jacobi_pineiro_M(n, alpha, beta, var: str = "x") -> Poly:
    n, alpha, beta = _index(n), _vec(alpha), cq(beta)
    _require(len(alpha) == len(n), "alpha and n must have the same length")
    check_jacobi_pineiro(alpha, beta)
    s = _partial_sums(n)

    def make(b):
        shifted = [aj + sj + b + 1 for aj, sj in zip(alpha, s)]
        return mseries(
            f=[alpha[0] + b + n[0] + 1],
            phi=[alpha[0] + 1],
            g=[_drop_last([aj + nj + 1 for aj, nj in zip(alpha, n)]), _drop_first(shifted)],
            psi=[_drop_first([aj + 1 for aj in alpha]), _drop_last(shifted)],
            n=n, x=[_var(var)] * len(n),
        )
    return _as_poly(_eval_M_regularised(make, beta), var).scale(_jp_prefactor(n, alpha))


def jacobi_pineiro_euler(n, alpha, beta, var: str = "x", extra: int = 5) -> Poly:
    """``(1-t)**(-beta) (m+1)Fm(...)`` truncated after ``|n| + extra`` terms."""
    n, alpha, beta = _index(n), _vec(alpha), cq(beta)
    _require(len(alpha) == len(n), "alpha and n must have the same length")
    check_jacobi_pineiro(alpha, beta)
    total = sum(n)
    D = total + extra
    upper = [aj + nj + 1 for aj, nj in zip(alpha, n)] + [-beta - total]
    series = pfq_coefficients(upper, [aj + 1 for aj in alpha], D)
    prod = truncated_product_coeffs(beta, series, D, var)
    _check_tail(prod.coeffs, total, "Euler form")
    return Poly(prod.coeffs[: total + 1], var).scale(_jp_prefactor(n, alpha))


def jacobi_pineiro_beta_M(n, alpha, beta, var: str = "x") -> Poly:
    """Jacobi-Pineiro polynomial with varying ``beta_j`` (fixed ``alpha``)."""
    n, alpha, beta = _index(n), cq(alpha), _vec(beta)
    _require(len(beta) == len(n), "beta and n must have the same length")
    check_jacobi_pineiro(beta, alpha)
    s = _partial_sums(n)

    def make(a):
        shifted = [bj + sj + a + 1 for bj, sj in zip(beta, s)]
        return mseries(f=[a + beta[0] + n[0] + 1], phi=[alpha + 1],
                       g=[_drop_first(shifted)], psi=[_drop_last(shifted)],
                       n=n, x=[_var(var)] * len(n))
    pref = pochhammer(alpha + 1, sum(n)) / _multi_factorial(n)
    return _as_poly(_eval_M_regularised(make, alpha), var).scale(pref)


def jacobi_pineiro_beta_rodrigues(n, alpha, beta, var: str = "x") -> Poly:
    """``x**-alpha prod((1-x)**-b_j D**n_j (1-x)**(n_j+b_j)) x**(|n|+alpha) / n!``."""
    n, alpha, beta = _index(n), cq(alpha), _vec(beta)
    _require(len(beta) == len(n), "beta and n must have the same length")
    check_jacobi_pineiro(beta, alpha)
    total = sum(n)
    return _rodrigues(n, [], list(zip(n, beta)), alpha + total, ZERO, alpha, ZERO, var)


# --------------------------------------------------------------------------
# Wilson and multiple Wilson
# --------------------------------------------------------------------------


def check_wilson(a, b, c, d):
    a, b, c, d = cq(a), cq(b), cq(c), cq(d)
    simple = {"2a": 2 * a, "a+b": a + b, "a+c": a + c, "a+d": a + d, "2b": 2 * b,
              "b+c": b + c, "b+d": b + d, "2c": 2 * c, "c+d": c + d, "2d": 2 * d}
    for name, v in simple.items():
        _require(not _nonpos(v), f"{name} must not be a non-positive integer")
    _require(not _nonpos(a + b + c + d), "a+b+c+d must not be a non-positive integer")


def check_multiple_wilson(a, b, c, d):
    for bj in b:
        check_wilson(a, bj, c, d)
    _distinct_mod_integers(_vec(b), "b")


def wilson(n: int, a, b, c, d) -> Poly:
    """Formal Wilson polynomial ``p_n(s; a, b, c, d)`` in ``s = t**2``."""
    a, b, c, d = cq(a), cq(b), cq(c), cq(d)
    check_wilson(a, b, c, d)
    pref = pochhammer(a + b, n) * pochhammer(a + c, n) * pochhammer(a + d, n)
    val = eval_pFq_terminating([-n, a + b + c + d + n - 1, PairedParameter(a)],
                               [a + b, a + c, a + d], 1)
    return _as_poly(val, "s").scale(pref)


def _wilson_prefactor(n, a, b, c, d):
    total = sum(n)
    out = pochhammer(a + c, total) * pochhammer(a + d, total)
    for nj, bj in zip(n, b):
        out = out * pochhammer(a + bj, nj)
    return out


def _wilson_M_series(n, a, b, c, d, pair, var):
    """M^{3;2} part shared by multiple Wilson and (after relabelling) Racah."""
    s = _partial_sums(n)

    # only the partial-sum parameters can degenerate; perturb them through c
    def make(cc):
        sigma = [a + bj + cc + d - 1 for bj in b]
        shifted = [sg + sj for sg, sj in zip(sigma, s)]
        return mseries(
            f=[pair, sigma[0] + n[0]],
            phi=[a + c, a + d, a + b[0]],
            g=[_drop_last([a + bj + nj for bj, nj in zip(b, n)]), _drop_first(shifted)],
            psi=[_drop_first([a + bj for bj in b]), _drop_last(shifted)],
            n=n, x=[ONE] * len(n),
        )
    return _as_poly(_eval_M_regularised(make, c), var)


def _wilson_kampe_spec(n, a, b, c, d, pair):
    total = sum(n)
    return kampe(
        f=[pair], phi=[a + c, a + d],
        g=[c + d - 1], psi=[],
        h=[a + bj + nj for bj, nj in zip(b, n)] + [1 - c - d - total],
        xi=[a + bj for bj in b],
        x=1, y=1, truncation=Truncation(total),
    )


def _wilson_kampe_series(n, a, b, c, d, pair, var):
    return _as_poly(eval_kampe(_wilson_kampe_spec(n, a, b, c, d, pair)), var)


def multiple_wilson_M(n, a, b, c, d) -> Poly:
    n, a, b, c, d = _index(n), cq(a), _vec(b), cq(c), cq(d)
    _require(len(b) == len(n), "b and n must have the same length")
    check_multiple_wilson(a, b, c, d)
    series = _wilson_M_series(n, a, b, c, d, PairedParameter(a), "s")
    return series.scale(_wilson_prefactor(n, a, b, c, d))


def multiple_wilson_kampe(n, a, b, c, d) -> Poly:
    n, a, b, c, d = _index(n), cq(a), _vec(b), cq(c), cq(d)
    _require(len(b) == len(n), "b and n must have the same length")
    check_multiple_wilson(a, b, c, d)
    series = _wilson_kampe_series(n, a, b, c, d, PairedParameter(a), "s")
    return series.scale(_wilson_prefactor(n, a, b, c, d))


def multiple_wilson_kampe_tail(n, a, b, c, d, extra: int = 5) -> list:
    """Inner sums of the Kampe form for ``|n| < k <= |n| + extra``; all vanish."""
    n, a, b, c, d = _index(n), cq(a), _vec(b), cq(c), cq(d)
    spec = _wilson_kampe_spec(n, a, b, c, d, PairedParameter(a))
    return [kampe_inner_sum(spec, k) for k in range(sum(n) + 1, sum(n) + extra + 1)]


# --------------------------------------------------------------------------
# Racah
# --------------------------------------------------------------------------


def racah_support(alpha, beta, gamma, delta) -> int:
    """N such that the Racah weight lives on {0, ..., N}."""
    candidates = [-(v + 1) for v in (cq(alpha), cq(gamma), cq(beta) + cq(delta))
                  if (v + 1).is_nonpositive_integer()]
    _require(bool(candidates), "one of alpha+1, gamma+1, beta+delta+1 must equal -N")
    return int(min(v.re for v in candidates))


def racah_weight(alpha, beta, gamma, delta, x: int) -> ComplexRational:
    alpha, beta, gamma, delta = cq(alpha), cq(beta), cq(gamma), cq(delta)
    gd = gamma + delta
    num = (pochhammer(alpha + 1, x) * pochhammer(gamma + 1, x) * pochhammer(beta + delta + 1, x)
           * pochhammer(gd + 1, x) * pochhammer((gd + 3) / 2, x))
    den = (pochhammer(-alpha + gd + 1, x) * pochhammer(-beta + gamma + 1, x)
           * pochhammer((gd + 1) / 2, x) * pochhammer(delta + 1, x) * factorial(x))
    if not den:
        raise AdmissibilityError(f"Racah weight has a vanishing denominator at x={x}")
    return num / den


def check_racah_weight(alpha, beta, gamma, delta):
    N = racah_support(alpha, beta, gamma, delta)
    total = ZERO
    for x in range(N + 1):
        total = total + racah_weight(alpha, beta, gamma, delta, x)
    _require(bool(total), "Racah weights sum to zero")
    return N


def racah_wilson_parameters(alpha, beta, gamma, delta):
    """Invert alpha=a+b-1, beta=c+d-1, gamma=a+d-1, delta=a-d."""
    alpha, beta, gamma, delta = cq(alpha), cq(beta), cq(gamma), cq(delta)
    a = (gamma + delta + 1) / 2
    d = (gamma - delta + 1) / 2
    return a, alpha + 1 - a, beta + 1 - d, d


def _racah_pair(gamma, delta):
    a = (cq(gamma) + cq(delta) + 1) / 2
    return PairedParameter(a, a * a, "lambda")


def racah(n: int, alpha, beta, gamma, delta) -> Poly:
    """Racah polynomial ``R_n(lambda; alpha, beta, gamma, delta)`` in lambda."""
    alpha, beta, gamma, delta = cq(alpha), cq(beta), cq(gamma), cq(delta)
    check_racah_weight(alpha, beta, gamma, delta)
    val = eval_pFq_terminating([-n, n + alpha + beta + 1, _racah_pair(gamma, delta)],
                               [alpha + 1, beta + delta + 1, gamma + 1], 1)
    return _as_poly(val, "lambda")


def _racah_from_wilson(n, a, bvec, c, d) -> Poly:
    """Normalised multiple Wilson composed with ``s = lambda + a**2``."""
    p = _wilson_M_series(n, a, bvec, c, d, PairedParameter(a), "s")
    return p.compose_affine(1, a * a, var="lambda")


def check_multiple_racah(n, alpha, beta, gamma, delta):
    """alpha-variant: one Racah weight per alpha_j."""
    alpha = _vec(alpha)
    _distinct_mod_integers(alpha, "alpha")
    for aj in alpha:
        N = check_racah_weight(aj, beta, gamma, delta)
        if n is not None:
            _require(sum(n) <= N, f"|n| = {sum(n)} exceeds N = {N}")


def multiple_racah_M(n, alpha, beta, gamma, delta) -> Poly:
    n, alpha, beta, gamma, delta = _index(n), _vec(alpha), cq(beta), cq(gamma), cq(delta)
    _require(len(alpha) == len(n), "alpha and n must have the same length")
    check_multiple_racah(n, alpha, beta, gamma, delta)
    s = _partial_sums(n)
    shifted = [aj + sj + beta + 1 for aj, sj in zip(alpha, s)]
    spec = mseries(
        f=[_racah_pair(gamma, delta), alpha[0] + beta + n[0] + 1],
        phi=[beta + delta + 1, gamma + 1, alpha[0] + 1],
        g=[_drop_last([aj + nj + 1 for aj, nj in zip(alpha, n)]), _drop_first(shifted)],
        psi=[_drop_first([aj + 1 for aj in alpha]), _drop_last(shifted)],
        n=n, x=[ONE] * len(n),
    )
    return _as_poly(eval_M(spec), "lambda")


def multiple_racah_kampe(n, alpha, beta, gamma, delta) -> Poly:
    n, alpha, beta, gamma, delta = _index(n), _vec(alpha), cq(beta), cq(gamma), cq(delta)
    _require(len(alpha) == len(n), "alpha and n must have the same length")
    check_multiple_racah(n, alpha, beta, gamma, delta)
    total = sum(n)
    spec = kampe(
        f=[_racah_pair(gamma, delta)], phi=[beta + delta + 1, gamma + 1],
        g=[beta], psi=[],
        h=[aj + nj + 1 for aj, nj in zip(alpha, n)] + [-beta - total],
        xi=[aj + 1 for aj in alpha], x=1, y=1, truncation=Truncation(total),
    )
    return _as_poly(eval_kampe(spec), "lambda")


def multiple_racah_wilson(n, alpha, beta, gamma, delta) -> Poly:
    n, alpha, beta, gamma, delta = _index(n), _vec(alpha), cq(beta), cq(gamma), cq(delta)
    _require(len(alpha) == len(n), "alpha and n must have the same length")
    check_multiple_racah(n, alpha, beta, gamma, delta)
    a, _, c, d = racah_wilson_parameters(alpha[0], beta, gamma, delta)
    bvec = [aj + 1 - a for aj in alpha]
    return _racah_from_wilson(n, a, bvec, c, d)


def _beta_variant_weights(alpha, beta, gamma, delta):
    return [(cq(alpha), bj, cq(gamma), cq(delta)) for bj in _vec(beta)]


def check_multiple_racah_beta(n, alpha, beta, gamma, delta):
    beta = _vec(beta)
    _distinct_mod_integers(beta, "beta")
    for w in _beta_variant_weights(alpha, beta, gamma, delta):
        N = check_racah_weight(*w)
        if n is not None:
            _require(sum(n) <= N, f"|n| = {sum(n)} exceeds N = {N}")


def multiple_racah_beta_wilson(n, alpha, beta, gamma, delta) -> Poly:
    """beta-variant from multiple Wilson with the varying parameter in the c slot."""
    n, beta = _index(n), _vec(beta)
    alpha, gamma, delta = cq(alpha), cq(gamma), cq(delta)
    _require(len(beta) == len(n), "beta and n must have the same length")
    check_multiple_racah_beta(n, alpha, beta, gamma, delta)
    a, b, _, d = racah_wilson_parameters(alpha, beta[0], gamma, delta)
    cvec = [bj + 1 - d for bj in beta]
    # Wilson weights are symmetric in (a, b, c, d): let c play the role of b.
    return _racah_from_wilson(n, a, cvec, b, d)


def multiple_racah_beta_relation(n, alpha, beta, gamma, delta) -> Poly:
    """``R(alpha, beta_vec, gamma, delta) = R(beta_vec + delta e, alpha - delta, gamma, delta)``."""
    beta, delta = _vec(beta), cq(delta)
    return multiple_racah_M(n, [bj + delta for bj in beta], cq(alpha) - delta, gamma, delta)


def _gd_variant_weights(alpha, beta, gamma, delta):
    return [(cq(alpha), bj, gj, dj) for bj, gj, dj in zip(_vec(beta), _vec(gamma), _vec(delta))]


def check_multiple_racah_gd(n, alpha, beta, gamma, delta):
    beta, gamma, delta = _vec(beta), _vec(gamma), _vec(delta)
    _require(len(beta) == len(gamma) == len(delta), "beta, gamma, delta need equal lengths")
    _require(len({bj + dj for bj, dj in zip(beta, delta)}) == 1, "beta_j + delta_j must not depend on j")
    _require(len({gj + dj for gj, dj in zip(gamma, delta)}) == 1, "gamma_j + delta_j must not depend on j")
    _distinct_mod_integers(gamma, "gamma")
    for w in _gd_variant_weights(alpha, beta, gamma, delta):
        N = check_racah_weight(*w)
        if n is not None:
            _require(sum(n) <= N, f"|n| = {sum(n)} exceeds N = {N}")


def multiple_racah_gd_wilson(n, alpha, beta, gamma, delta) -> Poly:
    """gamma-delta variant: only the Wilson parameter d varies with j."""
    n = _index(n)
    beta, gamma, delta = _vec(beta), _vec(gamma), _vec(delta)
    _require(len(gamma) == len(n), "gamma and n must have the same length")
    check_multiple_racah_gd(n, alpha, beta, gamma, delta)
    params = [racah_wilson_parameters(alpha, bj, gj, dj) for bj, gj, dj in zip(beta, gamma, delta)]
    a, b, c, _ = params[0]
    dvec = [p[3] for p in params]
    return _racah_from_wilson(n, a, dvec, c, b)


def multiple_racah_gd_relation(n, alpha, beta, gamma, delta) -> Poly:
    """``R(alpha, beta_vec, gamma_vec, delta_vec) = R(gamma_vec, alpha+beta_j-gamma_j, alpha, gamma_j+delta_j-alpha)``."""
    beta, gamma, delta, alpha = _vec(beta), _vec(gamma), _vec(delta), cq(alpha)
    return multiple_racah_M(n, gamma, alpha + beta[0] - gamma[0], alpha, gamma[0] + delta[0] - alpha)


# --------------------------------------------------------------------------
# continuous dual Hahn, dual Hahn
# --------------------------------------------------------------------------


def check_continuous_dual_hahn(a, b, c):
    a, c = cq(a), cq(c)
    for bj in _vec(b):
        for name, v in {"2a": 2 * a, "a+b": a + bj, "a+c": a + c, "2b": 2 * bj,
                        "b+c": bj + c, "2c": 2 * c}.items():
            _require(not _nonpos(v), f"{name} must not be a non-positive integer")
    _distinct_mod_integers(_vec(b), "b")


def continuous_dual_hahn(n: int, a, b, c) -> Poly:
    """Formal continuous dual Hahn ``(a+b)_n (a+c)_n 3F2(-n, a-t, a+t; a+b, a+c; 1)`` in s."""
    a, b, c = cq(a), cq(b), cq(c)
    check_continuous_dual_hahn(a, [b], c)
    pref = pochhammer(a + b, n) * pochhammer(a + c, n)
    val = eval_pFq_terminating([-n, PairedParameter(a)], [a + b, a + c], 1)
    return _as_poly(val, "s").scale(pref)


def _cdh_prefactor(n, a, b, c):
    out = pochhammer(a + c, sum(n))
    for nj, bj in zip(n, b):
        out = out * pochhammer(a + bj, nj)
    return out


def multiple_continuous_dual_hahn_M(n, a, b, c) -> Poly:
    n, a, b, c = _index(n), cq(a), _vec(b), cq(c)
    _require(len(b) == len(n), "b and n must have the same length")
    check_continuous_dual_hahn(a, b, c)
    spec = mseries(f=[PairedParameter(a)], phi=[a + c, a + b[0]],
                   g=[_drop_last([a + bj + nj for bj, nj in zip(b, n)])],
                   psi=[_drop_first([a + bj for bj in b])], n=n, x=[ONE] * len(n))
    return _as_poly(eval_M(spec), "s").scale(_cdh_prefactor(n, a, b, c))


def multiple_continuous_dual_hahn_kampe(n, a, b, c) -> Poly:
    n, a, b, c = _index(n), cq(a), _vec(b), cq(c)
    _require(len(b) == len(n), "b and n must have the same length")
    check_continuous_dual_hahn(a, b, c)
    spec = kampe(f=[PairedParameter(a)], phi=[a + c],
                 h=[a + bj + nj for bj, nj in zip(b, n)], xi=[a + bj for bj in b],
                 x=1, y=-1, truncation=Truncation(sum(n)))
    return _as_poly(eval_kampe(spec), "s").scale(_cdh_prefactor(n, a, b, c))


def dual_hahn_weight(gamma, delta, N: int, x: int) -> ComplexRational:
    gamma, delta = cq(gamma), cq(delta)
    gd = gamma + delta
    num = (2 * x + gd + 1) * pochhammer(gamma + 1, x) * pochhammer(cq(-N), x) * factorial(N)
    den = (-1) ** x * pochhammer(x + gd + 1, N + 1) * pochhammer(delta + 1, x) * factorial(x)
    if not den:
        raise AdmissibilityError(f"dual Hahn weight has a vanishing denominator at x={x}")
    return num / den


def check_dual_hahn(n, gamma, delta, N):
    gamma, delta = _vec(gamma), _vec(delta)
    _require(int(N) == N and N >= 0, "N must be a non-negative integer")
    _require(len(gamma) == len(delta), "gamma and delta need equal lengths")
    _require(len({gj + dj for gj, dj in zip(gamma, delta)}) == 1, "gamma_j + delta_j must not depend on j")
    _distinct_mod_integers(gamma, "gamma")
    for gj, dj in zip(gamma, delta):
        _require(not ((gj + 1).is_integer() and -N < (gj + 1).re <= 0),
                 "gamma_j + 1 must not lie in {0, -1, ..., -N+1}")
        total = ZERO
        for x in range(int(N) + 1):
            total = total + dual_hahn_weight(gj, dj, int(N), x)
        _require(bool(total), "dual Hahn weights sum to zero")
    if n is not None:
        _require(sum(n) <= N, f"|n| = {sum(n)} exceeds N = {N}")


def _dual_hahn_pair(gamma, delta):
    return _racah_pair(gamma, delta)


def dual_hahn(n: int, gamma, delta, N: int) -> Poly:
    gamma, delta = cq(gamma), cq(delta)
    check_dual_hahn([n], [gamma], [delta], N)
    val = eval_pFq_terminating([-n, _dual_hahn_pair(gamma, delta)], [gamma + 1, -N], 1)
    return _as_poly(val, "lambda")


def multiple_dual_hahn_M(n, gamma, delta, N: int) -> Poly:
    n, gamma, delta = _index(n), _vec(gamma), _vec(delta)
    _require(len(gamma) == len(n), "gamma and n must have the same length")
    check_dual_hahn(n, gamma, delta, N)
    spec = mseries(f=[_dual_hahn_pair(gamma[0], delta[0])], phi=[-N, gamma[0] + 1],
                   g=[_drop_last([gj + nj + 1 for gj, nj in zip(gamma, n)])],
                   psi=[_drop_first([gj + 1 for gj in gamma])], n=n, x=[ONE] * len(n))
    return _as_poly(eval_M(spec), "lambda")


def multiple_dual_hahn_kampe(n, gamma, delta, N: int) -> Poly:
    n, gamma, delta = _index(n), _vec(gamma), _vec(delta)
    _require(len(gamma) == len(n), "gamma and n must have the same length")
    check_dual_hahn(n, gamma, delta, N)
    spec = kampe(f=[_dual_hahn_pair(gamma[0], delta[0])], phi=[-N],
                 h=[gj + nj + 1 for gj, nj in zip(gamma, n)], xi=[gj + 1 for gj in gamma],
                 x=1, y=-1, truncation=Truncation(sum(n)))
    return _as_poly(eval_kampe(spec), "lambda")


# --------------------------------------------------------------------------
# Meixner-Pollaczek
# --------------------------------------------------------------------------


def circle_point(w) -> ComplexRational:
    """``exp(i phi)`` for ``w = tan(phi / 2)``: ``((1 - w**2) + 2 w i) / (1 + w**2)``."""
    w = cq(w)
    return ComplexRational(1 - w.re * w.re, 2 * w.re) / (1 + w.re * w.re)


def cot_phi(w):
    w = cq(w)
    return (1 - w * w) / (2 * w)


def csc_phi(w):
    w = cq(w)
    return (1 + w * w) / (2 * w)


def check_meixner_pollaczek(lam, w):
    lam = cq(lam)
    _require(not _nonpos(2 * lam), "2*lambda must not be a non-positive integer")
    w = _vec(w)
    for wj in w:
        _require(wj.is_real and wj.re > 0, "w_j = tan(phi_j/2) must be real and positive")
    _distinct(w, "w")


def meixner_pollaczek(n: int, lam, w) -> Poly:
    """Scalar ``(2 lam)_n e^{i n phi} / n! 2F1(-n, lam + i x; 2 lam; 1 - e^{-2 i phi})``."""
    lam = cq(lam)
    check_meixner_pollaczek(lam, [w])
    e = circle_point(w)
    z = 1 - e.conjugate() ** 2
    val = eval_pFq_terminating([-n, Poly([lam, I], "x")], [2 * lam], z)
    return _as_poly(val, "x").scale(pochhammer(2 * lam, n) * e ** n / factorial(n))


def multiple_meixner_pollaczek_M(n, lam, w) -> Poly:
    n, lam, w = _index(n), cq(lam), _vec(w)
    _require(len(w) == len(n), "w and n must have the same length")
    check_meixner_pollaczek(lam, w)
    es = [circle_point(wj) for wj in w]
    spec = mseries(f=[Poly([lam, I], "x")], phi=[2 * lam],
                   g=[], psi=[], n=n, x=[1 - e.conjugate() ** 2 for e in es])
    pref = pochhammer(2 * lam, sum(n)) / _multi_factorial(n)
    for nj, e in zip(n, es):
        pref = pref * e ** nj
    return _as_poly(eval_M(spec), "x").scale(pref)


# --------------------------------------------------------------------------
# continuous Hahn
# --------------------------------------------------------------------------


def continuous_hahn(n: int, a, b, c, d) -> Poly:
    """Formal ``(a+b)_n (a+d)_n 3F2(-n, a+b+c+d+n-1, a+t; a+b, a+d; 1)`` in t."""
    a, b, c, d = cq(a), cq(b), cq(c), cq(d)
    check_wilson(a, b, c, d)
    pref = pochhammer(a + b, n) * pochhammer(a + d, n)
    val = eval_pFq_terminating([-n, a + b + c + d + n - 1, Poly([a, 1], "t")],
                               [a + b, a + d], 1)
    return _as_poly(val, "t").scale(pref)


def _ch_prefactor(n, a, b, d):
    out = pochhammer(a + d, sum(n))
    for nj, bj in zip(n, b):
        out = out * pochhammer(a + bj, nj)
    return out


def multiple_continuous_hahn_M(n, a, b, c, d) -> Poly:
    n, a, b, c, d = _index(n), cq(a), _vec(b), cq(c), cq(d)
    _require(len(b) == len(n), "b and n must have the same length")
    check_multiple_wilson(a, b, c, d)
    s = _partial_sums(n)

    def make(cc):
        sigma = [a + bj + cc + d - 1 for bj in b]
        shifted = [sg + sj for sg, sj in zip(sigma, s)]
        return mseries(
            f=[Poly([a, 1], "t"), sigma[0] + n[0]], phi=[a + d, a + b[0]],
            g=[_drop_last([a + bj + nj for bj, nj in zip(b, n)]), _drop_first(shifted)],
            psi=[_drop_first([a + bj for bj in b]), _drop_last(shifted)],
            n=n, x=[ONE] * len(n),
        )
    return _as_poly(_eval_M_regularised(make, c), "t").scale(_ch_prefactor(n, a, b, d))


def multiple_continuous_hahn_kampe(n, a, b, c, d) -> Poly:
    n, a, b, c, d = _index(n), cq(a), _vec(b), cq(c), cq(d)
    _require(len(b) == len(n), "b and n must have the same length")
    check_multiple_wilson(a, b, c, d)
    total = sum(n)
    spec = kampe(f=[Poly([a, 1], "t")], phi=[a + d], g=[c + d - 1],
                 h=[a + bj + nj for bj, nj in zip(b, n)] + [1 - c - d - total],
                 xi=[a + bj for bj in b], x=1, y=1, truncation=Truncation(total))
    return _as_poly(eval_kampe(spec), "t").scale(_ch_prefactor(n, a, b, d))


# --------------------------------------------------------------------------
# Hahn and the classical discrete families
# --------------------------------------------------------------------------


def _check_N(N):
    _require(isinstance(N, int) or (cq(N).is_integer()), "N must be an integer")
    _require(int(cq(N).re) >= 0, "N must be non-negative")
    return int(cq(N).re)


def _check_hahn_pair(vec, other, N, name):
    for v in vec:
        _require(not _negint(v), f"{name}_j must not be a negative integer")
    _require(not _negint(other), "scalar parameter must not be a negative integer")
    for i in range(len(vec)):
        for k in range(len(vec)):
            if i != k:
                diff = vec[i] - vec[k]
                _require(not (diff.is_integer() and 0 <= diff.re <= N - 1),
                         f"{name}_{i} - {name}_{k} must avoid {{0, ..., N-1}}")


def hahn_weight(alpha, beta, N: int, x: int) -> ComplexRational:
    return (pochhammer(cq(alpha) + 1, x) / factorial(x)
            * pochhammer(cq(beta) + 1, N - x) / factorial(N - x))


def multiple_hahn_M(n, alpha, beta, N) -> Poly:
    """``Q_n^{alpha_vec; beta; N}(x)``."""
    n, alpha, beta = _index(n), _vec(alpha), cq(beta)
    N = _check_N(N)
    _require(len(alpha) == len(n), "alpha and n must have the same length")
    _check_hahn_pair(alpha, beta, N, "alpha")
    _require(sum(n) <= N, f"|n| = {sum(n)} exceeds N = {N}")
    s = _partial_sums(n)

    def make(b):
        shifted = [aj + sj + b + 1 for aj, sj in zip(alpha, s)]
        return mseries(
            f=[Poly([0, -1], "x"), alpha[0] + b + n[0] + 1], phi=[-N, alpha[0] + 1],
            g=[_drop_last([aj + nj + 1 for aj, nj in zip(alpha, n)]), _drop_first(shifted)],
            psi=[_drop_first([aj + 1 for aj in alpha]), _drop_last(shifted)],
            n=n, x=[ONE] * len(n),
        )
    return _as_poly(_eval_M_regularised(make, beta), "x")


def multiple_hahn_kampe(n, alpha, beta, N) -> Poly:
    n, alpha, beta = _index(n), _vec(alpha), cq(beta)
    N = _check_N(N)
    _require(len(alpha) == len(n), "alpha and n must have the same length")
    _check_hahn_pair(alpha, beta, N, "alpha")
    _require(sum(n) <= N, f"|n| = {sum(n)} exceeds N = {N}")
    total = sum(n)
    spec = kampe(f=[Poly([0, -1], "x")], phi=[-N], g=[beta],
                 h=[aj + nj + 1 for aj, nj in zip(alpha, n)] + [-beta - total],
                 xi=[aj + 1 for aj in alpha], x=1, y=1, truncation=Truncation(total))
    return _as_poly(eval_kampe(spec), "x")


def hahn(n: int, alpha, beta, N) -> Poly:
    """Scalar Hahn ``3F2(-n, n+alpha+beta+1, -x; alpha+1, -N; 1)``."""
    alpha, beta = cq(alpha), cq(beta)
    N = _check_N(N)
    _check_hahn_pair([alpha], beta, N, "alpha")
    val = eval_pFq_terminating([-n, n + alpha + beta + 1, Poly([0, -1], "x")], [alpha + 1, -N], 1)
    return _as_poly(val, "x")


def multiple_hahn_beta_M(n, alpha, beta, N) -> Poly:
    """``Q_n^{alpha; beta_vec; N}(x)`` (varying beta)."""
    n, alpha, beta = _index(n), cq(alpha), _vec(beta)
    N = _check_N(N)
    _require(len(beta) == len(n), "beta and n must have the same length")
    _check_hahn_pair(beta, alpha, N, "beta")
    _require(sum(n) <= N, f"|n| = {sum(n)} exceeds N = {N}")
    s = _partial_sums(n)

    def make(a):
        shifted = [bj + sj + a + 1 for bj, sj in zip(beta, s)]
        return mseries(f=[Poly([0, -1], "x"), a + beta[0] + n[0] + 1], phi=[-N, alpha + 1],
                       g=[_drop_first(shifted)], psi=[_drop_last(shifted)],
                       n=n, x=[ONE] * len(n))
    return _as_poly(_eval_M_regularised(make, alpha), "x")


def check_meixner1(beta, c):
    beta, c = cq(beta), _vec(c)
    _require(not _nonpos(beta), "beta must not be a non-positive integer")
    for cj in c:
        _require(cj != 0 and cj != 1, "c_j must differ from 0 and 1")
    _distinct(c, "c")


def multiple_meixner1_M(n, beta, c) -> Poly:
    n, beta, c = _index(n), cq(beta), _vec(c)
    _require(len(c) == len(n), "c and n must have the same length")
    check_meixner1(beta, c)
    spec = mseries(f=[Poly([0, -1], "x")], phi=[beta], n=n, x=[(cj - 1) / cj for cj in c])
    return _as_poly(eval_M(spec), "x")


def check_meixner2(beta, c):
    beta, c = _vec(beta), cq(c)
    for bj in beta:
        _require(not _nonpos(bj), "beta_j must not be a non-positive integer")
    _distinct_mod_integers(beta, "beta")
    _require(c != 0 and c != 1, "c must differ from 0 and 1")


def multiple_meixner2_M(n, beta, c) -> Poly:
    n, beta, c = _index(n), _vec(beta), cq(c)
    _require(len(beta) == len(n), "beta and n must have the same length")
    check_meixner2(beta, c)
    z = (c - 1) / c
    spec = mseries(f=[Poly([0, -1], "x")], phi=[beta[0]],
                   g=[_drop_last([bj + nj for bj, nj in zip(beta, n)])],
                   psi=[_drop_first(beta)], n=n, x=[z] * len(n))
    return _as_poly(eval_M(spec), "x")


def multiple_meixner2_kampe(n, beta, c) -> Poly:
    n, beta, c = _index(n), _vec(beta), cq(c)
    _require(len(beta) == len(n), "beta and n must have the same length")
    check_meixner2(beta, c)
    z = (c - 1) / c
    spec = kampe(f=[Poly([0, -1], "x")], h=[bj + nj for bj, nj in zip(beta, n)], xi=list(beta),
                 x=z, y=-z, truncation=Truncation(sum(n)))
    return _as_poly(eval_kampe(spec), "x")


def check_kravchuk(p, N):
    p = _vec(p)
    _check_N(N)
    for pj in p:
        _require(bool(pj), "p_j must be nonzero")
    _distinct(p, "p")


def multiple_kravchuk_M(n, p, N) -> Poly:
    n, p = _index(n), _vec(p)
    N = _check_N(N)
    _require(len(p) == len(n), "p and n must have the same length")
    check_kravchuk(p, N)
    _require(sum(n) <= N, f"|n| = {sum(n)} exceeds N = {N}")
    spec = mseries(f=[Poly([0, -1], "x")], phi=[-N], n=n, x=[1 / pj for pj in p])
    return _as_poly(eval_M(spec), "x")


def check_charlier(a):
    a = _vec(a)
    for aj in a:
        _require(bool(aj), "a_j must be nonzero")
    _distinct(a, "a")


def multiple_charlier_M(n, a) -> Poly:
    n, a = _index(n), _vec(a)
    _require(len(a) == len(n), "a and n must have the same length")
    check_charlier(a)
    spec = mseries(f=[Poly([0, -1], "x")], n=n, x=[-1 / aj for aj in a])
    return _as_poly(eval_M(spec), "x")


# --------------------------------------------------------------------------
# Laguerre I / II
# --------------------------------------------------------------------------


def check_laguerre1(alpha):
    alpha = _vec(alpha)
    for aj in alpha:
        _require(not _negint(aj), "alpha_j must not be a negative integer")
    _distinct_mod_integers(alpha, "alpha")


def multiple_laguerre1_M(n, alpha) -> Poly:
    n, alpha = _index(n), _vec(alpha)
    _require(len(alpha) == len(n), "alpha and n must have the same length")
    check_laguerre1(alpha)
    spec = mseries(phi=[alpha[0] + 1], g=[_drop_last([aj + nj + 1 for aj, nj in zip(alpha, n)])],
                   psi=[_drop_first([aj + 1 for aj in alpha])], n=n, x=[_var("x")] * len(n))
    return _as_poly(eval_M(spec), "x").scale(_jp_prefactor(n, alpha))


def multiple_laguerre1_exp(n, alpha, extra: int = 5) -> Poly:
    """``e**x mFm(alpha + n + e; alpha + e; -x)`` truncated, tail asserted zero."""
    n, alpha = _index(n), _vec(alpha)
    _require(len(alpha) == len(n), "alpha and n must have the same length")
    check_laguerre1(alpha)
    total = sum(n)
    D = total + extra
    series = pfq_coefficients([aj + nj + 1 for aj, nj in zip(alpha, n)], [aj + 1 for aj in alpha], D)
    series = [c * (-1) ** k for k, c in enumerate(series)]
    exp_series = [ONE / factorial(k) for k in range(D + 1)]
    prod = cauchy_product(exp_series, series, D)
    _check_tail(prod, total, "exponential form")
    return Poly(prod[: total + 1], "x").scale(_jp_prefactor(n, alpha))


def check_laguerre2(alpha, c):
    _require(not _negint(cq(alpha)), "alpha must not be a negative integer")
    c = _vec(c)
    for cj in c:
        _require(bool(cj), "c_j must be nonzero")
    _distinct(c, "c")


def multiple_laguerre2_M(n, alpha, c) -> Poly:
    n, alpha, c = _index(n), cq(alpha), _vec(c)
    _require(len(c) == len(n), "c and n must have the same length")
    check_laguerre2(alpha, c)
    x = _var("x")
    spec = mseries(phi=[alpha + 1], n=n, x=[x.scale(cj) for cj in c])
    pref = pochhammer(alpha + 1, sum(n)) / _multi_factorial(n)
    return _as_poly(eval_M(spec), "x").scale(pref)


def check_hermite(c):
    _distinct(_vec(c), "c")


# --------------------------------------------------------------------------
# family specifications and dispatch
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class FamilyInfo:
    tag: str
    variable: str
    scalars: tuple
    vectors: tuple
    representations: Mapping[str, Callable]
    check: Callable
    variant: str | None = None
    multiple: bool = True
    integers: tuple = ()

    @property
    def key(self):
        return (self.tag, self.variant)


@dataclass(frozen=True)
class FamilySpec:
    """A family tag with an exact parameter vector.

    Vector parameters (one entry per weight) are tuples; ``m`` is their
    common length.  Construction validates admissibility.
    """

    family: str
    params: Mapping = field(default_factory=dict)
    variant: str | None = None

    @classmethod
    def create(cls, family: str, variant: str | None = None, **params) -> "FamilySpec":
        info = family_info(family, variant)
        conv = {}
        for name in info.scalars:
            if name not in params:
                raise AdmissibilityError(f"{family}: missing parameter {name!r}")
            conv[name] = int(params[name]) if name in info.integers else cq(params[name])
        for name in info.vectors:
            if name not in params:
                raise AdmissibilityError(f"{family}: missing parameter {name!r}")
            val = params[name]
            if isinstance(val, (str, int)) or not hasattr(val, "__iter__"):
                val = [val]
            conv[name] = _vec(val)
        extra = set(params) - set(info.scalars) - set(info.vectors)
        if extra:
            raise AdmissibilityError(f"{family}: unknown parameters {sorted(extra)}")
        lengths = {len(conv[v]) for v in info.vectors}
        if len(lengths) > 1:
            raise AdmissibilityError(f"{family}: vector parameters differ in length")
        if not info.multiple and lengths and lengths != {1}:
            raise AdmissibilityError(f"{family} is a scalar family (m = 1)")
        spec = cls(family, conv, info.variant)
        info.check(spec, None)
        return spec

    @property
    def info(self) -> FamilyInfo:
        return family_info(self.family, self.variant)

    @property
    def m(self) -> int:
        vecs = self.info.vectors
        return len(self.params[vecs[0]]) if vecs else 1

    @property
    def variable(self) -> str:
        return self.info.variable

    def __getitem__(self, name):
        return self.params[name]

    def with_params(self, **changes) -> "FamilySpec":
        params = dict(self.params)
        params.update(changes)
        return FamilySpec.create(self.family, self.variant, **params)

    def to_json(self) -> dict:
        def ser(v):
            if isinstance(v, tuple):
                return [str(x) for x in v]
            return v if isinstance(v, int) else str(v)
        return {"family": self.family, "variant": self.variant,
                "params": {k: ser(v) for k, v in self.params.items()}}


def _p(spec, *names):
    return [spec.params[name] for name in names]


def _checker(fn, *names, with_n=False):
    def check(spec, n):
        args = _p(spec, *names)
        if with_n:
            fn(n, *args)
        else:
            fn(*args)
        if n is not None and "N" in spec.params:
            _require(sum(n) <= spec.params["N"], f"|n| = {sum(n)} exceeds N = {spec.params['N']}")
    return check


def _vector_rep(fn, *names):
    return lambda spec, n: fn(n, *_p(spec, *names))


def _single(n) -> int:
    n = _index(n)
    if len(n) != 1:
        raise ValueError("scalar family expects a multi-index of length 1")
    return n[0]


def _hermite_unavailable(spec, n):
    raise UnavailableRepresentation(
        "no explicit M-series or Kampe de Feriet form is known for multiple Hermite; "
        "use oracle.solve_type2")


_REGISTRY: dict = {}


def _register(info: FamilyInfo):
    _REGISTRY[info.key] = info


def _scalarize(fn, names, vectors):
    def rep(spec, n):
        args = [spec.params[k][0] if k in vectors else spec.params[k] for k in names]
        return fn(_single(n), *args)
    return rep


_register(FamilyInfo(
    "Jacobi", "x", ("beta",), ("alpha",),
    {"hyper": _scalarize(jacobi, ("alpha", "beta"), ("alpha",)),
     "euler": _scalarize(jacobi_euler, ("alpha", "beta"), ("alpha",))},
    _checker(check_jacobi_pineiro, "alpha", "beta"), multiple=False))
_register(FamilyInfo(
    "JacobiPineiro", "x", ("beta",), ("alpha",),
    {"rodrigues": _vector_rep(jacobi_pineiro_rodrigues, "alpha", "beta"),
     "M": _vector_rep(jacobi_pineiro_M, "alpha", "beta"),
     "euler": _vector_rep(jacobi_pineiro_euler, "alpha", "beta")},
    _checker(check_jacobi_pineiro, "alpha", "beta"), variant="alpha"))
_register(FamilyInfo(
    "JacobiPineiro", "x", ("alpha",), ("beta",),
    {"M": _vector_rep(jacobi_pineiro_beta_M, "alpha", "beta"),
     "rodrigues": _vector_rep(jacobi_pineiro_beta_rodrigues, "alpha", "beta")},
    _checker(lambda a, b: check_jacobi_pineiro(b, a), "alpha", "beta"), variant="beta"))
_register(FamilyInfo(
    "Wilson", "s", ("a", "c", "d"), ("b",),
    {"hyper": _scalarize(wilson, ("a", "b", "c", "d"), ("b",))},
    _checker(check_multiple_wilson, "a", "b", "c", "d"), multiple=False))
_register(FamilyInfo(
    "MultipleWilson", "s", ("a", "c", "d"), ("b",),
    {"M": _vector_rep(multiple_wilson_M, "a", "b", "c", "d"),
     "kampe": _vector_rep(multiple_wilson_kampe, "a", "b", "c", "d")},
    _checker(check_multiple_wilson, "a", "b", "c", "d")))
_register(FamilyInfo(
    "Racah", "lambda", ("beta", "gamma", "delta"), ("alpha",),
    {"hyper": _scalarize(racah, ("alpha", "beta", "gamma", "delta"), ("alpha",)),
     "wilson": _vector_rep(multiple_racah_wilson, "alpha", "beta", "gamma", "delta")},
    _checker(check_multiple_racah, "alpha", "beta", "gamma", "delta", with_n=True), multiple=False))
_register(FamilyInfo(
    "MultipleRacah", "lambda", ("beta", "gamma", "delta"), ("alpha",),
    {"M": _vector_rep(multiple_racah_M, "alpha", "beta", "gamma", "delta"),
     "kampe": _vector_rep(multiple_racah_kampe, "alpha", "beta", "gamma", "delta"),
     "wilson": _vector_rep(multiple_racah_wilson, "alpha", "beta", "gamma", "delta")},
    _checker(check_multiple_racah, "alpha", "beta", "gamma", "delta", with_n=True), variant="alpha"))
_register(FamilyInfo(
    "MultipleRacah", "lambda", ("alpha", "gamma", "delta"), ("beta",),
    {"wilson": _vector_rep(multiple_racah_beta_wilson, "alpha", "beta", "gamma", "delta"),
     "relation": _vector_rep(multiple_racah_beta_relation, "alpha", "beta", "gamma", "delta")},
    _checker(check_multiple_racah_beta, "alpha", "beta", "gamma", "delta", with_n=True), variant="beta"))
_register(FamilyInfo(
    "MultipleRacah", "lambda", ("alpha",), ("beta", "gamma", "delta"),
    {"wilson": _vector_rep(multiple_racah_gd_wilson, "alpha", "beta", "gamma", "delta"),
     "relation": _vector_rep(multiple_racah_gd_relation, "alpha", "beta", "gamma", "delta")},
    _checker(check_multiple_racah_gd, "alpha", "beta", "gamma", "delta", with_n=True),
    variant="gammadelta"))
_register(FamilyInfo(
    "ContinuousDualHahn", "s", ("a", "c"), ("b",),
    {"hyper": _scalarize(continuous_dual_hahn, ("a", "b", "c"), ("b",))},
    _checker(check_continuous_dual_hahn, "a", "b", "c"), multiple=False))
_register(FamilyInfo(
    "MultipleContinuousDualHahn", "s", ("a", "c"), ("b",),
    {"M": _vector_rep(multiple_continuous_dual_hahn_M, "a", "b", "c"),
     "kampe": _vector_rep(multiple_continuous_dual_hahn_kampe, "a", "b", "c")},
    _checker(check_continuous_dual_hahn, "a", "b", "c")))
_register(FamilyInfo(
    "DualHahn", "lambda", ("N",), ("gamma", "delta"),
    {"hyper": _scalarize(dual_hahn, ("gamma", "delta", "N"), ("gamma", "delta"))},
    _checker(check_dual_hahn, "gamma", "delta", "N", with_n=True), multiple=False, integers=("N",)))
_register(FamilyInfo(
    "MultipleDualHahn", "lambda", ("N",), ("gamma", "delta"),
    {"M": _vector_rep(multiple_dual_hahn_M, "gamma", "delta", "N"),
     "kampe": _vector_rep(multiple_dual_hahn_kampe, "gamma", "delta", "N")},
    _checker(check_dual_hahn, "gamma", "delta", "N", with_n=True), integers=("N",)))
_register(FamilyInfo(
    "MeixnerPollaczek", "x", ("lam",), ("w",),
    {"hyper": _scalarize(meixner_pollaczek, ("lam", "w"), ("w",))},
    _checker(check_meixner_pollaczek, "lam", "w"), multiple=False))
_register(FamilyInfo(
    "MultipleMeixnerPollaczek", "x", ("lam",), ("w",),
    {"M": _vector_rep(multiple_meixner_pollaczek_M, "lam", "w")},
    _checker(check_meixner_pollaczek, "lam", "w")))
_register(FamilyInfo(
    "ContinuousHahn", "t", ("a", "c", "d"), ("b",),
    {"hyper": _scalarize(continuous_hahn, ("a", "b", "c", "d"), ("b",))},
    _checker(check_multiple_wilson, "a", "b", "c", "d"), multiple=False))
_register(FamilyInfo(
    "MultipleContinuousHahn", "t", ("a", "c", "d"), ("b",),
    {"M": _vector_rep(multiple_continuous_hahn_M, "a", "b", "c", "d"),
     "kampe": _vector_rep(multiple_continuous_hahn_kampe, "a", "b", "c", "d")},
    _checker(check_multiple_wilson, "a", "b", "c", "d")))
_register(FamilyInfo(
    "Hahn", "x", ("beta", "N"), ("alpha",),
    {"M": _vector_rep(multiple_hahn_M, "alpha", "beta", "N"),
     "kampe": _vector_rep(multiple_hahn_kampe, "alpha", "beta", "N")},
    _checker(lambda a, b, N: _check_hahn_pair(_vec(a), cq(b), N, "alpha"), "alpha", "beta", "N"),
    variant="alpha", integers=("N",)))
_register(FamilyInfo(
    "Hahn", "x", ("alpha", "N"), ("beta",),
    {"M": _vector_rep(multiple_hahn_beta_M, "alpha", "beta", "N")},
    _checker(lambda a, b, N: _check_hahn_pair(_vec(b), cq(a), N, "beta"), "alpha", "beta", "N"),
    variant="beta", integers=("N",)))
_register(FamilyInfo(
    "MeixnerI", "x", ("beta",), ("c",),
    {"M": _vector_rep(multiple_meixner1_M, "beta", "c")},
    _checker(check_meixner1, "beta", "c")))
_register(FamilyInfo(
    "MeixnerII", "x", ("c",), ("beta",),
    {"M": _vector_rep(multiple_meixner2_M, "beta", "c"),
     "kampe": _vector_rep(multiple_meixner2_kampe, "beta", "c")},
    _checker(check_meixner2, "beta", "c")))
_register(FamilyInfo(
    "Kravchuk", "x", ("N",), ("p",),
    {"M": _vector_rep(multiple_kravchuk_M, "p", "N")},
    _checker(check_kravchuk, "p", "N"), integers=("N",)))
_register(FamilyInfo(
    "Charlier", "x", (), ("a",),
    {"M": _vector_rep(multiple_charlier_M, "a")},
    _checker(check_charlier, "a")))
_register(FamilyInfo(
    "LaguerreI", "x", (), ("alpha",),
    {"M": _vector_rep(multiple_laguerre1_M, "alpha"),
     "exp": _vector_rep(multiple_laguerre1_exp, "alpha")},
    _checker(check_laguerre1, "alpha")))
_register(FamilyInfo(
    "LaguerreII", "x", ("alpha",), ("c",),
    {"M": _vector_rep(multiple_laguerre2_M, "alpha", "c")},
    _checker(check_laguerre2, "alpha", "c")))
_register(FamilyInfo(
    "MultipleHermite", "x", (), ("c",),
    {},
    _checker(check_hermite, "c")))

DEFAULT_VARIANTS = {"JacobiPineiro": "alpha", "MultipleRacah": "alpha", "Hahn": "alpha"}


def family_info(family: str, variant: str | None = None) -> FamilyInfo:
    if variant is None:
        variant = DEFAULT_VARIANTS.get(family)
    try:
        return _REGISTRY[(family, variant)]
    except KeyError:
        raise AdmissibilityError(f"unknown family {family!r} (variant {variant!r})") from None


def family_tags() -> list:
    return sorted({tag for tag, _ in _REGISTRY})


def family_keys() -> list:
    return sorted(_REGISTRY, key=lambda k: (k[0], k[1] or ""))


def representations(spec: FamilySpec) -> list:
    return list(spec.info.representations)


def build(spec: FamilySpec, n, representation: str | None = None) -> Poly:
    """Construct the polynomial of ``spec`` at multi-index ``n``."""
    n = _index(n)
    info = spec.info
    if len(n) != spec.m:
        raise ValueError(f"multi-index length {len(n)} does not match m = {spec.m}")
    info.check(spec, n)
    if not info.representations:
        _hermite_unavailable(spec, n)
    if representation is None:
        representation = next(iter(info.representations))
    try:
        fn = info.representations[representation]
    except KeyError:
        raise UnavailableRepresentation(
            f"{spec.family} has no representation {representation!r}") from None
    return fn(spec, n).with_var(info.variable)


def build_all(spec: FamilySpec, n) -> dict:
    return {name: build(spec, n, name) for name in spec.info.representations}


def build_limit_family(spec: FamilySpec, n) -> Poly:
    """Explicit hypergeometric form of a limit family (multiple Hermite has none)."""
    return build(spec, n)
