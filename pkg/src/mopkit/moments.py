"""Exact normalised moments ``nu_k = m_k / m_0`` for every weight system.

Orthogonality is invariant under rescaling a measure, so only ratios are
needed and those are rational in the parameters.  Contour measures (Wilson,
continuous dual Hahn, Meixner-Pollaczek, continuous Hahn) get their moments
by basis inversion: since the scalar orthogonal polynomials ``p_l`` integrate
to zero for ``l >= 1`` and ``p_0 = 1``, ``nu_k`` is the ``p_0`` coefficient of
the monomial of degree ``k`` written in that basis.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass, field
from typing import Callable

from .arith import ONE, ZERO, ComplexRational, Poly, cq, determinant, factorial, pochhammer
from .errors import AdmissibilityError, SingularLeadingCoefficient
from . import families as fam

SUPPORT_KINDS = ("interval", "half-line", "real-line", "finite", "infinite-discrete", "contour")


# --------------------------------------------------------------------------
# basis inversion
# --------------------------------------------------------------------------


def expand_in_basis(poly: Poly, basis) -> list:
    """Coefficients ``c_l`` with ``poly = sum_l c_l basis[l]`` (triangular basis)."""
    coeffs = list(poly.coeffs)
    d = poly.degree
    if d >= len(basis):
        raise ValueError(f"basis has only {len(basis)} elements, need {d + 1}")
    out = [ZERO] * (d + 1)
    for ell in range(d, -1, -1):
        p = basis[ell]
        if p.degree != ell or not p.lead:
            raise SingularLeadingCoefficient(f"basis element {ell} has degree {p.degree}")
        c = coeffs[ell] / p.lead
        out[ell] = c
        if c:
            for i in range(ell + 1):
                coeffs[i] = coeffs[i] - c * p[i]
    return out


def _moments_from_basis(basis, K: int) -> list:
    """``nu_0..nu_K`` from ``L[p_l] = 0`` (l >= 1) and ``L[1] = 1``."""
    nu = [ONE]
    p0 = basis[0]
    if p0.degree != 0:
        raise SingularLeadingCoefficient("basis element 0 is not a nonzero constant")
    for k in range(1, K + 1):
        p = basis[k]
        if p.degree != k or not p.lead:
            raise SingularLeadingCoefficient(f"basis element {k} has degree {p.degree}")
        acc = ZERO
        for i in range(k):
            if p[i]:
                acc = acc + p[i] * nu[i]
        nu.append(-acc / p.lead)
    return nu


# scalar contour bases, keyed by family tag of the multiple family
def _wilson_basis(params, j, ell):
    return fam.wilson(ell, params["a"], params["b"][j], params["c"], params["d"])


def _cdh_basis(params, j, ell):
    return fam.continuous_dual_hahn(ell, params["a"], params["b"][j], params["c"])


def _mp_basis(params, j, ell):
    return fam.meixner_pollaczek(ell, params["lam"], params["w"][j])


def _ch_basis(params, j, ell):
    return fam.continuous_hahn(ell, params["a"], params["b"][j], params["c"], params["d"])


CONTOUR_BASES = {
    "Wilson": _wilson_basis, "MultipleWilson": _wilson_basis,
    "ContinuousDualHahn": _cdh_basis, "MultipleContinuousDualHahn": _cdh_basis,
    "MeixnerPollaczek": _mp_basis, "MultipleMeixnerPollaczek": _mp_basis,
    "ContinuousHahn": _ch_basis, "MultipleContinuousHahn": _ch_basis,
}


def scalar_basis(family: str, params, j: int, degree: int) -> list:
    """Scalar orthogonal basis ``p_0..p_degree`` for weight ``j`` of a family.

    Available for the contour families and for Jacobi-Pineiro (scalar Jacobi).
    """
    if family in CONTOUR_BASES:
        make = CONTOUR_BASES[family]
        return [make(params, j, ell) for ell in range(degree + 1)]
    if family in ("Jacobi", "JacobiPineiro"):
        alpha = params["alpha"][j]
        return [fam.jacobi(ell, alpha, params["beta"]) for ell in range(degree + 1)]
    raise AdmissibilityError(f"no scalar basis registered for {family}")


def contour_moment_via_basis(family: str, params, k: int, j: int = 0) -> ComplexRational:
    """``nu_k`` as the ``p_0`` coefficient of the degree-k monomial."""
    if family not in CONTOUR_BASES:
        raise AdmissibilityError(f"{family} is not a contour family")
    basis = scalar_basis(family, params, j, k)
    var = basis[-1].var if k else "x"
    monomial = Poly([0] * k + [1], var)
    return expand_in_basis(monomial, basis)[0]


# --------------------------------------------------------------------------
# functionals
# --------------------------------------------------------------------------


@dataclass(eq=False)
class MomentFunctional:
    """Normalised moment sequence of one weight of a family.

    ``generator(K)`` returns ``[nu_0, ..., nu_K]``; results are cached.
    """

    family: str
    params: dict
    j: int
    support: str
    variable: str
    generator: Callable
    _cache: list = field(default_factory=list, repr=False)
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False)

    def moments(self, K: int) -> list:
        with self._lock:
            if len(self._cache) <= K:
                self._cache = list(self.generator(max(K, 2 * len(self._cache))))
            return self._cache[: K + 1]

    def __call__(self, k: int) -> ComplexRational:
        return self.moments(k)[k]


def normalized_moment(functional: MomentFunctional, k: int) -> ComplexRational:
    if k < 0:
        raise ValueError("moment index must be non-negative")
    return functional(k)


def _ratio_moments(num, den):
    def gen(K):
        return [pochhammer(num, k) / pochhammer(den, k) for k in range(K + 1)]
    return gen


def _power_moments(base, scale):
    def gen(K):
        return [pochhammer(base, k) / scale ** k for k in range(K + 1)]
    return gen


def _hermite_moments(c):
    def gen(K):
        mu = [ONE]
        for k in range(1, K + 1):
            prev2 = mu[k - 2] if k >= 2 else ZERO
            mu.append(c / 2 * mu[k - 1] + cq(k - 1) / 2 * prev2)
        return mu
    return gen


def stirling2_table(K: int) -> list:
    S = [[0] * (K + 1) for _ in range(K + 1)]
    S[0][0] = 1
    for k in range(1, K + 1):
        for r in range(1, k + 1):
            S[k][r] = r * S[k - 1][r] + S[k - 1][r - 1]
    return S


def _factorial_moments(phi: Callable):
    """Ordinary moments from falling-factorial moments ``phi(r)``: ``x**k = sum S(k,r) (x)_r``."""
    def gen(K):
        S = stirling2_table(K)
        phis = [phi(r) for r in range(K + 1)]
        return [sum((S[k][r] * phis[r] for r in range(k + 1)), ZERO) for k in range(K + 1)]
    return gen


def _finite_moments(weights, points):
    """Moments of a finite discrete measure, normalised by its total mass."""
    mass = sum(weights, ZERO)
    if not mass:
        raise AdmissibilityError("discrete weights sum to zero")

    def gen(K):
        out = []
        powers = [ONE] * len(points)
        for _ in range(K + 1):
            total = ZERO
            for w, p in zip(weights, powers):
                if w:
                    total = total + w * p
            out.append(total / mass)
            powers = [p * x for p, x in zip(powers, points)]
        return out
    return gen


def _racah_functional(family, params, j, a, b, g, d):
    N = fam.racah_support(a, b, g, d)
    weights = [fam.racah_weight(a, b, g, d, x) for x in range(N + 1)]
    points = [cq(x) * (x + g + d + 1) for x in range(N + 1)]
    return MomentFunctional(family, params, j, "finite", "lambda", _finite_moments(weights, points))


def _contour_functional(family, params, j, variable):
    def gen(K):
        return _moments_from_basis(scalar_basis(family, params, j, K), K)
    return MomentFunctional(family, params, j, "contour", variable, gen)


def functionals_for(spec: "fam.FamilySpec") -> list:
    """One :class:`MomentFunctional` per weight of the family."""
    P = spec.params
    family, variant, m = spec.family, spec.variant, spec.m
    out = []
    for j in range(m):
        mk = lambda support, var, gen: MomentFunctional(family, P, j, support, var, gen)
        if family in ("Jacobi", "JacobiPineiro") and variant in (None, "alpha"):
            a, b = P["alpha"][j], P["beta"]
            f = mk("interval", "x", _ratio_moments(a + 1, a + b + 2))
        elif family == "JacobiPineiro":
            a, b = P["alpha"], P["beta"][j]
            f = mk("interval", "x", _ratio_moments(a + 1, a + b + 2))
        elif family == "LaguerreI":
            f = mk("half-line", "x", _power_moments(P["alpha"][j] + 1, ONE))
        elif family == "LaguerreII":
            f = mk("half-line", "x", _power_moments(P["alpha"] + 1, P["c"][j]))
        elif family == "MultipleHermite":
            f = mk("real-line", "x", _hermite_moments(P["c"][j]))
        elif family == "MeixnerI":
            beta, c = P["beta"], P["c"][j]
            f = mk("infinite-discrete", "x",
                   _factorial_moments(lambda r, beta=beta, c=c: pochhammer(beta, r) * (c / (1 - c)) ** r))
        elif family == "MeixnerII":
            beta, c = P["beta"][j], P["c"]
            f = mk("infinite-discrete", "x",
                   _factorial_moments(lambda r, beta=beta, c=c: pochhammer(beta, r) * (c / (1 - c)) ** r))
        elif family == "Kravchuk":
            N, p = P["N"], P["p"][j]
            f = mk("finite", "x",
                   _factorial_moments(lambda r, N=N, p=p: (-1) ** r * pochhammer(cq(-N), r) * p ** r))
        elif family == "Charlier":
            a = P["a"][j]
            f = mk("infinite-discrete", "x", _factorial_moments(lambda r, a=a: a ** r))
        elif family == "Hahn":
            N = P["N"]
            if variant == "beta":
                a, b = P["alpha"], P["beta"][j]
            else:
                a, b = P["alpha"][j], P["beta"]
            weights = [fam.hahn_weight(a, b, N, x) for x in range(N + 1)]
            f = mk("finite", "x", _finite_moments(weights, [cq(x) for x in range(N + 1)]))
        elif family in ("Racah", "MultipleRacah"):
            if variant == "beta":
                w = (P["alpha"], P["beta"][j], P["gamma"], P["delta"])
            elif variant == "gammadelta":
                w = (P["alpha"], P["beta"][j], P["gamma"][j], P["delta"][j])
            else:
                w = (P["alpha"][j], P["beta"], P["gamma"], P["delta"])
            f = _racah_functional(family, P, j, *w)
        elif family in ("DualHahn", "MultipleDualHahn"):
            g, d, N = P["gamma"][j], P["delta"][j], P["N"]
            weights = [fam.dual_hahn_weight(g, d, N, x) for x in range(N + 1)]
            points = [cq(x) * (x + g + d + 1) for x in range(N + 1)]
            f = mk("finite", "lambda", _finite_moments(weights, points))
        elif family in CONTOUR_BASES:
            f = _contour_functional(family, P, j, spec.variable)
        else:
            raise AdmissibilityError(f"no moment functional for {family}")
        out.append(f)
    return out


# --------------------------------------------------------------------------
# moment matrices and determinants
# --------------------------------------------------------------------------


def moment_matrix(functionals, n) -> list:
    """Stacked ``|n| x |n|`` matrix with rows ``nu^{(j)}_{row+col}``, ``row < n_j``."""
    total = sum(n)
    rows = []
    for f, nj in zip(functionals, n):
        nu = f.moments(nj + total) if nj else []
        for r in range(nj):
            rows.append([nu[r + c] for c in range(total)])
    return rows


def jacobi_determinant_closed_form(n: int, alpha, beta) -> ComplexRational:
    """Normalised Hankel determinant of the Beta moments (divided by ``m_0**n``)."""
    alpha, beta = cq(alpha), cq(beta)
    out = ONE
    for i in range(1, n + 1):
        out = out * pochhammer(alpha + 1, i - 1) * pochhammer(beta + 1, i - 1) \
            / pochhammer(alpha + beta + 2, n + i - 2)
    return out * superfactorial(n)


def superfactorial(n: int) -> int:
    """``prod_{1 <= r < s <= n} (s - r) = prod_{k<n} k!``."""
    out = 1
    for k in range(n):
        out *= factorial(k)
    return out


def jacobi_pineiro_determinant_closed_form(n, alpha, beta) -> ComplexRational:
    """Product formula for the normalised Jacobi-Pineiro moment determinant."""
    alpha, beta = [cq(a) for a in alpha], cq(beta)
    total = sum(n)
    out = ONE
    for i in range(1, total + 1):
        out = out * pochhammer(beta + 1, i - 1)
    for aj, nj in zip(alpha, n):
        for i in range(1, nj + 1):
            out = out * pochhammer(aj + 1, i - 1) / pochhammer(aj + beta + 2, total + i - 2)
        out = out * superfactorial(nj)
    for i in range(len(n)):
        for j in range(i + 1, len(n)):
            for s in range(1, n[i] + 1):
                for r in range(1, n[j] + 1):
                    out = out * (alpha[j] - alpha[i] + r - s)
    return out


def normality_determinant(family: str, params, n) -> tuple:
    """``(closed_form, direct)`` normalised moment determinants."""
    n = tuple(int(v) for v in n)
    if family == "Jacobi":
        (nn,) = n if len(n) == 1 else (None,)
        if nn is None:
            raise ValueError("Jacobi expects a single index")
        alpha = params["alpha"][0] if isinstance(params["alpha"], (tuple, list)) else params["alpha"]
        closed = jacobi_determinant_closed_form(nn, alpha, params["beta"])
        spec = fam.FamilySpec.create("Jacobi", alpha=[alpha], beta=params["beta"])
    elif family == "JacobiPineiro":
        closed = jacobi_pineiro_determinant_closed_form(n, params["alpha"], params["beta"])
        spec = fam.FamilySpec.create("JacobiPineiro", alpha=params["alpha"], beta=params["beta"])
    else:
        raise AdmissibilityError("closed-form determinants exist for Jacobi and Jacobi-Pineiro only")
    direct = determinant(moment_matrix(functionals_for(spec), n)) if sum(n) else ONE
    return closed, direct
