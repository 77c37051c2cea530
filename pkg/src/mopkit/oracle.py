"""Brute-force type II solver and verifier working straight from moments.

The monic polynomial ``P`` of degree ``|n|`` is fixed by
``L_j[P x**k] = 0`` for ``k < n_j``.  Everything here is exact.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .arith import ONE, ZERO, ComplexRational, Poly, rank, solve_linear
from .errors import NotNormal
from .moments import expand_in_basis, moment_matrix


def _index(n):
    return tuple(int(v) for v in n)


def solve_type2(functionals, n, var: str | None = None) -> Poly:
    """Monic type II multiple orthogonal polynomial for multi-index ``n``."""
    n = _index(n)
    if var is None:
        var = functionals[0].variable if functionals else "x"
    total = sum(n)
    if total == 0:
        return Poly.constant(1, var)
    A = moment_matrix(functionals, n)
    rhs = []
    for f, nj in zip(functionals, n):
        nu = f.moments(nj + total) if nj else []
        rhs.extend(-nu[total + k] for k in range(nj))
    x, consistent, r = solve_linear(A, rhs)
    if r < total or not consistent:
        raise NotNormal(f"moment matrix for n={n} has rank {r} < {total}")
    return Poly(list(x) + [ONE], var)


@dataclass
class VerificationReport:
    n: tuple
    degree: int
    residuals: list = field(default_factory=list)
    extras: list = field(default_factory=list)
    normal: bool = False
    proportionality: ComplexRational | None = None

    @property
    def passed(self) -> bool:
        return (self.degree == sum(self.n)
                and all(not r for row in self.residuals for r in row)
                and all(bool(e) for e in self.extras)
                and self.normal
                and self.proportionality is not None)

    def to_json(self) -> dict:
        return {
            "n": list(self.n),
            "degree": self.degree,
            "residuals": [[str(r) for r in row] for row in self.residuals],
            "extras": [str(e) for e in self.extras],
            "normal": self.normal,
            "proportionality": None if self.proportionality is None else str(self.proportionality),
            "passed": self.passed,
        }


def _pair(candidate: Poly, nu, k: int) -> ComplexRational:
    total = ZERO
    for i, c in enumerate(candidate.coeffs):
        if c:
            total = total + c * nu[i + k]
    return total


def verify_orthogonality(candidate: Poly, functionals, n) -> VerificationReport:
    """Check ``L_j[P x**k] = 0`` for ``k < n_j`` and ``!= 0`` at ``k = n_j``."""
    n = _index(n)
    report = VerificationReport(n=n, degree=candidate.degree)
    total = sum(n)
    if candidate.degree < 0:
        return report
    deg = max(candidate.degree, total)
    for f, nj in zip(functionals, n):
        nu = f.moments(deg + nj)
        report.residuals.append([_pair(candidate, nu, k) for k in range(nj)])
        report.extras.append(_pair(candidate, nu, nj))
    report.normal = total == 0 or rank(moment_matrix(functionals, n)) == total
    if report.normal:
        report.proportionality = candidate.proportionality(solve_type2(functionals, n, candidate.var))
    return report


@dataclass
class BasisExpansion:
    coefficients: list
    n_j: int
    total: int

    @property
    def vanishing(self) -> list:
        return [ell for ell, c in enumerate(self.coefficients) if not c]

    @property
    def pattern_holds(self) -> bool:
        """Zero below ``n_j``, nonzero at ``n_j`` and at ``|n|``."""
        cs = self.coefficients
        return (all(not c for c in cs[: self.n_j])
                and len(cs) == self.total + 1
                and bool(cs[self.n_j]) and bool(cs[self.total]))


def expand_in_scalar_basis(candidate: Poly, basis, n, j: int) -> BasisExpansion:
    """Expand ``candidate`` in the scalar orthogonal basis of weight ``j``."""
    n = _index(n)
    coeffs = expand_in_basis(candidate, basis)
    return BasisExpansion(coeffs, n[j], sum(n))
