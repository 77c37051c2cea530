"""Order m+1 recurrence along step-line paths, solved and checked exactly.

Along a step-line path ``n_0, n_1, ...`` (one unit step at a time, cycling
through the components) the monic polynomials satisfy
``x p_i = p_{i+1} + sum_{l=0}^{m} a_{i,l} p_{i-l}``.  We solve for all
``m + 2`` coefficients (including the one in front of ``p_{i+1}``) from the
coefficient equations and require the system to be consistent.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from ..arith import ONE, Poly, solve_linear
from ..errors import InconsistentRecurrence, NotNormal, UnavailableRepresentation
from .. import families as fam


def step_line(m: int, length: int, start=None) -> list:
    """``length`` multi-indices starting at ``start`` (default zero), cycling components."""
    cur = list(start) if start is not None else [0] * m
    path = [tuple(cur)]
    total = sum(cur)
    while len(path) < length:
        cur[total % m] += 1
        total += 1
        path.append(tuple(cur))
    return path


def _is_step_line(path) -> bool:
    for p, q in zip(path, path[1:]):
        diff = [b - a for a, b in zip(p, q)]
        if sorted(diff) != [0] * (len(diff) - 1) + [1]:
            return False
    return True


@dataclass
class RecurrenceStep:
    index: tuple
    coefficients: list          # [c_{+1}, a_0, a_1, ..., a_m] (truncated at the path start)
    residual: list

    @property
    def exact(self) -> bool:
        return all(not r for r in self.residual) and self.coefficients[0] == ONE


@dataclass
class RecurrenceReport:
    path: list
    steps: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return bool(self.steps) and all(s.exact for s in self.steps)

    def to_json(self) -> dict:
        return {"path": [list(p) for p in self.path], "passed": self.passed,
                "steps": [{"index": list(s.index), "coefficients": [str(c) for c in s.coefficients],
                           "residual": [str(r) for r in s.residual]} for s in self.steps]}


def _monic_polys(spec, path):
    out = []
    for n in path:
        try:
            p = fam.build(spec, n)
        except UnavailableRepresentation:
            from ..moments import functionals_for
            from ..oracle import solve_type2
            p = solve_type2(functionals_for(spec), n, spec.variable)
        if p.degree != sum(n):
            raise NotNormal(f"polynomial at {n} has degree {p.degree}, expected {sum(n)}")
        out.append(p.monic())
    return out


def recurrence_from_polys(polys, m: int, path=None) -> RecurrenceReport:
    path = path or list(range(len(polys)))
    report = RecurrenceReport(list(path))
    if not polys:
        return report
    var = polys[0].var
    x = Poly.variable(var)
    for i in range(len(polys) - 1):
        lhs = x * polys[i]
        basis = [polys[i + 1]] + [polys[i - l] for l in range(0, m + 1) if i - l >= 0]
        deg = lhs.degree
        A = [[b[r] for b in basis] for r in range(deg + 1)]
        rhs = [lhs[r] for r in range(deg + 1)]
        sol, consistent, _ = solve_linear(A, rhs)
        if not consistent:
            raise InconsistentRecurrence(f"no order-{m + 1} relation at path position {i}")
        combo = Poly([0], var)
        for c, b in zip(sol, basis):
            combo = combo + b.scale(c)
        residual = list((lhs - combo).coeffs)
        report.steps.append(RecurrenceStep(tuple(path[i]) if isinstance(path[i], tuple) else (path[i],),
                                           list(sol), residual))
    return report


def check_recurrence(spec: "fam.FamilySpec", path=None) -> RecurrenceReport:
    """Fit and verify the order ``m+1`` relation along a step-line path."""
    m = spec.m
    if path is None:
        path = step_line(m, m + 4)
    path = [tuple(int(v) for v in n) for n in path]
    if not _is_step_line(path):
        raise ValueError("path must move by one unit vector per step")
    return recurrence_from_polys(_monic_polys(spec, path), m, path)
