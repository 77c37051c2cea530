"""Random admissible rational parameters for every family (seeded, reproducible)."""
from __future__ import annotations

import random
from fractions import Fraction

from .errors import AdmissibilityError
from .families import FamilySpec, family_keys


def rational(rng: random.Random, lo: float, hi: float, max_den: int = 9, integer_ok=False) -> Fraction:
    """A random non-integer rational in (lo, hi) with a small denominator."""
    for _ in range(1000):
        q = rng.randint(2, max_den)
        p = rng.randint(int(lo * q) - 1, int(hi * q) + 1)
        r = Fraction(p, q)
        if lo < r < hi and (integer_ok or r.denominator != 1):
            return r
    raise RuntimeError("could not draw a rational in range")


def _vec(rng, m, lo, hi, **kw):
    return [rational(rng, lo, hi, **kw) for _ in range(m)]


def _draw(key, rng, m, max_total):
    tag, variant = key
    R = lambda lo=-0.9, hi=3.0, **kw: rational(rng, lo, hi, **kw)
    V = lambda lo=-0.9, hi=3.0, **kw: _vec(rng, m, lo, hi, **kw)
    N = max_total + rng.randint(0, 3)
    if tag == "Jacobi":
        return dict(alpha=V()[:1], beta=R())
    if tag == "JacobiPineiro" and variant == "beta":
        return dict(alpha=R(), beta=V())
    if tag == "JacobiPineiro":
        return dict(alpha=V(), beta=R())
    if tag in ("Wilson", "MultipleWilson", "ContinuousHahn", "MultipleContinuousHahn"):
        b = V(0.1, 3)
        return dict(a=R(0.1, 3), b=b if tag.startswith("Multiple") else b[:1], c=R(0.1, 3), d=R(0.1, 3))
    if tag in ("ContinuousDualHahn", "MultipleContinuousDualHahn"):
        b = V(0.1, 3)
        return dict(a=R(0.1, 3), b=b if tag.startswith("Multiple") else b[:1], c=R(0.1, 3))
    if tag == "Racah":
        return dict(alpha=V()[:1], beta=R(), gamma=-N - 1, delta=R())
    if tag == "MultipleRacah" and variant == "beta":
        return dict(alpha=-N - 1, beta=V(), gamma=R(), delta=R())
    if tag == "MultipleRacah" and variant == "gammadelta":
        K1, K2 = R(), R()
        delta = V()
        return dict(alpha=-N - 1, beta=[K1 - d for d in delta], gamma=[K2 - d for d in delta], delta=delta)
    if tag == "MultipleRacah":
        return dict(alpha=V(), beta=R(), gamma=-N - 1, delta=R())
    if tag in ("DualHahn", "MultipleDualHahn"):
        K = R(0, 4)
        gamma = V(-0.9, K + 0.9 if K + 0.9 > -0.8 else 3)
        delta = [K - g for g in gamma]
        if tag == "DualHahn":
            gamma, delta = gamma[:1], delta[:1]
        return dict(gamma=gamma, delta=delta, N=N)
    if tag in ("MeixnerPollaczek", "MultipleMeixnerPollaczek"):
        w = V(0.1, 4)
        return dict(lam=R(0.1, 3), w=w if tag.startswith("Multiple") else w[:1])
    if tag == "Hahn" and variant == "beta":
        return dict(alpha=R(), beta=V(), N=N)
    if tag == "Hahn":
        return dict(alpha=V(), beta=R(), N=N)
    if tag == "MeixnerI":
        return dict(beta=R(0.1, 4), c=V(0.05, 0.95))
    if tag == "MeixnerII":
        return dict(beta=V(0.1, 4), c=R(0.05, 0.95))
    if tag == "Kravchuk":
        return dict(p=V(0.05, 0.95), N=N)
    if tag == "Charlier":
        return dict(a=V(0.1, 5, integer_ok=True))
    if tag == "LaguerreI":
        return dict(alpha=V())
    if tag == "LaguerreII":
        return dict(alpha=R(), c=V(0.1, 5, integer_ok=True))
    if tag == "MultipleHermite":
        return dict(c=V(-3, 3, integer_ok=True))
    raise AdmissibilityError(f"no sampler for {key}")


def random_spec(key, rng: random.Random, m: int = 2, max_total: int = 6, tries: int = 200) -> FamilySpec:
    """Draw parameters until they pass the family's admissibility checks."""
    tag, variant = key
    scalar = tag in ("Jacobi", "Wilson", "Racah", "ContinuousDualHahn", "DualHahn",
                     "MeixnerPollaczek", "ContinuousHahn")
    if scalar:
        m = 1
    last = None
    for _ in range(tries):
        params = _draw(key, rng, m, max_total)
        try:
            spec = FamilySpec.create(tag, variant, **params)
            if "N" in spec.params and spec.params["N"] < max_total:
                continue
            if tag in ("Racah", "MultipleRacah"):
                spec.info.check(spec, (max_total,) + (0,) * (spec.m - 1))
            return spec
        except (AdmissibilityError, ZeroDivisionError) as exc:
            last = exc
    raise AdmissibilityError(f"could not sample admissible parameters for {key}: {last}")


def multi_indices(m: int, max_total: int, min_total: int = 0) -> list:
    """All multi-indices of length m with min_total <= |n| <= max_total, sorted."""
    out = []

    def rec(prefix, remaining, slots):
        if slots == 1:
            for v in range(remaining + 1):
                out.append(tuple(prefix + [v]))
            return
        for v in range(remaining + 1):
            rec(prefix + [v], remaining - v, slots - 1)

    rec([], max_total, m)
    return sorted((n for n in out if sum(n) >= min_total), key=lambda n: (sum(n), n))


def all_family_keys() -> list:
    return family_keys()
