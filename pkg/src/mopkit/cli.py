"""Command-line front end: coefficients, evaluation, verification, the scheme graph.

All exact values are printed as strings ("p/q" or "p/q+r/s*i").  Exit codes:
0 when every selected check passes, 1 on a failed check, 2 on usage or
admissibility errors (with a JSON error object on stderr).
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import random
import re
import sys

from . import families as fam
from .arith import cq, make_context, precision_bits
from .errors import (
    AdmissibilityError, HypothesisViolation, MopkitError, NotNormal, UnavailableRepresentation,
)
from .moments import CONTOUR_BASES, functionals_for, scalar_basis
from .oracle import expand_in_scalar_basis, solve_type2, verify_orthogonality
from .sampling import multi_indices, random_spec

ALL_CHECKS = ("orth", "repr", "basis", "recur", "limit", "transform")

# multiple family -> scalar family it reduces to when m = 1
SCALAR_COUNTERPART = {
    ("JacobiPineiro", "alpha"): "Jacobi",
    ("MultipleWilson", None): "Wilson",
    ("MultipleRacah", "alpha"): "Racah",
    ("MultipleContinuousDualHahn", None): "ContinuousDualHahn",
    ("MultipleDualHahn", None): "DualHahn",
    ("MultipleMeixnerPollaczek", None): "MeixnerPollaczek",
    ("MultipleContinuousHahn", None): "ContinuousHahn",
}


class UsageError(ValueError):
    pass


# --------------------------------------------------------------------------
# parsing
# --------------------------------------------------------------------------


def _squash(name: str) -> str:
    out = re.sub(r"[^a-z0-9]", "", name.lower())
    # laguerre1 / meixner2 style aliases for the roman-numeral tags
    return re.sub(r"(?<=[a-z])(1|2)$", lambda m: "i" * int(m.group(1)), out)


def resolve_family(name: str, variant: str | None = None):
    """Accept ``JacobiPineiro``, ``jacobi-pineiro`` or ``multiple-racah[beta]``."""
    m = re.fullmatch(r"\s*([^\[\]]+?)\s*(?:\[(\w+)\])?\s*", name)
    if not m:
        raise UsageError(f"cannot parse family name {name!r}")
    base, bracket = m.group(1), m.group(2)
    if bracket and variant and bracket != variant:
        raise UsageError(f"conflicting variants {bracket!r} and {variant!r}")
    variant = variant or bracket
    for tag in fam.family_tags():
        if _squash(tag) == _squash(base):
            return tag, variant
    raise UsageError(f"unknown family {name!r}; known: {', '.join(fam.family_tags())}")


def _parse_value(text: str):
    parts = [p.strip() for p in text.split(",") if p.strip()]
    if len(parts) == 1 and "," not in text:
        return parts[0]
    return parts


def parse_params(pairs, json_text):
    params = {}
    if json_text:
        try:
            loaded = json.loads(json_text)
        except json.JSONDecodeError as exc:
            raise UsageError(f"--params is not valid JSON: {exc}") from None
        if not isinstance(loaded, dict):
            raise UsageError("--params must be a JSON object")
        params.update(loaded)
    for pair in pairs or []:
        if "=" not in pair:
            raise UsageError(f"parameter {pair!r} must look like name=value")
        key, value = pair.split("=", 1)
        params[key.strip()] = _parse_value(value)
    return params


def parse_index(text: str | None):
    if text is None:
        return None
    try:
        n = tuple(int(v) for v in text.replace("(", "").replace(")", "").split(",") if v.strip())
    except ValueError:
        raise UsageError(f"multi-index {text!r} must be comma-separated integers") from None
    if not n or any(v < 0 for v in n):
        raise UsageError(f"multi-index {text!r} must be non-empty and non-negative")
    return n


def spec_from_args(args) -> fam.FamilySpec:
    params = {}
    variant = args.variant
    family = args.family
    if args.spec:
        try:
            loaded = json.loads(args.spec)
        except json.JSONDecodeError as exc:
            raise UsageError(f"--spec is not valid JSON: {exc}") from None
        family = family or loaded.get("family")
        variant = variant or loaded.get("variant")
        params.update(loaded.get("params", {}))
    params.update(parse_params(args.param, args.params))
    if not family:
        raise UsageError("a family is required (--family or --spec)")
    tag, variant = resolve_family(family, variant)
    info = fam.family_info(tag, variant)
    for name in info.integers:
        if name in params and not isinstance(params[name], int):
            try:
                params[name] = int(str(params[name]))
            except ValueError:
                raise UsageError(f"parameter {name} must be an integer") from None
    try:
        return fam.FamilySpec.create(tag, info.variant, **params)
    except ValueError as exc:
        if isinstance(exc, AdmissibilityError):
            raise
        raise AdmissibilityError(str(exc)) from None


def _index_for(spec, n):
    if n is None:
        raise UsageError("a multi-index is required (--n)")
    if len(n) != spec.m:
        raise UsageError(f"multi-index {list(n)} has length {len(n)}, the family has m = {spec.m}")
    return n


# --------------------------------------------------------------------------
# construction helpers
# --------------------------------------------------------------------------


def node_name(spec) -> str:
    return spec.family if spec.info.variant is None else f"{spec.family}[{spec.info.variant}]"


def construct(spec, n, representation=None):
    """Explicit construction, or the oracle when the family has none."""
    try:
        return fam.build(spec, n, representation), representation or _default_rep(spec)
    except UnavailableRepresentation:
        if representation:
            raise
        spec.info.check(spec, n)
        return solve_type2(functionals_for(spec), n, spec.variable), "oracle"


def _default_rep(spec):
    reps = fam.representations(spec)
    return reps[0] if reps else "oracle"


def _header(spec, n=None):
    out = spec.to_json()
    if n is not None:
        out["n"] = list(n)
    out["variable"] = spec.variable
    return out


# --------------------------------------------------------------------------
# checks
# --------------------------------------------------------------------------


def check_orth(spec, n, args):
    poly, rep = construct(spec, n)
    report = verify_orthogonality(poly, functionals_for(spec), n)
    return {"representation": rep, **report.to_json()}


def check_repr(spec, n, args):
    reps = fam.representations(spec)
    built = {r: fam.build(spec, n, r) for r in reps}
    out = {"representations": {r: [str(c) for c in p.coeffs] for r, p in built.items()}}
    passed = bool(built)
    first = next(iter(built.values()), None)
    mismatched = [r for r, p in built.items() if p.coeffs != first.coeffs]
    passed = passed and not mismatched
    counterpart = SCALAR_COUNTERPART.get((spec.family, spec.info.variant))
    if counterpart and spec.m == 1:
        scalar = fam.FamilySpec.create(counterpart, None, **dict(spec.params))
        sp = fam.build(scalar, n)
        equal = first is not None and sp.coeffs == first.coeffs
        out["scalar_counterpart"] = {"family": counterpart, "coeffs": [str(c) for c in sp.coeffs],
                                     "equal": equal}
        passed = passed and equal
    out["mismatched"] = mismatched
    out["passed"] = passed
    return out


def check_basis(spec, n, args):
    family = spec.family
    if family not in CONTOUR_BASES and not (family in ("Jacobi", "JacobiPineiro")
                                            and spec.info.variant in (None, "alpha")):
        return {"applicable": False, "passed": True}
    poly, _ = construct(spec, n)
    rows, passed = [], True
    for j in range(spec.m):
        basis = scalar_basis(family, spec.params, j, sum(n))
        exp = expand_in_scalar_basis(poly.with_var(basis[-1].var), basis, n, j)
        rows.append({"j": j, "coefficients": [str(c) for c in exp.coefficients],
                     "vanishing": exp.vanishing, "pattern_holds": exp.pattern_holds})
        passed = passed and exp.pattern_holds
    return {"applicable": True, "weights": rows, "passed": passed}


def check_recur(spec, n, args):
    from .analysis.recurrence import check_recurrence, step_line
    length = args.path_length or max(sum(n) + 2, spec.m + 2)
    return check_recurrence(spec, step_line(spec.m, length)).to_json()


def check_limit_edges(spec, n, args):
    from .analysis.limits import SCHEME, check_limit
    name = node_name(spec)
    rows = []
    for edge in SCHEME:
        if edge.target != name:
            continue
        rows.append(check_limit(edge, n, target=spec).to_json())
    return {"applicable": bool(rows), "edges": rows, "passed": all(r["passed"] for r in rows)}


def check_transform(spec, n, args):
    from .analysis.special import QuadratureConfig
    from .analysis.transform import verify_transform
    if spec.family not in ("Wilson", "MultipleWilson"):
        return {"applicable": False, "passed": True}
    P = spec.params
    t = cq(args.t) if args.t is not None else P["a"] / 2
    config = QuadratureConfig(precision=precision_bits(args.precision), tolerance=args.tolerance)
    report = verify_transform(P["a"], P["b"], P["c"], P["d"], t, n, config).to_json()
    report["t"] = str(t)
    report["applicable"] = True
    return report


CHECKS = {
    "orth": check_orth, "repr": check_repr, "basis": check_basis,
    "recur": check_recur, "limit": check_limit_edges, "transform": check_transform,
}


def run_checks(spec, n, checks, args):
    results = {}
    for name in checks:
        try:
            results[name] = CHECKS[name](spec, n, args)
        except NotNormal as exc:
            results[name] = {"passed": False, "error": type(exc).__name__, "message": str(exc)}
        except (AdmissibilityError, HypothesisViolation, UsageError):
            raise
        except MopkitError as exc:
            results[name] = {"passed": False, "error": type(exc).__name__, "message": str(exc)}
    return results


def _parse_checks(text):
    checks = [c.strip() for c in text.split(",") if c.strip()]
    unknown = [c for c in checks if c not in CHECKS]
    if unknown or not checks:
        raise UsageError(f"unknown checks {unknown}; choose from {','.join(ALL_CHECKS)}")
    return checks


# --------------------------------------------------------------------------
# commands
# --------------------------------------------------------------------------


def cmd_coeffs(args):
    spec = spec_from_args(args)
    n = _index_for(spec, parse_index(args.n))
    poly, rep = construct(spec, n, args.representation)
    coeffs = [str(c) for c in poly.coeffs]
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["power", "coeff"])
        for k, c in enumerate(coeffs):
            w.writerow([k, c])
        return buf.getvalue(), 0
    out = _header(spec, n)
    out.update(representation=rep, variable=poly.var, coeffs=coeffs)
    return out, 0


def cmd_eval(args):
    spec = spec_from_args(args)
    n = _index_for(spec, parse_index(args.n))
    poly, rep = construct(spec, n, args.representation)
    out = _header(spec, n)
    out["representation"] = rep
    out["at"] = []
    for text in args.at:
        try:
            point = cq(text)
        except ValueError:
            raise UsageError(f"evaluation point {text!r} is not an exact number") from None
        value = poly.eval_at(point)
        row = {"x": str(point), "value": str(value)}
        if args.numeric:
            ctx = make_context(precision_bits(args.precision))
            z = value.to_mpc(ctx)
            row["numeric"] = ctx.nstr(z.real if not value.im else z, args.digits)
        out["at"].append(row)
    return out, 0


def cmd_verify(args):
    spec = spec_from_args(args)
    n = _index_for(spec, parse_index(args.n))
    checks = _parse_checks(args.checks)
    results = run_checks(spec, n, checks, args)
    passed = all(r.get("passed", False) for r in results.values())
    out = _header(spec, n)
    out.update(checks=results, passed=passed)
    return out, 0 if passed else 1


def cmd_scheme(args):
    from .analysis.limits import scheme_graph
    return scheme_graph(), 0


def cmd_moments(args):
    spec = spec_from_args(args)
    K = args.k
    if K < 0:
        raise UsageError("--k must be non-negative")
    out = _header(spec)
    out["moments"] = [{"j": f.j, "support": f.support, "variable": f.variable,
                       "values": [str(v) for v in f.moments(K)]}
                      for f in functionals_for(spec)]
    return out, 0


def cmd_table(args):
    """Batch over multi-indices and, with ``--random``, over seeded parameter draws."""
    checks = _parse_checks(args.checks) if args.checks else []
    if args.random:
        tag, variant = resolve_family(args.family or "", args.variant)
        key = (tag, fam.family_info(tag, variant).variant)
        rng = random.Random(args.seed)
        specs = [random_spec(key, rng, args.m, args.max_total) for _ in range(args.random)]
    else:
        specs = [spec_from_args(args)]
    cases, ok = [], True
    for si, spec in enumerate(specs):
        for n in multi_indices(spec.m, args.max_total, args.min_total):
            row = {"case": [si, list(n)], **_header(spec, n)}
            try:
                poly, rep = construct(spec, n)
            except (AdmissibilityError, NotNormal) as exc:
                row.update(skipped=True, reason=str(exc))
                cases.append(row)
                continue
            row.update(representation=rep, coeffs=[str(c) for c in poly.coeffs])
            if checks:
                row["checks"] = run_checks(spec, n, checks, args)
                row["passed"] = all(r.get("passed", False) for r in row["checks"].values())
                ok = ok and row["passed"]
            cases.append(row)
    cases.sort(key=lambda r: (r["case"][0], sum(r["case"][1]), r["case"][1]))
    out = {"seed": args.seed if args.random else None, "count": len(cases), "cases": cases}
    if checks:
        out["passed"] = ok
    return out, 0 if ok else 1


# --------------------------------------------------------------------------
# argument parser
# --------------------------------------------------------------------------


def _add_family_args(p, need_n=True):
    p.add_argument("--family", "-f", help="family tag, e.g. JacobiPineiro or multiple-wilson")
    p.add_argument("--variant", help="variant for families with several (alpha, beta, gammadelta)")
    p.add_argument("--param", "-p", action="append", metavar="NAME=VALUE",
                   help="parameter; vectors as comma lists, e.g. -p alpha=1/3,3/4")
    p.add_argument("--params", help="parameters as a JSON object")
    p.add_argument("--spec", help='full JSON spec {"family": ..., "variant": ..., "params": {...}}')
    if need_n:
        p.add_argument("--n", "-n", help="multi-index, e.g. 2,1")


def _add_numeric_args(p):
    p.add_argument("--precision", type=int, default=None,
                   help="working bits for floating checks (default: MOPKIT_PRECISION_BITS or 256)")
    p.add_argument("--tolerance", type=float, default=1e-12)
    p.add_argument("--t", help="transform variable t (default a/2)")
    p.add_argument("--path-length", type=int, default=None, help="step-line path length for recur")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mopkit", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("coeffs", help="exact coefficients of one polynomial")
    _add_family_args(p)
    p.add_argument("--representation", "-r")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=cmd_coeffs)

    p = sub.add_parser("eval", help="evaluate a polynomial at exact points")
    _add_family_args(p)
    p.add_argument("--representation", "-r")
    p.add_argument("--at", action="append", required=True, help="exact point, repeatable")
    p.add_argument("--numeric", action="store_true", help="also print a decimal value")
    p.add_argument("--digits", type=int, default=30)
    p.add_argument("--precision", type=int, default=None)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("verify", help="run checks on one polynomial")
    _add_family_args(p)
    p.add_argument("--checks", default="orth,repr", help=f"comma list from {','.join(ALL_CHECKS)}")
    _add_numeric_args(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("scheme", help="limit-relation graph")
    p.add_argument("--format", choices=("json",), default="json")
    p.set_defaults(func=cmd_scheme)

    p = sub.add_parser("moments", help="normalised moments of every weight")
    _add_family_args(p, need_n=False)
    p.add_argument("--k", type=int, default=6, help="highest moment index")
    p.set_defaults(func=cmd_moments)

    p = sub.add_parser("table", help="batch over multi-indices (and random parameter draws)")
    _add_family_args(p, need_n=False)
    p.add_argument("--max-total", type=int, default=3)
    p.add_argument("--min-total", type=int, default=0)
    p.add_argument("--checks", default="", help="optional checks to run on every case")
    p.add_argument("--random", type=int, default=0, metavar="COUNT",
                   help="draw COUNT random admissible parameter sets instead of --param")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--m", type=int, default=2, help="number of weights for random draws")
    _add_numeric_args(p)
    p.set_defaults(func=cmd_table)
    return parser


def _emit_error(exc, code):
    err = {"error": type(exc).__name__, "message": str(exc), "exit_code": code}
    sys.stderr.write(json.dumps(err) + "\n")
    return code


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "precision", None) is None and "MOPKIT_PRECISION_BITS" in os.environ:
        try:
            precision_bits()
        except ValueError as exc:
            return _emit_error(exc, 2)
    try:
        out, code = args.func(args)
    except (AdmissibilityError, HypothesisViolation, UsageError, UnavailableRepresentation) as exc:
        return _emit_error(exc, 2)
    except ValueError as exc:
        return _emit_error(exc, 2)
    except MopkitError as exc:
        return _emit_error(exc, 1)
    if isinstance(out, str):
        sys.stdout.write(out)
    else:
        sys.stdout.write(json.dumps(out, indent=2) + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
