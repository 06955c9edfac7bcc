"""Command-line front end: ``enrichkit <verb> ...``."""
from __future__ import annotations

import argparse
import json
import os
import sys
from typing import List, Optional

from .category import EnrichedCat, _coerce_table, derive_views, find_violation
from .chain import ChainCat, V, V_OP, chain_completeness_report
from .domains import continuity_report, smyth_report, way_below
from .errors import AxiomViolation, EnrichError, SchemaError
from .nets import classify_net, generated_weight, net_from_json, net_limits
from .quantale import TNorm, by_name, co_residual, least_idempotent_above, q, residuate, tnorm_apply
from .topology import (
    RVSpace,
    gamma,
    omega_specialization,
    sober_alexandroff,
    topological_reflections,
    validate_rvtop,
)
from .weights import (
    colimit_class,
    is_cauchy_weight,
    is_ideal,
    make_weight,
    representing_elements,
)


def _load(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise SchemaError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path} is not valid JSON: {exc.msg}") from exc


def _load_tnorm(source: str) -> TNorm:
    if os.path.exists(source):
        return TNorm.from_json(_load(source))
    return by_name(source)


def _load_category(path: str) -> EnrichedCat:
    return EnrichedCat.from_json(_load(path))


def _carrier(args) -> object:
    if args.chain:
        if not args.tnorm:
            raise SchemaError("--chain needs --tnorm")
        return ChainCat(_load_tnorm(args.tnorm), args.chain)
    if not args.file:
        raise SchemaError("a category file or --chain is required")
    return _load_category(args.file)


def _fmt(v):
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "none"
    if isinstance(v, (list, tuple)):
        return "[" + ", ".join(_fmt(x) for x in v) + "]"
    if isinstance(v, dict):
        return "{" + ", ".join(f"{k}: {_fmt(x)}" for k, x in v.items()) + "}"
    return str(v)


def emit(report: dict, fmt: str, out) -> None:
    if fmt == "json":
        out.write(json.dumps(report, indent=2, sort_keys=True) + "\n")
    else:
        for key in sorted(report):
            out.write(f"{key}: {_fmt(report[key])}\n")


# -- verbs ------------------------------------------------------------------------

def cmd_validate(args) -> dict:
    data = _load(args.file)
    try:
        tnorm = TNorm.from_json(data["tnorm"])
        elements, table = _coerce_table(data["elements"], data["hom"])
    except (KeyError, TypeError) as exc:
        raise SchemaError(f"category JSON is missing {exc}") from exc
    bad = find_violation(tnorm, elements, table)
    if bad is not None:
        raise AxiomViolation(f"not a real-enriched category: {bad.detail}", bad)
    X = EnrichedCat(tnorm, elements, table)
    views = derive_views(X)
    return {
        "message": f"valid real-enriched category; separated: {_fmt(views.separated)}",
        "valid": True,
        "separated": views.separated,
        "size": X.size,
    }


def cmd_views(args) -> dict:
    X = _load_category(args.file)
    v = derive_views(X)
    return {
        "opposite": v.opposite.to_json(),
        "symmetrization": v.symmetrization.to_json(),
        "underlying_order": [[X.elements[j] for j in range(X.size) if v.underlying_order[i][j]] for i in range(X.size)],
        "separated": v.separated,
    }


def cmd_weight_check(args) -> dict:
    data = _load(args.file)
    try:
        base = data["base"]
        values = data["values"]
    except (KeyError, TypeError) as exc:
        raise SchemaError(f"weight JSON is missing {exc}") from exc
    if isinstance(base, str):
        base = _load(os.path.join(os.path.dirname(args.file), base))
    X = EnrichedCat.from_json(base)
    phi = make_weight(X, values)
    cau = is_cauchy_weight(phi)
    ide = is_ideal(phi)
    cls = colimit_class(phi)
    reps = representing_elements(phi)
    return {
        "weight": [str(v) for v in phi.values],
        "representable": [X.elements[i] for i in reps],
        "colimit": [X.elements[i] for i in cls],
        "cauchy": cau.cauchy,
        "left_adjoint": [str(v) for v in cau.left_adjoint.values],
        "cauchy_failure": cau.failure,
        "ideal": ide.ideal,
        "inhabited": ide.inhabited,
        "undominated_pair": None if ide.undominated_pair is None else list(ide.undominated_pair),
        "criterion": "ideal iff inhabited with directed formal balls; Cauchy iff right adjoint",
    }


def cmd_net_analyze(args) -> dict:
    n = net_from_json(_load(args.file))
    fwd, cau = classify_net(n)
    report = {"forward_cauchy": fwd, "cauchy": cau}
    if fwd:
        report.update(net_limits(n).to_json())
        w = generated_weight(n)
        report["generated_weight"] = w.to_json() if n.on_chain else [str(v) for v in w.values]
    return report


def cmd_topology(args) -> dict:
    data = _load(args.file)
    if "delta" in data:
        space = RVSpace.from_json(data)
        X = None
    else:
        X = EnrichedCat.from_json(data)
        space = gamma(X)
    v = validate_rvtop(space)
    report = {"valid": v.valid, "violated_axiom": v.axiom, "witness": [_fmt(a) for a in v.args]}
    if not v.valid:
        return report
    iota, rho = topological_reflections(space)
    report["coreflection_opens"] = iota.to_json()["opens"]
    report["reflection_opens"] = rho.to_json()["opens"]
    underlying = X if X is not None else omega_specialization(space)
    report["specialization"] = underlying.to_json()
    if X is not None:
        report["sober"] = sober_alexandroff(X).to_json()
    return report


def cmd_domain_report(args) -> dict:
    X = _carrier(args)
    report = continuity_report(X).to_json()
    if isinstance(X, EnrichedCat):
        report["way_below"] = [[str(v) for v in row] for row in way_below(X).table]
    return report


def cmd_smyth_report(args) -> dict:
    X = _carrier(args)
    report = smyth_report(X).to_json()
    report["criterion"] = "smyth complete iff separated and every ideal representable"
    if isinstance(X, ChainCat):
        report["chain"] = chain_completeness_report(X.tnorm).to_json()
        report["orientation"] = X.orientation
    return report


def cmd_quantale_eval(args) -> dict:
    t = _load_tnorm(args.tnorm)
    vals = [q(v) for v in args.values]
    arity = {"apply": 2, "residuate": 2, "co_residual": 2, "least_idempotent_above": 1}[args.op]
    if len(vals) != arity:
        raise SchemaError(f"{args.op} takes {arity} values")
    if args.op == "apply":
        return {"result": str(tnorm_apply(t, *vals))}
    if args.op == "residuate":
        return {"result": str(residuate(t, *vals))}
    if args.op == "least_idempotent_above":
        return {"result": str(least_idempotent_above(t, *vals))}
    value, ok = co_residual(t, *vals)
    return {"result": str(value), "attained": ok}


VERBS = {
    "validate": cmd_validate,
    "views": cmd_views,
    "weight-check": cmd_weight_check,
    "net-analyze": cmd_net_analyze,
    "topology": cmd_topology,
    "domain-report": cmd_domain_report,
    "smyth-report": cmd_smyth_report,
    "quantale-eval": cmd_quantale_eval,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="enrichkit", description="Exact checks for real-enriched categories.")
    p.add_argument("--format", choices=["text", "json"], default="text")
    sub = p.add_subparsers(dest="verb", required=True)
    for verb in ("validate", "views", "weight-check", "net-analyze", "topology"):
        sp = sub.add_parser(verb)
        sp.add_argument("file")
    for verb in ("domain-report", "smyth-report"):
        sp = sub.add_parser(verb)
        sp.add_argument("file", nargs="?")
        sp.add_argument("--chain", choices=[V, V_OP])
        sp.add_argument("--tnorm")
    sp = sub.add_parser("quantale-eval")
    sp.add_argument("--tnorm", required=True, help="t-norm JSON file or one of godel, product, lukasiewicz")
    sp.add_argument("--op", required=True, choices=["apply", "residuate", "co_residual", "least_idempotent_above"])
    sp.add_argument("values", nargs="+")
    for sp in sub.choices.values():
        sp.add_argument("--format", choices=["text", "json"], default=argparse.SUPPRESS)
    return p


def main(argv: Optional[List[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        report = VERBS[args.verb](args)
    except AxiomViolation as exc:
        w = exc.witness
        if args.format == "json":
            emit({"valid": False, "error": str(exc), "witness": w.to_json() if hasattr(w, "to_json") else _fmt(w)}, "json", out)
        else:
            err.write(f"axiom violation: {exc}\n")
            if hasattr(w, "args") and isinstance(w.args, tuple) and w.args:
                err.write(f"witness: ({', '.join(map(str, w.args))})\n")
        return 1 if args.verb == "validate" else 2
    except (EnrichError, ValueError, TypeError, ZeroDivisionError) as exc:
        err.write(f"error: {exc}\n")
        return 2
    if args.format == "text" and args.verb in ("quantale-eval", "validate"):
        out.write(report["result" if args.verb == "quantale-eval" else "message"] + "\n")
        return 0
    emit(report, args.format, out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
