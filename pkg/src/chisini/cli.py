"""Command-line front end.

Every invocation prints one JSON document on stdout::

    {"command": ..., "inputEcho": {...}, "payload": {...}, "status": "ok",
     "toolVersion": ...}

or, on failure, ``"status": "error"`` with an ``error`` record instead of a
payload.  Exit codes: 0 ok, 1 computation or input-file error, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from chisini import __version__


class UsageError(Exception):
    def __init__(self, message: str, usage: str):
        super().__init__(message)
        self.usage = usage


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message, self.format_usage())


def _jsonable(x):
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


def _dump(doc) -> str:
    return json.dumps(_jsonable(doc), sort_keys=True, indent=2, ensure_ascii=False)


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


# -- command handlers: (args) -> (inputEcho, payload) ---------------------------------------

def _germ_invariants(args):
    from chisini.algebra import parse
    from chisini.germs import CurveGerm, invariants

    zvar, vvar = args.vars
    f = parse(args.poly, [zvar, vvar])
    inv = invariants(CurveGerm(f, zvar, vvar))
    return {"poly": str(f), "vars": [zvar, vvar]}, inv.as_dict()


def _localmodel(args):
    from chisini.localmodels import model_report

    return {"n": args.n, "m": args.m}, model_report(args.n, args.m).as_dict()


def _load_pres(args):
    from chisini.monodromy import find_presentation

    return find_presentation(args.presentation)


def _enumerate(args):
    from chisini.monodromy import components, enumerate_homs, equivalence_classes, is_transitive

    pres = _load_pres(args)
    homs = enumerate_homs(pres, args.degree, tuple(args.type), jobs=args.jobs, max_degree=args.max_degree)
    trans = [h for h in homs if is_transitive(h)]
    classes = equivalence_classes(homs)
    tclasses = equivalence_classes(trans)
    payload = {
        "presentation": pres.name,
        "total": len(homs),
        "transitive": len(trans),
        "classes": len(classes),
        "transitiveClasses": len(tclasses),
        "representatives": [
            {"images": c.representative.as_dict()["images"], "size": c.size,
             "transitive": is_transitive(c.representative)}
            for c in classes
        ],
    }
    if args.local_gens:
        payload["components"] = [
            components(c.representative, args.local_gens, args.reference_multiplicity).as_dict()
            for c in classes
        ]
    if args.list:
        payload["homomorphisms"] = [h.as_dict()["images"] for h in homs]
    echo = {"presentation": args.presentation, "degree": args.degree, "type": list(args.type),
            "localGens": args.local_gens, "referenceMultiplicity": args.reference_multiplicity}
    return echo, payload


def _classes(args):
    from chisini.monodromy import enumerate_homs, equivalence_classes, is_transitive

    pres = _load_pres(args)
    homs = enumerate_homs(pres, args.degree, tuple(args.type), jobs=args.jobs, max_degree=args.max_degree)
    if args.transitive_only:
        homs = [h for h in homs if is_transitive(h)]
    classes = equivalence_classes(homs)
    payload = {
        "presentation": pres.name,
        "count": len(classes),
        "classes": [
            {"representative": c.representative.as_dict()["images"], "size": c.size,
             "transitive": is_transitive(c.representative)}
            for c in classes
        ],
    }
    echo = {"presentation": args.presentation, "degree": args.degree, "type": list(args.type),
            "transitiveOnly": args.transitive_only}
    return echo, payload


def _verdict(args):
    from chisini.passport import load_passport, verdict

    if len(args.passport) != 2:
        raise UsageError("verdict needs exactly two --passport arguments",
                         "usage: chisini verdict --passport A.json --passport B.json")
    p1, p2 = (load_passport(p) for p in args.passport)
    return {"passports": [p1.as_dict(), p2.as_dict()]}, verdict(p1, p2).as_dict()


def _bound(args):
    from chisini.passport import thm2_bound

    return {"d": args.d, "g": args.g, "c": args.c}, {"bound": str(thm2_bound(args.d, args.g, args.c))}


def _pluecker(args):
    from chisini.passport import curve_genus, pluecker_dual

    m, nv, cv = pluecker_dual(args.n, args.nv, args.cv)
    payload = {"degree": m, "virtualNodes": nv, "virtualCusps": cv,
               "genus": curve_genus(args.n, args.nv, args.cv)}
    return {"n": args.n, "nv": args.nv, "cv": args.cv}, payload


def _dual(args):
    from chisini.dual import ParamCurve, dual_param, dualizing_passport, implicitize, thm8_verdict

    c = ParamCurve.parse(args.param)
    payload = {"source": c.strings(), "sourceEquation": str(implicitize(c)),
               "dualParametrization": dual_param(c).strings()}
    dp = dualizing_passport(c)
    payload.update(dp.as_dict())
    payload["thm8"] = thm8_verdict(dp).as_dict()
    return {"param": c.strings()}, payload


def _validate_data(args):
    from chisini.monodromy import data_dir, data_pack, validate_presentation

    pack = data_pack()
    reports = {name: validate_presentation(p).as_dict() for name, p in pack.items()}
    failed = sorted(n for n, r in reports.items() if not r["passed"])
    if failed:
        raise ComputationError(f"validation failed for {', '.join(failed)}", {"reports": reports})
    return {"dataDir": str(data_dir())}, {"presentations": len(pack), "reports": reports}


class ComputationError(Exception):
    def __init__(self, message: str, detail=None):
        super().__init__(message)
        self.detail = detail


# -- parser ---------------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="chisini", description="Branch curves, monodromy and uniqueness verdicts for finite covers.")
    p.add_argument("--plain", action="store_true", help="human-readable output")
    p.add_argument("--jobs", type=int, default=1, help="worker processes for enumeration")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    germ = sub.add_parser("germ", help="plane curve germ invariants")
    gsub = germ.add_subparsers(dest="germ_command", parser_class=_Parser)
    gi = gsub.add_parser("invariants", help="invariants of the germ at the origin")
    gi.add_argument("--poly", required=True)
    gi.add_argument("--vars", default="z,v", type=lambda s: tuple(x.strip() for x in s.split(",")))
    gi.set_defaults(handler=_germ_invariants, name="germ invariants")

    lm = sub.add_parser("localmodel", help="branch germ of w^n - n*w*z^m")
    lm.add_argument("--n", type=int, required=True)
    lm.add_argument("--m", type=int, default=1)
    lm.set_defaults(handler=_localmodel, name="localmodel")

    for name, handler in (("enumerate", _enumerate), ("classes", _classes)):
        e = sub.add_parser(name, help="homomorphisms into S_n" if name == "enumerate" else "equivalence classes")
        e.add_argument("--presentation", required=True, help="JSON file or data-pack name")
        e.add_argument("--degree", type=int, required=True)
        e.add_argument("--type", type=_int_list, default=[2], help="cycle type, e.g. 2 or 2,2")
        e.add_argument("--max-degree", type=int, default=None, help="override the degree cap")
        e.add_argument("--jobs", type=int, default=argparse.SUPPRESS)
        if name == "enumerate":
            e.add_argument("--local-gens", type=_int_list, default=None)
            e.add_argument("--reference-multiplicity", type=int, default=None)
            e.add_argument("--list", action="store_true", help="include every homomorphism")
        else:
            e.add_argument("--transitive-only", action="store_true")
        e.set_defaults(handler=handler, name=name)

    v = sub.add_parser("verdict", help="compare two passports")
    v.add_argument("--passport", action="append", required=True)
    v.set_defaults(handler=_verdict, name="verdict")

    b = sub.add_parser("bound", help="degree bound for generic covers")
    b.add_argument("--d", type=int, required=True)
    b.add_argument("--g", type=int, required=True)
    b.add_argument("--c", type=int, required=True)
    b.set_defaults(handler=_bound, name="bound")

    pl = sub.add_parser("pluecker", help="dual curve numerics")
    pl.add_argument("--n", type=int, required=True)
    pl.add_argument("--nv", type=int, required=True)
    pl.add_argument("--cv", type=int, required=True)
    pl.set_defaults(handler=_pluecker, name="pluecker")

    d = sub.add_parser("dual", help="dual of a parametrized curve")
    d.add_argument("--param", required=True, help='"x(t); y(t); z(t)"')
    d.set_defaults(handler=_dual, name="dual")

    vd = sub.add_parser("validate-data", help="check the presentation data pack")
    vd.set_defaults(handler=_validate_data, name="validate-data")
    return p


# -- plain rendering ----------------------------------------------------------------------

def _plain(doc: dict) -> str:
    lines = [f"{doc['command']}: {doc['status']}"]

    def walk(x, indent):
        pad = "  " * indent
        if isinstance(x, dict):
            for k in sorted(x):
                v = x[k]
                if isinstance(v, (dict, list)) and v:
                    lines.append(f"{pad}{k}:")
                    walk(v, indent + 1)
                else:
                    lines.append(f"{pad}{k}: {json.dumps(_jsonable(v))}")
        elif isinstance(x, list):
            for v in x:
                if isinstance(v, (dict, list)):
                    lines.append(f"{pad}-")
                    walk(v, indent + 1)
                else:
                    lines.append(f"{pad}- {v}")

    walk(doc.get("payload", doc.get("error")), 1)
    return "\n".join(lines)


def run(argv=None) -> tuple[dict, int]:
    """Execute a command; returns the output document and the exit code."""
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    base = {"toolVersion": __version__, "command": None, "inputEcho": {"argv": argv}}
    try:
        args = parser.parse_args(argv)
        if getattr(args, "handler", None) is None:
            usage = parser.format_usage()
            if args.command == "germ":
                usage = "usage: chisini germ invariants --poly POLY [--vars z,v]\n"
            raise UsageError("missing or unknown subcommand", usage)
        if args.jobs < 1:
            raise UsageError("--jobs must be positive", parser.format_usage())
        base["command"] = args.name
        echo, payload = args.handler(args)
        return {**base, "status": "ok", "inputEcho": echo, "payload": payload}, 0
    except UsageError as e:
        sys.stderr.write(e.usage if e.usage.endswith("\n") else e.usage + "\n")
        sys.stderr.write(f"error: {e}\n")
        return {**base, "status": "error", "error": {"kind": "usage", "message": str(e)}}, 2
    except ComputationError as e:
        err = {"kind": "computation", "message": str(e)}
        if e.detail is not None:
            err["detail"] = e.detail
        return {**base, "status": "error", "error": err}, 1
    except (ValueError, ArithmeticError, OSError, RuntimeError) as e:
        err = {"kind": type(e).__name__, "message": str(e)}
        path = getattr(e, "path", None)
        if path is not None:
            err["path"] = path
        return {**base, "status": "error", "error": err}, 1


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    doc, code = run(argv)
    plain = "--plain" in argv
    sys.stdout.write((_plain(doc) if plain else _dump(doc)) + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
