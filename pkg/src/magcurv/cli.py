"""Command-line front end.

Exit codes: 0 = success / all checks pass, 1 = at least one verified
inequality fails (verification commands only), 2 = input or precondition
error, 3 = enumeration budget exceeded. All floating-point output is printed
with 12 significant digits; JSON output is deterministic for identical inputs
and seeds.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from .bounds import harnack_check, verify_report
from .combinatorics import (DEFAULT_BUDGET, cheeger_number, frustration_index,
                            magnetic_girth)
from .curvature import kappa_max
from .errors import MagcurvError, SizeError
from .graphs import load_graph, random_magnetic_graph
from .lift import build_lift
from .operators import spectrum

__all__ = ["main", "dispatch"]


def _fmt(x: float) -> str:
    if isinstance(x, float) and math.isinf(x):
        return "inf" if x > 0 else "-inf"
    return format(x, ".12g")


def _sanitize(obj):
    """Round floats to 12 significant digits; encode non-finite values as strings."""
    if isinstance(obj, dict):
        return {k: _sanitize(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_sanitize(v) for v in obj]
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        x = float(obj)
        if math.isnan(x):
            return "nan"
        if math.isinf(x):
            return "inf" if x > 0 else "-inf"
        return float(format(x, ".12g"))
    return obj


def _emit_json(payload: dict):
    print(json.dumps(_sanitize(payload), indent=2))


def _read_graph(path: str):
    text = sys.stdin.read() if path == "-" else open(path, "r", encoding="utf-8").read()
    return load_graph(text)


def _parse_n(value: str) -> float:
    if value.lower() in ("inf", "infinity"):
        return math.inf
    return float(value)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="magcurv",
        description="Spectral and curvature toolkit for magnetic graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, with_input=True):
        if with_input:
            p.add_argument("input", help="graph document path, or - for stdin")
        p.add_argument("--json", action="store_true", help="emit JSON")
        p.add_argument("--seed", type=int, default=0,
                       help="seed for heuristic randomness")
        p.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                       help="enumeration/search budget")

    p = sub.add_parser("spectrum", help="eigenvalues/eigenvectors of -Laplacian")
    add_common(p)

    p = sub.add_parser("curvature", help="optimal curvature kappa_max(n)")
    add_common(p)
    p.add_argument("--n", type=_parse_n, default=2.0, help="dimension parameter (or inf)")

    p = sub.add_parser("girth", help="magnetic girth")
    add_common(p)

    p = sub.add_parser("lift", help="covering graph in document format (ell = 1)")
    add_common(p)
    p.add_argument("--out", default=None, help="output path (default: stdout)")

    p = sub.add_parser("frustration", help="frustration index of a vertex subset")
    add_common(p)
    p.add_argument("--subset", required=True,
                   help="comma-separated vertex list, e.g. 0,1,2")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--exact", action="store_true", default=True)
    mode.add_argument("--local-search", dest="local_search", action="store_true")

    p = sub.add_parser("cheeger", help="magnetic Cheeger number")
    add_common(p)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--exact", action="store_true", default=True)
    mode.add_argument("--heuristic", action="store_true")

    p = sub.add_parser("harnack", help="Harnack inequality per eigenpair")
    add_common(p)
    p.add_argument("--n", type=_parse_n, default=2.0)
    p.add_argument("--kappa", type=float, default=None,
                   help="curvature lower bound (default: certified kappa_max)")

    p = sub.add_parser("verify", help="verify every applicable inequality")
    add_common(p)
    p.add_argument("--n", type=_parse_n, default=2.0)
    p.add_argument("--kappa", type=float, default=None)

    p = sub.add_parser("generate", help="random connected magnetic graph document")
    add_common(p, with_input=False)
    p.add_argument("--vertices", type=int, required=True)
    p.add_argument("--edge-prob", type=float, required=True)
    p.add_argument("--ell", type=int, required=True)

    return parser


def _cmd_spectrum(args) -> int:
    g = _read_graph(args.input)
    spec = spectrum(g, "magnetic")
    if args.json:
        _emit_json(spec.to_json_dict())
    else:
        print("eigenvalues of -Laplacian (ascending):")
        for lam in spec.eigenvalues:
            print(f"  {_fmt(float(lam))}")
    return 0


def _cmd_curvature(args) -> int:
    g = _read_graph(args.input)
    result = kappa_max(g, args.n, "magnetic")
    if args.json:
        _emit_json(result.to_json_dict())
    else:
        print(f"kappa_max(n={_fmt(args.n)}) = {_fmt(result.kappa_max)} "
              f"(witness vertex {result.witness_vertex})")
        print("per-vertex: " + " ".join(_fmt(float(v)) for v in result.per_vertex))
    return 0


def _cmd_girth(args) -> int:
    g = _read_graph(args.input)
    girth = magnetic_girth(g, budget=args.budget)
    if args.json:
        _emit_json({"girth": girth})
    else:
        print(f"magnetic girth: {girth if girth != math.inf else 'inf'}")
    return 0


def _cmd_lift(args) -> int:
    g = _read_graph(args.input)
    doc = build_lift(g).graph.to_document()
    text = json.dumps(_sanitize(doc), indent=2 if args.json else None)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0


def _cmd_frustration(args) -> int:
    g = _read_graph(args.input)
    try:
        subset = [int(tok) for tok in args.subset.split(",") if tok != ""]
    except ValueError:
        raise MagcurvError(f"could not parse subset {args.subset!r}")
    mode = "local-search" if args.local_search else "exact"
    result = frustration_index(g, subset, mode=mode, budget=args.budget,
                               seed=args.seed)
    if args.json:
        _emit_json(result.to_json_dict())
    else:
        bound = " (upper bound)" if mode == "local-search" else ""
        print(f"frustration index{bound}: {_fmt(result.value)}")
        print("tau exponents: " + " ".join(str(t) for t in result.tau))
    return 0


def _cmd_cheeger(args) -> int:
    g = _read_graph(args.input)
    mode = "heuristic" if args.heuristic else "exact"
    result = cheeger_number(g, mode=mode, budget=args.budget, seed=args.seed)
    if args.json:
        _emit_json(result.to_json_dict())
    else:
        bound = " (upper bound)" if mode == "heuristic" else ""
        print(f"h1{bound} = {_fmt(result.h1)}")
        print(f"subset: {list(result.subset)}  frustration: {_fmt(result.frustration)}")
    return 0


def _cmd_harnack(args) -> int:
    g = _read_graph(args.input)
    kappa = args.kappa if args.kappa is not None else "auto"
    records = harnack_check(g, args.n, kappa, "magnetic")
    if args.json:
        _emit_json({"n": args.n, "records": [r.to_json_dict() for r in records]})
    else:
        for r in records:
            status = "pass" if r.passed else "FAIL"
            print(f"lambda={_fmt(r.lam)}  lhs={_fmt(r.lhs)}  rhs={_fmt(r.rhs)}  {status}")
    return 0 if all(r.passed for r in records) else 1


def _cmd_verify(args) -> int:
    g = _read_graph(args.input)
    kappa = args.kappa if args.kappa is not None else "auto"
    report = verify_report(g, n=args.n, kappa=kappa, budget=args.budget)
    if args.json:
        _emit_json(report.to_json_dict())
    else:
        print(report.to_markdown())
    return 0 if report.all_passed else 1


def _cmd_generate(args) -> int:
    g = random_magnetic_graph(args.vertices, args.edge_prob, args.ell,
                              seed=args.seed)
    print(json.dumps(_sanitize(g.to_document())))
    return 0


_COMMANDS = {
    "spectrum": _cmd_spectrum,
    "curvature": _cmd_curvature,
    "girth": _cmd_girth,
    "lift": _cmd_lift,
    "frustration": _cmd_frustration,
    "cheeger": _cmd_cheeger,
    "harnack": _cmd_harnack,
    "verify": _cmd_verify,
    "generate": _cmd_generate,
}


def dispatch(argv: list[str]) -> int:
    args = _build_parser().parse_args(argv)
    return _COMMANDS[args.command](args)


def main(argv: list[str] | None = None) -> int:
    try:
        return dispatch(sys.argv[1:] if argv is None else argv)
    except SizeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except MagcurvError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
