"""Command-line entry point: ``quipu <subcommand> ...``."""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence, TextIO

from .charpoly import char_poly
from .ds import build_catalog, mate_search
from .families import DSLError, FamilyError, FamilySpec, build_family, parse
from .graph import Graph, GraphError, from_graph6, to_graph6
from .intpoly import divide_exact
from .spectral import kth_eigenvalue, spectral_radius
from .suites import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def parse_spec(text: str) -> FamilySpec | Graph:
    """DSL first, then graph6; the DSL diagnostic wins when both fail."""
    text = text.strip()
    try:
        return parse(text)
    except DSLError as dsl_err:
        try:
            return from_graph6(text)
        except (GraphError, ValueError):
            raise dsl_err from None


def _graph_arg(text: str, stdin: TextIO) -> Graph:
    if text == "-":
        text = stdin.readline()
    value = parse_spec(text)
    return value if isinstance(value, Graph) else build_family(value)


def _width(text: str) -> Fraction:
    w = Fraction(text)
    if w <= 0:
        raise argparse.ArgumentTypeError(f"width must be positive, got {text}")
    return w


def _interval(d: dict) -> str:
    if "exact" in d:
        return f"{d['exact']} (exact)"
    return f"({d['lower']}, {d['upper']}]  ~ {d['approx']:.10f}"


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="quipu", description="Exact spectral tools for trees, quipus and H-shape graphs.")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--threads", type=int, default=1, help="worker cap for parallel suites")
    sub = p.add_subparsers(dest="cmd", required=True, metavar="SUBCOMMAND")

    c = sub.add_parser("charpoly", help="characteristic polynomial as a JSON coefficient array, low degree first")
    c.add_argument("graph", help="DSL spec, graph6, or - for graph6 on stdin")
    c.add_argument("--engine", choices=["schwenk", "berkowitz"], default="schwenk")

    d = sub.add_parser("divides", help="does phi(A) divide phi(B)?")
    d.add_argument("a")
    d.add_argument("b")

    r = sub.add_parser("radius", help="certified interval for the spectral radius")
    r.add_argument("graph")
    r.add_argument("--width", type=_width, default=Fraction(1, 10**9))

    e = sub.add_parser("eig", help="certified interval for the k-th largest eigenvalue")
    e.add_argument("graph")
    e.add_argument("k", type=int)
    e.add_argument("--width", type=_width, default=Fraction(1, 10**9))

    m = sub.add_parser("mates", help="search for cospectral mates of H_n (10 <= n <= 20)")
    m.add_argument("n", type=int)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", choices=sorted(SUITES) + ["all"])
    v.add_argument("--m-max", type=int)
    v.add_argument("--n-max", type=int)
    v.add_argument("--k-max", type=int)
    v.add_argument("--h-max", type=int)

    k = sub.add_parser("catalog", help="dump the component catalog")
    k.add_argument("max_order", type=int)
    k.add_argument("bound", type=Fraction, help="rational radius bound, e.g. 2 or 53/25")
    return p


def _cmd_charpoly(args, out, stdin) -> int:
    g = _graph_arg(args.graph, stdin)
    poly = char_poly(g, engine=args.engine)
    if args.json:
        out.write(json.dumps({"coeffs": [str(c) for c in poly.coeffs] or ["0"], "degree": poly.degree}) + "\n")
    else:
        out.write(poly.to_json() + "\n")
    return EXIT_OK


def _cmd_divides(args, out, stdin) -> int:
    a = char_poly(_graph_arg(args.a, stdin))
    b = char_poly(_graph_arg(args.b, stdin))
    q = divide_exact(b, a)
    ok = q is not None
    if args.json:
        out.write(json.dumps({"divides": ok, "quotient": json.loads(q.to_json()) if ok else None}) + "\n")
    else:
        out.write((str(q) if ok else "NOT DIVISIBLE") + "\n")
    return EXIT_OK


def _cmd_radius(args, out, stdin) -> int:
    g = _graph_arg(args.graph, stdin)
    if g.n == 0:
        raise UsageError("the null graph has no eigenvalues")
    d = spectral_radius(g).refined(args.width).to_json()
    out.write((json.dumps(d) if args.json else _interval(d)) + "\n")
    return EXIT_OK


def _cmd_eig(args, out, stdin) -> int:
    g = _graph_arg(args.graph, stdin)
    if not 1 <= args.k <= g.n:
        raise UsageError(f"k must be in 1..{g.n}, got {args.k}")
    d = kth_eigenvalue(g, args.k, args.width).to_json()
    if args.json:
        out.write(json.dumps(d) + "\n")
    else:
        out.write(f"lambda_{args.k} = {_interval(d)}  multiplicity {d['multiplicity']}\n")
    return EXIT_OK


def _cmd_mates(args, out, stdin) -> int:
    if not 10 <= args.n <= 20:
        raise UsageError(f"mate search runs for 10 <= n <= 20, got {args.n}")
    rep = mate_search(args.n)
    if args.json:
        out.write(json.dumps(rep.to_json()) + "\n")
    elif rep.is_ds:
        out.write("no cospectral mates\n")
    else:
        for label in rep.mate_labels():
            out.write(label + "\n")
    return EXIT_OK


def _cmd_verify(args, out, stdin) -> int:
    params = {
        k: v
        for k, v in (("m_max", args.m_max), ("n_max", args.n_max), ("k_max", args.k_max), ("h_max", args.h_max))
        if v is not None
    }
    if args.suite == "all" and params:
        raise UsageError("suite parameters need a single named suite")
    try:
        results = run_suite(args.suite, threads=max(1, args.threads), **params)
    except TypeError as exc:
        raise UsageError(f"suite {args.suite} does not take those options ({exc})") from None
    if args.json:
        out.write(json.dumps([r.to_json() for r in results]) + "\n")
    else:
        for r in results:
            status = "PASS" if r.ok else "FAIL"
            out.write(f"{status} {r.name}: {r.checked} checked, {len(r.failures)} failed\n")
            for f in r.failures[:10]:
                out.write(f"    {f}\n")
    return EXIT_OK if all(r.ok for r in results) else EXIT_FAIL


def _cmd_catalog(args, out, stdin) -> int:
    if not 1 <= args.max_order <= 40:
        raise UsageError(f"max_order must be in 1..40, got {args.max_order}")
    cat = build_catalog(args.max_order, args.bound)
    if args.json:
        out.write(json.dumps([e.to_json() for e in cat.entries]) + "\n")
    else:
        for e in cat.entries:
            out.write(f"{e.nu}\t{e.eps}\t{e.label()}\t{to_graph6(e.graph)}\n")
    return EXIT_OK


COMMANDS = {
    "charpoly": _cmd_charpoly,
    "divides": _cmd_divides,
    "radius": _cmd_radius,
    "eig": _cmd_eig,
    "mates": _cmd_mates,
    "verify": _cmd_verify,
    "catalog": _cmd_catalog,
}


def run_command(argv: Sequence[str], out: TextIO | None = None, err: TextIO | None = None,
                stdin: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    stdin = stdin or sys.stdin
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as exc:
        # argparse already printed usage; --help exits 0
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return COMMANDS[args.cmd](args, out, stdin)
    except DSLError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE
    except (UsageError, FamilyError, GraphError, ValueError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE


def main(argv: Sequence[str] | None = None) -> int:
    return run_command(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
