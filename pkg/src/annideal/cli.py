"""Command-line interface.

Exit codes: 0 success, 1 check failure or backend discrepancy, 2 input
error, 3 resource cap exceeded. Every error prints one line to stderr
prefixed ``annideal: error[<kind>]:``.
"""

from __future__ import annotations

import argparse
import sys

from annideal import kernels
from annideal.checks import CATALOG, RingContext, resolve_checks, run_check_ctx
from annideal.corpus import CorpusSpec, ExplicitList, ProductFamily, ZnRange, crosscheck_zn, run_corpus
from annideal.graphs import build_ag_graph, build_zero_divisor_graph, export_graph, graph_invariants
from annideal.ideals import DEFAULT_IDEAL_CAP, enumerate_ideals
from annideal.report import render, report_verbose
from annideal.ring import DEFAULT_ORDER_CAP, CapExceeded, ZnRing, build_ring
from annideal.ringspec import RingSpecError

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3


class InputError(Exception):
    pass


def _caps(p):
    p.add_argument("--order-cap", type=int, default=DEFAULT_ORDER_CAP,
                   help="largest ring order materialised as tables (default %(default)s)")
    p.add_argument("--ideal-cap", type=int, default=DEFAULT_IDEAL_CAP,
                   help="largest number of ideals enumerated (default %(default)s)")
    p.add_argument("--out", help="output file (default: standard output)")


def build_parser():
    parser = argparse.ArgumentParser(prog="annideal", description=__doc__.split("\n")[0])
    parser.add_argument("--kernels", choices=["auto", "python", "cython"], default="auto",
                        help="kernel implementation (default: compiled when available)")
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("graph", help="write AG(R) (or Gamma(R)) as JSON or DOT")
    g.add_argument("spec")
    g.add_argument("--gamma", action="store_true", help="zero-divisor graph instead of AG(R)")
    g.add_argument("--format", choices=["json", "dot"], default="json")
    g.add_argument("--backend", choices=["auto", "table", "divisor"], default="auto")
    _caps(g)

    i = sub.add_parser("invariants", help="write graph invariants")
    i.add_argument("spec")
    i.add_argument("--gamma", action="store_true")
    i.add_argument("--format", choices=["json", "text"], default="json")
    i.add_argument("--backend", choices=["auto", "table", "divisor"], default="auto")
    _caps(i)

    v = sub.add_parser("verify", help="run theorem checks on one ring")
    v.add_argument("spec")
    v.add_argument("--checks", default="all", help="comma-separated check ids, or 'all'")
    v.add_argument("--format", choices=["text", "json"], default="text")
    v.add_argument("--backend", choices=["auto", "table", "divisor"], default="auto")
    _caps(v)

    a = sub.add_parser("atlas", help="run checks over a ring family and write an atlas")
    a.add_argument("--min", type=int, help="smallest n of a Z_n range")
    a.add_argument("--max", type=int, help="largest n of a Z_n range")
    a.add_argument("--products", type=int, metavar="ORDER",
                   help="products of prime-power rings up to this order")
    a.add_argument("--corpus", help="file of newline-delimited ring specs")
    a.add_argument("--checks", default="all")
    a.add_argument("--format", choices=["csv", "json", "text"], default="csv")
    a.add_argument("--backend", choices=["auto", "table", "divisor"], default="auto")
    a.add_argument("--jobs", type=int, default=1, help="worker processes")
    _caps(a)

    c = sub.add_parser("crosscheck", help="compare divisor and table backends on Z_n")
    c.add_argument("--max", type=int, default=64)
    c.add_argument("--format", choices=["text", "json"], default="text")
    c.add_argument("--out")

    sub.add_parser("checks", help="list the check catalog")
    return parser


def _ring(args):
    backend = "table" if args.backend == "table" else "auto"
    ring = build_ring(args.spec, order_cap=args.order_cap, backend=backend)
    if args.backend == "divisor" and not isinstance(ring, ZnRing):
        raise InputError(f"--backend divisor needs a Zn spec, got {args.spec!r}")
    return ring


def _graph(args):
    ring = _ring(args)
    if args.gamma:
        return build_zero_divisor_graph(ring), str(ring.spec)
    lattice = enumerate_ideals(ring, ideal_cap=args.ideal_cap)
    return build_ag_graph(lattice), str(ring.spec)


def _write(args, data):
    if isinstance(data, str):
        data = data.encode()
    if getattr(args, "out", None):
        with open(args.out, "wb") as fh:
            fh.write(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()


def _checks(text):
    names = [s.strip() for s in text.split(",") if s.strip()]
    try:
        return resolve_checks(names if names != ["all"] else "all")
    except KeyError as exc:
        raise InputError(exc.args[0]) from None


def cmd_graph(args):
    graph, spec = _graph(args)
    _write(args, export_graph(graph, args.format, spec=spec))
    return EXIT_OK


def cmd_invariants(args):
    graph, _ = _graph(args)
    _write(args, render(graph_invariants(graph), args.format))
    return EXIT_OK


def cmd_verify(args):
    check_ids = _checks(args.checks)
    ring = _ring(args)
    ctx = RingContext(ring, spec=str(ring.spec), ideal_cap=args.ideal_cap)
    results = [run_check_ctx(ctx, c) for c in check_ids]
    if args.format == "text":
        _write(args, report_verbose(results) + render(results, "text"))
    else:
        _write(args, render(results, "json"))
    return EXIT_FAIL if any(r.verdict == "fail" for r in results) else EXIT_OK


def _corpus(args):
    chosen = [name for name, on in (("--min/--max", args.min is not None or args.max is not None),
                                    ("--products", args.products is not None),
                                    ("--corpus", args.corpus is not None)) if on]
    if len(chosen) != 1:
        raise InputError("atlas needs exactly one of --min/--max, --products, --corpus"
                         + (f" (got {', '.join(chosen)})" if chosen else ""))
    if args.min is not None or args.max is not None:
        lo = args.min if args.min is not None else 2
        if args.max is None:
            raise InputError("--min needs --max")
        backend = "table" if args.backend == "table" else "divisor"
        fam = ZnRange(lo, args.max, backend=backend)
    elif args.products is not None:
        fam = ProductFamily(args.products)
    else:
        try:
            with open(args.corpus) as fh:
                specs = [ln.strip() for ln in fh if ln.strip() and not ln.lstrip().startswith("#")]
        except OSError as exc:
            raise InputError(f"cannot read corpus file: {exc}") from None
        fam = ExplicitList(tuple(specs), backend="table" if args.backend == "table" else "auto")
    return CorpusSpec((fam,), order_cap=args.order_cap, ideal_cap=args.ideal_cap)


def cmd_atlas(args):
    check_ids = _checks(args.checks)
    try:
        corpus = _corpus(args)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    report = run_corpus(corpus, check_ids, workers=args.jobs)
    _write(args, render(report, args.format))
    for r in report.failures:
        print(f"annideal: check failed: {r.ring} {r.check}: {r.witness}", file=sys.stderr)
    return EXIT_OK if report.success else EXIT_FAIL


def cmd_crosscheck(args):
    if args.max < 2:
        raise InputError("--max must be at least 2")
    rep = crosscheck_zn(args.max)
    _write(args, render(rep, args.format))
    return EXIT_OK if rep.success else EXIT_FAIL


def cmd_checks(args):
    _write(args, "".join(f"{c.id}: {c.statement}\n" for c in CATALOG.values()))
    return EXIT_OK


COMMANDS = {
    "graph": cmd_graph,
    "invariants": cmd_invariants,
    "verify": cmd_verify,
    "atlas": cmd_atlas,
    "crosscheck": cmd_crosscheck,
    "checks": cmd_checks,
}


def _fail(kind, msg, code):
    print(f"annideal: error[{kind}]: {msg}", file=sys.stderr)
    return code


def cli_dispatch(args):
    if args.kernels != "auto":
        try:
            kernels.active = kernels.get(args.kernels)
        except RuntimeError as exc:
            return _fail("input", str(exc), EXIT_INPUT)
    try:
        return COMMANDS[args.command](args)
    except RingSpecError as exc:
        return _fail("input", f"bad ring spec {exc.text!r}: {exc}", EXIT_INPUT)
    except InputError as exc:
        return _fail("input", str(exc), EXIT_INPUT)
    except CapExceeded as exc:
        return _fail("cap", str(exc), EXIT_CAP)
    except OSError as exc:
        return _fail("io", str(exc), EXIT_INPUT)
    except ValueError as exc:
        return _fail("input", str(exc), EXIT_INPUT)


def main(argv=None):
    args = build_parser().parse_args(argv)
    return cli_dispatch(args)


if __name__ == "__main__":
    sys.exit(main())
