"""Command-line front end.

Exit codes: 0 success / inequality holds, 1 violation or predicate match,
2 usage, parse or precondition error.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from .graphs import Digraph, Graph, GraphFormatError, parse_graph
from .indices import verify_walk_identities, zagreb
from .inequalities import (
    PreconditionError,
    digraph_walk_inequality,
    eulerian_inequality,
    matrix_power_inequality,
    sum_symmetric_inequality,
    zagreb_inequality,
)
from .matrices import MatrixFormatError, format_rational, parse_matrix
from .search import VIOLATION_PREDICATES, SearchSpec, SearchSpecError, run_search
from .serialize import dumps
from .walks import walk_profile

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _vec(xs) -> str:
    return "(" + ", ".join(format_rational(x) for x in xs) + ")"


def _text_value(v) -> str:
    if isinstance(v, Fraction):
        return format_rational(v)
    if isinstance(v, (list, tuple)) and v and not isinstance(v[0], (list, tuple)):
        return _vec(v)
    return str(v)


def _emit_report(report, as_json: bool, out) -> None:
    if as_json:
        out.write(dumps(report))
        return
    for name, value in vars(report).items():
        if name == "detail":
            for key, v in value.items():
                out.write(f"  {key}: {_text_value(v)}\n")
        else:
            out.write(f"{name}: {_text_value(value)}\n")


def _read_graph(path: str):
    try:
        return parse_graph(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def cmd_walks(args, out) -> int:
    g = _read_graph(args.input)
    profile = walk_profile(g, args.length)
    if args.json:
        payload = {"k": profile.k, "total": profile.total}
        if args.per_vertex:
            payload.update(starting=profile.starting, ending=profile.ending)
        out.write(dumps(payload))
        return EXIT_OK
    out.write(f"w_{profile.k} = {profile.total}\n")
    if args.per_vertex:
        out.write(f"s_{profile.k} = {_vec(profile.starting)}\n")
        out.write(f"e_{profile.k} = {_vec(profile.ending)}\n")
    return EXIT_OK


def cmd_indices(args, out) -> int:
    g = _read_graph(args.input)
    if not isinstance(g, Graph):
        raise UsageError("indices requires an undirected graph")
    z = zagreb(g)
    ident = verify_walk_identities(g)
    if args.json:
        out.write(dumps({"zagreb": z, "walk_identities": ident}))
    else:
        out.write(f"n = {z.n}\nm = {z.m}\nM1 = {z.m1}\nM2 = {z.m2}\n")
        for name, value in vars(ident).items():
            out.write(f"{name}: {value}\n")
    return EXIT_OK if ident.all_hold else EXIT_VIOLATION


def cmd_check(args, out) -> int:
    which = args.which
    if which != "walk-ineq" and (args.k is not None or args.l is not None):
        raise UsageError("--k/--l only apply to 'check walk-ineq'")
    if which == "sum-symmetric":
        try:
            a = parse_matrix(Path(args.input).read_text(encoding="utf-8"))
        except OSError as exc:
            raise UsageError(f"cannot read {args.input}: {exc.strerror}") from None
        report = sum_symmetric_inequality(a)
    else:
        g = _read_graph(args.input)
        if which == "zagreb":
            if not isinstance(g, Graph):
                raise UsageError("zagreb check requires an undirected graph")
            report = zagreb_inequality(g)
        elif which == "eulerian":
            if not isinstance(g, Digraph):
                raise UsageError("eulerian check requires a directed graph")
            report = eulerian_inequality(g)
        else:
            if args.k is None or args.l is None:
                raise UsageError("walk-ineq needs --k and --l")
            report = digraph_walk_inequality(g, args.k, args.l)
    _emit_report(report, args.json, out)
    return EXIT_OK if report.holds else EXIT_VIOLATION


def cmd_matrix(args, out) -> int:
    try:
        a = parse_matrix(Path(args.input).read_text(encoding="utf-8"))
    except OSError as exc:
        raise UsageError(f"cannot read {args.input}: {exc.strerror}") from None
    report = matrix_power_inequality(a, args.k, args.l)
    if not args.json:
        d = report.detail
        status = {"le": "similarly ordered", "ge": "conversely ordered",
                  "both": "similarly and conversely ordered", "none": "not ordered"}
        out.write(f"c^[{args.k}] = {_vec(d['col_sums_k'])}\n")
        out.write(f"r^[{args.l}] = {_vec(d['row_sums_l'])}\n")
        out.write(f"ordering: {status[report.applicable]}\n")
    _emit_report(report, args.json, out)
    return EXIT_OK if report.holds else EXIT_VIOLATION


def cmd_search(args, out) -> int:
    spec = SearchSpec(
        directed=args.directed,
        min_n=args.min_n,
        max_n=args.max_n,
        class_filter=args.class_filter.replace("-", "_"),
        predicate=args.predicate.replace("-", "_"),
        k=args.k,
        l=args.l,
        limit=args.limit,
        override_cap=args.override_cap,
    )
    result = run_search(spec, progress=lambda msg: print(msg, file=sys.stderr, flush=True))
    if args.json:
        out.write(dumps(result.to_json()))
    else:
        out.write(f"examined: {result.examined}\nmatched: {result.matched}\n")
        for n, tally in result.summary["by_n"].items():
            out.write(f"  n={n}: examined {tally['examined']}, matched {tally['matched']}\n")
        for name, tally in result.summary["classes"].items():
            out.write(f"  {name}: examined {tally['examined']}, matched {tally['matched']}\n")
        for name, count in result.summary.get("census", {}).items():
            out.write(f"  census {name}: {count}\n")
        for w in result.witnesses:
            out.write(f"--- witness n={w['n']} code={w['code']}\n{w['graph']}")
    found = result.matched > 0 and spec.predicate in VIOLATION_PREDICATES
    return EXIT_VIOLATION if found else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="zagreb-walks", description=__doc__.splitlines()[0])
    parser.add_argument("--json", action="store_true", help="emit stable JSON")
    # --json is accepted before or after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("walks", parents=[common], help="count k-step walks")
    p.add_argument("--input", required=True)
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--per-vertex", action="store_true")
    p.set_defaults(func=cmd_walks)

    p = sub.add_parser("indices", parents=[common], help="Zagreb indices and walk identities")
    p.add_argument("--input", required=True)
    p.set_defaults(func=cmd_indices)

    p = sub.add_parser("check", parents=[common], help="evaluate one inequality")
    p.add_argument("which", choices=["zagreb", "walk-ineq", "sum-symmetric", "eulerian"])
    p.add_argument("--input", required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--l", type=int)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("matrix", parents=[common], help="entry-sum inequality for matrix powers")
    p.add_argument("--input", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("search", parents=[common], help="exhaustive search over small structures")
    p.add_argument("--directed", action="store_true")
    p.add_argument("--class", dest="class_filter", default="all")
    p.add_argument("--min-n", type=int, default=1)
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--predicate", required=True,
                   help="zagreb-violation, zagreb-equality, walk-ineq-violation, ordering-census")
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--l", type=int, default=1)
    p.add_argument("--limit", type=int, default=10)
    p.add_argument("--override-cap", action="store_true")
    p.set_defaults(func=cmd_search)
    return parser


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        for name in ("length", "k", "l"):
            value = getattr(args, name, None)
            if value is not None and value < 0:
                parser.error(f"--{name} must be nonnegative")
    except SystemExit as exc:
        # argparse exits on --help (0) and on usage errors (2)
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args, out)
    except (UsageError, GraphFormatError, MatrixFormatError, PreconditionError,
            SearchSpecError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
