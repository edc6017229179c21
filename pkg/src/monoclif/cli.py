"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 input parse error,
3 precondition violation.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import serialize
from .bargmann import WeightError, segal_bargmann, segal_bargmann_moments
from .fischer import InhomogeneousError, fischer_decompose
from .hermite import clifford_hermite
from .kernels import ROUTES, RouteError, ZonalTable, build_zonal_table
from .verify import SUITES, Settings, run_suite

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_PRECONDITION = 0, 1, 2, 3
TABLE_ENV = "MONOCLIF_TABLE_DIR"


class CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _read_json(path: str | None):
    try:
        text = sys.stdin.read() if path in (None, "-") else Path(path).read_text()
    except OSError as exc:
        raise CliError(EXIT_PARSE, f"cannot read input: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise CliError(EXIT_PARSE, f"malformed JSON: {exc}") from exc


def _emit(obj, out: str | None = None):
    text = serialize.dumps(obj)
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_fischer(args) -> int:
    try:
        R = serialize.cliffpoly_from_json(_read_json(args.input))
    except serialize.ParseError as exc:
        raise CliError(EXIT_PARSE, str(exc)) from exc
    try:
        parts = fischer_decompose(R)
    except InhomogeneousError as exc:
        raise CliError(EXIT_PRECONDITION, str(exc)) from exc
    _emit(serialize.fischer_parts_to_json(parts), args.output)
    return EXIT_OK


def cmd_bargmann(args) -> int:
    try:
        f = serialize.section_from_json(_read_json(args.input))
    except (serialize.ParseError, ValueError) as exc:
        raise CliError(EXIT_PARSE, str(exc)) from exc
    transform = segal_bargmann_moments if args.route == "moments" else segal_bargmann
    try:
        out = transform(f)
    except WeightError as exc:
        raise CliError(EXIT_PRECONDITION, str(exc)) from exc
    _emit(serialize.cliffpoly_to_json(out), args.output)
    return EXIT_OK


def _table_path(m: int, K: int, route: str) -> Path | None:
    root = os.environ.get(TABLE_ENV)
    if not root:
        return None
    return Path(root) / f"zonal_m{m}_K{K}_{route}.json"


def load_or_build_table(m: int, K: int, route: str) -> ZonalTable:
    """Zonal table, read from / written to $MONOCLIF_TABLE_DIR when set."""
    path = _table_path(m, K, route)
    if path is not None and path.exists():
        table = serialize.zonal_table_from_json(json.loads(path.read_text()))
        if (table.m, table.K, table.route) == (m, K, route):
            return table
    table = build_zonal_table(m, K, route)
    if path is not None:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(serialize.dumps(serialize.zonal_table_to_json(table)))
    return table


def cmd_zonal(args) -> int:
    if args.k < 0 or not 0 <= args.s <= args.k:
        raise CliError(EXIT_PRECONDITION, "need 0 <= s <= k")
    if not 1 <= args.m <= 8:
        raise CliError(EXIT_PRECONDITION, "m must lie in [1, 8]")
    if args.load:
        try:
            table = serialize.zonal_table_from_json(_read_json(args.load))
        except serialize.ParseError as exc:
            raise CliError(EXIT_PARSE, str(exc)) from exc
        if table.K < args.k or table.m != args.m:
            raise CliError(EXIT_PRECONDITION, "loaded table does not cover the requested entry")
    else:
        try:
            table = load_or_build_table(args.m, args.k, args.method)
        except RouteError as exc:
            raise CliError(EXIT_PRECONDITION, str(exc)) from exc

    if args.check:
        routes = [r for r in ROUTES if not (r == "gegenbauer" and args.m < 3)]
        tables = {r: load_or_build_table(args.m, args.k, r) for r in routes}
        ref = tables["fischer"]
        cases = []
        for (k, s), val in sorted(ref.entries.items()):
            for r in routes[1:]:
                cases.append({"name": f"fischer vs {r}", "parameters": {"k": k, "s": s, "m": args.m},
                              "equal": tables[r][(k, s)] == val})
        ok = all(c["equal"] for c in cases)
        _emit({"cases": cases, "ok": ok}, args.output)
        return EXIT_OK if ok else EXIT_FAIL

    if args.save:
        Path(args.save).write_text(serialize.dumps(serialize.zonal_table_to_json(table)))
    if args.table:
        _emit(serialize.zonal_table_to_json(table), args.output)
    else:
        _emit(serialize.bipoly_to_json(table[(args.k, args.s)]), args.output)
    return EXIT_OK


def cmd_hermite(args) -> int:
    if args.s < 0 or args.k < 0 or not 1 <= args.m <= 8:
        raise CliError(EXIT_PRECONDITION, "need s, k >= 0 and 1 <= m <= 8")
    _emit(serialize.hermite_to_json(clifford_hermite(args.s, args.k, args.m)), args.output)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.m is not None and not 2 <= args.m <= 8:
        raise CliError(EXIT_PRECONDITION, "verify needs 2 <= m <= 8")
    if args.max_degree is not None and args.max_degree < 0:
        raise CliError(EXIT_PRECONDITION, "--max-degree must be nonnegative")
    cfg = Settings(
        seed=args.seed,
        dims=None if args.m is None else (args.m,),
        max_degree=args.max_degree,
    )
    report = run_suite(args.suite, cfg, jobs=args.jobs, full=args.full)
    _emit(report, args.output)
    return EXIT_OK if report["ok"] else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="monoclif", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    f = sub.add_parser("fischer", help="Fischer decomposition of a homogeneous CliffPoly")
    f.add_argument("input", nargs="?", help="CliffPoly JSON file (default: stdin)")
    f.add_argument("-o", "--output")
    f.set_defaults(func=cmd_fischer)

    b = sub.add_parser("bargmann", help="Segal-Bargmann transform of a GaussianSection (c = 1/4)")
    b.add_argument("input", nargs="?", help="GaussianSection JSON file (default: stdin)")
    b.add_argument("--route", choices=("heat", "moments"), default="heat")
    b.add_argument("-o", "--output")
    b.set_defaults(func=cmd_bargmann)

    z = sub.add_parser("zonal", help="zonal spherical monogenics Z_{k,s}")
    z.add_argument("--k", type=int, required=True)
    z.add_argument("--s", type=int, default=0)
    z.add_argument("--m", type=int, required=True)
    z.add_argument("--method", choices=ROUTES, default="fischer")
    z.add_argument("--table", action="store_true", help="emit the whole table up to degree k")
    z.add_argument("--check", action="store_true", help="compare all routes; exit 1 on mismatch")
    z.add_argument("--save", help="write the table JSON to this file")
    z.add_argument("--load", help="read a previously saved table instead of computing")
    z.add_argument("-o", "--output")
    z.set_defaults(func=cmd_zonal)

    h = sub.add_parser("hermite", help="Clifford-Hermite coefficients H_{s,k}")
    h.add_argument("--s", type=int, required=True)
    h.add_argument("--k", type=int, required=True)
    h.add_argument("--m", type=int, required=True)
    h.add_argument("-o", "--output")
    h.set_defaults(func=cmd_hermite)

    v = sub.add_parser("verify", help="run identity suites and print a JSON report")
    v.add_argument("--suite", choices=SUITES + ("all",), default="all")
    v.add_argument("--m", type=int, default=None, help="restrict every check to this dimension")
    v.add_argument("--max-degree", type=int, default=None)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--full", action="store_true", help="include lhs/rhs of passing cases")
    v.add_argument("-o", "--output")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"monoclif: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
