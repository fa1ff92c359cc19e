"""Command-line interface for the verification toolkit.

Exit codes: 0 when every requested check passes, 1 on a failed check or bad
mathematical input, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from importlib import resources

from .cache import cached, resolve_dir
from .opo import (
    SetId,
    enumerate_set,
    parse,
    set_cardinality,
    set_cardinality_vs_series,
)
from .maps import (
    _FORWARD,
    MapId,
    verify_conjecture,
    verify_map,
)
from .partitions import DomainError, NotInImageError, ParseError, hook_count_totals
from .series import (
    DEFAULT_DEGREE,
    TERM_NAMES,
    bt2_series,
    decomposition_term,
    verify_decomposition,
)


def _parse_range(text: str) -> tuple[int, int]:
    """Accept either a single integer or an inclusive range like 2..8."""
    if ".." in text:
        lo, hi = text.split("..", 1)
        return int(lo), int(hi)
    v = int(text)
    return v, v


def _load_expected_exceptions(path: str | None) -> tuple:
    if path is None:
        blob = resources.files("hookbias").joinpath("expected_exceptions.json").read_text()
    else:
        with open(path) as fh:
            blob = fh.read()
    return tuple(tuple(pair) for pair in json.loads(blob))


def _emit_report(report, fmt: str) -> int:
    if fmt == "json":
        print(report.to_json())
    else:
        print(f"{report.kind}: {report.status} ({report.checked} checks)")
        for exc in report.exceptions:
            print(f"  expected exception: {exc}")
        for cex in report.counterexamples[:20]:
            print(f"  counterexample: {cex}")
    return 0 if report.passed else 1


def _cmd_series(args) -> int:
    cache_dir = resolve_dir(args.cache_dir)
    key = {"kind": "series", "term": args.term, "t": args.t, "degree": args.degree}

    def compute():
        if args.term == "total":
            s = bt2_series(args.t, args.degree)
        else:
            s = decomposition_term(args.term, args.t, args.degree)
        return list(s.coeffs)

    coeffs = cached(cache_dir, key, compute)
    if args.format == "json":
        print(json.dumps({"term": args.term, "t": args.t, "coeffs": coeffs}))
    else:
        print("n,coeff")
        for n, c in enumerate(coeffs):
            print(f"{n},{c}")
    return 0


def _cmd_sets_enumerate(args) -> int:
    for x in enumerate_set(SetId(args.set), args.t, args.n):
        print(x)
    return 0


def _cmd_sets_check(args) -> int:
    report = set_cardinality_vs_series(SetId(args.set), args.t, args.n_max)
    return _emit_report(report, args.format)


def _cmd_inject(args) -> int:
    x = parse(args.partition)
    trace = _FORWARD[MapId(args.map)](x, args.t)
    print(
        json.dumps(
            {
                "input": str(trace.input),
                "case": trace.case,
                "output": str(trace.output),
                "codomain": trace.codomain.value,
            }
        )
    )
    return 0


def _cmd_verify_map(args) -> int:
    report = verify_map(MapId(args.map), args.t, args.n_max)
    return _emit_report(report, args.format)


def _cmd_verify_decomposition(args) -> int:
    report = verify_decomposition(args.t, args.n_max, args.enumeration_budget)
    return _emit_report(report, args.format)


def _cmd_verify_conjecture(args) -> int:
    t_from, t_to = _parse_range(args.t)
    expected = _load_expected_exceptions(args.exceptions)
    report = verify_conjecture(
        t_from,
        t_to,
        args.n_max,
        expected_exceptions=expected,
        oracle=not args.no_oracle,
        ledger_n_max=args.ledger_n_max,
    )
    return _emit_report(report, args.format)


def _cmd_table(args) -> int:
    t_from, t_to = _parse_range(args.t)
    ks = [int(k) for k in args.k.split(",")]
    cache_dir = resolve_dir(args.cache_dir)
    print("t,k,n,count")
    for t in range(t_from, t_to + 1):
        for k in ks:
            key = {"kind": "hook-totals", "t": t, "k": k, "n_max": args.n_max}
            totals = cached(
                cache_dir, key, lambda t=t, k=k: hook_count_totals(t, k, args.n_max)
            )
            for n, c in enumerate(totals):
                print(f"{t},{k},{n},{c}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hookbias",
        description="Verify 2-hook counting identities over regular partitions.",
    )
    parser.add_argument(
        "--workers",
        type=int,
        default=1,
        help="worker processes (results are identical for any value)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("series", help="print series coefficients")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--term", choices=("total",) + TERM_NAMES, default="total")
    p.add_argument("--degree", type=int, default=DEFAULT_DEGREE)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--cache-dir")
    p.set_defaults(func=_cmd_series)

    p = sub.add_parser("sets", help="enumerate or check the verification sets")
    setsub = p.add_subparsers(dest="sets_command", required=True)
    pe = setsub.add_parser("enumerate")
    pe.add_argument("--set", required=True, choices=[s.value for s in SetId])
    pe.add_argument("--t", type=int, required=True)
    pe.add_argument("--n", type=int, required=True)
    pe.set_defaults(func=_cmd_sets_enumerate)
    pc = setsub.add_parser("check")
    pc.add_argument("--set", required=True, choices=[s.value for s in SetId])
    pc.add_argument("--t", type=int, required=True)
    pc.add_argument("--n-max", type=int, default=40)
    pc.add_argument("--format", choices=("json", "text"), default="json")
    pc.set_defaults(func=_cmd_sets_check)

    p = sub.add_parser("inject", help="apply one forward map to one object")
    p.add_argument("--map", required=True, choices=[m.value for m in MapId])
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--lambda", dest="partition", required=True, metavar="PARTITION")
    p.set_defaults(func=_cmd_inject)

    p = sub.add_parser("verify", help="run a verification suite")
    versub = p.add_subparsers(dest="verify_command", required=True)
    pm = versub.add_parser("map")
    pm.add_argument("--map", required=True, choices=[m.value for m in MapId])
    pm.add_argument("--t", type=int, required=True)
    pm.add_argument("--n-max", type=int, default=20)
    pm.add_argument("--format", choices=("json", "text"), default="json")
    pm.set_defaults(func=_cmd_verify_map)
    pd = versub.add_parser("decomposition")
    pd.add_argument("--t", type=int, required=True)
    pd.add_argument("--n-max", type=int, default=DEFAULT_DEGREE)
    pd.add_argument("--enumeration-budget", type=int, default=20)
    pd.add_argument("--format", choices=("json", "text"), default="json")
    pd.set_defaults(func=_cmd_verify_decomposition)
    pj = versub.add_parser("conjecture")
    pj.add_argument("--t", required=True, help="single value or range like 2..8")
    pj.add_argument("--n-max", type=int, default=DEFAULT_DEGREE)
    pj.add_argument("--ledger-n-max", type=int, default=0)
    pj.add_argument("--no-oracle", action="store_true")
    pj.add_argument("--exceptions", help="JSON file of allowed (t, n) violations")
    pj.add_argument("--format", choices=("json", "text"), default="json")
    pj.set_defaults(func=_cmd_verify_conjecture)

    p = sub.add_parser("table", help="CSV table of hook totals")
    p.add_argument("--t", required=True, help="single value or range like 2..4")
    p.add_argument("--k", default="2", help="comma-separated hook lengths")
    p.add_argument("--n-max", type=int, default=40)
    p.add_argument("--cache-dir")
    p.set_defaults(func=_cmd_table)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.workers < 1:
        parser.error("--workers must be at least 1")
    try:
        return args.func(args)
    except (ParseError, DomainError, NotInImageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
