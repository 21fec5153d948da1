"""Command-line front end.

Reports go to stdout as a single JSON object (or CSV for the table
commands); a one-line human verdict goes to stderr.  Exit codes: 0 pass,
1 bound violated or not established, 2 usage or I/O error.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
import time
from dataclasses import dataclass
from typing import Optional, Sequence

from listbatch.lbsearch import SearchConfig, min_establishing_depth, run_search
from listbatch.offline import build_opt_table
from listbatch.ratio import Ratio
from listbatch.rules import BatchingRule, algorithm_d, load_rule, prefix_costs
from listbatch.ubverify import verify_prefix_ratios, verify_tail

EXIT_PASS, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
DEFAULT_RATIO = "619/583"


@dataclass
class Verdict:
    command: str
    passed: bool
    report: dict
    elapsed_ms: int = 0

    def to_json(self) -> str:
        # elapsed_ms stays off stdout so repeated runs are byte-identical
        body = {"command": self.command, "passed": self.passed, "report": self.report}
        return json.dumps(body, sort_keys=True)


def _ratio(text: str) -> Ratio:
    try:
        return Ratio.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _int_at_least(lo: int):
    def parse(text: str) -> int:
        try:
            value = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
        if value < lo:
            raise argparse.ArgumentTypeError(f"must be >= {lo}, got {value}")
        return value

    return parse


def _load_rule(source: str) -> BatchingRule:
    if source.lower() == "d":
        return algorithm_d()
    return load_rule(source)


def _emit(verdict: Verdict, summary: str) -> int:
    print(verdict.to_json())
    status = "PASS" if verdict.passed else "FAIL"
    print(f"{verdict.command}: {status} ({summary}) in {verdict.elapsed_ms} ms", file=sys.stderr)
    return EXIT_PASS if verdict.passed else EXIT_FAIL


def cmd_opt(args) -> int:
    table = build_opt_table(args.max_n)
    if args.format == "json":
        print(json.dumps({"max_n": table.max_n, "opt": list(table.costs)}))
    else:
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["n", "opt"])
        writer.writerows(enumerate(table.costs))
    return EXIT_PASS


def cmd_verify_upper(args) -> int:
    start = time.perf_counter()
    rule = _load_rule(args.rule)
    need = args.max_n if rule.tail is None else max(args.max_n, rule.tail[0])
    opt = build_opt_table(need)
    prefix = verify_prefix_ratios(rule, args.ratio, args.max_n, opt)
    report = {"prefix": prefix.to_dict(), "tail": None}
    passed = prefix.passed
    if rule.tail is not None:
        tail = verify_tail(rule, args.ratio, opt)
        report["tail"] = tail.to_dict()
        passed = passed and tail.certified
    verdict = Verdict("verify-upper", passed, report, _ms_since(start))
    summary = f"ratio {args.ratio}, {len(prefix.violations)} violations up to n={args.max_n}"
    return _emit(verdict, summary)


def cmd_verify_lower(args) -> int:
    start = time.perf_counter()
    config = SearchConfig(
        args.ratio,
        args.max_depth,
        dominance_enabled=not args.no_dominance,
        collect_survivors=args.survivors,
    )
    report = run_search(config, build_opt_table(args.max_depth))
    verdict = Verdict("verify-lower", report.certified, report.to_dict(), _ms_since(start))
    for c in report.survivors:
        print(c.format(), file=sys.stderr)
    summary = f"ratio {args.ratio}, depth {args.max_depth}, {report.survivor_count} survivors"
    return _emit(verdict, summary)


def cmd_min_depth(args) -> int:
    depth = min_establishing_depth(args.ratio, args.limit, build_opt_table(args.limit))
    print("none" if depth is None else depth)
    return EXIT_FAIL if depth is None else EXIT_PASS


def cmd_simulate(args) -> int:
    rule = _load_rule(args.rule)
    costs = prefix_costs(rule, args.max_n)
    opt = build_opt_table(args.max_n)
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["n", "cost", "opt", "ratio_num", "ratio_den"])
    for n, cost in enumerate(costs, start=1):
        g = math.gcd(cost, opt[n])
        writer.writerow([n, cost, opt[n], cost // g, opt[n] // g])
    return EXIT_PASS


def _ms_since(start: float) -> int:
    return int((time.perf_counter() - start) * 1000)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="listbatch",
        description="Exact competitive-ratio certificates for online list batching of unit jobs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("opt", help="tabulate offline optimum costs")
    p.add_argument("--max-n", type=_int_at_least(0), required=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_opt)

    p = sub.add_parser("verify-upper", help="certify a rule against a ratio bound")
    p.add_argument("--ratio", type=_ratio, default=_ratio(DEFAULT_RATIO))
    p.add_argument("--max-n", type=_int_at_least(1), default=2000)
    p.add_argument("--rule", default="d", help="'d' for the built-in rule, or a rule file")
    p.set_defaults(func=cmd_verify_upper)

    p = sub.add_parser("verify-lower", help="search the decision tree for survivors")
    p.add_argument("--ratio", type=_ratio, default=_ratio(DEFAULT_RATIO))
    p.add_argument("--max-depth", type=_int_at_least(1), default=100)
    p.add_argument("--no-dominance", action="store_true")
    p.add_argument("--survivors", action="store_true", help="list surviving plans")
    p.set_defaults(func=cmd_verify_lower)

    p = sub.add_parser("min-depth", help="smallest depth at which the lower bound is established")
    p.add_argument("--ratio", type=_ratio, default=_ratio(DEFAULT_RATIO))
    p.add_argument("--limit", type=_int_at_least(1), default=120)
    p.set_defaults(func=cmd_min_depth)

    p = sub.add_parser("simulate", help="cost of a rule on every prefix")
    p.add_argument("--rule", default="d")
    p.add_argument("--max-n", type=_int_at_least(1), required=True)
    p.set_defaults(func=cmd_simulate)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (OSError, ValueError, OverflowError) as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
