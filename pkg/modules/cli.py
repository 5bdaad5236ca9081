# cli.py - command-line driver: supercheck verify | table | history
#
# Exit codes: 0 every check passed, 1 a check failed or errored, 2 usage error.
import argparse
import logging
import sys
from typing import List, Optional

from . import db
from .report import TABLE_KINDS, emit_report, emit_table, exit_code
from .scalars import DomainError
from .settings import configure_logging, defaults
from .suites import SUITE_NAMES, run_suite

log = logging.getLogger(__name__)

USAGE_ERROR = 2


def build_parser() -> argparse.ArgumentParser:
    d = defaults()
    parser = argparse.ArgumentParser(prog="supercheck",
                                     description="Exact verification of supersymmetric monoidal structures.")
    parser.add_argument("--log-level", default=None, help="DEBUG, INFO, WARNING (default from SUPERCHECK_LOG_LEVEL)")
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run a named verification suite")
    v.add_argument("suite", choices=SUITE_NAMES)
    v.add_argument("--q", type=int, default=None, help=f"modulus of the grading group (default {d['q']})")
    v.add_argument("--max-rank", type=int, default=None, help=f"rank bound for sweeps (default {d['max_rank']})")
    v.add_argument("--trials", type=int, default=None, help=f"seeded random trials (default {d['trials']})")
    v.add_argument("--seed", type=int, default=None, help=f"random seed (default {d['seed']})")
    v.add_argument("--max-degree", type=int, default=None,
                   help=f"degree bound for Q-functions (default {d['max_degree']})")
    v.add_argument("--format", choices=("json", "text"), default="json")
    v.add_argument("--record", action="store_true", help="store the run in the history database")
    v.add_argument("--db", default=None, help="history database path")

    t = sub.add_parser("table", help="print a Q-function, tau or dictionary table")
    t.add_argument("kind", choices=TABLE_KINDS)
    t.add_argument("--max-degree", type=int, default=None, help=f"degree bound (default {d['max_degree']})")
    t.add_argument("--format", choices=("csv", "json", "xlsx"), default="csv")
    t.add_argument("--output", default=None, help="file to write; required for xlsx")

    h = sub.add_parser("history", help="list recorded runs")
    h.add_argument("--limit", type=int, default=20)
    h.add_argument("--db", default=None, help="history database path")
    return parser


def _verify(args) -> int:
    params = {"q": args.q, "max_rank": args.max_rank, "trials": args.trials,
              "seed": args.seed, "max_degree": args.max_degree}
    report = run_suite(args.suite, {k: v for k, v in params.items() if v is not None})
    sys.stdout.write(emit_report(report, args.format))
    if args.record:
        ok, msg = db.record_run(report, args.db)
        print(msg, file=sys.stderr)
    return exit_code(report)


def _table(args) -> int:
    max_degree = args.max_degree if args.max_degree is not None else defaults()["max_degree"]
    if max_degree < 0:
        raise DomainError(f"max-degree must be non-negative, got {max_degree}")
    out = emit_table(args.kind, max_degree, args.format)
    if args.format == "xlsx":
        if not args.output:
            raise DomainError("xlsx output needs --output")
        with open(args.output, "wb") as fh:
            fh.write(out)
        return 0
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    return 0


def _history(args) -> int:
    df = db.recent_runs(args.limit, args.db)
    if df.empty:
        print("No recorded runs.")
    else:
        print(df.to_string(index=False))
    return 0


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.log_level)
    try:
        if args.command == "verify":
            return _verify(args)
        if args.command == "table":
            return _table(args)
        return _history(args)
    except DomainError as e:
        print(f"supercheck: error: {e}", file=sys.stderr)
        parser.print_usage(sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
