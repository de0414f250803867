"""Command-line front end: enumerate, grundy, verify, graph, serve.

All commands respect the MHRG_MAX_POSITIONS environment variable as the
enumeration guardrail override.  verify streams one JSON report line per
parameter set to stdout and exits 0 exactly when no check found a
violation.
"""

from __future__ import annotations

import argparse
import json
import sys

from .analysis import (
    grundy_table,
    verify_engine_invariants,
    verify_m2_closed_form,
    verify_membership,
    verify_row_transfer,
    verify_two_rows_closed_form,
)
from .diagram import all_partitions, make_board
from .engine import PositionLimitError, reachable_graph
from .serialize import (
    graph_to_csv,
    graph_to_dot,
    graph_to_json,
    option_records,
    parse_parts_text,
    position_record,
    positions_to_csv,
)

VERIFY_SUITES = ("main", "t-rows", "closed-form-m2", "closed-form-two-rows",
                 "engine-invariants")


def _board_data(args):
    board = make_board(args.m, args.n)
    graph = reachable_graph(board)
    return board, graph, grundy_table(graph)


def cmd_enumerate(args) -> int:
    board, graph, table = _board_data(args)
    records = [position_record(board, parts, graph, table)
               for parts in all_partitions(board)]
    if args.members_only:
        records = [r for r in records if r["member"]]
    if args.format == "csv":
        sys.stdout.write(positions_to_csv(records))
    else:
        json.dump({"m": board.m, "n": board.n, "positions": records},
                  sys.stdout, indent=2)
        sys.stdout.write("\n")
    return 0


def cmd_grundy(args) -> int:
    board, graph, table = _board_data(args)
    parts = parse_parts_text(board, getattr(args, "lambda"))
    record = position_record(board, parts, graph, table)
    if args.format == "csv":
        sys.stdout.write(positions_to_csv([record]))
    else:
        if record["member"]:
            record["options"] = option_records(graph, table, parts)
        json.dump(record, sys.stdout, indent=2)
        sys.stdout.write("\n")
    return 0


def cmd_graph(args) -> int:
    _, graph, table = _board_data(args)
    if args.format == "dot":
        sys.stdout.write(graph_to_dot(graph, table))
    elif args.format == "csv":
        sys.stdout.write(graph_to_csv(graph))
    else:
        sys.stdout.write(graph_to_json(graph, table))
        sys.stdout.write("\n")
    return 0


def _boards_up_to(max_sum: int, min_m: int = 1):
    for m in range(min_m, max_sum):
        for n in range(m, max_sum - m + 1):
            yield m, n


def cmd_verify(args) -> int:
    reports = []
    if args.suite == "main":
        for m, n in _boards_up_to(args.max_sum):
            reports.append(verify_membership(make_board(m, n)))
    elif args.suite == "t-rows":
        for m, n in _boards_up_to(args.max_sum):
            for t in range(0, m + 1):
                reports.append(verify_row_transfer(t, m, n))
    elif args.suite == "closed-form-m2":
        for n in range(2, args.max_n + 1):
            reports.append(verify_m2_closed_form(n))
    elif args.suite == "closed-form-two-rows":
        for m, n in _boards_up_to(args.max_sum, min_m=2):
            reports.append(verify_two_rows_closed_form(m, n))
    else:
        for m, n in _boards_up_to(args.max_sum):
            reports.append(verify_engine_invariants(make_board(m, n)))

    violations = 0
    for report in reports:
        violations += report.violation_count
        sys.stdout.write(json.dumps(report.as_dict(), sort_keys=True) + "\n")
    print(f"suite {args.suite}: {len(reports)} reports, {violations} violations",
          file=sys.stderr)
    return 0 if violations == 0 else 1


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    app = create_app(static_dir=args.static)
    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mhrg",
        description="Engine and analysis tools for the multiple hook removing game.")
    sub = parser.add_subparsers(dest="command", required=True)

    def board_args(p):
        p.add_argument("--m", type=int, required=True, help="row bound (1 <= m <= n)")
        p.add_argument("--n", type=int, required=True, help="column bound")

    p = sub.add_parser("enumerate", help="list every position of a board")
    board_args(p)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--members-only", action="store_true",
                   help="limit output to reachable positions")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("grundy", help="describe one position")
    board_args(p)
    p.add_argument("--lambda", required=True, metavar="PARTS",
                   help="comma-separated parts, zeros kept, e.g. 3,1")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.set_defaults(func=cmd_grundy)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=VERIFY_SUITES)
    p.add_argument("--max-sum", type=int, default=None,
                   help="largest m+n to sweep (suite-specific default)")
    p.add_argument("--max-n", type=int, default=18,
                   help="largest n for closed-form-m2 (default 18)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("graph", help="export a board's full game graph")
    board_args(p)
    p.add_argument("--format", choices=["json", "dot", "csv"], default="json")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--static", default=None, metavar="DIR",
                   help="directory of web UI assets to serve at /")
    p.set_defaults(func=cmd_serve)
    return parser


SUITE_DEFAULT_MAX_SUM = {
    "main": 12,
    "t-rows": 12,
    "closed-form-two-rows": 14,
    "engine-invariants": 10,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "max_sum", None) is None and args.command == "verify":
        args.max_sum = SUITE_DEFAULT_MAX_SUM.get(args.suite, 10)
    try:
        return args.func(args)
    except PositionLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
