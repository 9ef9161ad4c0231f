"""Command-line interface.

Exit codes: 0 success, 1 usage or domain error, 2 undecided (budget spent).
Errors are reported as a single machine-readable line on stderr starting
with ERROR.
"""

import argparse
import sys

from .accelerated import accelerated_trace, cross_check
from .arith import collatz_step
from .classical import classical_trajectory
from .diophantine import solve_linear_diophantine
from .errors import DEFAULT_BUDGET, BudgetExhaustedError
from .export import (collatz_graph_dot, export_accelerated_csv,
                     export_accelerated_json, render_accelerated_table,
                     render_classical_table, render_pow3_csv,
                     render_scan_summary)
from .scan import powers_of_three, scan_range

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_UNDECIDED = 2


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on bad arguments; the contract here reserves 2 for
    # undecided results, so usage problems are remapped to 1.
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"ERROR usage: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _natural(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="collatzkit",
                     description="Collatz trajectories, the odd-part iteration, "
                                 "and batch verification against brute force.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("step", parents=[], help="one application of the step map")
    p.add_argument("n", type=_natural)
    p.set_defaults(func=_cmd_step)

    p = sub.add_parser("trace", help="classical trajectory with its difference row")
    p.add_argument("n", type=_natural)
    p.add_argument("--max-steps", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--continue-past-one", action="store_true",
                   help="run exactly max-steps applications instead of stopping at 1")
    p.set_defaults(func=_cmd_trace)

    p = sub.add_parser("accel", help="odd-part iteration trace")
    p.add_argument("n", type=_natural)
    p.add_argument("--format", choices=("table", "csv", "json"), default="table")
    p.set_defaults(func=_cmd_accel)

    p = sub.add_parser("card", help="trajectory cardinality with oracle verdict")
    p.add_argument("n", type=_natural)
    p.set_defaults(func=_cmd_card)

    p = sub.add_parser("scan", help="cross-check every n in [lo, hi)")
    p.add_argument("lo", type=_natural)
    p.add_argument("hi", type=_natural)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--resume-from", type=_natural, default=None)
    p.set_defaults(func=_cmd_scan)

    p = sub.add_parser("pow3", help="odd-part traces of 3**e for e = 1..max_exp")
    p.add_argument("max_exp", type=_natural)
    p.set_defaults(func=_cmd_pow3)

    p = sub.add_parser("graph", help="functional graph as a DOT digraph")
    p.add_argument("limit", type=_natural)
    p.add_argument("--map", choices=("classical", "accelerated"), default="classical")
    p.set_defaults(func=_cmd_graph)

    p = sub.add_parser("solve-dio", help="solve a*x + b*y = c over the integers")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("c", type=int)
    p.set_defaults(func=_cmd_solve_dio)

    return parser


def _cmd_step(args) -> int:
    print(collatz_step(args.n))
    return EXIT_OK


def _cmd_trace(args) -> int:
    traj = classical_trajectory(args.n, max_steps=args.max_steps,
                                stop_at_one=not args.continue_past_one)
    print(render_classical_table(traj))
    return EXIT_OK


def _cmd_accel(args) -> int:
    trace = accelerated_trace(args.n)
    if args.format == "table":
        print(render_accelerated_table(trace))
    elif args.format == "csv":
        sys.stdout.write(export_accelerated_csv(trace).decode("ascii"))
    else:
        sys.stdout.write(export_accelerated_json(trace).decode("ascii"))
    return EXIT_OK


def _cmd_card(args) -> int:
    res = cross_check(args.n)
    verdict = "PASS" if res.ok else "FAIL"
    print(f"{res.cardinality} (oracle: {res.stopping_time} steps + 1) {verdict}")
    return EXIT_OK if res.ok else EXIT_USAGE


def _cmd_scan(args) -> int:
    summary = scan_range(args.lo, args.hi, budget=args.budget, workers=args.workers,
                         resume_from=args.resume_from, progress=sys.stderr)
    sys.stdout.write(render_scan_summary(summary))
    if summary.undecided:
        print(f"ERROR undecided: {summary.undecided} of {summary.hi - summary.lo} "
              f"values exhausted the budget", file=sys.stderr)
        return EXIT_UNDECIDED
    return EXIT_OK


def _cmd_pow3(args) -> int:
    results = powers_of_three(args.max_exp)
    sys.stdout.write(render_pow3_csv(results))
    undecided = [r.exponent for r in results if not r.terminated]
    if undecided:
        print(f"ERROR undecided: exponents {undecided} exhausted the budget",
              file=sys.stderr)
        return EXIT_UNDECIDED
    return EXIT_OK


def _cmd_graph(args) -> int:
    sys.stdout.write(collatz_graph_dot(args.limit, kind=args.map))
    return EXIT_OK


def _cmd_solve_dio(args) -> int:
    solution = solve_linear_diophantine(args.a, args.b, args.c)
    if solution is None:
        print("no solution")
        return EXIT_OK
    s, t = solution.particular
    dx, dy = solution.step
    print(f"gcd={solution.gcd} particular=({s}, {t}) step=({dx}, {dy})")
    print(f"x = {s} {'+' if dx >= 0 else '-'} {abs(dx)}*eta")
    print(f"y = {t} {'+' if dy >= 0 else '-'} {abs(dy)}*eta")
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExhaustedError as exc:
        print(f"ERROR undecided: {exc}", file=sys.stderr)
        return EXIT_UNDECIDED
    except ValueError as exc:
        print(f"ERROR invalid: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
