"""Command-line front end.

Exit codes: 0 feasible, 1 infeasible, 2 invalid input, 3 search budget hit.
"""

import argparse
import json
import sys

from .files import load_problem, result_document
from .solver import SearchLimits, default_workers, solve
from .system import ProblemValidationError

EXIT_FEASIBLE, EXIT_INFEASIBLE, EXIT_INVALID, EXIT_BUDGET = 0, 1, 2, 3


def build_parser():
    p = argparse.ArgumentParser(
        prog="sugeno-fri",
        description=(
            "Minimise max(x) subject to max-Sugeno-Weber relational inequalities "
            "A o x <= b1, D o x >= b2. Prints a JSON (or table) result on stdout."
        ),
        epilog=(
            "PROBLEM may also name a bundled instance, e.g. examples/paper_10x10. "
            "The SUGENO_FRI_THREADS environment variable sets the default for --threads."
        ),
    )
    p.add_argument("problem", metavar="PROBLEM", help="problem file (JSON)")
    which = p.add_mutually_exclusive_group()
    which.add_argument("--all-minimal", action="store_true",
                       help="also report every minimal solution")
    which.add_argument("--optimal-only", action="store_true",
                       help="report optimal solutions only (default)")
    p.add_argument("--tolerance", type=float, default=1e-9)
    p.add_argument("--format", choices=("json", "table"), default="json")
    p.add_argument("--max-nodes", type=int)
    p.add_argument("--time-budget-ms", type=int)
    p.add_argument("--stats", action="store_true",
                   help="print search statistics in table output")
    p.add_argument("--threads", type=int, default=None,
                   help="worker processes for the search (default: $SUGENO_FRI_THREADS or 1)")
    return p


def _table(doc, result, show_stats):
    lines = []
    if not result.feasible:
        lines.append(f"infeasible: {result.reason}")
    else:
        lines.append(f"z* = {result.z_star:.12g}")
        groups = [("optimal", result.optimal_solutions)]
        if "minimal_solutions" in doc:
            groups.append(("minimal", result.minimal_solutions))
        for label, sols in groups:
            lines.append(f"{label} solutions ({len(sols)}):")
            for s in sols:
                lines.append("  " + "  ".join(f"{v:.12g}" for v in (s.objective, *s.x)))
    if show_stats:
        for k, v in doc["stats"].items():
            lines.append(f"{k}: {v}")
    return "\n".join(lines)


def run(argv=None, stdout=None, stderr=None):
    """Run the CLI; returns the exit code."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)

    try:
        problem = load_problem(args.problem)
    except FileNotFoundError:
        print(f"error: problem file not found: {args.problem}", file=stderr)
        return EXIT_INVALID
    except json.JSONDecodeError as exc:
        print(f"error: cannot parse {args.problem}: {exc}", file=stderr)
        return EXIT_INVALID
    except ProblemValidationError as exc:
        for v in exc.violations:
            print(f"error: {v}", file=stderr)
        return EXIT_INVALID
    except (ValueError, KeyError, TypeError) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_INVALID

    limits = SearchLimits(
        max_nodes=args.max_nodes,
        time_budget=None if args.time_budget_ms is None else args.time_budget_ms / 1000.0,
    )
    workers = args.threads if args.threads is not None else default_workers()
    result = solve(problem, all_minimal=args.all_minimal, tol=args.tolerance,
                   limits=limits, workers=workers)
    doc = result_document(result, include_minimal=args.all_minimal)

    if args.format == "json":
        print(json.dumps(doc, indent=2), file=stdout)
    else:
        print(_table(doc, result, args.stats), file=stdout)

    if not result.feasible:
        return EXIT_INFEASIBLE
    if not result.complete:
        print("warning: search budget exhausted; solution sets are partial", file=stderr)
        return EXIT_BUDGET
    return EXIT_FEASIBLE


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
