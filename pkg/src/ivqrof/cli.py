"""Command line interface: solve, sweep, validate.

Exit codes: 0 success, 1 usage error, 2 parse/validation error, 3 numeric
failure.  Output files are written in full only after a run succeeds.
"""

from __future__ import annotations

import argparse
import json
import sys

from .core import FuzzyDomainError, ShapeError, ValidityError
from .pipeline import GroupProblem, RankingResult, solve, sweep
from .problem_io import (
    ProblemFormatError,
    load_problem,
    serialize_result,
    serialize_sweep,
    sweep_series_rows,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INVALID = 2
EXIT_NUMERIC = 3


class _UsageExit(SystemExit):
    def __init__(self, message):
        print(f"error: {message}", file=sys.stderr)
        super().__init__(EXIT_USAGE)


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on usage errors; this tool reserves 2
    # for validation failures, so usage errors exit 1 instead.
    def error(self, message):
        self.print_usage(sys.stderr)
        raise _UsageExit(message)


def _axis_values(text: str) -> list[str]:
    """Parse '2,3,4', '2..5' or '0.05..0.95..0.05' into value strings."""
    if ".." in text:
        parts = text.split("..")
        if len(parts) == 2:
            lo, hi = float(parts[0]), float(parts[1])
            step = 1.0
        elif len(parts) == 3:
            lo, hi = float(parts[0]), float(parts[1])
            step = float(parts[2])
        else:
            raise ValueError(f"cannot parse range {text!r}")
        if step <= 0:
            raise ValueError("range step must be positive")
        values, v = [], lo
        while v <= hi + 1e-9:
            values.append(f"{v:.10g}")
            v += step
        return values
    return [part.strip() for part in text.split(",") if part.strip()]


def _add_override_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--q", type=float, default=None, help="rung override")
    parser.add_argument("--p", type=float, default=None, help="Yager power")
    parser.add_argument("--alpha", type=float, default=None, help="score weight of the lower bounds")
    parser.add_argument("--lambda", dest="lam", type=float, default=None, help="sum/product blend weight")
    parser.add_argument("--theta", type=float, default=None, help="compromise-distance weight")
    parser.add_argument("--mode", choices=("nis", "pis", "cis"), default=None, help="distance mode")


def _apply_overrides(problem: GroupProblem, args) -> GroupProblem:
    from .pipeline import _with_point

    point = {}
    if args.q is not None:
        point["q"] = args.q
    if args.p is not None:
        point["p"] = args.p
    if args.alpha is not None:
        point["alpha"] = args.alpha
    if args.lam is not None:
        point["lam"] = args.lam
    if args.theta is not None:
        point["theta"] = args.theta
    if args.mode is not None:
        point["mode"] = args.mode
    return _with_point(problem, point)


def _fmt_number(a, nd=3) -> str:
    return "<[%.*f, %.*f], [%.*f, %.*f]>" % (nd, a.mu_lo, nd, a.mu_hi, nd, a.nu_lo, nd, a.nu_hi)


def _print_human(result: RankingResult, problem: GroupProblem, verbose: bool) -> None:
    m, n = result.aggregated.shape
    alts = problem.alternative_names or tuple(f"y{i + 1}" for i in range(m))
    attrs = problem.attribute_names or tuple(f"C{j + 1}" for j in range(n))
    print(f"effective q = {result.effective_q:g}, p = {result.context.p:g}")
    if verbose:
        print("\nexpert weights per alternative:")
        for i, row in enumerate(result.dm_weights.weights):
            print(f"  {alts[i]}: " + "  ".join(f"{w:.4f}" for w in row))
        print("\naggregated matrix:")
        for i, row in enumerate(result.aggregated.cells):
            print(f"  {alts[i]}: " + "  ".join(_fmt_number(c, 2) for c in row))
        print("\ninterval attribute weights:")
        for j, w in enumerate(result.interval_weights):
            print(f"  {attrs[j]}: {_fmt_number(w)}")
    print("\nattribute weights:")
    for j, w in enumerate(result.weights):
        print(f"  {attrs[j]}: {w:.5f}")
    print("\nalternative scores:")
    for i in result.order:
        print(f"  {alts[i]}: {result.scores[i]:.5f}")
    print("\nranking: " + result.ranking_line(alts))


def _cmd_solve(args) -> int:
    problem = _apply_overrides(load_problem(args.input), args)
    result = solve(problem)
    _print_human(result, problem, args.verbose)
    if args.output:
        payload = json.dumps(serialize_result(result, problem), indent=2)
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(payload + "\n")
    return EXIT_OK


def _cmd_sweep(args) -> int:
    problem = _apply_overrides(load_problem(args.input), args)
    axes = {}
    for name, text in (
        ("q", args.sweep_q),
        ("p", args.sweep_p),
        ("alpha", args.sweep_alpha),
        ("lam", args.sweep_lam),
        ("theta", args.sweep_theta),
        ("mode", args.sweep_mode),
    ):
        if text is None:
            continue
        values = _axis_values(text)
        axes[name] = values if name == "mode" else [float(v) for v in values]
    report = sweep(problem, axes)
    rows = sweep_series_rows(report, problem)
    lines = ["\t".join(str(v) for v in row) for row in rows]
    print("\n".join(lines))
    verdict = "stable" if report.stable else "ranking changes"
    print(f"# ranking across the grid: {verdict}", file=sys.stderr)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write("\n".join(lines) + "\n")
    if args.report:
        payload = json.dumps(serialize_sweep(report, problem), indent=2)
        with open(args.report, "w", encoding="utf-8") as fh:
            fh.write(payload + "\n")
    return EXIT_OK


def _cmd_validate(args) -> int:
    problem = load_problem(args.input)
    k, m, n = problem.shape
    print(
        f"valid: {k} experts, {m} alternatives, {n} attributes, "
        f"effective q = {problem.resolve_q():g}"
    )
    return EXIT_OK


def main(argv=None) -> int:
    parser = _Parser(prog="ivqrof", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="rank the alternatives of a problem file")
    p_solve.add_argument("input", help="problem file (JSON)")
    p_solve.add_argument("-o", "--output", help="write the full result document here")
    p_solve.add_argument("-v", "--verbose", action="store_true", help="print staged tables")
    _add_override_flags(p_solve)
    p_solve.set_defaults(func=_cmd_solve)

    p_sweep = sub.add_parser("sweep", help="re-solve over parameter grids")
    p_sweep.add_argument("input", help="problem file (JSON)")
    p_sweep.add_argument("-o", "--output", help="write the tab-separated series here")
    p_sweep.add_argument("--report", help="write the JSON sweep report here")
    p_sweep.add_argument("--sweep-q", help="values: '2,3,4' or '2..5'")
    p_sweep.add_argument("--sweep-p", help="values for the Yager power")
    p_sweep.add_argument("--sweep-alpha", help="values: '0.05..0.95..0.05'")
    p_sweep.add_argument("--sweep-lambda", dest="sweep_lam", help="blend weights")
    p_sweep.add_argument("--sweep-theta", help="compromise weights")
    p_sweep.add_argument("--sweep-mode", help="distance modes: 'nis,pis,cis'")
    _add_override_flags(p_sweep)
    p_sweep.set_defaults(func=_cmd_sweep)

    p_val = sub.add_parser("validate", help="check a problem file and report its shape")
    p_val.add_argument("input", help="problem file (JSON)")
    p_val.set_defaults(func=_cmd_validate)

    try:
        args = parser.parse_args(argv)
    except _UsageExit as exc:
        return exc.code
    try:
        return args.func(args)
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (ProblemFormatError, ValidityError, ShapeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (FuzzyDomainError, ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
