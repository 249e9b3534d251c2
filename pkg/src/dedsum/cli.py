"""Command line interface.

Subcommands:
  sum       evaluate S(a, b), s(a, b), and b S(a, b)
  cf        normalized continued fraction and alternating sum T(a, b)
  mu        the correction term mu(a, b)
  jacobi    the Jacobi symbol (a | b)
  check     run exhaustive verification scans, emit a report
  examples  generate the two-parameter family of sum differences
  bench     compare evaluator timings across decades of b

Exit codes: 0 success (and all checks clean), 1 check violations found,
2 usage or validation error.
"""

import argparse
import sys
import time
from fractions import Fraction

from dedsum.arith import jacobi
from dedsum.bench import decade_values, growth_ratios, run_benchmark
from dedsum.congruence import family_example, mu
from dedsum.contfrac import cf_expand, t_value
from dedsum.dedekind import dedekind_fast, dedekind_naive
from dedsum.report import Report, TableReport, render
from dedsum.scans import SUITES, run_suite


def _add_pair(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("a", type=int, help="upper argument")
    parser.add_argument("b", type=int, help="lower argument")


def _add_output(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--format", choices=("csv", "json"), default="json", help="report format"
    )
    parser.add_argument("--out", metavar="PATH", help="write the report to a file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dedsum",
        description="Exact Dedekind sums and exhaustive congruence checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sum", help="evaluate a normalized Dedekind sum")
    _add_pair(p)
    p.add_argument(
        "--method",
        choices=("fast", "naive", "both"),
        default="fast",
        help="evaluator to use; 'both' cross-checks and reports timings",
    )

    p = sub.add_parser("cf", help="normalized continued fraction and T value")
    _add_pair(p)

    p = sub.add_parser("mu", help="correction term mu(a, b)")
    _add_pair(p)

    p = sub.add_parser("jacobi", help="Jacobi symbol (a | b), odd b > 0")
    _add_pair(p)

    p = sub.add_parser("check", help="run verification scans")
    p.add_argument(
        "--suite", choices=SUITES, default="all", help="which scan suite to run"
    )
    p.add_argument("--bmax", type=int, default=100, help="largest b to scan")
    p.add_argument(
        "--include-9div",
        action="store_true",
        help="also scan b divisible by 9 in the theorem1 suite",
    )
    p.add_argument(
        "--cap", type=int, default=100, help="most violation rows kept per report"
    )
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    _add_output(p)

    p = sub.add_parser("examples", help="family b = c d^2, a = c d + 1")
    p.add_argument("--cmax", type=int, default=9, help="largest odd c")
    p.add_argument("--dmax", type=int, default=9, help="largest odd d")
    _add_output(p)

    p = sub.add_parser("bench", help="time both evaluators across decades")
    p.add_argument("--bmax", type=int, default=100_000, help="largest decade of b")
    p.add_argument("--samples", type=int, default=3, help="numerators per decade")
    p.add_argument("--seed", type=int, default=0, help="RNG seed for numerators")

    return parser


def _print_fraction(label: str, value: Fraction) -> None:
    print(f"{label} = {value}")


def _cmd_sum(args) -> int:
    if args.method == "both":
        start = time.perf_counter()
        naive = dedekind_naive(args.a, args.b)
        naive_elapsed = time.perf_counter() - start
        start = time.perf_counter()
        value = dedekind_fast(args.a, args.b)
        fast_elapsed = time.perf_counter() - start
        if naive != value:
            raise ArithmeticError(
                f"evaluators disagree at a={args.a}, b={args.b}: {naive} vs {value}"
            )
        print(f"naive: {naive_elapsed:.6f} s", file=sys.stderr)
        print(f"fast:  {fast_elapsed:.6f} s", file=sys.stderr)
    elif args.method == "naive":
        value = dedekind_naive(args.a, args.b)
    else:
        value = dedekind_fast(args.a, args.b)
    _print_fraction("S", value)
    _print_fraction("s", value / 12)
    _print_fraction("bS", value * args.b)
    return 0


def _cmd_cf(args) -> int:
    expansion = cf_expand(args.a, args.b)
    print(f"{expansion} T={t_value(args.a, args.b)}")
    return 0


def _cmd_mu(args) -> int:
    print(mu(args.a, args.b))
    return 0


def _cmd_jacobi(args) -> int:
    print(jacobi(args.a, args.b))
    return 0


def _emit(reports: list[Report], args) -> None:
    text = render(reports, args.format)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _cmd_check(args) -> int:
    reports = run_suite(
        args.suite,
        args.bmax,
        include_9div=args.include_9div,
        cap=args.cap,
        jobs=args.jobs,
    )
    _emit(reports, args)
    clean = True
    for report in reports:
        verdict = "PASS" if report.passed else "FAIL"
        clean = clean and report.passed
        print(
            f"{report.kind}: b<={report.b_hi} tuples={report.tuples_checked} "
            f"violations={report.violations_total} [{verdict}] "
            f"({report.elapsed:.2f}s)",
            file=sys.stderr,
        )
    return 0 if clean else 1


def _cmd_examples(args) -> int:
    if args.cmax < 1 or args.cmax % 2 == 0:
        raise ValueError(f"--cmax must be odd and positive, got {args.cmax}")
    if args.dmax < 3 or args.dmax % 2 == 0:
        raise ValueError(f"--dmax must be odd and at least 3, got {args.dmax}")
    start = time.perf_counter()
    rows = []
    for c in range(1, args.cmax + 1, 2):
        for d in range(3, args.dmax + 1, 2):
            ex = family_example(c, d)
            rows.append(
                {
                    "c": ex.c,
                    "d": ex.d,
                    "b": ex.b,
                    "a": ex.a,
                    "diff": ex.s_diff,
                    "div8": ex.diff_in_8z,
                    "div24": ex.diff_in_24z,
                }
            )
    report = TableReport(
        kind="examples",
        parameters={"cmax": args.cmax, "dmax": args.dmax},
        rows=rows,
        elapsed=time.perf_counter() - start,
    )
    _emit([report], args)
    return 0


def _cmd_bench(args) -> int:
    rows = run_benchmark(decade_values(args.bmax), args.samples, seed=args.seed)
    if not rows:
        print("no samples requested", file=sys.stderr)
        return 0
    print(f"{'b':>10}  {'naive_s':>12}  {'fast_s':>12}")
    for row in rows:
        print(f"{row.b:>10}  {row.naive_median:>12.6f}  {row.fast_median:>12.6f}")
    if len(rows) > 1:
        naive = ", ".join(f"{r:.1f}x" for r in growth_ratios(rows, "naive_median"))
        fast = ", ".join(f"{r:.1f}x" for r in growth_ratios(rows, "fast_median"))
        print(f"naive growth per decade: {naive}")
        print(f"fast growth per decade:  {fast}")
    return 0


_COMMANDS = {
    "sum": _cmd_sum,
    "cf": _cmd_cf,
    "mu": _cmd_mu,
    "jacobi": _cmd_jacobi,
    "check": _cmd_check,
    "examples": _cmd_examples,
    "bench": _cmd_bench,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return _COMMANDS[args.command](args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main(sys.argv[1:]))


if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))
