"""Exhaustive verification scans over ranges of denominators.

Each scan walks every admissible tuple with b up to a bound, checks one
family of claims with exact arithmetic, and returns a ScanReport. Rows
describing violating tuples are collected up to a cap; the counters in
the report are never capped.

Scans can be partitioned across processes with jobs > 1. Workers get
disjoint strided slices of the b range and their partial results are
merged in ascending b order, so the report content is identical for any
job count (elapsed time aside).
"""

import functools
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from math import gcd

from dedsum.arith import mod_inverse, sign_mod3
from dedsum.congruence import bt_congruence_mod8, bt_residue, mu, mu_original
from dedsum.contfrac import t_value
from dedsum.dedekind import _fast_parts, b_times_s, naive_bs_row
from dedsum.report import ScanReport

SUITES = ("theorem1", "theorem2", "identities", "all")

IDENTITY_KINDS = (
    "oracle-equivalence",
    "reciprocity",
    "bhk",
    "bt-mod8",
    "bs-mod3-9",
    "mu-mod8",
)


def _coprime_residues(b: int) -> list[int]:
    return [a for a in range(1, b) if gcd(a, b) == 1]


def _new_acc() -> dict:
    """Empty accumulator for one worker."""
    return {
        "tuples_checked": 0,
        "violations_total": 0,
        "violations": [],
        "summary": {},
    }


def _record(acc: dict, cap: int, row: dict) -> None:
    acc["violations_total"] += 1
    if len(acc["violations"]) < cap:
        acc["violations"].append(row)


def _bump(acc: dict, key: str, amount: int = 1) -> None:
    acc["summary"][key] = acc["summary"].get(key, 0) + amount


def _theorem1_rows(bs: list[int], cap: int, include_9div: bool) -> dict:
    """Pairing condition vs. membership of S(a1,b)-S(a2,b) in 8Z and 24Z."""
    acc = _new_acc()
    for key in ("mod8_mismatches", "mod24_mismatches_9ndiv", "mod24_mismatches_9div"):
        acc["summary"][key] = 0
    for b in bs:
        div9 = b % 9 == 0
        if b < 3 or (div9 and not include_9div):
            continue
        residues = _coprime_residues(b)
        bss = [b_times_s(a, b) for a in residues]
        mus = [mu(b, a) for a in residues]
        bm1 = b - 1
        b8 = 8 * b
        b24 = 24 * b
        for i, a1 in enumerate(residues):
            m1 = mus[i]
            s1 = bss[i]
            for j in range(i + 1, len(residues)):
                a2 = residues[j]
                acc["tuples_checked"] += 1
                cond = (
                    b * (a2 * m1 - a1 * mus[j])
                    - (a1 - a2) * bm1 * (a1 * a2 + bm1)
                ) % b8 == 0
                d = s1 - bss[j]
                in8 = d % b8 == 0
                in24 = d % b24 == 0
                if cond == in8 and cond == in24:
                    continue
                if cond != in8:
                    _bump(acc, "mod8_mismatches")
                if cond != in24:
                    key = "mod24_mismatches_9div" if div9 else "mod24_mismatches_9ndiv"
                    _bump(acc, key)
                diff = Fraction(d, b)
                _record(
                    acc,
                    cap,
                    {
                        "b": b,
                        "a1": a1,
                        "a2": a2,
                        "condition": cond,
                        "diff_num": diff.numerator,
                        "diff_den": diff.denominator,
                        "in8Z": in8,
                        "in24Z": in24,
                    },
                )
    return acc


def _theorem2_rows(bs: list[int], cap: int) -> dict:
    """Exact residues of b T(a, b) mod 24/72 plus the mod-8 congruence.

    Every residue class is checked through three integer lifts a, a - b,
    a + b, since T is sensitive to the lift even though S is not.
    """
    acc = _new_acc()
    acc["summary"] = {"residue_mismatches": 0, "mod8_failures": 0}
    for b in bs:
        if b < 2:
            continue
        for base in _coprime_residues(b):
            for lift in (base, base - b, base + b):
                acc["tuples_checked"] += 1
                res = bt_residue(lift, b)
                if not res.matches:
                    _bump(acc, "residue_mismatches")
                    _record(
                        acc,
                        cap,
                        {
                            "b": b,
                            "a": lift,
                            "check": "residue",
                            "case": res.case_tag,
                            "modulus": res.modulus,
                            "predicted": res.predicted,
                            "actual": res.actual,
                        },
                    )
                if not bt_congruence_mod8(lift, b):
                    _bump(acc, "mod8_failures")
                    a_inv = mod_inverse(lift, b)
                    _record(
                        acc,
                        cap,
                        {
                            "b": b,
                            "a": lift,
                            "check": "mod8",
                            "case": res.case_tag,
                            "modulus": 8,
                            "predicted": (-mu(lift, b) + b * b + 2 - lift - a_inv) % 8,
                            "actual": (b * t_value(lift, b)) % 8,
                        },
                    )
    return acc


def _oracle_rows(bs: list[int], cap: int) -> dict:
    """Reciprocity-based evaluator against the definitional summation."""
    acc = _new_acc()
    acc["summary"] = {"value_mismatches": 0}
    for b in bs:
        if b < 2:
            continue
        residues, naive = naive_bs_row(b)
        for a, bs_naive in zip(residues.tolist(), naive.tolist()):
            acc["tuples_checked"] += 1
            num, den = _fast_parts(a, b)
            if num * b != bs_naive * den:
                _bump(acc, "value_mismatches")
                s_naive = Fraction(bs_naive, b)
                _record(
                    acc,
                    cap,
                    {
                        "b": b,
                        "a": a,
                        "fast_num": num,
                        "fast_den": den,
                        "naive_num": s_naive.numerator,
                        "naive_den": s_naive.denominator,
                    },
                )
    return acc


def _reciprocity_rows(bs: list[int], cap: int) -> dict:
    """ab S(a,b) + ab S(b,a) == a^2 + b^2 + 1 - 3ab for coprime a <= b."""
    acc = _new_acc()
    acc["summary"] = {"residual_nonzero": 0}
    for b in bs:
        if b < 1:
            continue
        uppers = [1] if b == 1 else _coprime_residues(b)
        for a in uppers:
            acc["tuples_checked"] += 1
            n1, d1 = _fast_parts(a, b) if b > 1 else (0, 1)
            n2, d2 = _fast_parts(b, a) if a > 1 else (0, 1)
            rhs = a * a + b * b + 1 - 3 * a * b
            if a * b * (n1 * d2 + n2 * d1) != rhs * d1 * d2:
                _bump(acc, "residual_nonzero")
                residual = (
                    Fraction(n1, d1) + Fraction(n2, d2) - Fraction(rhs, a * b)
                )
                _record(
                    acc,
                    cap,
                    {
                        "a": a,
                        "b": b,
                        "residual_num": residual.numerator,
                        "residual_den": residual.denominator,
                    },
                )
    return acc


def _bhk_rows(bs: list[int], cap: int) -> dict:
    """b T(a,b) + a + a_inv - 3b == b S(a,b) over three lifts per class."""
    acc = _new_acc()
    acc["summary"] = {"identity_failures": 0}
    for b in bs:
        if b < 2:
            continue
        for base in _coprime_residues(b):
            bs_val = b_times_s(base, b)
            a_inv = mod_inverse(base, b)
            for lift in (base, base - b, base + b):
                acc["tuples_checked"] += 1
                lhs = b * t_value(lift, b) + lift + a_inv - 3 * b
                if lhs != bs_val:
                    _bump(acc, "identity_failures")
                    _record(
                        acc,
                        cap,
                        {"b": b, "a": lift, "lhs": lhs, "rhs": bs_val},
                    )
    return acc


def _bt_mod8_rows(bs: list[int], cap: int) -> dict:
    """b T(a,b) == -mu(a,b) + b^2 + 2 - a - a_inv (mod 8), three lifts."""
    acc = _new_acc()
    acc["summary"] = {"mod8_failures": 0}
    for b in bs:
        if b < 2:
            continue
        for base in _coprime_residues(b):
            a_inv = mod_inverse(base, b)
            for lift in (base, base - b, base + b):
                acc["tuples_checked"] += 1
                actual = (b * t_value(lift, b)) % 8
                expected = (-mu(lift, b) + b * b + 2 - lift - a_inv) % 8
                if actual != expected:
                    _bump(acc, "mod8_failures")
                    _record(
                        acc,
                        cap,
                        {
                            "b": b,
                            "a": lift,
                            "actual_mod8": actual,
                            "expected_mod8": expected,
                        },
                    )
    return acc


def _bs_congruence_rows(bs: list[int], cap: int) -> dict:
    """b S(a,b) == 0 (mod 3) when 3 does not divide b, else 2e (mod 9)."""
    acc = _new_acc()
    acc["summary"] = {"congruence_failures": 0}
    for b in bs:
        if b < 2:
            continue
        div3 = b % 3 == 0
        modulus = 9 if div3 else 3
        for a in _coprime_residues(b):
            acc["tuples_checked"] += 1
            value = b_times_s(a, b)
            expected = (2 * sign_mod3(a)) % 9 if div3 else 0
            actual = value % modulus
            if actual != expected:
                _bump(acc, "congruence_failures")
                _record(
                    acc,
                    cap,
                    {
                        "b": b,
                        "a": a,
                        "b_times_s": value,
                        "modulus": modulus,
                        "expected": expected,
                        "actual": actual,
                    },
                )
    return acc


def _mu_mod8_rows(bs: list[int], cap: int) -> dict:
    """mu(a,b) == (a-1)(a+b-1) (mod 8) for even b, a over a full period."""
    acc = _new_acc()
    acc["summary"] = {"mod8_mismatches": 0}
    for b in bs:
        if b < 2 or b % 2 == 1:
            continue
        for a in range(1, 4 * b + 1):
            if gcd(a, b) != 1:
                continue
            acc["tuples_checked"] += 1
            simple = mu(a, b)
            quadratic = mu_original(a, b)
            if (simple - quadratic) % 8 != 0:
                _bump(acc, "mod8_mismatches")
                _record(
                    acc,
                    cap,
                    {"b": b, "a": a, "mu_simple": simple, "mu_quadratic": quadratic},
                )
    return acc


_RANGE_FN = {
    "theorem1": _theorem1_rows,
    "theorem2": _theorem2_rows,
    "oracle-equivalence": _oracle_rows,
    "reciprocity": _reciprocity_rows,
    "bhk": _bhk_rows,
    "bt-mod8": _bt_mod8_rows,
    "bs-mod3-9": _bs_congruence_rows,
    "mu-mod8": _mu_mod8_rows,
}


def _validate_scan_args(b_max: int, cap: int, jobs: int) -> None:
    if b_max < 1:
        raise ValueError(f"b_max must be at least 1, got {b_max}")
    if cap < 0:
        raise ValueError(f"cap must not be negative, got {cap}")
    if jobs < 1:
        raise ValueError(f"jobs must be at least 1, got {jobs}")


def _run_scan(kind: str, b_max: int, cap: int, jobs: int, parameters: dict, **kwargs) -> ScanReport:
    """Run one scan, optionally across processes, and assemble the report.

    Workers receive strided slices bs[i::jobs], so their b sets are
    disjoint; a stable sort by b restores the sequential row order
    before the cap is applied to the merged list.
    """
    _validate_scan_args(b_max, cap, jobs)
    start = time.perf_counter()
    fn = functools.partial(_RANGE_FN[kind], cap=cap, **kwargs)
    all_bs = list(range(1, b_max + 1))
    slices = [all_bs[i::jobs] for i in range(jobs)]
    slices = [s for s in slices if s]
    if len(slices) <= 1:
        partials = [fn(all_bs)]
    else:
        with ProcessPoolExecutor(max_workers=len(slices)) as pool:
            partials = list(pool.map(fn, slices))
    rows = sorted(
        (row for part in partials for row in part["violations"]),
        key=lambda row: row["b"],
    )
    summary: dict = {}
    for part in partials:
        for key, value in part["summary"].items():
            summary[key] = summary.get(key, 0) + value
    return ScanReport(
        kind=kind,
        b_lo=1,
        b_hi=b_max,
        tuples_checked=sum(p["tuples_checked"] for p in partials),
        violations_total=sum(p["violations_total"] for p in partials),
        violations=rows[:cap],
        parameters=dict(sorted(parameters.items())),
        summary=dict(sorted(summary.items())),
        elapsed=time.perf_counter() - start,
    )


def scan_theorem1(
    b_max: int, *, include_9div: bool = False, cap: int = 100, jobs: int = 1
) -> ScanReport:
    """Check the pairing condition against 8Z/24Z membership of differences.

    By default b divisible by 9 is skipped, matching the range where the
    24Z equivalence is claimed. With include_9div=True those b are
    scanned too; their expected 24Z mismatches are reported as
    violations and tallied under summary['mod24_mismatches_9div'].
    """
    return _run_scan(
        "theorem1",
        b_max,
        cap,
        jobs,
        {"bmax": b_max, "cap": cap, "include_9div": include_9div},
        include_9div=include_9div,
    )


def scan_theorem2(b_max: int, *, cap: int = 100, jobs: int = 1) -> ScanReport:
    """Check predicted residues of b T(a,b) mod 24/72 and the mod-8 form."""
    return _run_scan(
        "theorem2", b_max, cap, jobs, {"bmax": b_max, "cap": cap}
    )


def _identity_scan(kind: str, b_max: int, cap: int, jobs: int) -> ScanReport:
    return _run_scan(kind, b_max, cap, jobs, {"bmax": b_max, "cap": cap})


def scan_oracle_equivalence(b_max: int, *, cap: int = 100, jobs: int = 1) -> ScanReport:
    """Compare the fast evaluator to direct summation for every (a, b)."""
    return _identity_scan("oracle-equivalence", b_max, cap, jobs)


def scan_reciprocity(b_max: int, *, cap: int = 100, jobs: int = 1) -> ScanReport:
    """Check the reciprocity law in integer form for coprime a <= b."""
    return _identity_scan("reciprocity", b_max, cap, jobs)


def scan_bhk(b_max: int, *, cap: int = 100, jobs: int = 1) -> ScanReport:
    """Check S = T + (a + a_inv)/b - 3 in integer form over three lifts."""
    return _identity_scan("bhk", b_max, cap, jobs)


def scan_bt_mod8(b_max: int, *, cap: int = 100, jobs: int = 1) -> ScanReport:
    """Check the mod-8 congruence for b T(a,b) over three lifts."""
    return _identity_scan("bt-mod8", b_max, cap, jobs)


def scan_bs_congruences(b_max: int, *, cap: int = 100, jobs: int = 1) -> ScanReport:
    """Check b S(a,b) mod 3 (or mod 9 when 3 | b) against its closed form."""
    return _identity_scan("bs-mod3-9", b_max, cap, jobs)


def scan_mu_mod8(b_max: int, *, cap: int = 100, jobs: int = 1) -> ScanReport:
    """Check mu against its quadratic form mod 8 for even b."""
    return _identity_scan("mu-mod8", b_max, cap, jobs)


def run_identities(b_max: int, *, cap: int = 100, jobs: int = 1) -> list[ScanReport]:
    """All structural identity scans at one bound, in a fixed order."""
    return [_identity_scan(kind, b_max, cap, jobs) for kind in IDENTITY_KINDS]


def run_suite(
    suite: str,
    b_max: int,
    *,
    include_9div: bool = False,
    cap: int = 100,
    jobs: int = 1,
) -> list[ScanReport]:
    """Reports for one named suite: theorem1, theorem2, identities, or all."""
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}, expected one of {SUITES}")
    reports: list[ScanReport] = []
    if suite in ("theorem1", "all"):
        reports.append(
            scan_theorem1(b_max, include_9div=include_9div, cap=cap, jobs=jobs)
        )
    if suite in ("theorem2", "all"):
        reports.append(scan_theorem2(b_max, cap=cap, jobs=jobs))
    if suite in ("identities", "all"):
        reports.extend(run_identities(b_max, cap=cap, jobs=jobs))
    return reports
