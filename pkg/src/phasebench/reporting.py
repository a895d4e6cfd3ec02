"""Bit-exact rendering of scan results to CSV and JSON."""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Union

from .exactnum import Root2Num, lower_rational, upper_rational
from .transition import ScanReport

CSV_HEADER = ("tau,n,sign,slice_size,accept_count,accepting_fraction,"
              "accepting_fraction_exact,lower_bound_exact,upper_bound_exact,"
              "bottom_fraction_exact")


def fmt_decimal(value: float) -> str:
    return format(value, ".12g")


def fmt_fraction(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def fmt_bound(value: Root2Num, side: str) -> str:
    """Exact p/q when the bound is rational; otherwise a sound rational
    enclosure (floored for lower bounds, ceiled for upper bounds)."""
    if side == "lower":
        return fmt_fraction(lower_rational(value))
    return fmt_fraction(upper_rational(value))


def render_scan_csv(report: ScanReport) -> str:
    lines = [CSV_HEADER]
    for s in report.slices:
        frac = Fraction(s.accepted_count, s.slice_size)
        lines.append(",".join([
            fmt_decimal(s.tau),
            str(s.n),
            f"{s.sign:+d}",
            str(s.slice_size),
            str(s.accepted_count),
            fmt_decimal(float(frac)),
            f"{s.accepted_count}/{s.slice_size}",
            fmt_bound(s.lower_bound, "lower"),
            fmt_bound(s.upper_bound, "upper"),
            f"{s.ball_bottom}/{s.ball_total}",
        ]))
    return "\n".join(lines) + "\n"


def scan_sidecar_dict(report: ScanReport) -> dict:
    thr = report.threshold
    return {
        "alphabet_size": report.alphabet_size,
        "language": report.language_name,
        "iso": report.iso_kind,
        "budget": report.budget,
        "orientation": report.orientation,
        "bounds": {
            "c": report.bounds.describe_c(),
            "poly": [str(coef) for coef in report.bounds.poly],
        },
        "delta": report.delta,
        "exempt_radius": report.exempt_radius,
        "growth_base": str(report.growth_base),
        "threshold": {
            "value": thr.value,
            "sign": thr.param.sign if thr.param else None,
            "n": thr.param.n if thr.param else None,
            "diagnostic": thr.diagnostic,
        },
        "requirements": {
            "requirement1": report.requirement1,
            "requirement2": report.requirement2,
            "requirement3": report.requirement3,
            "checks": [[name, ok] for name, ok in report.req12.checks],
            "violations": list(report.req12.violations),
            "growth": {
                "base": str(report.req3.base),
                "positive_window_counts": [w.count for w in report.req3.pos_windows],
                "negative_window_counts": [w.count for w in report.req3.neg_windows],
                "positive_ratios": [str(r) for r in report.req3.pos_ratios],
                "negative_ratios": [str(r) for r in report.req3.neg_ratios],
                "notes": list(report.req3.notes),
            },
        },
        "balance": {
            "passed": report.balance.passed,
            "side_condition": report.balance.side_condition_ok,
            "failing_n": list(report.balance.failing_n),
            "rows": [
                {
                    "n": row.n,
                    "in_margin": fmt_fraction(row.in_margin),
                    "out_margin": fmt_fraction(row.out_margin),
                    "required": fmt_fraction(row.required),
                    "passed": row.passed,
                }
                for row in report.balance.rows
            ],
        },
        "skipped_undefined": report.skipped_undefined,
        "empty_slices": [list(pair) for pair in report.empty_slices],
    }


def render_json(payload: dict) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def sidecar_path_for(csv_path: Union[str, Path]) -> Path:
    path = Path(csv_path)
    if path.suffix == ".csv":
        return path.with_suffix(".json")
    return path.with_name(path.name + ".json")


def write_scan_outputs(report: ScanReport, csv_path: Union[str, Path]) -> Path:
    """Write the CSV and its JSON sidecar; returns the sidecar path."""
    csv_path = Path(csv_path)
    csv_path.write_text(render_scan_csv(report))
    sidecar = sidecar_path_for(csv_path)
    sidecar.write_text(render_json(scan_sidecar_dict(report)))
    return sidecar
