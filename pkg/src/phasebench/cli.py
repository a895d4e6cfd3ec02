"""Command line interface: lemma suites, scans, encodings, density counts.

Exit codes: 0 all requested checks passed, 1 property violation,
2 configuration or usage error, 3 table encoding infeasible.
"""

from __future__ import annotations

import argparse
import enum
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Callable, Optional

from .alphabet import digits, enumerate_words, parity_counts, weight
from .config import RunConfig, build_iso, build_language, parse_config
from .errors import ConfigError, IsoInfeasibleError, PhasebenchError
from .exactnum import SQRT_HALF, Root2Num
from .isomorphism import export_pairs, import_table_iso, verify_bijection
from .languages import LanguageSpec
from .reporting import render_json, write_scan_outputs
from .roughp import class_counts, qprime, verify_errorless
from .transition import build_scan, density_counts, f_from_counts


class ExitStatus(enum.IntEnum):
    OK = 0
    VIOLATION = 1
    CONFIG = 2
    INFEASIBLE = 3


def _emit(payload: dict, output: Optional[str]) -> None:
    text = render_json(payload)
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# lemmas
# ---------------------------------------------------------------------------

def _suite_equal_parity(lang, iso, budget):
    for n in range(1, budget + 1):
        rec = parity_counts(lang.alphabet.size, n)
        even = odd = 0
        for w in enumerate_words(lang.alphabet, n):
            if weight(w) % 2 == 0:
                even += 1
            else:
                odd += 1
        if (rec.even_count, rec.odd_count) != (even, odd) or even != odd:
            return {"n": n, "recurrence": [rec.even_count, rec.odd_count],
                    "enumerated": [even, odd]}
    return None


def _suite_symmetric_split(lang, iso, budget, tie: Callable):
    for n in range(2, budget + 1, 2):
        plus = total = 0
        for z in enumerate_words(lang.alphabet, n // 2):
            total += 1
            if tie(z + z) == 1:
                plus += 1
        if 2 * plus != total:
            witness = next(z + z for z in enumerate_words(lang.alphabet, n // 2))
            return {"n": n, "plus": plus, "total": total,
                    "witness": digits(witness)}
    return None


def _suite_class_counts(lang, iso, budget):
    for n in range(1, budget + 1):
        counts = class_counts(iso, n)
        if counts.accept_count != counts.total // 2 or \
                counts.reject_count != counts.total // 2 - counts.bottom_count:
            return {"n": n, "accept": counts.accept_count,
                    "reject": counts.reject_count,
                    "bottom": counts.bottom_count, "total": counts.total}
    return None


def _suite_unknown_bound(lang, iso, budget):
    size = lang.alphabet.size
    for n in range(1, budget + 1):
        counts = class_counts(iso, n)
        frac = Fraction(counts.bottom_count, counts.total)
        if Root2Num.of(frac) > SQRT_HALF ** n:
            return {"n": n, "bottom_fraction": str(frac)}
        if n % 2 == 0 and frac != Fraction(1, size ** (n // 2)):
            return {"n": n, "bottom_fraction": str(frac),
                    "expected": f"1/{size ** (n // 2)}"}
        if n % 2 == 1 and frac != 0:
            return {"n": n, "bottom_fraction": str(frac), "expected": "0"}
    return None


def _suite_discriminator_bound(lang, iso, budget):
    for n in range(1, budget + 1):
        counts = class_counts(iso, n)
        for p in (1, -1):
            f = f_from_counts(counts.total, counts.bottom_count, p)
            if Root2Num.of(f) > Root2Num.of(Fraction(7, 2)) * SQRT_HALF ** n:
                return {"n": n, "p": p, "F": str(f)}
    return None


def _suite_errorless(lang, iso, budget):
    bad = verify_errorless(lang, iso, budget)
    if bad:
        word, verdict = bad[0]
        return {"word": digits(word), "verdict": verdict.value}
    return None


LEMMA_SUITES = (
    ("equal_parity_counts", _suite_equal_parity),
    ("symmetric_split", _suite_symmetric_split),
    ("class_count_identity", _suite_class_counts),
    ("unknown_fraction_bound", _suite_unknown_bound),
    ("discriminator_error_bound", _suite_discriminator_bound),
    ("errorless_decider", _suite_errorless),
)


def run_lemma_suites(config: RunConfig, sabotage: Optional[str] = None) -> dict:
    lang = build_language(config)
    iso = build_iso(config, lang)
    tie = (lambda w: 1) if sabotage == "qprime" else qprime
    suites = []
    for name, fn in LEMMA_SUITES:
        if name == "symmetric_split":
            counterexample = fn(lang, iso, config.budget, tie)
        else:
            counterexample = fn(lang, iso, config.budget)
        suites.append({"name": name, "passed": counterexample is None,
                       "counterexample": counterexample})
    return {"budget": config.budget, "alphabet_size": config.alphabet_size,
            "language": lang.name, "iso": iso.kind, "suites": suites,
            "passed": all(s["passed"] for s in suites)}


def cmd_lemmas(config: RunConfig, output: Optional[str] = None,
               sabotage: Optional[str] = None) -> int:
    report = run_lemma_suites(config, sabotage=sabotage)
    _emit(report, output or config.output_path)
    return ExitStatus.OK if report["passed"] else ExitStatus.VIOLATION


# ---------------------------------------------------------------------------
# scan
# ---------------------------------------------------------------------------

def cmd_scan(config: RunConfig, output: Optional[str] = None) -> int:
    lang = build_language(config)
    iso = build_iso(config, lang)
    report = build_scan(lang, iso, config.bounds, config.budget,
                        delta=config.delta, exempt_radius=config.exempt_radius,
                        growth_base=config.growth_base, workers=config.workers)
    csv_path = output or config.output_path or "scan.csv"
    write_scan_outputs(report, csv_path)
    ok = report.requirement1 and report.requirement2 and report.requirement3
    return ExitStatus.OK if ok else ExitStatus.VIOLATION


# ---------------------------------------------------------------------------
# iso
# ---------------------------------------------------------------------------

def _iso_verification(lang: LanguageSpec, iso, budget: int) -> dict:
    bijection = verify_bijection(iso, budget)
    errors = verify_errorless(lang, iso, budget)
    return {
        "checked": bijection.checked,
        "bijection_passed": bijection.passed,
        "duplicate_images": [digits(w) for w in bijection.duplicate_images],
        "missing_images": [digits(w) for w in bijection.missing_images],
        "round_trip_failures": [digits(w) for w in bijection.round_trip_failures],
        "wrong_decisions": [digits(w) for w, _ in errors],
        "passed": bijection.passed and not errors,
    }


def cmd_iso(config: RunConfig, action: str, table_path: Optional[str] = None,
            output: Optional[str] = None) -> int:
    lang = build_language(config)
    out = output or config.output_path
    if action == "import":
        if not table_path:
            raise ConfigError("iso import requires --table <path>")
        try:
            pairs = json.loads(Path(table_path).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigError(f"cannot read table {table_path}: {exc}") from None
        iso = import_table_iso(lang.alphabet, pairs, budget=config.budget)
        report = _iso_verification(lang, iso, config.budget)
        _emit(report, out)
        return ExitStatus.OK if report["passed"] else ExitStatus.VIOLATION
    iso = build_iso(config, lang)
    if action == "build":
        _emit({"kind": iso.kind, "budget": iso.budget,
               "size": len(iso.forward) if iso.forward else None}, out)
        return ExitStatus.OK
    if action == "verify":
        report = _iso_verification(lang, iso, config.budget)
        _emit(report, out)
        return ExitStatus.OK if report["passed"] else ExitStatus.VIOLATION
    if action == "export":
        if iso.kind != "table":
            raise ConfigError("iso export requires an iso block with mode 'table'")
        text = render_json(export_pairs(iso))
        if out:
            Path(out).write_text(text)
        else:
            sys.stdout.write(text)
        return ExitStatus.OK
    raise ConfigError(f"unknown iso action {action!r}")


# ---------------------------------------------------------------------------
# density
# ---------------------------------------------------------------------------

def cmd_density(config: RunConfig, e1=None, e2=None,
                output: Optional[str] = None) -> int:
    lang = build_language(config)
    e1 = config.density.get("e1", 0) if e1 is None else e1
    e2 = config.density.get("e2", 2) if e2 is None else e2
    report = density_counts(lang.alphabet, e1, e2)
    mismatch = (report.closed_form_count is not None
                and report.closed_form_count != report.enumerated_count)
    _emit({
        "e1": str(report.e1), "e2": str(report.e2), "delta": str(report.delta),
        "image_lengths": [report.lo, report.hi],
        "enumerated_count": report.enumerated_count,
        "closed_form_count": report.closed_form_count,
        "count_excluding_empty": report.count_excluding_empty,
        "passed": not mismatch,
    }, output or config.output_path)
    return ExitStatus.VIOLATION if mismatch else ExitStatus.OK


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="phasebench",
        description="Exhaustive verification of acceptance-fraction phase "
                    "transitions at desk scale.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--config", help="JSON config path")
        p.add_argument("--budget", type=int, help="override image-length budget")
        p.add_argument("--alphabet-size", type=int, dest="alphabet_size",
                       help="override alphabet size")
        p.add_argument("--c", help="override bound constant (e.g. sqrt_half, 0.7072)")
        p.add_argument("--poly", help="override poly coefficients, comma separated")
        p.add_argument("--output", help="write the report here instead of stdout")

    p_lemmas = sub.add_parser("lemmas", help="run the counting/bound suites")
    common(p_lemmas)

    p_scan = sub.add_parser("scan", help="emit acceptance-fraction curves")
    common(p_scan)
    p_scan.add_argument("--delta", type=float, help="override window width")
    p_scan.add_argument("--exempt-radius", type=float, dest="exempt_radius",
                        help="override threshold exemption radius")
    p_scan.add_argument("--workers", type=int, help="override worker count")

    p_iso = sub.add_parser("iso", help="build/verify/export/import encodings")
    p_iso.add_argument("action", choices=["build", "verify", "export", "import"])
    common(p_iso)
    p_iso.add_argument("--table", help="table JSON path (for import)")

    p_density = sub.add_parser("density", help="parameter-interval input counts")
    common(p_density)
    p_density.add_argument("--e1", type=float, help="interval start magnitude")
    p_density.add_argument("--e2", type=float, help="interval end magnitude")
    return parser


def _config_from_args(args) -> RunConfig:
    overrides = {}
    for key in ("budget", "alphabet_size", "delta", "exempt_radius", "workers"):
        value = getattr(args, key, None)
        if value is not None:
            overrides[key] = value
    doc = {}
    if args.config:
        try:
            doc = json.loads(Path(args.config).read_text())
        except OSError as exc:
            raise ConfigError(f"cannot read config {args.config}: {exc}") from None
        except json.JSONDecodeError as exc:
            raise ConfigError(
                f"config {args.config} is not valid JSON: {exc}") from None
        if not isinstance(doc, dict):
            raise ConfigError("config document must be a JSON object")
    bounds = dict(doc.get("bounds", {}))
    if getattr(args, "c", None) is not None:
        bounds["c"] = args.c
    if getattr(args, "poly", None) is not None:
        bounds["poly"] = [coef.strip() for coef in args.poly.split(",")]
    if bounds:
        doc = dict(doc)
        doc["bounds"] = bounds
    return parse_config(doc, overrides)


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        config = _config_from_args(args)
        if args.command == "lemmas":
            return cmd_lemmas(config, output=args.output)
        if args.command == "scan":
            return cmd_scan(config, output=args.output)
        if args.command == "iso":
            return cmd_iso(config, args.action, table_path=args.table,
                           output=args.output)
        if args.command == "density":
            return cmd_density(config, e1=args.e1, e2=args.e2,
                               output=args.output)
        raise ConfigError(f"unknown command {args.command!r}")
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return ExitStatus.CONFIG
    except IsoInfeasibleError as exc:
        print(f"encoding infeasible: {exc}", file=sys.stderr)
        return ExitStatus.INFEASIBLE
    except PhasebenchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return ExitStatus.VIOLATION


def entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
