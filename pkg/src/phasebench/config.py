"""JSON run configuration: parsing, validation, and object construction."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, Optional, Tuple, Union

from .alphabet import Alphabet, word_from_digits
from .errors import ConfigError
from .exactnum import SQRT_HALF, Root2Num
from .isomorphism import PIso, build_table_iso, identity_iso
from .languages import BUILTIN_LANGUAGES, LanguageSpec, table_language
from .transition import BoundParams

SQRT_HALF_NAMES = {"sqrt_half", "sqrt(1/2)", "1/sqrt(2)", "1/sqrt2"}


def parse_c(value: Any) -> Union[Root2Num, Fraction]:
    if isinstance(value, str):
        if value.strip().lower() in SQRT_HALF_NAMES:
            return SQRT_HALF
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError):
            raise ConfigError(f"cannot parse bound constant {value!r}") from None
    if isinstance(value, bool):
        raise ConfigError(f"cannot parse bound constant {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        return Fraction(str(value))
    raise ConfigError(f"cannot parse bound constant {value!r}")


def parse_poly(value: Any) -> Tuple[Union[int, Fraction], ...]:
    if isinstance(value, (int, float, str)):
        value = [value]
    if not isinstance(value, (list, tuple)) or not value:
        raise ConfigError(f"poly must be a non-empty coefficient list, got {value!r}")
    coeffs = []
    for coef in value:
        if isinstance(coef, bool):
            raise ConfigError(f"bad poly coefficient {coef!r}")
        if isinstance(coef, int):
            coeffs.append(coef)
        elif isinstance(coef, float):
            coeffs.append(Fraction(str(coef)))
        elif isinstance(coef, str):
            try:
                coeffs.append(Fraction(coef))
            except (ValueError, ZeroDivisionError):
                raise ConfigError(f"bad poly coefficient {coef!r}") from None
        else:
            raise ConfigError(f"bad poly coefficient {coef!r}")
    return tuple(coeffs)


@dataclass
class RunConfig:
    alphabet_size: int = 2
    language: Dict[str, Any] = field(default_factory=lambda: {"builtin": "odd_weight"})
    iso: Dict[str, Any] = field(default_factory=lambda: {"mode": "identity"})
    budget: int = 10
    bounds: BoundParams = field(default_factory=BoundParams)
    delta: float = 1.0
    exempt_radius: float = 1.0
    growth_base: Optional[float] = None
    output_path: Optional[str] = None
    workers: Optional[int] = None
    density: Dict[str, Any] = field(default_factory=dict)


def _expect_int(doc: Dict[str, Any], key: str, default: int, minimum: int) -> int:
    value = doc.get(key, default)
    if isinstance(value, bool) or not isinstance(value, int):
        raise ConfigError(f"{key} must be an integer, got {value!r}")
    if value < minimum:
        raise ConfigError(f"{key} must be >= {minimum}, got {value}")
    return value


def _expect_number(doc: Dict[str, Any], key: str, default: float) -> float:
    value = doc.get(key, default)
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(f"{key} must be a number, got {value!r}")
    return float(value)


def parse_config(doc: Dict[str, Any],
                 overrides: Optional[Dict[str, Any]] = None) -> RunConfig:
    if not isinstance(doc, dict):
        raise ConfigError("config document must be a JSON object")
    doc = dict(doc)
    for key, value in (overrides or {}).items():
        if value is not None:
            doc[key] = value
    known = {"alphabet_size", "language", "iso", "budget", "bounds", "delta",
             "exempt_radius", "growth_base", "output_path", "workers", "density"}
    unknown = set(doc) - known
    if unknown:
        raise ConfigError(f"unknown config keys: {sorted(unknown)}")
    size = _expect_int(doc, "alphabet_size", 2, 2)
    if size % 2 != 0:
        raise ConfigError(f"alphabet_size must be even, got {size}")
    budget = _expect_int(doc, "budget", 10, 1)
    bounds_doc = doc.get("bounds", {})
    if not isinstance(bounds_doc, dict):
        raise ConfigError("bounds must be an object")
    bounds = BoundParams(parse_c(bounds_doc.get("c", "sqrt_half")),
                         parse_poly(bounds_doc.get("poly", [4])))
    delta = _expect_number(doc, "delta", 1.0)
    if delta <= 0:
        raise ConfigError(f"delta must be > 0, got {delta}")
    radius = _expect_number(doc, "exempt_radius", 1.0)
    if radius < 0:
        raise ConfigError(f"exempt_radius must be >= 0, got {radius}")
    growth = doc.get("growth_base")
    if growth is not None and (isinstance(growth, bool)
                               or not isinstance(growth, (int, float))
                               or growth <= 1):
        raise ConfigError(f"growth_base must be a number > 1, got {growth!r}")
    workers = doc.get("workers")
    if workers is not None:
        if isinstance(workers, bool) or not isinstance(workers, int) or workers < 1:
            raise ConfigError(f"workers must be an integer >= 1, got {workers!r}")
    output = doc.get("output_path")
    if output is not None and not isinstance(output, str):
        raise ConfigError(f"output_path must be a string, got {output!r}")
    language = doc.get("language", {"builtin": "odd_weight"})
    iso = doc.get("iso", {"mode": "identity"})
    if not isinstance(language, dict) or not isinstance(iso, dict):
        raise ConfigError("language and iso blocks must be objects")
    density = doc.get("density", {})
    if not isinstance(density, dict):
        raise ConfigError("density block must be an object")
    return RunConfig(size, language, iso, budget, bounds, delta, radius,
                     growth, output, workers, density)


def load_config(path: Union[str, Path],
                overrides: Optional[Dict[str, Any]] = None) -> RunConfig:
    try:
        doc = json.loads(Path(path).read_text())
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config {path} is not valid JSON: {exc}") from None
    return parse_config(doc, overrides)


def build_language(config: RunConfig) -> LanguageSpec:
    alphabet = Alphabet.of_size(config.alphabet_size)
    block = config.language
    if "builtin" in block:
        name = block["builtin"]
        try:
            factory = BUILTIN_LANGUAGES[name]
        except KeyError:
            raise ConfigError(
                f"unknown builtin language {name!r}; "
                f"available: {sorted(BUILTIN_LANGUAGES)}") from None
        return factory(alphabet)
    if "table" in block:
        table_block = block["table"]
        if not isinstance(table_block, dict):
            raise ConfigError("language.table must be an object")
        max_len = table_block.get("maxLen")
        if isinstance(max_len, bool) or not isinstance(max_len, int) or max_len < 1:
            raise ConfigError("language.table.maxLen must be an integer >= 1")
        members = table_block.get("members", [])
        if not isinstance(members, list):
            raise ConfigError("language.table.members must be a list")
        words = frozenset(word_from_digits(m, alphabet) for m in members)
        return table_language(alphabet, words, max_len)
    raise ConfigError("language block needs either 'builtin' or 'table'")


def build_iso(config: RunConfig, lang: LanguageSpec) -> PIso:
    block = config.iso
    mode = block.get("mode", "identity")
    if mode == "identity":
        return identity_iso(lang.alphabet)
    if mode == "table":
        budget = block.get("budget", config.budget)
        if isinstance(budget, bool) or not isinstance(budget, int) or budget < 1:
            raise ConfigError("iso.budget must be an integer >= 1")
        if budget < config.budget:
            raise ConfigError(
                f"iso.budget {budget} is below the scan budget {config.budget}")
        return build_table_iso(lang, budget)
    raise ConfigError(f"unknown iso mode {mode!r}")
