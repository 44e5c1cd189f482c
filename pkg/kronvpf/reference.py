"""
Catalogue of published worked examples and the checks that reproduce them
"""

from typing import Any, Callable, Dict, List, Optional
from pathlib import Path
import logging
import time

import toml

from .bounds import compare_bounds, sci
from .characters import kronecker_by_characters
from .engine import atomic, count_contributing_terms, kronecker, stability_sequence
from .exceptions import InputError
from .feasibility import feasibility_report
from .models import ReferenceCheck
from .partitions import PartitionTriple
from .substitution import build_matrix
from .vpf import vpf_polynomial_degree

logger = logging.getLogger(__name__)

CATALOGUE = Path(__file__).parent / "data" / "reference_examples.toml"


def load_catalogue(path: Optional[Path] = None) -> List[Dict[str, Any]]:
    path = Path(path) if path else CATALOGUE
    try:
        data = toml.load(path)
    except (OSError, toml.TomlDecodeError) as e:
        raise InputError(f"cannot read example catalogue {path}: {e}", {"path": str(path)})
    return data.get("example", [])


def _triple(entry: Dict[str, Any], prefix: str = "") -> PartitionTriple:
    return PartitionTriple.parse(
        entry.get(prefix + "lambda", ""),
        entry.get(prefix + "mu", ""),
        entry.get(prefix + "nu", ""),
        entry["m"],
        entry["n"],
    )


def _kronecker(entry) -> str:
    return str(kronecker(_triple(entry)).value)


def _atomic(entry) -> str:
    return str(atomic(_triple(entry)))


def _positive_terms(entry) -> str:
    return str(count_contributing_terms(_triple(entry)))


def _stability_sequence(entry) -> str:
    values = stability_sequence(_triple(entry, "base_"), _triple(entry), entry.get("k_max", 0))
    return ",".join(str(v) for v in values)


def _oracle(entry) -> str:
    return str(kronecker_by_characters(_triple(entry)))


def _matrix_shape(entry) -> str:
    A = build_matrix(entry["m"], entry["n"])
    return f"{A.rows}x{A.cols}"


def _vpf_degree(entry) -> str:
    return str(vpf_polynomial_degree(build_matrix(entry["m"], entry["n"])))


def _bound(entry) -> str:
    return str(compare_bounds(_triple(entry)).value(entry["source"]))


def _feasible_set(entry) -> str:
    report = feasibility_report(entry["m"], entry["n"])
    return f"{report.with_size_equality}/{report.without_size_equality}"


CHECKS: Dict[str, Callable[[Dict[str, Any]], str]] = {
    "kronecker": _kronecker,
    "atomic": _atomic,
    "positive_terms": _positive_terms,
    "stability_sequence": _stability_sequence,
    "oracle": _oracle,
    "matrix_shape": _matrix_shape,
    "vpf_degree": _vpf_degree,
    "bound": _bound,
    "feasible_set": _feasible_set,
}


def _matches(entry: Dict[str, Any], actual: str) -> bool:
    expected = str(entry["expected"])
    kind = entry["kind"]
    if kind == "bound":
        value = int(actual)
        if "rel_tol" in entry:
            target = float(expected)
            return abs(value - target) <= entry["rel_tol"] * target
        return sci(value) == expected
    if kind == "feasible_set":
        return expected in actual.split("/")
    return actual == expected


def run_check(entry: Dict[str, Any]) -> ReferenceCheck:
    kind = entry.get("kind")
    if kind not in CHECKS:
        raise InputError(f"unknown example kind {kind!r}", {"name": entry.get("name")})
    start = time.perf_counter()
    actual = CHECKS[kind](entry)
    wall_ms = int((time.perf_counter() - start) * 1000)
    passed = _matches(entry, actual)
    if kind == "bound":
        actual = sci(int(actual))
    logger.debug("%s: expected %s, got %s", entry["name"], entry["expected"], actual)
    return ReferenceCheck(
        name=entry["name"],
        kind=kind,
        expected=str(entry["expected"]),
        actual=actual,
        passed=passed,
        finding=entry.get("finding", "") if not passed else "",
        wall_ms=wall_ms,
    )


def run_catalogue(include_slow: bool = False, path: Optional[Path] = None, names: Optional[List[str]] = None) -> List[ReferenceCheck]:
    checks = []
    for entry in load_catalogue(path):
        if names and entry["name"] not in names:
            continue
        if entry.get("slow", False) and not include_slow:
            logger.info("skipping slow example %s", entry["name"])
            continue
        checks.append(run_check(entry))
    return checks
