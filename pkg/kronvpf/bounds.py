"""
Upper bounds on atomic and ordinary Kronecker coefficients

Replacing every column of A^{m,n} by a standard basis vector at one of its
positive coordinates can only increase p_A, and for a matrix of standard basis
vectors p_E is a product of negative binomials. The per-vector column counts
of that replacement are tracked by ``replacement_accounting``.
"""

from typing import Dict, List, Optional, Sequence, Tuple
from functools import lru_cache
from math import comb, factorial
import logging

from .exceptions import AccountingMismatchError, InputError, LengthBoundError
from .linear_forms import b_identity
from .models import BoundEntry, BoundReport, ReplacementAccounting
from .partitions import PartitionTriple, dimension
from .substitution import (
    TAG_A,
    TAG_B,
    TAG_C1,
    TAG_C2,
    TAG_D1,
    TAG_D2,
    TAG_E,
    TAG_F1,
    TAG_F2,
    Column,
    VpfMatrix,
    build_matrix,
)
from .vpf import standard_basis_count

logger = logging.getLogger(__name__)

KRON_FACTORIAL = "kron_factorial"
KRON_ATOMIC = "kron_atomic"
N_ONLY = "n_only"
PAK_PANOVA_1 = "pak_panova_1"
PAK_PANOVA_2 = "pak_panova_2"
HOOK = "hook"


def binomial_parameters(m: int, n: int) -> Dict[str, object]:
    """c_1, c_2, c_3 and f_1(i), f_2(j) of the closed-form tally"""
    return {
        "c1": (m * m - 1) * (n - 1) - 1,
        "c2": (m - 1) * (n - 1) ** 2 - 1,
        "c3": comb(m - 1, 2) * (n - 1) + (m - 1) - 1,
        "f1": {i: 2 * comb(n - 1, 2) * (i - 2) - 1 for i in range(3, m + 1)},
        "f2": {j: (n - j - 1) * (m - 1) - 1 for j in range(1, n - 2)},
    }


def expected_tallies(m: int, n: int) -> Dict[int, int]:
    """Columns per e_k (1-based) predicted by the closed forms, accumulated per index"""
    p = binomial_parameters(m, n)
    expected = {k: 0 for k in range(1, m + n - 1)}
    expected[1] += p["c1"] + 1
    expected[2] += p["c2"] + 1
    expected[m + n - 2] += p["c3"] + 1
    for i, f in p["f1"].items():
        expected[i] += f + 1
    for j, f in p["f2"].items():
        expected[m + j] += f + 1
    return expected


def preferred_target(column: Column, m: int, n: int) -> int:
    """1-based index of the basis vector the column's tag asks for"""
    a, b, c, d = column.pair
    tag = column.tag
    if tag in (TAG_A, TAG_B, TAG_C2, TAG_D1):
        return 1
    if tag in (TAG_C1, TAG_D2):
        return 2
    if tag == TAG_F1:
        return m + n - 2
    if tag == TAG_E:
        # s_q with q the larger x index, the last s coordinate touched
        return max(a, c) + 1
    if tag == TAG_F2:
        # t_q with q the smaller y index, the first t coordinate touched
        return m + min(b, d)
    raise ValueError(f"unknown tag {tag!r}")


@lru_cache(maxsize=None)
def _accounting(m: int, n: int) -> ReplacementAccounting:
    matrix = build_matrix(m, n)
    rows = matrix.rows
    tallies = {k: 0 for k in range(1, rows + 1)}
    by_tag: Dict[str, Dict[int, int]] = {}
    fallbacks: List[Tuple[int, ...]] = []
    for column in matrix.columns:
        k = preferred_target(column, m, n)
        if not (1 <= k <= rows and column.vector[k - 1] > 0):
            k = max(range(1, rows + 1), key=lambda u: (column.vector[u - 1], u))
            fallbacks.append(column.pair)
        tallies[k] += 1
        by_tag.setdefault(column.tag, {}).setdefault(k, 0)
        by_tag[column.tag][k] += 1

    expected = expected_tallies(m, n)
    mismatches = [
        f"e_{k}: {tallies[k]} columns by the walk, {expected.get(k, 0)} by the closed forms"
        for k in range(1, rows + 1)
        if tallies[k] != expected.get(k, 0)
    ]
    if sum(tallies.values()) != matrix.cols:
        mismatches.append(f"tallies sum to {sum(tallies.values())}, matrix has {matrix.cols} columns")
    if fallbacks:
        logger.debug("(%d,%d): %d columns fell back from their tag target", m, n, len(fallbacks))
    return ReplacementAccounting(
        m=m,
        n=n,
        tallies=tallies,
        expected=expected,
        by_tag=by_tag,
        fallbacks=fallbacks,
        mismatches=mismatches,
        column_count=matrix.cols,
    )


def replacement_accounting(m: int, n: int, strict: bool = False) -> ReplacementAccounting:
    report = _accounting(m, n)
    if strict and report.mismatches:
        raise AccountingMismatchError(
            f"replacement tallies disagree with the closed forms at ({m}, {n})",
            {"mismatches": report.mismatches},
        )
    return report.model_copy(deep=True)


def replacement_multiplicities(m: int, n: int) -> List[int]:
    report = _accounting(m, n)
    source = report.expected if report.consistent else report.tallies
    return [source[k] for k in range(1, m + n - 1)]


def replacement_bound(m: int, n: int, b: Sequence[int]) -> int:
    """Π_k C(b_k + n_k - 1, n_k - 1); 0 when b has a negative coordinate"""
    if any(v < 0 for v in b):
        return 0
    return standard_basis_count(replacement_multiplicities(m, n), b)


def atomic_binomial_bound(t: PartitionTriple) -> int:
    return replacement_bound(t.m, t.n, b_identity(t))


def _half_factorial(m: int, n: int) -> int:
    return factorial(m * n) // 2


def kron_factorial_bound(t: PartitionTriple) -> int:
    """(mn)!/2 · atomic_binomial_bound"""
    return _half_factorial(t.m, t.n) * atomic_binomial_bound(t)


def kron_atomic_bound(t: PartitionTriple, atomic_value: int) -> int:
    """(mn)!/2 · g̃, the tighter variant once g̃ is known"""
    return _half_factorial(t.m, t.n) * atomic_value


def n_only_vector(m: int, n: int, N: int) -> Tuple[int, ...]:
    return (N,) + (2 * N,) * (m - 1) + ((2 * m - 1) * N,) * (n - 2)


def n_only_bound(t: PartitionTriple) -> Tuple[int, int]:
    """(atomic, Kronecker) bounds depending only on m, n and N"""
    t.require_equal_sizes()
    atomic_bound = replacement_bound(t.m, t.n, n_only_vector(t.m, t.n, t.N))
    return atomic_bound, _half_factorial(t.m, t.n) * atomic_bound


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def pak_panova_bounds(t: PartitionTriple, l: int, m: int, n: int) -> Tuple[int, int, int]:
    """(partition-count bound, contingency-table bound, hook-length bound)"""
    for name, p, bound in (("lambda", t.lam, l), ("mu", t.mu, m), ("nu", t.nu, n)):
        if p.length > bound:
            raise LengthBoundError(f"{name} has {p.length} parts, bound is {bound}")
    mn = m * n
    bound1 = 1
    for i, part in enumerate(t.lam.stripped(), start=1):
        if i > mn:
            raise LengthBoundError(f"lambda has more than {mn} parts")
        bound1 *= comb(part - i + mn, mn - i)

    N = t.N
    k = l * m * n
    if N == 0:
        bound2 = 1
    else:
        # (1 + k/N)^N (1 + N/k)^k = (N + k)^(N + k) / (N^N k^k)
        bound2 = _ceil_div((N + k) ** (N + k), N**N * k**k)

    hook = min(dimension(t.lam), dimension(t.mu), dimension(t.nu))
    return bound1, bound2, hook


def exponent_comparison(m: int, n: int, l: int) -> Dict[str, int]:
    """Growth degree in N of the N-only bound against l·m·n for the contingency bound"""
    degree = comb(m * n, 2) - comb(n, 2) - comb(m, 2) - n - m + 2
    return {
        "n_only_degree": degree,
        "contingency_degree": l * m * n,
        # lengths l at or above this give the binomial bound the smaller degree
        "threshold_length": degree // (m * n) + 1,
    }


def sci(value: Optional[int]) -> str:
    """Three significant figures, computed on the exact integer"""
    if value is None:
        return "inf"
    if value < 0:
        return "-" + sci(-value)
    digits = str(value)
    if len(digits) <= 3:
        return digits
    exponent = len(digits) - 1
    rounded = (int(digits[:4]) + 5) // 10
    if rounded == 1000:
        rounded = 100
        exponent += 1
    return f"{rounded // 100}.{rounded % 100:02d}e{exponent}"


def compare_bounds(t: PartitionTriple, atomic_value: Optional[int] = None) -> BoundReport:
    t.require_equal_sizes()
    l = t.m * t.n
    values: List[Tuple[str, Optional[int]]] = [(KRON_FACTORIAL, kron_factorial_bound(t))]
    if atomic_value is not None:
        values.append((KRON_ATOMIC, kron_atomic_bound(t, atomic_value)))
    values.append((N_ONLY, n_only_bound(t)[1]))
    bound1, bound2, hook = pak_panova_bounds(t, l, t.m, t.n)
    values += [(PAK_PANOVA_1, bound1), (PAK_PANOVA_2, bound2), (HOOK, hook)]

    entries = [BoundEntry(source=source, value=value, display=sci(value)) for source, value in values]
    finite = [e for e in entries if e.value is not None]
    best = min(finite, key=lambda e: e.value).source
    exponents = exponent_comparison(t.m, t.n, l)
    note = (
        f"N-only degree {exponents['n_only_degree']} vs contingency degree "
        f"{exponents['contingency_degree']} (binomial wins for l >= {exponents['threshold_length']})"
    )
    return BoundReport(
        lam=t.lam.parts,
        mu=t.mu.parts,
        nu=t.nu.parts,
        m=t.m,
        n=t.n,
        b_identity=b_identity(t),
        entries=entries,
        best=best,
        exponent_note=note,
    )


def single_column_replacement(m: int, n: int, index: int, target: int) -> VpfMatrix:
    """A^{m,n} with column ``index`` replaced by e_target (1-based); target must be legal"""
    matrix = build_matrix(m, n)
    column = matrix.columns[index]
    if column.vector[target - 1] <= 0:
        raise InputError(f"e_{target} is not a legal replacement for column {index}")
    unit = tuple(1 if k == target - 1 else 0 for k in range(matrix.rows))
    columns = list(matrix.columns)
    columns[index] = Column(unit, column.tag, column.pair)
    return VpfMatrix(m, n, tuple(columns))
