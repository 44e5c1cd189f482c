"""
Kronecker coefficients as signed sums of vector partition function values

g(λ, μ, ν) = Σ_σ sgn(σ) p_A(b(λ, μ, ν; σ)), the sum running over S_mn.
"""

from typing import Dict, List, Optional, Sequence, Tuple
from concurrent.futures import ThreadPoolExecutor
from itertools import permutations
from math import factorial, prod
import logging
import threading

from .config import Settings, settings
from .exceptions import InvariantError
from .linear_forms import VpfInput, identity, ls_lt, permutation_sign, target_vector
from .models import KroneckerResult, TermReport
from .partitions import PartitionTriple
from .substitution import build_degree_table, build_matrix
from .trace import TermTrace
from .vpf import CountTable, MemoTable, vpf

logger = logging.getLogger(__name__)


class KroneckerEngine:
    """Shape-specific state shared by every coefficient at (m, n): degree
    table, matrix and one memo table."""

    def __init__(self, m: int, n: int):
        self.m = m
        self.n = n
        self.size = m * n
        self.degenerate = m < 2 or n < 2
        self.memo: Optional[MemoTable] = None
        if not self.degenerate:
            self.table = build_degree_table(m, n)
            self.matrix = build_matrix(m, n)
            self.memo = self._open_memo()

    @property
    def settings(self) -> Settings:
        return settings()

    def _open_memo(self) -> MemoTable:
        config = self.settings
        if config.persist_memo:
            path = config.memo_path(self.matrix.hash())
            if path.exists():
                return MemoTable.load(path, self.matrix)
        return MemoTable(self.matrix)

    def save_memo(self) -> None:
        if self.memo is not None and self.settings.persist_memo:
            self.memo.save(self.settings.memo_path(self.memo.matrix_hash))

    # -- σ enumeration -------------------------------------------------

    def survivors(self, t: PartitionTriple) -> List[VpfInput]:
        """σ in lexicographic order whose input b(σ) has no negative coordinate.

        Every term of l(σ) is non-negative, so a prefix of σ whose partial
        exponent already exceeds r + α cannot lead to a survivor.
        """
        size = self.size
        target = target_vector(t)
        rows = len(target)
        weights = [t.lam[k - 1] + size - k for k in range(1, size + 1)]
        degrees = self.table.degrees
        used = [False] * size
        sigma = [0] * size
        found: List[VpfInput] = []

        def dfs(j: int, partial: Tuple[int, ...], inversions: int) -> None:
            if j == size:
                coords = tuple(a - b for a, b in zip(target, partial))
                found.append(VpfInput(coords, tuple(sigma), -1 if inversions % 2 else 1))
                return
            deg = degrees[j]
            smaller_used = 0
            for v in range(1, size + 1):
                if used[v - 1]:
                    smaller_used += 1
                    continue
                w = weights[v - 1]
                nxt = tuple(partial[u] + deg[u] * w for u in range(rows))
                if any(nxt[u] > target[u] for u in range(rows)):
                    continue
                used[v - 1] = True
                sigma[j] = v
                dfs(j + 1, nxt, inversions + (j - smaller_used))
                used[v - 1] = False

        dfs(0, (0,) * rows, 0)
        return found

    def all_terms(self, t: PartitionTriple) -> List[TermReport]:
        """Every σ of S_mn with its input; counts are filled in by the caller"""
        target = target_vector(t)
        reports = []
        for sigma in permutations(range(1, self.size + 1)):
            l = ls_lt(t.lam, sigma, self.m, self.n, self.table)
            coords = tuple(a - b for a, b in zip(target, l))
            reports.append(
                TermReport(sigma=sigma, sign=permutation_sign(sigma), b=coords, skipped=any(c < 0 for c in coords))
            )
        return reports

    # -- evaluation ----------------------------------------------------

    def evaluate(self, points: Sequence[Tuple[int, ...]], corner: Tuple[int, ...]) -> List[int]:
        """p_A at many points, all dominated by ``corner``"""
        if not points:
            return []
        config = self.settings
        cells = prod(c + 1 for c in corner)
        if cells <= config.dense_cell_limit:
            logger.debug("dense count table over %s (%d cells) for %d points", corner, cells, len(points))
            return CountTable(self.matrix, corner).evaluate_many(points)
        logger.debug("memoized recursion for %d points with %d threads", len(points), config.threads)
        if config.threads <= 1:
            return [vpf(self.matrix, p, self.memo) for p in points]
        chunk = -(-len(points) // config.threads)
        chunks = [points[i : i + chunk] for i in range(0, len(points), chunk)]
        with ThreadPoolExecutor(max_workers=config.threads) as pool:
            parts = pool.map(lambda c: [vpf(self.matrix, p, self.memo) for p in c], chunks)
            return [value for part in parts for value in part]

    def atomic(self, t: PartitionTriple) -> int:
        t.require_equal_sizes()
        if self.degenerate:
            return _degenerate_value(t)
        b = target_vector(t)
        l = ls_lt(t.lam, identity(self.size), self.m, self.n, self.table)
        b = tuple(x - y for x, y in zip(b, l))
        if any(v < 0 for v in b):
            return 0
        return self.evaluate([b], b)[0]

    def kronecker(self, t: PartitionTriple, collect_terms: bool = False, trace: Optional[TermTrace] = None) -> KroneckerResult:
        t.require_equal_sizes()
        total_terms = factorial(self.size)
        if self.degenerate:
            value = _degenerate_value(t)
            return KroneckerResult(m=self.m, n=self.n, value=value, atomic=value, terms_evaluated=0, terms_skipped=0)

        if collect_terms or trace is not None:
            reports = self.all_terms(t)
            live = [r for r in reports if not r.skipped]
            inputs = [VpfInput(r.b, r.sigma, r.sign) for r in live]
        else:
            reports = None
            inputs = self.survivors(t)

        if not inputs:
            result = KroneckerResult(
                m=self.m, n=self.n, value=0, atomic=0, terms_evaluated=0, terms_skipped=total_terms, terms=reports
            )
            self._emit(reports, trace)
            return result

        corner = inputs[0].coords
        if inputs[0].sigma != identity(self.size):
            raise InvariantError("identity term must survive whenever any term does", {"first": list(inputs[0].sigma)})
        for item in inputs:
            if any(v > c for v, c in zip(item.coords, corner)):
                raise InvariantError(
                    "b(sigma) is not dominated by b(Id)", {"sigma": list(item.sigma), "b": list(item.coords)}
                )
        counts = self.evaluate([item.coords for item in inputs], corner)
        atomic_value = counts[0]

        value = 0
        positive = negative = 0
        for item, count in zip(inputs, counts):
            if count == 0:
                continue
            if item.sign > 0:
                positive += 1
                if count > atomic_value:
                    raise InvariantError(
                        "positive term exceeds the atomic coefficient", {"sigma": list(item.sigma), "count": str(count)}
                    )
            else:
                negative += 1
            value += item.sign * count
        if value < 0:
            raise InvariantError("signed sum is negative", {"value": str(value), "triple": repr(t)})

        if reports is not None:
            by_sigma: Dict[Tuple[int, ...], int] = {item.sigma: count for item, count in zip(inputs, counts)}
            for report in reports:
                if not report.skipped:
                    report.count = by_sigma[report.sigma]
        logger.debug("%r: %d evaluated, %d nonzero, g=%d", t, len(inputs), positive + negative, value)
        self._emit(reports, trace)
        self.save_memo()
        return KroneckerResult(
            m=self.m,
            n=self.n,
            value=value,
            atomic=atomic_value,
            terms_evaluated=len(inputs),
            terms_skipped=total_terms - len(inputs),
            positive_terms=positive,
            negative_terms=negative,
            terms=reports,
        )

    @staticmethod
    def _emit(reports: Optional[List[TermReport]], trace: Optional[TermTrace]) -> None:
        if trace is None or reports is None:
            return
        for report in reports:
            trace.log_term(report)


def _degenerate_value(t: PartitionTriple) -> int:
    """m = 1 or n = 1: g(λ, (N), ν) = [λ = ν] and g(λ, μ, (N)) = [λ = μ]"""
    if t.m == 1 and t.lam.parts == t.nu.parts:
        return 1
    if t.n == 1 and t.lam.parts == t.mu.parts:
        return 1
    return 0


_engines: Dict[Tuple[int, int], KroneckerEngine] = {}
_engines_lock = threading.Lock()


def engine_for(m: int, n: int) -> KroneckerEngine:
    """The shared engine for (m, n); safe to call from several threads"""
    key = (m, n)
    with _engines_lock:
        if key not in _engines:
            _engines[key] = KroneckerEngine(m, n)
        return _engines[key]


def reset_engines() -> None:
    with _engines_lock:
        _engines.clear()


def kronecker(t: PartitionTriple, collect_terms: bool = False, trace: Optional[TermTrace] = None) -> KroneckerResult:
    return engine_for(t.m, t.n).kronecker(t, collect_terms=collect_terms, trace=trace)


def atomic(t: PartitionTriple) -> int:
    """p_A(b(λ, μ, ν; Id)); depends on the ambient shape (m, n)"""
    return engine_for(t.m, t.n).atomic(t)


def count_contributing_terms(t: PartitionTriple) -> int:
    """Number of σ whose contribution sgn(σ)·p_A(b(σ)) is nonzero, of either sign"""
    return kronecker(t).nonzero_terms


def contribution_profile(t: PartitionTriple) -> Tuple[int, int]:
    """(positive, negative) contributing term counts"""
    result = kronecker(t)
    return result.positive_terms, result.negative_terms


def stability_sequence(base: PartitionTriple, direction: PartitionTriple, k_max: int) -> List[int]:
    values = []
    for k in range(k_max + 1):
        triple = base + direction.scaled(k)
        values.append(kronecker(triple).value)
        logger.debug("stability k=%d: %d", k, values[-1])
    return values
