"""
Which alternant terms can ever contribute, and how they are ordered

A term σ can contribute only if the polyhedron
    {λ, μ, ν weakly decreasing and >= 0, b(λ, μ, ν; σ) >= 0 [, |λ| = |μ| = |ν|]}
is nonempty. Nonemptiness is decided by exact Fourier-Motzkin elimination on
integer rows; a row (a, c) stands for a·x + c >= 0.
"""

from typing import Dict, FrozenSet, Iterable, List, Optional, Set, Tuple
from itertools import permutations
from math import factorial, gcd
import logging

from .config import settings
from .exceptions import ResourceGuardError
from .linear_forms import LinearForm, Permutation, b_forms, build_degree_table, ls_lt_forms
from .models import FeasibilityReport

logger = logging.getLogger(__name__)

Row = Tuple[Tuple[int, ...], int]

PUBLISHED_COUNTS = {(2, 2): 7, (2, 3): 482, (2, 4): 28322}

# pairwise comparisons grow quadratically; beyond this the poset is refused
MAX_POSET_ELEMENTS = 1000


def _normalize(coeffs: Tuple[int, ...], constant: int) -> Row:
    g = 0
    for c in coeffs:
        g = gcd(g, c)
    g = gcd(g, constant)
    if g > 1:
        coeffs = tuple(c // g for c in coeffs)
        constant //= g
    return coeffs, constant


class FourierMotzkin:
    """Feasibility of {x : a·x + c >= 0 for every row, e·x + d = 0 for every equality}"""

    def __init__(self, dimension: int, row_limit: int):
        self.dimension = dimension
        self.row_limit = row_limit
        self.rows: Dict[Tuple[int, ...], int] = {}
        self.equalities: List[Row] = []
        self.infeasible = False

    def add_inequality(self, coeffs: Iterable[int], constant: int) -> None:
        coeffs = tuple(coeffs)
        if not any(coeffs):
            if constant < 0:
                self.infeasible = True
            return
        coeffs, constant = _normalize(coeffs, constant)
        # keep the tightest constant per direction
        if coeffs not in self.rows or constant < self.rows[coeffs]:
            self.rows[coeffs] = constant

    def add_equality(self, coeffs: Iterable[int], constant: int) -> None:
        self.equalities.append((tuple(coeffs), constant))

    def _substitute_equalities(self) -> None:
        equalities = list(self.equalities)
        while equalities:
            coeffs, constant = equalities.pop()
            pivot = next((j for j, c in enumerate(coeffs) if c), None)
            if pivot is None:
                if constant != 0:
                    self.infeasible = True
                continue
            e = coeffs[pivot]
            scale, sign = abs(e), (1 if e > 0 else -1)

            def eliminate(row: Row) -> Row:
                a, c = row
                r = a[pivot]
                if r == 0:
                    return row
                return (
                    tuple(scale * x - sign * r * y for x, y in zip(a, coeffs)),
                    scale * c - sign * r * constant,
                )

            old = list(self.rows.items())
            self.rows = {}
            for row in old:
                self.add_inequality(*eliminate(row))
            equalities = [eliminate(eq) for eq in equalities]

    def feasible(self) -> bool:
        self._substitute_equalities()
        while not self.infeasible:
            active = [j for j in range(self.dimension) if any(a[j] for a in self.rows)]
            if not active:
                break
            counts = {}
            for j in active:
                pos = sum(1 for a in self.rows if a[j] > 0)
                neg = sum(1 for a in self.rows if a[j] < 0)
                counts[j] = (pos * neg, pos, neg)
            j = min(active, key=lambda k: counts[k][0])
            self._eliminate(j)
            if len(self.rows) > self.row_limit:
                raise ResourceGuardError(
                    f"Fourier-Motzkin exceeded {self.row_limit} rows", {"rows": len(self.rows)}
                )
        return not self.infeasible

    def _eliminate(self, j: int) -> None:
        pos, neg, rest = [], [], []
        for a, c in self.rows.items():
            (pos if a[j] > 0 else neg if a[j] < 0 else rest).append((a, c))
        self.rows = {}
        for a, c in rest:
            self.add_inequality(a, c)
        # one-sided variables leave their rows slack
        for a_p, c_p in pos:
            for a_n, c_n in neg:
                p, q = a_p[j], -a_n[j]
                coeffs = tuple(q * x + p * y for x, y in zip(a_p, a_n))
                self.add_inequality(coeffs, q * c_p + p * c_n)
                if self.infeasible:
                    return


def _partition_rows(offset: int, length: int, dimension: int) -> List[Row]:
    rows = []
    for i in range(length):
        coeffs = [0] * dimension
        coeffs[offset + i] = 1
        if i + 1 < length:
            coeffs[offset + i + 1] = -1
        rows.append((tuple(coeffs), 0))
    return rows


def sigma_feasible(m: int, n: int, sigma: Permutation, include_size_equality: bool = True, row_limit: Optional[int] = None) -> bool:
    size = m * n
    dimension = size + m + n
    solver = FourierMotzkin(dimension, row_limit or settings().fm_row_limit)
    for offset, length in ((0, size), (size, m), (size + m, n)):
        for coeffs, constant in _partition_rows(offset, length, dimension):
            solver.add_inequality(coeffs, constant)
    for form in b_forms(m, n, sigma):
        solver.add_inequality(form.coefficients(), form.constant)
    if include_size_equality:
        lam = [1] * size
        solver.add_equality(lam + [-1] * m + [0] * n, 0)
        solver.add_equality(lam + [0] * m + [-1] * n, 0)
    return solver.feasible()


def _guard(m: int, n: int) -> None:
    limit = settings().poset_limit
    if m * n > limit:
        raise ResourceGuardError(f"mn = {m * n} exceeds the configured limit {limit}", {"shape": [m, n]})


def feasible_sigma_set(m: int, n: int, include_size_equality: bool = True) -> Set[Permutation]:
    _guard(m, n)
    row_limit = settings().fm_row_limit
    found = {
        sigma
        for sigma in permutations(range(1, m * n + 1))
        if sigma_feasible(m, n, sigma, include_size_equality, row_limit)
    }
    logger.debug("(%d,%d) size_equality=%s: %d feasible terms", m, n, include_size_equality, len(found))
    return found


def feasibility_report(m: int, n: int) -> FeasibilityReport:
    with_eq = len(feasible_sigma_set(m, n, True))
    without_eq = len(feasible_sigma_set(m, n, False))
    published = PUBLISHED_COUNTS.get((m, n))
    findings = []
    if published is not None and published not in (with_eq, without_eq):
        findings.append(
            f"published bound {published} matches neither convention ({with_eq} with size equality, {without_eq} without)"
        )
    return FeasibilityReport(
        m=m,
        n=n,
        total=factorial(m * n),
        with_size_equality=with_eq,
        without_size_equality=without_eq,
        published=published,
        findings=findings,
    )


class SigmaPoset:
    """σ_1 <= σ_2 iff l(σ_1) dominates l(σ_2) for every partition λ"""

    def __init__(self, m: int, n: int, elements: List[Permutation], forms: Dict[Permutation, Tuple[LinearForm, ...]]):
        self.m = m
        self.n = n
        self.elements = elements
        self._forms = forms
        self._leq: Dict[Tuple[Permutation, Permutation], bool] = {}
        for a in elements:
            for b in elements:
                self._leq[(a, b)] = all(
                    (x - y).dominates_over_partitions() for x, y in zip(forms[a], forms[b])
                )

    def leq(self, a: Permutation, b: Permutation) -> bool:
        return self._leq[(a, b)]

    def less(self, a: Permutation, b: Permutation) -> bool:
        return self._leq[(a, b)] and not self._leq[(b, a)]

    def equivalent(self, a: Permutation, b: Permutation) -> bool:
        return self._leq[(a, b)] and self._leq[(b, a)]

    @property
    def covers(self) -> List[Tuple[Permutation, Permutation]]:
        """Hasse edges (lower, upper)"""
        edges = []
        for a in self.elements:
            for b in self.elements:
                if not self.less(a, b):
                    continue
                if any(self.less(a, c) and self.less(c, b) for c in self.elements):
                    continue
                edges.append((a, b))
        return edges

    def maximal(self) -> List[Permutation]:
        return [a for a in self.elements if not any(self.less(a, b) for b in self.elements)]

    def is_transitive(self) -> bool:
        for a in self.elements:
            for b in self.elements:
                if not self._leq[(a, b)]:
                    continue
                for c in self.elements:
                    if self._leq[(b, c)] and not self._leq[(a, c)]:
                        return False
        return True

    def is_antisymmetric_up_to_forms(self) -> bool:
        """Mutually comparable elements have coefficient-equal forms"""
        return all(
            self._forms[a] == self._forms[b]
            for a in self.elements
            for b in self.elements
            if self.equivalent(a, b)
        )


def build_sigma_poset(m: int, n: int, restrict_to: Optional[Iterable[Permutation]] = None) -> SigmaPoset:
    _guard(m, n)
    if restrict_to is None:
        if factorial(m * n) > MAX_POSET_ELEMENTS:
            raise ResourceGuardError(
                f"S_{m * n} has {factorial(m * n)} elements; restrict the poset", {"limit": MAX_POSET_ELEMENTS}
            )
        elements = list(permutations(range(1, m * n + 1)))
    else:
        elements = sorted(set(tuple(s) for s in restrict_to))
        if len(elements) > MAX_POSET_ELEMENTS:
            raise ResourceGuardError(f"{len(elements)} elements exceed {MAX_POSET_ELEMENTS}")
    table = build_degree_table(m, n)
    forms = {sigma: ls_lt_forms(sigma, m, n, table) for sigma in elements}
    return SigmaPoset(m, n, elements, forms)


def as_one_line(sigma: Permutation) -> str:
    return "".join(str(v) for v in sigma) if len(sigma) < 10 else " ".join(str(v) for v in sigma)


def parse_one_line(text: str) -> Permutation:
    text = text.strip()
    if " " in text or "," in text:
        return tuple(int(v) for v in text.replace(",", " ").split())
    return tuple(int(c) for c in text)


def frozen(perms: Iterable[Permutation]) -> FrozenSet[Permutation]:
    return frozenset(tuple(p) for p in perms)
