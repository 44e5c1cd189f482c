"""
Stable faces: triples with b(λ, μ, ν; Id) = 0

On that face g = g̃ = 1, and μ, ν are determined by λ through the rewrite
equations, equivalently through the additive tableau T:
    μ_i = Σ_j λ_{T(i,j)},  ν_j = Σ_i λ_{T(i,j)}
"""

from typing import List, Sequence, Tuple
from dataclasses import dataclass
from itertools import product
import logging

from .engine import atomic, kronecker
from .exceptions import InvariantError, NonDecreasingError, NotAPartitionError, UnsupportedShapeError
from .linear_forms import b_identity, b_identity_forms
from .models import StableTripleReport
from .partitions import Partition, PartitionTriple
from .substitution import matrix_rank

logger = logging.getLogger(__name__)


def _as_partition(values: Sequence[int], length: int, name: str) -> Partition:
    try:
        return Partition(values, length)
    except NonDecreasingError as e:
        raise NotAPartitionError(f"{name} = {tuple(values)} is not a partition", e.details)


def _lam_at(lam: Partition, m: int, n: int) -> Tuple[int, ...]:
    return lam.padded(m * n).parts


def stable_mu_nu(lam: Partition, m: int, n: int) -> Tuple[Partition, Partition]:
    """μ and ν from the rewrite equations"""
    parts = _lam_at(lam, m, n)

    def at(k: int) -> int:
        return parts[k - 1]

    mu = [at(u) + sum(at(i) for i in range(m + (u - 1) * (n - 1) + 1, m + u * (n - 1) + 1)) for u in range(1, m + 1)]
    nu = [sum(at(i) for i in range(1, m + 1))]
    nu += [sum(at(m + (n - 1) * i + v - 1) for i in range(m)) for v in range(2, n + 1)]
    return _as_partition(mu, m, "mu"), _as_partition(nu, n, "nu")


@dataclass(frozen=True)
class AdditiveTableau:
    """Standard tableau of shape m×n with T(i,j) < T(k,l) iff x_i + y_j < x_k + y_l"""

    m: int
    n: int
    entries: Tuple[Tuple[int, ...], ...]
    x_seq: Tuple[int, ...]
    y_seq: Tuple[int, ...]

    def __getitem__(self, index: Tuple[int, int]) -> int:
        i, j = index
        return self.entries[i - 1][j - 1]

    def is_bijection(self) -> bool:
        flat = sorted(v for row in self.entries for v in row)
        return flat == list(range(1, self.m * self.n + 1))

    def is_additive(self) -> bool:
        cells = list(product(range(1, self.m + 1), range(1, self.n + 1)))
        for (i, j), (k, l) in product(cells, cells):
            entry_less = self[i, j] < self[k, l]
            weight_less = self.x_seq[i - 1] + self.y_seq[j - 1] < self.x_seq[k - 1] + self.y_seq[l - 1]
            if entry_less != weight_less:
                return False
        return True

    def a_T(self, lam: Partition) -> Tuple[int, ...]:
        parts = _lam_at(lam, self.m, self.n)
        return tuple(sum(parts[v - 1] for v in row) for row in self.entries)

    def b_T(self, lam: Partition) -> Tuple[int, ...]:
        parts = _lam_at(lam, self.m, self.n)
        return tuple(sum(parts[row[j] - 1] for row in self.entries) for j in range(self.n))


def build_additive_tableau(m: int, n: int) -> AdditiveTableau:
    if m < 1 or n < 1:
        raise UnsupportedShapeError(f"tableau shape must be positive, got ({m}, {n})")
    entries = tuple(
        tuple(i if j == 1 else m + (i - 1) * (n - 1) + (j - 1) for j in range(1, n + 1)) for i in range(1, m + 1)
    )
    x_seq = tuple((i - 1) * (n - 1) for i in range(1, m + 1))
    y_seq = (0,) + tuple((m - 1) * (n - 1) + j - 1 for j in range(2, n + 1))
    tableau = AdditiveTableau(m, n, entries, x_seq, y_seq)
    if not tableau.is_bijection() or not tableau.is_additive():
        raise InvariantError(f"tableau for ({m}, {n}) is not additive", {"entries": [list(r) for r in entries]})
    return tableau


def stable_triple(lam: Partition, m: int, n: int) -> PartitionTriple:
    mu, nu = stable_mu_nu(lam, m, n)
    return PartitionTriple(lam.padded(m * n), mu, nu, m, n)


def is_stable_face_member(t: PartitionTriple) -> bool:
    t.require_equal_sizes()
    by_b = not any(b_identity(t))
    try:
        mu, nu = stable_mu_nu(t.lam, t.m, t.n)
        by_equations = mu == t.mu and nu == t.nu
    except NotAPartitionError:
        by_equations = False
    if by_b != by_equations:
        raise InvariantError("b(Id) = 0 and the rewrite equations disagree", {"triple": repr(t)})
    return by_b


def verify_rank_condition(m: int, n: int) -> bool:
    """rank of {b(Id) = 0, |μ| = |λ|, |ν| = |λ|} is m + n, also with the λ columns removed"""
    size = m * n
    rows: List[List[int]] = [list(form.coefficients()) for form in b_identity_forms(m, n)]
    rows.append([1] * size + [-1] * m + [0] * n)
    rows.append([1] * size + [0] * m + [-1] * n)
    full = matrix_rank(rows)
    reduced = matrix_rank([row[size:] for row in rows])
    logger.debug("(%d,%d): rank Q = %d, rank Q' = %d", m, n, full, reduced)
    return full == m + n and reduced == m + n


def stable_triple_report(lam: Partition, m: int, n: int, evaluate: bool = True) -> StableTripleReport:
    t = stable_triple(lam, m, n)
    tableau = build_additive_tableau(m, n)
    tableau_agrees = tableau.a_T(lam) == t.mu.parts and tableau.b_T(lam) == t.nu.parts
    report = StableTripleReport(
        m=m,
        n=n,
        lam=t.lam.parts,
        mu=t.mu.parts,
        nu=t.nu.parts,
        b_identity=b_identity(t),
        member=is_stable_face_member(t),
        tableau_agrees=tableau_agrees,
    )
    if evaluate:
        report.kronecker = kronecker(t).value
        report.atomic = atomic(t)
    return report
