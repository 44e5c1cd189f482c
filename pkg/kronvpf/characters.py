"""
Symmetric group characters and Kronecker coefficients from them

Shares no code with the vector partition path, so the two can check each other:
    g(λ, μ, ν) = (1/N!) Σ_ρ |C_ρ| χ^λ(ρ) χ^μ(ρ) χ^ν(ρ)
"""

from typing import List, Sequence, Tuple
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from math import factorial, prod
import logging

from .config import settings
from .exceptions import InvariantError, SizeLimitError, SizeMismatchError
from .partitions import Partition, PartitionTriple, partitions_of

logger = logging.getLogger(__name__)


def _beta_set(parts: Sequence[int]) -> Tuple[int, ...]:
    parts = [p for p in parts if p > 0]
    k = len(parts)
    return tuple(sorted(p + k - i for i, p in enumerate(parts, start=1)))


@lru_cache(maxsize=None)
def _mn(beta: Tuple[int, ...], rho: Tuple[int, ...]) -> int:
    """Murnaghan-Nakayama on a beta-set: each rim hook of length r is a bead moved down r"""
    if not rho:
        return 1
    r, rest = rho[0], rho[1:]
    beads = set(beta)
    total = 0
    for b in beta:
        target = b - r
        if target < 0 or target in beads:
            continue
        # leg length = beads jumped over
        jumped = sum(1 for c in beta if target < c < b)
        moved = tuple(sorted((beads - {b}) | {target}))
        value = _mn(moved, rest)
        if value:
            total += -value if jumped % 2 else value
    return total


def _stripped(p) -> Tuple[int, ...]:
    if isinstance(p, Partition):
        return p.stripped()
    return tuple(v for v in p if v > 0)


def character_value(lam, rho) -> int:
    """χ^λ(ρ) for partitions (or part sequences) of the same size"""
    lam_parts, rho_parts = _stripped(lam), _stripped(rho)
    if sum(lam_parts) != sum(rho_parts):
        raise SizeMismatchError(f"|lambda| = {sum(lam_parts)} but |rho| = {sum(rho_parts)}")
    return _mn(_beta_set(lam_parts), tuple(sorted(rho_parts, reverse=True)))


def centralizer_order(rho: Sequence[int]) -> int:
    """z_ρ = Π_i i^{m_i} m_i!"""
    counts = Counter(v for v in rho if v > 0)
    return prod(i**k * factorial(k) for i, k in counts.items())


def class_size(rho: Sequence[int]) -> int:
    return factorial(sum(rho)) // centralizer_order(rho)


@dataclass
class CharacterTable:
    N: int
    partitions: List[Tuple[int, ...]]
    values: List[List[int]] = field(repr=False)
    class_sizes: List[int]

    def value(self, lam: Sequence[int], rho: Sequence[int]) -> int:
        return self.values[self.partitions.index(_stripped(lam))][self.partitions.index(_stripped(rho))]


def character_table(N: int) -> CharacterTable:
    parts = list(partitions_of(N))
    values = [[_mn(_beta_set(lam), rho) for rho in parts] for lam in parts]
    return CharacterTable(N=N, partitions=parts, values=values, class_sizes=[class_size(rho) for rho in parts])


def orthogonality_holds(table: CharacterTable) -> bool:
    order = factorial(table.N)
    size = len(table.partitions)
    for i in range(size):
        for j in range(size):
            rows = sum(c * table.values[i][k] * table.values[j][k] for k, c in enumerate(table.class_sizes))
            if rows != (order if i == j else 0):
                return False
            columns = sum(table.values[k][i] * table.values[k][j] for k in range(size))
            if columns != (order // table.class_sizes[i] if i == j else 0):
                return False
    return True


def kronecker_of(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> int:
    lam, mu, nu = _stripped(lam), _stripped(mu), _stripped(nu)
    N = sum(lam)
    if sum(mu) != N or sum(nu) != N:
        raise SizeMismatchError("partitions must have equal sizes", {"sizes": [N, sum(mu), sum(nu)]})
    limit = settings().oracle_size_limit
    if N > limit:
        raise SizeLimitError(f"character oracle is limited to N <= {limit}, got {N}", {"N": N})
    betas = [_beta_set(p) for p in (lam, mu, nu)]
    total = 0
    for rho in partitions_of(N):
        term = class_size(rho)
        for beta in betas:
            term *= _mn(beta, rho)
            if not term:
                break
        total += term
    order = factorial(N)
    if total % order:
        raise InvariantError("character sum is not divisible by N!", {"sum": str(total), "N": N})
    value = total // order
    if value < 0:
        raise InvariantError("character oracle gave a negative coefficient", {"value": value})
    return value


def kronecker_by_characters(t: PartitionTriple) -> int:
    return kronecker_of(t.lam.parts, t.mu.parts, t.nu.parts)


def murnaghan_littlewood_holds(t: PartitionTriple) -> bool:
    """|λ̄| <= |μ̄| + |ν̄| and its rotations, λ̄ being λ without its first part"""
    bars = [p.size - p[0] for p in (t.lam, t.mu, t.nu)]
    return all(bars[i] <= bars[(i + 1) % 3] + bars[(i + 2) % 3] for i in range(3))
