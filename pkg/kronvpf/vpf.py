"""
Exact evaluation of vector partition functions p_A(b) = #{x in N^d : Ax = b}
"""

from typing import Dict, Iterable, List, Optional, Sequence, Tuple
from math import comb, prod
from pathlib import Path
import json
import logging

import numpy as np
import sympy
from sympy.ntheory.modular import crt

from .exceptions import CacheMismatchError, DimensionMismatchError, InvariantError, TooLargeError
from .substitution import VpfMatrix, matrix_rank

logger = logging.getLogger(__name__)

Vector = Tuple[int, ...]

# cell values stay below this in an int64 table without overflow on addition
INT64_SAFE = 1 << 62


def standard_basis_count(multiplicities: Sequence[int], b: Sequence[int]) -> int:
    """p_E(b) for E made of n_k copies of e_k: Π C(b_k + n_k - 1, n_k - 1)"""
    total = 1
    for n_k, b_k in zip(multiplicities, b):
        if b_k < 0:
            return 0
        if n_k == 0:
            if b_k:
                return 0
            continue
        total *= comb(b_k + n_k - 1, n_k - 1)
    return total


def _basis_index(vector: Vector) -> Optional[int]:
    if sum(vector) == 1 and all(v >= 0 for v in vector):
        return vector.index(1)
    return None


class _Plan:
    """Branching order for the recursion: big columns first, unit columns as a closed-form tail"""

    def __init__(self, matrix: VpfMatrix):
        tail = [0] * matrix.rows
        branch: List[Vector] = []
        for vector in matrix.vectors:
            k = _basis_index(vector)
            if k is None:
                branch.append(vector)
            else:
                tail[k] += 1
        branch.sort(key=lambda v: (sum(v), v), reverse=True)
        self.branch = tuple(branch)
        self.tail = tuple(tail)


class MemoTable:
    """Shared map (column_index, residual) -> count for one matrix.

    Writes go through dict.setdefault so concurrent workers may race on the
    same key; values are deterministic, so either write wins.
    """

    def __init__(self, matrix: VpfMatrix):
        self.matrix = matrix
        self.matrix_hash = matrix.hash()
        self.plan = _Plan(matrix)
        self._entries: Dict[Tuple[int, Vector], int] = {}

    def get(self, key: Tuple[int, Vector]) -> Optional[int]:
        return self._entries.get(key)

    def put(self, key: Tuple[int, Vector], value: int) -> int:
        return self._entries.setdefault(key, value)

    def __len__(self) -> int:
        return len(self._entries)

    def __contains__(self, key) -> bool:
        return key in self._entries

    def clear(self) -> None:
        self._entries.clear()

    def save(self, path: Path) -> Path:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        data = {
            "matrix_hash": self.matrix_hash,
            "entries": [[i, list(r), str(v)] for (i, r), v in list(self._entries.items())],
        }
        with open(path, "w") as f:
            json.dump(data, f)
        logger.debug("saved %d memo entries to %s", len(self), path)
        return path

    @classmethod
    def load(cls, path: Path, matrix: VpfMatrix) -> "MemoTable":
        with open(path, "r") as f:
            data = json.load(f)
        table = cls(matrix)
        if data.get("matrix_hash") != table.matrix_hash:
            raise CacheMismatchError(
                f"memo cache {path} belongs to a different matrix",
                {"expected": table.matrix_hash, "found": data.get("matrix_hash")},
            )
        for i, r, v in data.get("entries", []):
            table._entries[(int(i), tuple(r))] = int(v)
        logger.debug("loaded %d memo entries from %s", len(table), path)
        return table


def _check_dimension(A: VpfMatrix, b: Sequence[int]) -> None:
    if len(b) != A.rows:
        raise DimensionMismatchError(f"b has length {len(b)}, matrix has {A.rows} rows")


def vpf(A: VpfMatrix, b: Sequence[int], memo: Optional[MemoTable] = None) -> int:
    """Memoized p_A(b)"""
    _check_dimension(A, b)
    b = tuple(int(v) for v in b)
    if any(v < 0 for v in b):
        return 0
    if memo is None:
        memo = MemoTable(A)
    elif memo.matrix is not A and memo.matrix_hash != A.hash():
        raise CacheMismatchError("memo table belongs to a different matrix")
    plan = memo.plan
    return _count(plan.branch, plan.tail, 0, b, memo)


def _count(branch: Tuple[Vector, ...], tail: Tuple[int, ...], i: int, residual: Vector, memo: MemoTable) -> int:
    if i == len(branch):
        return standard_basis_count(tail, residual)
    key = (i, residual)
    cached = memo.get(key)
    if cached is not None:
        return cached
    column = branch[i]
    total = 0
    current = residual
    while True:
        total += _count(branch, tail, i + 1, current, memo)
        current = tuple(r - a for r, a in zip(current, column))
        if any(v < 0 for v in current):
            break
    return memo.put(key, total)


def brute_force_vpf(A: VpfMatrix, b: Sequence[int], limit: int = 10_000_000) -> int:
    """Exhaustive backtracking over column multiplicities, no memo"""
    _check_dimension(A, b)
    b = tuple(int(v) for v in b)
    if any(v < 0 for v in b):
        return 0
    vectors = A.vectors
    states = 0

    def walk(i: int, residual: Vector) -> int:
        nonlocal states
        states += 1
        if states > limit:
            raise TooLargeError(f"brute force exceeded {limit} partial states", {"b": list(b)})
        if i == len(vectors):
            return 1 if not any(residual) else 0
        column = vectors[i]
        total = 0
        current = residual
        while all(v >= 0 for v in current):
            total += walk(i + 1, current)
            if not any(column):
                break
            current = tuple(r - a for r, a in zip(current, column))
        return total

    return walk(0, b)


def vpf_polynomial_degree(A: VpfMatrix) -> int:
    """cols(A) - rank(A): degree of the generic quasi-polynomial"""
    return A.cols - matrix_rank(A.row_lists())


def unit_replacement_bound(A: VpfMatrix, b: Sequence[int]) -> int:
    """Upper bound on p_A over the box [0, b]: each column replaced by e_k at its first positive entry"""
    multiplicities = [0] * A.rows
    for vector in A.vectors:
        k = next(i for i, v in enumerate(vector) if v > 0)
        multiplicities[k] += 1
    return standard_basis_count(multiplicities, b)


def _moduli_for(bound: int) -> List[Optional[int]]:
    if bound < INT64_SAFE:
        return [None]
    moduli: List[Optional[int]] = []
    product = 1
    p = INT64_SAFE
    while product <= bound:
        p = int(sympy.prevprime(p))
        moduli.append(p)
        product *= p
    return moduli


class CountTable:
    """Dense table of p_A over the box [0, corner], built once per modulus"""

    def __init__(self, A: VpfMatrix, corner: Sequence[int], bound: Optional[int] = None):
        _check_dimension(A, corner)
        if any(c < 0 for c in corner):
            raise InvariantError("count table corner must be non-negative", {"corner": list(corner)})
        self.matrix = A
        self.corner = tuple(int(c) for c in corner)
        self.shape = tuple(c + 1 for c in self.corner)
        self.bound = unit_replacement_bound(A, self.corner) if bound is None else bound
        self.moduli = _moduli_for(self.bound)

    @property
    def cells(self) -> int:
        return prod(self.shape)

    def _build(self, modulus: Optional[int]) -> np.ndarray:
        table = np.zeros(self.shape, dtype=np.int64)
        table[(0,) * len(self.shape)] = 1
        for column in self.matrix.vectors:
            if any(a > c for a, c in zip(column, self.corner)):
                continue
            axis = max(range(len(column)), key=lambda k: column[k])
            step = column[axis]
            dst = [slice(a, None) for a in column]
            src = [slice(0, s - a) for a, s in zip(column, self.shape)]
            for i in range(step, self.shape[axis]):
                dst[axis] = i
                src[axis] = i - step
                view = table[tuple(dst)]
                view += table[tuple(src)]
                if modulus is not None:
                    np.remainder(view, modulus, out=view)
        return table

    def evaluate_many(self, points: Iterable[Sequence[int]]) -> List[int]:
        points = [tuple(int(v) for v in p) for p in points]
        inside: List[int] = []
        for index, point in enumerate(points):
            _check_dimension(self.matrix, point)
            if any(v < 0 for v in point):
                continue
            if any(v > c for v, c in zip(point, self.corner)):
                raise InvariantError("point outside the count table box", {"point": list(point), "corner": list(self.corner)})
            inside.append(index)
        results = [0] * len(points)
        if not inside:
            return results
        residues: List[List[int]] = [[] for _ in inside]
        for modulus in self.moduli:
            logger.debug("building count table %s modulo %s", self.shape, modulus)
            table = self._build(modulus)
            for slot, index in enumerate(inside):
                residues[slot].append(int(table[points[index]]))
            del table
        for slot, index in enumerate(inside):
            if self.moduli == [None]:
                results[index] = residues[slot][0]
            else:
                value, _ = crt(self.moduli, residues[slot])
                results[index] = int(value)
        return results

    def evaluate(self, point: Sequence[int]) -> int:
        return self.evaluate_many([point])[0]
