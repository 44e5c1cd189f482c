"""
Variable substitution: degree table of the XY variables and the matrix A^{m,n}

Coordinates are ordered (s_0, ..., s_{m-1}, t_1, ..., t_{n-2}). The XY
variables are ordered 1, x_1..x_{m-1}, y_1..y_{n-1}, x_1y_1, x_1y_2, ...,
x_{m-1}y_{n-1}; position p (1-based) holds x_a y_b with x_0 = y_0 = 1.
"""

from typing import Dict, List, NamedTuple, Tuple
from functools import lru_cache
from pathlib import Path
import hashlib
import logging

import sympy

from .exceptions import InputError, InvariantError, UnsupportedShapeError
from .models import MatrixPropertyReport

logger = logging.getLogger(__name__)

Vector = Tuple[int, ...]

# provenance tags of the binomial factors
TAG_A = "A"
TAG_B = "B"
TAG_C1 = "C1"
TAG_C2 = "C2"
TAG_D1 = "D1"
TAG_D2 = "D2"
TAG_E = "E"
TAG_F1 = "F1"
TAG_F2 = "F2"
TAGS = (TAG_A, TAG_B, TAG_C1, TAG_C2, TAG_D1, TAG_D2, TAG_E, TAG_F1, TAG_F2)


class DegreeTable:
    """Exponent vectors of the mn substituted XY variables"""

    def __init__(self, m: int, n: int, degrees: Tuple[Vector, ...]):
        self.m = m
        self.n = n
        self.degrees = degrees

    @property
    def rows(self) -> int:
        return self.m + self.n - 2

    def position(self, a: int, b: int) -> int:
        """1-based position of x_a y_b"""
        if b == 0:
            return a + 1
        return self.m + a * (self.n - 1) + b

    def index_pair(self, position: int) -> Tuple[int, int]:
        """(a, b) such that position holds x_a y_b"""
        if position <= self.m:
            return (position - 1, 0)
        offset = position - self.m - 1
        return (offset // (self.n - 1), offset % (self.n - 1) + 1)

    def label(self, position: int) -> str:
        a, b = self.index_pair(position)
        if a == 0 and b == 0:
            return "1"
        return (f"x{a}" if a else "") + (f"y{b}" if b else "")

    def __getitem__(self, position: int) -> Vector:
        return self.degrees[position - 1]

    def __len__(self) -> int:
        return len(self.degrees)


@lru_cache(maxsize=None)
def build_degree_table(m: int, n: int) -> DegreeTable:
    if m < 1 or n < 1:
        raise InputError(f"shape must be positive, got ({m}, {n})")
    t_count = max(n - 2, 0)

    def x_deg(i: int) -> List[int]:
        s = [0] + [1 if u <= i else 0 for u in range(1, m)]
        return s + [i] * t_count

    def y_deg(j: int) -> List[int]:
        s = [1] * m
        return s + [(m - 1) + (1 if k <= j - 1 else 0) for k in range(1, t_count + 1)]

    rows: List[Vector] = [tuple([0] * (m + t_count))]
    rows += [tuple(x_deg(i)) for i in range(1, m)]
    rows += [tuple(y_deg(j)) for j in range(1, n)]
    for i in range(1, m):
        for j in range(1, n):
            rows.append(tuple(a + b for a, b in zip(x_deg(i), y_deg(j))))
    return DegreeTable(m, n, tuple(rows))


class Column(NamedTuple):
    vector: Vector
    tag: str
    pair: Tuple[int, int, int, int]  # (a, b, c, d): from x_a y_b to x_c y_d


class VpfMatrix:
    """The matrix A^{m,n} as an ordered multiset of tagged columns"""

    def __init__(self, m: int, n: int, columns: Tuple[Column, ...]):
        self.m = m
        self.n = n
        self.columns = columns

    @property
    def rows(self) -> int:
        return self.m + self.n - 2

    @property
    def cols(self) -> int:
        return len(self.columns)

    @property
    def vectors(self) -> Tuple[Vector, ...]:
        return tuple(c.vector for c in self.columns)

    def row_lists(self) -> List[List[int]]:
        return [[c.vector[k] for c in self.columns] for k in range(self.rows)]

    def to_text(self) -> str:
        lines = [f"{self.m} {self.n} {self.rows} {self.cols}"]
        for c in self.columns:
            values = " ".join(str(v) for v in c.vector)
            lines.append(f"{values} # {c.tag} {','.join(str(i) for i in c.pair)}")
        return "\n".join(lines) + "\n"

    def hash(self) -> str:
        return hashlib.sha256(self.to_text().encode()).hexdigest()


def classify_pair(first: Tuple[int, int], second: Tuple[int, int]) -> str:
    """Provenance tag of the binomial produced by the pair of XY entries"""
    (a, b), (c, d) = first, second
    if b == d:
        return TAG_C1 if min(a, c) == 0 else TAG_F1
    if a == c:
        return TAG_C2 if min(b, d) == 0 else TAG_F2
    if (a, b) == (0, 0) or (c, d) == (0, 0):
        return TAG_B
    if b == 0 or d == 0:
        other = (c, d) if b == 0 else (a, b)
        return TAG_A if other[0] == 0 else TAG_D1
    if a == 0 or c == 0:
        return TAG_D2
    return TAG_E


def monomial_column(i: int, j: int, table: DegreeTable) -> Vector:
    """Exponent vector of z_j / z_i for positions i < j"""
    column = tuple(u - v for u, v in zip(table[j], table[i]))
    if any(v < 0 for v in column):
        raise InvariantError(
            f"negative exponent in column for positions {i}, {j}",
            {"column": list(column), "shape": [table.m, table.n]},
        )
    return column


@lru_cache(maxsize=None)
def build_matrix(m: int, n: int) -> VpfMatrix:
    if m < 2 or n < 2:
        raise UnsupportedShapeError(f"build_matrix needs m, n >= 2, got ({m}, {n})")
    table = build_degree_table(m, n)
    columns: List[Column] = []
    size = m * n
    for i in range(1, size + 1):
        first = table.index_pair(i)
        for j in range(i + 1, size + 1):
            second = table.index_pair(j)
            if first[1] == 0 and second[1] == 0:
                continue
            if first[0] == 0 and second[0] == 0:
                continue
            tag = classify_pair(first, second)
            columns.append(Column(monomial_column(i, j, table), tag, first + second))
    columns.sort(key=lambda c: (c.vector, c.tag, c.pair), reverse=True)
    logger.debug("built A^{%d,%d}: %d x %d", m, n, m + n - 2, len(columns))
    return VpfMatrix(m, n, tuple(columns))


def expected_columns(m: int, n: int) -> int:
    def c2(k: int) -> int:
        return k * (k - 1) // 2

    return c2(m * n) - c2(n) - c2(m)


def matrix_rank(rows: List[List[int]]) -> int:
    if not rows or not rows[0]:
        return 0
    return int(sympy.Matrix(rows).rank())


def check_matrix_properties(A: VpfMatrix) -> MatrixPropertyReport:
    """Evaluate Properties (i)-(v) of A^{m,n} with witnesses"""
    vectors = A.vectors
    entries = [v for vec in vectors for v in vec]
    max_entry = max(entries) if entries else 0
    bound = 2 * A.m - 1
    basis: Dict[int, int] = {}
    for index, vec in enumerate(vectors):
        if sum(vec) == 1:
            k = vec.index(1)
            basis.setdefault(k + 1, index)
    rank = matrix_rank(A.row_lists())
    return MatrixPropertyReport(
        m=A.m,
        n=A.n,
        nonnegative=all(v >= 0 for v in entries),
        max_entry=max_entry,
        max_entry_bound=bound,
        max_entry_within_bound=max_entry <= bound,
        max_entry_attained=max_entry == bound,
        column_count=A.cols,
        expected_column_count=expected_columns(A.m, A.n),
        row_count=A.rows,
        basis_columns=basis,
        rank=rank,
        pointed=all(any(v > 0 for v in vec) and all(v >= 0 for v in vec) for vec in vectors),
    )


def write_matrix(A: VpfMatrix, path: Path) -> Path:
    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(A.to_text())
    except OSError as e:
        raise InputError(f"cannot write matrix to {path}: {e}", {"path": str(path)})
    return path


def parse_matrix(text: str) -> VpfMatrix:
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines:
        raise InputError("empty matrix file")
    try:
        m, n, rows, cols = (int(v) for v in lines[0].split())
    except ValueError:
        raise InputError(f"bad matrix header: {lines[0]!r}")
    columns: List[Column] = []
    for line in lines[1:]:
        values, _, comment = line.partition("#")
        vector = tuple(int(v) for v in values.split())
        tag, _, pair = comment.strip().partition(" ")
        if len(vector) != rows:
            raise InputError(f"column has {len(vector)} entries, header says {rows}")
        columns.append(Column(vector, tag, tuple(int(v) for v in pair.split(","))))
    if len(columns) != cols:
        raise InputError(f"file has {len(columns)} columns, header says {cols}")
    return VpfMatrix(m, n, tuple(columns))


def read_matrix(path: Path) -> VpfMatrix:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as e:
        raise InputError(f"cannot read matrix from {path}: {e}", {"path": str(path)})
    return parse_matrix(text)
