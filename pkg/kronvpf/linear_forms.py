"""
Linear forms in the parts of (λ, μ, ν) and the vector partition function input

b(λ, μ, ν; σ) = (r_s(μ, ν) + α - l_s(λ; σ), r_t(μ, ν) + β - l_t(λ; σ))

Permutations are tuples in 1-based one-line notation.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import List, NamedTuple, Sequence, Tuple

from .exceptions import InvariantError, UnsupportedShapeError
from .partitions import Partition, PartitionTriple
from .substitution import DegreeTable, build_degree_table

Permutation = Tuple[int, ...]


@dataclass(frozen=True)
class LinearForm:
    """Σ lam_i λ_i + Σ mu_i μ_i + Σ nu_i ν_i + constant"""

    lam: Tuple[int, ...]
    mu: Tuple[int, ...]
    nu: Tuple[int, ...]
    constant: int = 0

    @classmethod
    def zero(cls, m: int, n: int) -> "LinearForm":
        return cls((0,) * (m * n), (0,) * m, (0,) * n, 0)

    @classmethod
    def const(cls, m: int, n: int, value: int) -> "LinearForm":
        return cls((0,) * (m * n), (0,) * m, (0,) * n, value)

    def __add__(self, other: "LinearForm") -> "LinearForm":
        return LinearForm(
            tuple(a + b for a, b in zip(self.lam, other.lam)),
            tuple(a + b for a, b in zip(self.mu, other.mu)),
            tuple(a + b for a, b in zip(self.nu, other.nu)),
            self.constant + other.constant,
        )

    def __neg__(self) -> "LinearForm":
        return self * -1

    def __sub__(self, other: "LinearForm") -> "LinearForm":
        return self + (-other)

    def __mul__(self, k: int) -> "LinearForm":
        return LinearForm(
            tuple(k * a for a in self.lam),
            tuple(k * a for a in self.mu),
            tuple(k * a for a in self.nu),
            k * self.constant,
        )

    __rmul__ = __mul__

    def evaluate(self, t: PartitionTriple) -> int:
        return self.evaluate_parts(t.lam.parts, t.mu.parts, t.nu.parts)

    def evaluate_parts(self, lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> int:
        total = self.constant
        total += sum(c * v for c, v in zip(self.lam, lam))
        total += sum(c * v for c, v in zip(self.mu, mu))
        total += sum(c * v for c, v in zip(self.nu, nu))
        return total

    @property
    def is_constant_free(self) -> bool:
        return self.constant == 0

    def coefficients(self) -> Tuple[int, ...]:
        """Flattened (λ, μ, ν) coefficient row"""
        return self.lam + self.mu + self.nu

    def dominates_over_partitions(self) -> bool:
        """True iff the form is >= 0 for every partition λ (μ, ν must not appear).

        Σ c_i λ_i + c >= 0 over weakly decreasing λ >= 0 exactly when every
        prefix sum of c_i is >= 0 and c >= 0.
        """
        if any(self.mu) or any(self.nu) or self.constant < 0:
            return False
        running = 0
        for c in self.lam:
            running += c
            if running < 0:
                return False
        return True


class VpfInput(NamedTuple):
    coords: Tuple[int, ...]
    sigma: Permutation
    sign: int


def permutation_sign(sigma: Sequence[int]) -> int:
    """Sign by cycle decomposition"""
    seen = [False] * len(sigma)
    transpositions = 0
    for start in range(len(sigma)):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = sigma[j] - 1
            length += 1
        transpositions += length - 1
    return -1 if transpositions % 2 else 1


def inverse(sigma: Sequence[int]) -> Permutation:
    inv = [0] * len(sigma)
    for j, v in enumerate(sigma, start=1):
        inv[v - 1] = j
    return tuple(inv)


def identity(size: int) -> Permutation:
    return tuple(range(1, size + 1))


def _require_shape(m: int, n: int) -> None:
    if m < 2 or n < 2:
        raise UnsupportedShapeError(f"linear forms need m, n >= 2, got ({m}, {n})")


def _integral(value: Fraction, label: str) -> int:
    if value.denominator != 1:
        raise InvariantError(f"{label} is not an integer: {value}")
    return int(value)


@lru_cache(maxsize=None)
def alpha_beta(m: int, n: int) -> Tuple[int, ...]:
    """(α_0, ..., α_{m-1}, β_1, ..., β_{n-2}) from the closed forms"""
    _require_shape(m, n)
    half = Fraction(1, 2)
    values = [_integral(half * (n * m + n - m - 2) * (n - 1) * (m - 1), "alpha_0")]
    for u in range(1, m):
        a = half * (u * u * n - 2 * u * n * m + 2 * n * m * m - u * u + u - n - 2 * m + 2) * (n - 1)
        values.append(_integral(a, f"alpha_{u}"))
    for v in range(1, n - 1):
        b = Fraction(1, 12) * (
            8 * n * n * m * m
            - 6 * v * n * m
            + 5 * n * n * m
            - 10 * n * m * m
            + 6 * v * v
            - 12 * v * n
            + 6 * v * m
            - 19 * n * m
            + 2 * m * m
            + 18 * v
            + 14 * m
        ) * (m - 1)
        values.append(_integral(b, f"beta_{v}"))
    return tuple(values)


@lru_cache(maxsize=None)
def rs_rt_forms(m: int, n: int) -> Tuple[LinearForm, ...]:
    """r_s(μ, ν) (indices 0..m-1) and r_t(μ, ν) (indices 1..n-2) as forms"""
    _require_shape(m, n)
    lam0 = (0,) * (m * n)
    # |ν| - ν_1
    nu_tail = (0,) + (1,) * (n - 1)
    forms = [LinearForm(lam0, (0,) * m, nu_tail, comb(n - 1, 2))]
    for u in range(1, m):
        mu = tuple(1 if i >= u + 1 else 0 for i in range(1, m + 1))
        forms.append(LinearForm(lam0, mu, nu_tail, comb(m - u, 2) + comb(n - 1, 2)))
    for v in range(1, n - 1):
        mu = tuple(i - 1 for i in range(1, m + 1))
        nu = tuple(0 if j == 1 else (m - 1 if j <= v + 1 else m) for j in range(1, n + 1))
        constant = comb(m, 3) + (m - 1) * comb(n - 1, 2) + comb(n - v - 1, 2)
        forms.append(LinearForm(lam0, mu, nu, constant))
    return tuple(forms)


def rs_rt(mu: Partition, nu: Partition, m: int, n: int) -> Tuple[int, ...]:
    return tuple(f.evaluate_parts((), mu.parts, nu.parts) for f in rs_rt_forms(m, n))


def ls_lt(lam: Partition, sigma: Sequence[int], m: int, n: int, table: DegreeTable = None) -> Tuple[int, ...]:
    """Exponent vector of the σ term of a_{λ+δ_mn}(z) via the degree table"""
    table = table or build_degree_table(m, n)
    size = m * n
    totals = [0] * table.rows
    for j in range(1, size + 1):
        k = sigma[j - 1]
        weight = lam[k - 1] + size - k
        if weight:
            for u, d in enumerate(table[j]):
                totals[u] += d * weight
    return tuple(totals)


def ls_lt_forms(sigma: Sequence[int], m: int, n: int, table: DegreeTable = None) -> Tuple[LinearForm, ...]:
    table = table or build_degree_table(m, n)
    size = m * n
    inv = inverse(sigma)
    forms = []
    for u in range(table.rows):
        lam = tuple(table[inv[i - 1]][u] for i in range(1, size + 1))
        constant = sum(table[j][u] * (size - sigma[j - 1]) for j in range(1, size + 1))
        forms.append(LinearForm(lam, (0,) * m, (0,) * n, constant))
    return tuple(forms)


def ls_lt_explicit(lam: Partition, sigma: Sequence[int], m: int, n: int) -> Tuple[int, ...]:
    """Closed-form l_s, l_t with σ applied to every summand"""
    size = m * n

    def w(i: int) -> int:
        k = sigma[i - 1]
        return lam[k - 1] + size - k

    def span(lo: int, hi: int) -> int:
        return sum(w(i) for i in range(lo, hi + 1))

    coords = [span(m + 1, size)]
    for u in range(1, m):
        coords.append(span(u + 1, m + u * (n - 1)) + 2 * span(m + u * (n - 1) + 1, size))
    for v in range(1, n - 1):
        total = sum((i - 1) * w(i) for i in range(2, m + 1))
        total += (m - 1) * span(m + 1, m + v) + m * span(m + v + 1, m + n - 1)
        for i in range(1, m):
            for j in range(1, n):
                factor = i + m - 1 if j <= v else i + m
                total += factor * w(m + i * (n - 1) + j)
        coords.append(total)
    return tuple(coords)


def b_forms(m: int, n: int, sigma: Sequence[int]) -> Tuple[LinearForm, ...]:
    table = build_degree_table(m, n)
    shift = alpha_beta(m, n)
    r = rs_rt_forms(m, n)
    l = ls_lt_forms(sigma, m, n, table)
    return tuple(r[k] + LinearForm.const(m, n, shift[k]) - l[k] for k in range(len(shift)))


@lru_cache(maxsize=None)
def b_identity_forms(m: int, n: int) -> Tuple[LinearForm, ...]:
    return b_forms(m, n, identity(m * n))


def target_vector(t: PartitionTriple) -> Tuple[int, ...]:
    """r(μ, ν) + (α, β): the part of b that does not depend on σ"""
    r = rs_rt(t.mu, t.nu, t.m, t.n)
    return tuple(a + b for a, b in zip(r, alpha_beta(t.m, t.n)))


def vpf_input(t: PartitionTriple, sigma: Sequence[int]) -> VpfInput:
    _require_shape(t.m, t.n)
    t.require_equal_sizes()
    target = target_vector(t)
    l = ls_lt(t.lam, sigma, t.m, t.n)
    coords = tuple(a - b for a, b in zip(target, l))
    return VpfInput(coords, tuple(sigma), permutation_sign(sigma))


def b_identity(t: PartitionTriple) -> Tuple[int, ...]:
    return vpf_input(t, identity(t.m * t.n)).coords


def difference_forms(sigma_1: Sequence[int], sigma_2: Sequence[int], m: int, n: int) -> List[LinearForm]:
    """l(σ_1) - l(σ_2) coordinate-wise"""
    table = build_degree_table(m, n)
    first = ls_lt_forms(sigma_1, m, n, table)
    second = ls_lt_forms(sigma_2, m, n, table)
    return [a - b for a, b in zip(first, second)]
