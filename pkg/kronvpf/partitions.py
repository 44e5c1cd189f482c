"""
Partitions, partition triples and elementary statistics
"""

from typing import Iterator, List, Optional, Sequence, Tuple
from math import factorial
import re

from .exceptions import (
    InputError,
    LengthBoundError,
    LengthExceededError,
    NegativePartError,
    NonDecreasingError,
    SizeMismatchError,
)


class Partition:
    """Weakly decreasing, zero-padded sequence of non-negative integers.

    Immutable once built; the padding to ``declared_length`` happens here so
    downstream formulas can index parts 1..declared_length directly.
    """

    __slots__ = ("_parts",)

    def __init__(self, parts: Sequence[int], declared_length: Optional[int] = None):
        parts = [int(p) for p in parts]
        if declared_length is None:
            declared_length = max(len(parts), 1)
        if declared_length < 1:
            raise InputError(f"declared length must be positive, got {declared_length}")
        for i, p in enumerate(parts):
            if p < 0:
                raise NegativePartError(f"negative part {p} at position {i + 1}", {"parts": parts})
        for i in range(len(parts) - 1):
            if parts[i] < parts[i + 1]:
                raise NonDecreasingError(
                    f"parts increase at position {i + 1}: {parts[i]} < {parts[i + 1]}",
                    {"parts": parts},
                )
        nonzero = sum(1 for p in parts if p > 0)
        if nonzero > declared_length:
            raise LengthExceededError(
                f"{nonzero} nonzero parts exceed declared length {declared_length}",
                {"parts": parts, "declared_length": declared_length},
            )
        parts = parts[:declared_length] + [0] * (declared_length - len(parts))
        object.__setattr__(self, "_parts", tuple(parts))

    def __setattr__(self, name, value):
        raise AttributeError("Partition is immutable")

    @classmethod
    def from_parts(cls, parts: Sequence[int], declared_length: int) -> "Partition":
        return cls(parts, declared_length)

    @property
    def parts(self) -> Tuple[int, ...]:
        return self._parts

    @property
    def declared_length(self) -> int:
        return len(self._parts)

    @property
    def size(self) -> int:
        return sum(self._parts)

    @property
    def length(self) -> int:
        """Number of nonzero parts"""
        return sum(1 for p in self._parts if p > 0)

    def stripped(self) -> Tuple[int, ...]:
        return tuple(p for p in self._parts if p > 0)

    def padded(self, declared_length: int) -> "Partition":
        return Partition(self._parts, declared_length)

    def scaled(self, k: int) -> "Partition":
        return Partition([k * p for p in self._parts], self.declared_length)

    def __add__(self, other: "Partition") -> "Partition":
        if self.declared_length != other.declared_length:
            raise InputError("cannot add partitions of different declared lengths")
        return Partition([a + b for a, b in zip(self._parts, other._parts)], self.declared_length)

    def __getitem__(self, i: int) -> int:
        return self._parts[i]

    def __len__(self) -> int:
        return len(self._parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self._parts)

    def __eq__(self, other) -> bool:
        if isinstance(other, Partition):
            return self._parts == other._parts
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._parts)

    def __str__(self) -> str:
        return ",".join(str(p) for p in self._parts)

    def __repr__(self) -> str:
        return f"Partition({str(self)})"


_TOKEN_SPLIT = re.compile(r"[,\s]+")


def parse_partition(text: str, declared_length: int) -> Partition:
    """Parse "12,7,4,1" (commas and/or spaces) into a padded Partition"""
    tokens = [t for t in _TOKEN_SPLIT.split(text.strip()) if t]
    parts: List[int] = []
    for token in tokens:
        try:
            parts.append(int(token))
        except ValueError:
            raise InputError(f"not an integer: {token!r}", {"text": text})
    return Partition(parts, declared_length)


def staircase(k: int) -> Partition:
    if k < 1:
        raise InputError(f"staircase needs k >= 1, got {k}")
    return Partition(range(k - 1, -1, -1), k)


def hook_product(p: Partition) -> int:
    """Product of hook lengths over the Ferrers diagram"""
    rows = p.stripped()
    if not rows:
        return 1
    conj = [sum(1 for r in rows if r > j) for j in range(rows[0])]
    product = 1
    for i, row in enumerate(rows):
        for j in range(row):
            product *= (row - j - 1) + (conj[j] - i - 1) + 1
    return product


def dimension(p: Partition) -> int:
    """Number of standard Young tableaux, |p|! / hook_product(p)"""
    return factorial(p.size) // hook_product(p)


def partitions_of(total: int, max_length: Optional[int] = None) -> Iterator[Tuple[int, ...]]:
    """Partitions of ``total`` in reverse lexicographic order, (total) first"""
    if total == 0:
        yield ()
        return
    limit = total if max_length is None else max_length

    def _gen(remaining: int, largest: int, slots: int) -> Iterator[Tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        if slots == 0:
            return
        for first in range(min(remaining, largest), 0, -1):
            for rest in _gen(remaining - first, first, slots - 1):
                yield (first,) + rest

    yield from _gen(total, total, limit)


class PartitionTriple:
    """(λ, μ, ν) padded to lengths (mn, m, n)"""

    __slots__ = ("lam", "mu", "nu", "m", "n")

    def __init__(self, lam: Partition, mu: Partition, nu: Partition, m: int, n: int):
        if m < 1 or n < 1:
            raise InputError(f"shape must be positive, got ({m}, {n})")
        for name, p, bound in (("lambda", lam, m * n), ("mu", mu, m), ("nu", nu, n)):
            if p.declared_length != bound:
                raise LengthBoundError(
                    f"{name} has declared length {p.declared_length}, expected {bound}",
                    {"shape": [m, n]},
                )
        self.lam = lam
        self.mu = mu
        self.nu = nu
        self.m = m
        self.n = n

    @classmethod
    def from_parts(cls, lam: Sequence[int], mu: Sequence[int], nu: Sequence[int], m: int, n: int) -> "PartitionTriple":
        """Pad each partition to (mn, m, n), raising LengthBoundError on overflow"""
        padded = []
        for name, parts, bound in (("lambda", lam, m * n), ("mu", mu, m), ("nu", nu, n)):
            try:
                padded.append(Partition(parts, bound))
            except LengthExceededError as e:
                raise LengthBoundError(f"{name}: {e.message}", {"shape": [m, n]})
        return cls(padded[0], padded[1], padded[2], m, n)

    @classmethod
    def parse(cls, lam: str, mu: str, nu: str, m: int, n: int) -> "PartitionTriple":
        try:
            return cls(parse_partition(lam, m * n), parse_partition(mu, m), parse_partition(nu, n), m, n)
        except LengthExceededError as e:
            raise LengthBoundError(e.message, {"shape": [m, n]})

    @property
    def sizes(self) -> Tuple[int, int, int]:
        return (self.lam.size, self.mu.size, self.nu.size)

    @property
    def equal_sizes(self) -> bool:
        a, b, c = self.sizes
        return a == b == c

    @property
    def N(self) -> int:
        return self.lam.size

    def require_equal_sizes(self) -> "PartitionTriple":
        if not self.equal_sizes:
            raise SizeMismatchError(
                "partitions must have equal sizes, got |lambda|=%d |mu|=%d |nu|=%d" % self.sizes,
                {"sizes": list(self.sizes)},
            )
        return self

    def swapped(self) -> "PartitionTriple":
        """(λ, ν, μ) at shape (n, m)"""
        return PartitionTriple(self.lam, self.nu, self.mu, self.n, self.m)

    def __add__(self, other: "PartitionTriple") -> "PartitionTriple":
        if (self.m, self.n) != (other.m, other.n):
            raise InputError("cannot add triples of different shapes")
        return PartitionTriple(self.lam + other.lam, self.mu + other.mu, self.nu + other.nu, self.m, self.n)

    def scaled(self, k: int) -> "PartitionTriple":
        return PartitionTriple(self.lam.scaled(k), self.mu.scaled(k), self.nu.scaled(k), self.m, self.n)

    def __eq__(self, other) -> bool:
        if isinstance(other, PartitionTriple):
            return (self.lam, self.mu, self.nu, self.m, self.n) == (other.lam, other.mu, other.nu, other.m, other.n)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.lam, self.mu, self.nu, self.m, self.n))

    def __repr__(self) -> str:
        return f"PartitionTriple(lambda={self.lam}, mu={self.mu}, nu={self.nu}, m={self.m}, n={self.n})"
