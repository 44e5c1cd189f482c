"""
Exception hierarchy for kronvpf
"""

from typing import Any, Dict, Optional


class KronVpfError(Exception):
    """Base exception for kronvpf errors."""

    exit_code = 1

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        self.message = message
        self.details = details or {}
        super().__init__(self.message)


class InputError(KronVpfError):
    """Invalid user input (exit code 1)."""


class PartitionError(InputError):
    """Sequence is not a valid partition."""


class NonDecreasingError(PartitionError):
    """Parts increase somewhere."""


class NegativePartError(PartitionError):
    """A part is negative."""


class LengthExceededError(PartitionError):
    """More nonzero parts than the declared length."""


class NotAPartitionError(PartitionError):
    """A derived sequence (e.g. from the stable-face equations) is not a partition."""


class SizeMismatchError(InputError):
    """Partitions of a triple do not have equal sizes."""


class LengthBoundError(InputError):
    """A partition is longer than the ambient shape allows."""


class UnsupportedShapeError(InputError):
    """Shape (m, n) outside the range an operation supports."""


class DimensionMismatchError(InputError):
    """Vector length does not match the matrix."""


class CacheMismatchError(InputError):
    """A cache file belongs to a different matrix."""


class ResourceGuardError(KronVpfError):
    """Computation refused because it would exceed a configured limit."""

    exit_code = 2


class TooLargeError(ResourceGuardError):
    """Brute-force enumeration guard tripped."""


class SizeLimitError(ResourceGuardError):
    """Partition size above the character oracle limit."""


class AccountingMismatchError(KronVpfError):
    """Column replacement tallies disagree with the closed forms."""


class InvariantError(KronVpfError):
    """An internal mathematical invariant failed; indicates a bug."""

    exit_code = 3
