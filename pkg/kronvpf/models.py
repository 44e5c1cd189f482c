from typing import Annotated, Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, PlainSerializer, field_validator

# Exact integers travel through JSON as decimal strings
BigInt = Annotated[int, PlainSerializer(lambda v: str(v), return_type=str, when_used="json")]


class MatrixPropertyReport(BaseModel):
    """Properties (i)-(v) of A^{m,n} with witnesses"""

    m: int
    n: int
    nonnegative: bool
    max_entry: int
    max_entry_bound: int
    max_entry_within_bound: bool
    max_entry_attained: bool
    column_count: int
    expected_column_count: int
    row_count: int
    basis_columns: Dict[int, int]
    rank: int
    pointed: bool

    @property
    def properties(self) -> Dict[str, bool]:
        rows = self.m + self.n - 2
        return {
            "i": self.nonnegative,
            "ii": self.max_entry_within_bound,
            "iii": self.column_count == self.expected_column_count,
            "iv": self.row_count == rows,
            "v": len(self.basis_columns) == rows and self.rank == rows,
        }

    @property
    def all_hold(self) -> bool:
        return all(self.properties.values()) and self.pointed


class TermReport(BaseModel):
    """Contribution of one alternant term"""

    sigma: Tuple[int, ...]
    sign: int
    b: Tuple[int, ...]
    count: BigInt = 0
    skipped: bool = False

    @property
    def contribution(self) -> int:
        return self.sign * self.count


class KroneckerResult(BaseModel):
    m: int
    n: int
    value: BigInt
    atomic: BigInt
    terms_evaluated: int
    terms_skipped: int
    positive_terms: int = 0
    negative_terms: int = 0
    terms: Optional[List[TermReport]] = None

    @property
    def nonzero_terms(self) -> int:
        return self.positive_terms + self.negative_terms


class InequalityCheck(BaseModel):
    label: str
    left: int
    right: int
    holds: bool


class VanishingReport(BaseModel):
    lam: Tuple[int, ...]
    mu: Tuple[int, ...]
    nu: Tuple[int, ...]
    m: int
    n: int
    inequalities: List[InequalityCheck]
    conclusion: str  # "MayBeNonzero" or "ForcedZero"

    @property
    def forced_zero(self) -> bool:
        return self.conclusion == "ForcedZero"


class BoundEntry(BaseModel):
    source: str
    value: Optional[BigInt] = None  # None means +infinity / unavailable
    display: str = ""


class BoundReport(BaseModel):
    lam: Tuple[int, ...]
    mu: Tuple[int, ...]
    nu: Tuple[int, ...]
    m: int
    n: int
    b_identity: Tuple[int, ...]
    entries: List[BoundEntry]
    best: str
    exponent_note: str = ""

    def value(self, source: str) -> Optional[int]:
        for entry in self.entries:
            if entry.source == source:
                return entry.value
        raise KeyError(source)


class ReplacementAccounting(BaseModel):
    """Columns of A^{m,n} per standard basis vector they are replaced by"""

    m: int
    n: int
    tallies: Dict[int, int]
    expected: Dict[int, int]
    by_tag: Dict[str, Dict[int, int]]
    fallbacks: List[Tuple[int, ...]] = Field(default_factory=list)
    mismatches: List[str] = Field(default_factory=list)
    column_count: int

    @property
    def consistent(self) -> bool:
        return not self.mismatches


class FeasibilityReport(BaseModel):
    m: int
    n: int
    total: int
    with_size_equality: Optional[int] = None
    without_size_equality: Optional[int] = None
    published: Optional[int] = None
    findings: List[str] = Field(default_factory=list)


class StableTripleReport(BaseModel):
    m: int
    n: int
    lam: Tuple[int, ...]
    mu: Tuple[int, ...]
    nu: Tuple[int, ...]
    b_identity: Tuple[int, ...]
    member: bool
    tableau_agrees: bool
    kronecker: Optional[BigInt] = None
    atomic: Optional[BigInt] = None


class JobConfig(BaseModel):
    """Validated command-line job"""

    model_config = ConfigDict(extra="ignore")

    command: str
    m: int = Field(default=2, ge=1)
    n: int = Field(default=2, ge=1)
    lam: str = ""
    mu: str = ""
    nu: str = ""
    verbose: bool = False
    threads: Optional[int] = Field(default=None, ge=1)
    cache_dir: Optional[str] = None
    output_format: str = "json"
    k_max: int = Field(default=0, ge=0)
    size_equality: bool = True

    @field_validator("command")
    @classmethod
    def _known_command(cls, v: str) -> str:
        if v not in COMMANDS:
            raise ValueError(f"unknown command {v!r}")
        return v

    @field_validator("output_format")
    @classmethod
    def _known_format(cls, v: str) -> str:
        if v not in ("json", "table"):
            raise ValueError(f"output format must be json or table, got {v!r}")
        return v


COMMANDS = (
    "compute",
    "atomic",
    "bounds",
    "vanish",
    "stable-triple",
    "feasible-set",
    "poset",
    "stability-seq",
    "matrix",
    "ressayre",
    "reproduce",
    "reproduce-paper",
)


class ReferenceCheck(BaseModel):
    """Outcome of one catalogued worked example"""

    name: str
    kind: str
    expected: str
    actual: str
    passed: bool
    finding: str = ""
    wall_ms: int = 0

    @property
    def documented(self) -> bool:
        """A mismatch already recorded as a finding"""
        return not self.passed and bool(self.finding)
