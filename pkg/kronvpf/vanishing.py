"""
Vanishing conditions

The generalized Bravyi inequalities are the coordinates of b(λ, μ, ν; Id) >= 0
rewritten with |λ| = |μ| = |ν|; both formulations are evaluated so they can be
cross-checked. Ressayre's inequalities are evaluated for demonstration only.
"""

from typing import List, Tuple
import logging

from .characters import kronecker_by_characters
from .linear_forms import b_identity
from .models import InequalityCheck, VanishingReport
from .partitions import Partition, PartitionTriple

logger = logging.getLogger(__name__)

MAY_BE_NONZERO = "MayBeNonzero"
FORCED_ZERO = "ForcedZero"


def _check(label: str, left: int, right: int) -> InequalityCheck:
    return InequalityCheck(label=label, left=left, right=right, holds=left >= right)


def bravyi_inequalities(t: PartitionTriple) -> List[InequalityCheck]:
    m, n = t.m, t.n

    # 1-based accessors
    def lam(k: int) -> int:
        return t.lam[k - 1]

    def mu(k: int) -> int:
        return t.mu[k - 1]

    def nu(k: int) -> int:
        return t.nu[k - 1]

    checks = [_check("first", sum(lam(k) for k in range(1, m + 1)), nu(1))]
    for a in range(1, m):
        left = sum(lam(k) for k in range(1, a + 1)) - sum(lam(k) for k in range(m + n, m + (a + 1) * (n - 1) + 1))
        right = nu(1) - sum(mu(k) for k in range(a + 1, m + 1))
        checks.append(_check(f"a={a}", left, right))
    for b in range(1, n - 1):
        left = m * lam(1)
        left += sum((m - k + 1) * lam(k) for k in range(2, m + 1))
        left += sum(lam(k) for k in range(m + 1, m + b + 1))
        for i in range(1, m):
            left -= sum((i - 1) * lam(m + i * (n - 1) + j) for j in range(1, b + 1))
            left -= sum(i * lam(m + i * (n - 1) + j) for j in range(b + 1, n))
        right = m * nu(1) + sum(nu(k) for k in range(2, b + 2)) - sum((k - 1) * mu(k) for k in range(2, m + 1))
        checks.append(_check(f"b={b}", left, right))
    return checks


def check_vanishing(t: PartitionTriple) -> VanishingReport:
    t.require_equal_sizes()
    checks = bravyi_inequalities(t)
    conclusion = MAY_BE_NONZERO if all(c.holds for c in checks) else FORCED_ZERO
    return VanishingReport(
        lam=t.lam.parts,
        mu=t.mu.parts,
        nu=t.nu.parts,
        m=t.m,
        n=t.n,
        inequalities=checks,
        conclusion=conclusion,
    )


def b_identity_report(t: PartitionTriple) -> Tuple[int, ...]:
    return b_identity(t)


def check_atomic_vanishing(t: PartitionTriple) -> bool:
    """True when some coordinate of b(λ, μ, ν; Id) is negative, forcing g = 0"""
    return any(v < 0 for v in b_identity(t))


def formulations_agree(t: PartitionTriple) -> bool:
    forced = check_vanishing(t).forced_zero
    atomic_forced = check_atomic_vanishing(t)
    if forced != atomic_forced:
        logger.warning("vanishing formulations disagree on %r", t)
    return forced == atomic_forced


def ressayre_inequalities(lam: Partition, mu: Partition, nu: Partition, e: int, f: int) -> List[InequalityCheck]:
    """N + λ_1 + λ_{e+j} <= μ_1 + ν_1 + ν_j for 2 <= j <= f+1, as left >= right checks"""
    N = lam.size

    def part(p: Partition, k: int) -> int:
        return p[k - 1] if k <= len(p) else 0

    checks = []
    for j in range(2, f + 2):
        left = part(mu, 1) + part(nu, 1) + part(nu, j)
        right = N + part(lam, 1) + part(lam, e + j)
        checks.append(_check(f"j={j}", left, right))
    return checks


RESSAYRE_DEMONSTRATIONS = (
    ((1, 1, 1, 1, 0), (2, 2), (2, 2, 0, 0), 1, 3),
    ((4, 0, 0, 0, 0), (2, 2), (2, 2, 0, 0), 1, 3),
)


def ressayre_counterexample() -> List[dict]:
    """The two triples whose violated inequality predicts g = 0 although g = 1"""
    rows = []
    for lam, mu, nu, e, f in RESSAYRE_DEMONSTRATIONS:
        lam_p, mu_p, nu_p = Partition(lam), Partition(mu), Partition(nu)
        checks = ressayre_inequalities(lam_p, mu_p, nu_p, e, f)
        violated = [c.label for c in checks if not c.holds]
        triple = PartitionTriple(lam_p.padded(8), mu_p, nu_p, 2, 4)
        g = kronecker_by_characters(triple)
        rows.append(
            {
                "lambda": list(lam),
                "mu": list(mu),
                "nu": list(nu),
                "e": e,
                "f": f,
                "inequalities": [c.model_dump() for c in checks],
                "violated": violated,
                "predicted": 0 if violated else None,
                "kronecker": g,
            }
        )
    return rows
