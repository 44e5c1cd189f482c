import os

import hypothesis
import pytest

from kronvpf.config import Settings, configure, reset_settings
from kronvpf.engine import reset_engines
from kronvpf.partitions import PartitionTriple, partitions_of

hypothesis.settings.register_profile("fast", max_examples=25, deadline=None)
hypothesis.settings.register_profile("thorough", max_examples=300, deadline=None)
hypothesis.settings.register_profile("debugger", report_multiple_bugs=False, deadline=None)
hypothesis.settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "fast"))


@pytest.fixture(autouse=True)
def isolated_settings(tmp_path):
    """Fresh settings (cache under tmp_path) and engines for every test"""
    configure(Settings(cache_dir=tmp_path / "cache"))
    reset_engines()
    yield
    reset_engines()
    reset_settings()


def equal_size_triples(m, n, max_size):
    """Every triple (λ, μ, ν) of equal size <= max_size fitting shape (m, n)"""
    for N in range(max_size + 1):
        for lam in partitions_of(N, m * n):
            for mu in partitions_of(N, m):
                for nu in partitions_of(N, n):
                    yield PartitionTriple.from_parts(lam, mu, nu, m, n)
