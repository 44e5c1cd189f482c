import pytest
from hypothesis import given, strategies as st

from kronvpf.characters import (
    centralizer_order,
    character_table,
    character_value,
    class_size,
    kronecker_by_characters,
    kronecker_of,
    murnaghan_littlewood_holds,
    orthogonality_holds,
)
from kronvpf.config import configure, settings
from kronvpf.exceptions import SizeLimitError, SizeMismatchError
from kronvpf.partitions import Partition, PartitionTriple, dimension, partitions_of


def test_character_table_s3():
    table = character_table(3)
    assert table.partitions == [(3,), (2, 1), (1, 1, 1)]
    assert table.values == [[1, 1, 1], [-1, 0, 2], [1, -1, 1]]
    assert table.class_sizes == [2, 3, 1]
    assert table.value((2, 1), (1, 1, 1)) == 2


@pytest.mark.parametrize("N", range(1, 8))
def test_orthogonality(N):
    assert orthogonality_holds(character_table(N))


@given(st.integers(1, 9).flatmap(lambda N: st.sampled_from(list(partitions_of(N)))))
def test_identity_class_gives_dimension(lam):
    assert character_value(lam, (1,) * sum(lam)) == dimension(Partition(lam))


def test_character_value_accepts_padded_partitions():
    assert character_value(Partition((2, 1, 0, 0)), (3,)) == -1
    with pytest.raises(SizeMismatchError):
        character_value((2, 1), (2,))


def test_class_sizes():
    assert centralizer_order((2, 2)) == 8
    assert class_size((2, 2)) == 3
    assert class_size((2, 1, 1)) == 6
    assert sum(class_size(rho) for rho in partitions_of(6)) == 720


@pytest.mark.parametrize(
    "lam, mu, nu, g",
    [
        ((2, 1), (2, 1), (2, 1), 1),
        ((2, 1), (2, 1), (3,), 1),
        ((2, 2), (2, 2), (2, 2), 1),
        ((1, 1), (1, 1), (1, 1), 0),
        ((1, 1, 1, 1), (2, 2), (2, 2), 1),
        ((3, 1), (3, 1), (3, 1), 1),
        ((2, 1, 1), (2, 2), (3, 1), 1),
        ((3, 2, 1), (3, 2, 1), (3, 2, 1), 5),
    ],
)
def test_known_coefficients(lam, mu, nu, g):
    assert kronecker_of(lam, mu, nu) == g


def test_trivial_character_is_a_unit():
    for lam in partitions_of(6):
        assert kronecker_of(lam, (6,), lam) == 1
        for other in partitions_of(6):
            if other != lam:
                assert kronecker_of(lam, (6,), other) == 0


def test_oracle_limits():
    with pytest.raises(SizeMismatchError):
        kronecker_of((2, 1), (3,), (2,))
    configure(settings().with_overrides(oracle_size_limit=5))
    with pytest.raises(SizeLimitError):
        kronecker_of((6,), (6,), (6,))


def test_kronecker_by_characters_strips_padding():
    t = PartitionTriple.from_parts((2, 2), (2, 2), (2, 2), 2, 3)
    assert kronecker_by_characters(t) == 1


def test_murnaghan_littlewood_is_necessary():
    for N in range(1, 7):
        parts = list(partitions_of(N))
        for lam in parts:
            for mu in parts:
                for nu in parts:
                    t = PartitionTriple.from_parts(lam, mu, nu, 6, 6)
                    if kronecker_of(lam, mu, nu):
                        assert murnaghan_littlewood_holds(t), (lam, mu, nu)


def test_murnaghan_littlewood_rejects_unbalanced_triple():
    t = PartitionTriple.from_parts((1, 1, 1, 1), (4,), (4,), 2, 2)
    assert not murnaghan_littlewood_holds(t)
