import json
from concurrent.futures import ThreadPoolExecutor

import pytest
from hypothesis import given, strategies as st

from conftest import equal_size_triples
from kronvpf.characters import kronecker_by_characters
from kronvpf.config import Settings, configure, settings
from kronvpf.engine import (
    atomic,
    contribution_profile,
    count_contributing_terms,
    engine_for,
    kronecker,
    reset_engines,
    stability_sequence,
)
from kronvpf.exceptions import SizeMismatchError
from kronvpf.linear_forms import identity
from kronvpf.partitions import Partition, PartitionTriple
from kronvpf.stability import stable_triple
from kronvpf.trace import TermTrace


@pytest.mark.parametrize("m, n, max_size", [(2, 2, 6), (2, 3, 6), (3, 2, 4), (1, 3, 4), (3, 1, 4)])
def test_kronecker_agrees_with_character_oracle(m, n, max_size):
    for t in equal_size_triples(m, n, max_size):
        assert kronecker(t).value == kronecker_by_characters(t), t


@pytest.mark.slow
@pytest.mark.parametrize("m, n, max_size", [(2, 4, 4), (3, 3, 3), (2, 3, 7)])
def test_kronecker_agrees_with_character_oracle_larger(m, n, max_size):
    for t in equal_size_triples(m, n, max_size):
        assert kronecker(t).value == kronecker_by_characters(t), t


@pytest.mark.parametrize("m, n, max_size", [(2, 2, 6), (2, 3, 5)])
def test_zero_atomic_forces_zero(m, n, max_size):
    for t in equal_size_triples(m, n, max_size):
        result = kronecker(t)
        assert result.atomic == atomic(t)
        if result.atomic == 0:
            assert result.value == 0, t


def test_worked_coefficient_2x4():
    t = PartitionTriple.from_parts((6, 4, 4, 1), (12, 3), (5, 4, 3, 3), 2, 4)
    assert kronecker(t).value == 4


@pytest.mark.slow
def test_large_coefficient_2x4():
    t = PartitionTriple.from_parts((57, 57, 57, 33, 33, 33, 10), (140, 140), (70, 70, 70, 70), 2, 4)
    assert kronecker(t).value == 391


@pytest.mark.parametrize("m, n, expected", [(2, 2, 32), (2, 3, 8793)])
def test_atomic_depends_on_shape(m, n, expected):
    t = PartitionTriple.from_parts((12, 7, 4, 1), (12, 12), (12, 12), m, n)
    assert atomic(t) == expected


def test_most_contributing_terms_2x3():
    t = PartitionTriple.from_parts((87, 87, 24), (99, 99), (66, 66, 66), 2, 3)
    assert count_contributing_terms(t) == 288
    positive, negative = contribution_profile(t)
    assert (positive, negative) == (144, 144)
    assert kronecker(t).nonzero_terms == positive + negative


def test_contributing_terms_match_full_enumeration():
    t = PartitionTriple.from_parts((2, 2), (2, 2), (2, 2), 2, 2)
    result = kronecker(t, collect_terms=True)
    assert len(result.terms) == 24
    assert result.value == 1
    assert sum(r.contribution for r in result.terms) == result.value
    assert count_contributing_terms(t) == sum(1 for r in result.terms if r.contribution != 0)
    for r in result.terms:
        assert r.skipped == any(v < 0 for v in r.b)
        if r.skipped:
            assert r.count == 0


def test_empty_triple_is_one():
    for m, n in [(2, 2), (2, 3), (1, 4)]:
        assert kronecker(PartitionTriple.from_parts((), (), (), m, n)).value == 1


def test_degenerate_shapes():
    assert kronecker(PartitionTriple.from_parts((2, 1), (3,), (2, 1), 1, 2)).value == 1
    assert kronecker(PartitionTriple.from_parts((2, 1), (3,), (3,), 1, 2)).value == 0
    assert atomic(PartitionTriple.from_parts((2, 1), (2, 1), (3,), 2, 1)) == 1


def test_unequal_sizes_rejected():
    t = PartitionTriple.from_parts((2, 1), (3,), (2,), 2, 2)
    with pytest.raises(SizeMismatchError):
        kronecker(t)
    with pytest.raises(SizeMismatchError):
        atomic(t)


def test_survivors_start_with_identity():
    t = PartitionTriple.from_parts((6, 4, 4, 1), (12, 3), (5, 4, 3, 3), 2, 4)
    found = engine_for(2, 4).survivors(t)
    assert found[0].sigma == identity(8)
    assert all(v >= 0 for item in found for v in item.coords)
    assert all(a <= b for item in found for a, b in zip(item.coords, found[0].coords))


def test_swapping_shape_keeps_value():
    t = PartitionTriple.from_parts((4, 3, 2, 1), (6, 4), (5, 3, 2), 2, 3)
    assert kronecker(t).value == kronecker(t.swapped()).value == kronecker_by_characters(t)


@given(
    st.sampled_from([(2, 2), (2, 3)]),
    st.lists(st.integers(0, 6), min_size=6, max_size=6),
)
def test_stable_face_gives_one(shape, raw):
    m, n = shape
    lam = Partition(sorted(raw[: m * n], reverse=True), m * n)
    t = stable_triple(lam, m, n)
    result = kronecker(t)
    assert result.value == 1
    assert result.atomic == 1
    assert count_contributing_terms(t) == 1


def test_stability_sequence_2x3():
    base = PartitionTriple.from_parts((34, 27, 20, 12, 4, 3), (70, 30), (43, 39, 18), 2, 3)
    direction = PartitionTriple.from_parts((10, 8, 5, 3, 2, 2), (18, 12), (18, 7, 5), 2, 3)
    assert stability_sequence(base, direction, 6) == [2566, 18028, 36174, 43896, 44638, 44713, 44729]


def test_stability_sequence_zero_direction_is_constant():
    base = PartitionTriple.from_parts((3, 2, 1), (4, 2), (3, 2, 1), 2, 3)
    zero = PartitionTriple.from_parts((), (), (), 2, 3)
    values = stability_sequence(base, zero, 3)
    assert len(set(values)) == 1
    assert values[0] == kronecker_by_characters(base)


def test_memoized_threaded_path_agrees():
    configure(settings().with_overrides(dense_cell_limit=1, threads=3))
    for t in equal_size_triples(2, 3, 4):
        assert kronecker(t).value == kronecker_by_characters(t), t


def test_memo_persists_between_engines(tmp_path):
    configure(Settings(cache_dir=tmp_path, dense_cell_limit=1, persist_memo=True))
    t = PartitionTriple.from_parts((4, 3, 2, 1), (6, 4), (5, 3, 2), 2, 3)
    value = kronecker(t).value
    engine = engine_for(2, 3)
    path = settings().memo_path(engine.matrix.hash())
    assert path.exists()
    saved = len(engine.memo)
    reset_engines()
    assert len(engine_for(2, 3).memo) == saved
    assert kronecker(t).value == value


def test_trace_records_every_term(tmp_path):
    path = tmp_path / "trace.jsonl"
    trace = TermTrace(str(path), label="g((2,2),(2,2),(2,2))")
    t = PartitionTriple.from_parts((2, 2), (2, 2), (2, 2), 2, 2)
    kronecker(t, trace=trace)
    assert len(trace.terms()) == 24
    trace.save()
    lines = path.read_text().splitlines()
    assert len(lines) == 25
    header = json.loads(lines[0])
    assert header["label"] == "g((2,2),(2,2),(2,2))"
    first = json.loads(lines[1])
    assert first["type"] == "term"
    assert isinstance(first["data"]["count"], str)


def test_padding_to_a_larger_shape_keeps_value():
    for t in equal_size_triples(2, 3, 4):
        padded = PartitionTriple.from_parts(t.lam.parts, t.mu.parts, t.nu.parts, 2, 4)
        assert kronecker(padded).value == kronecker(t).value, t


def test_engine_cache_is_shared_across_threads():
    with ThreadPoolExecutor(max_workers=8) as pool:
        engines = list(pool.map(lambda _: engine_for(2, 3), range(32)))
    assert all(e is engines[0] for e in engines)
