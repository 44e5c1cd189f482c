import pytest

from conftest import equal_size_triples
from kronvpf.config import configure, settings
from kronvpf.engine import engine_for
from kronvpf.exceptions import ResourceGuardError
from kronvpf.feasibility import (
    FourierMotzkin,
    as_one_line,
    build_sigma_poset,
    feasibility_report,
    feasible_sigma_set,
    frozen,
    parse_one_line,
    sigma_feasible,
)
from kronvpf.linear_forms import identity


def test_fourier_motzkin_interval():
    solver = FourierMotzkin(1, 100)
    solver.add_inequality((1,), -1)
    solver.add_inequality((-1,), 3)
    assert solver.feasible()


def test_fourier_motzkin_empty_interval():
    solver = FourierMotzkin(1, 100)
    solver.add_inequality((1,), 0)
    solver.add_inequality((-1,), -1)
    assert not solver.feasible()


def test_fourier_motzkin_equalities():
    # x = y, x >= 1, y <= 0
    solver = FourierMotzkin(2, 100)
    solver.add_equality((1, -1), 0)
    solver.add_inequality((1, 0), -1)
    solver.add_inequality((0, -1), 0)
    assert not solver.feasible()

    solver = FourierMotzkin(2, 100)
    solver.add_equality((2, -1), 0)
    solver.add_inequality((1, 0), -1)
    solver.add_inequality((0, -1), 2)
    assert solver.feasible()


def test_fourier_motzkin_constant_rows():
    solver = FourierMotzkin(2, 100)
    solver.add_inequality((0, 0), -1)
    assert not solver.feasible()
    solver = FourierMotzkin(2, 100)
    solver.add_equality((0, 0), 3)
    assert not solver.feasible()


def test_sigma_feasible_row_guard():
    with pytest.raises(ResourceGuardError):
        sigma_feasible(2, 3, identity(6), row_limit=1)


def test_identity_is_feasible():
    assert identity(4) in feasible_sigma_set(2, 2)
    assert sigma_feasible(2, 3, identity(6))


def test_size_equality_only_removes_terms():
    with_eq = feasible_sigma_set(2, 2, True)
    without_eq = feasible_sigma_set(2, 2, False)
    assert with_eq <= without_eq
    assert 0 < len(with_eq) <= 24


def test_every_surviving_term_is_feasible():
    feasible = feasible_sigma_set(2, 2)
    engine = engine_for(2, 2)
    for t in equal_size_triples(2, 2, 6):
        for item in engine.survivors(t):
            assert item.sigma in feasible, (t, item.sigma)


def test_feasibility_report_2x2():
    report = feasibility_report(2, 2)
    assert report.total == 24
    assert report.published == 7
    assert report.with_size_equality <= report.without_size_equality
    if 7 not in (report.with_size_equality, report.without_size_equality):
        assert report.findings


@pytest.mark.slow
def test_feasibility_report_2x3():
    report = feasibility_report(2, 3)
    assert report.total == 720
    assert report.with_size_equality <= report.without_size_equality <= 720
    assert report.published == 482


def test_feasibility_is_guarded():
    configure(settings().with_overrides(poset_limit=4))
    with pytest.raises(ResourceGuardError):
        feasible_sigma_set(2, 3)


def test_poset_2x2_has_identity_on_top():
    poset = build_sigma_poset(2, 2)
    top = identity(4)
    assert len(poset.elements) == 24
    assert poset.maximal() == [top]
    assert all(poset.leq(sigma, top) for sigma in poset.elements)
    assert poset.is_transitive()
    assert poset.is_antisymmetric_up_to_forms()
    for lower, upper in poset.covers:
        assert poset.less(lower, upper)


def test_poset_restricted_to_feasible_terms():
    feasible = feasible_sigma_set(2, 2)
    poset = build_sigma_poset(2, 2, restrict_to=feasible)
    assert frozen(poset.elements) == frozen(feasible)
    assert identity(4) in poset.maximal()


def test_poset_refuses_large_groups():
    with pytest.raises(ResourceGuardError):
        build_sigma_poset(2, 4)


def test_one_line_notation():
    assert as_one_line((2, 1, 3)) == "213"
    assert parse_one_line("213") == (2, 1, 3)
    assert parse_one_line("10 2 1") == (10, 2, 1)
    assert parse_one_line("3,1,2") == (3, 1, 2)


FEASIBLE_2X2_EDGES = {
    ("1243", "1234"),
    ("1324", "1234"),
    ("2134", "1234"),
    ("1342", "1243"),
    ("1342", "1324"),
    ("2143", "1243"),
    ("2143", "2134"),
    ("3124", "1324"),
    ("3124", "2134"),
}


def test_hasse_diagram_of_feasible_terms_2x2():
    names = {name for edge in FEASIBLE_2X2_EDGES for name in edge}
    sigmas = [parse_one_line(name) for name in names]
    assert len(sigmas) == 7
    assert set(sigmas) <= feasible_sigma_set(2, 2)
    poset = build_sigma_poset(2, 2, restrict_to=sigmas)
    edges = {(as_one_line(lower), as_one_line(upper)) for lower, upper in poset.covers}
    assert edges == FEASIBLE_2X2_EDGES
