from itertools import combinations, permutations

import pytest
from hypothesis import given, strategies as st

from kronvpf.exceptions import UnsupportedShapeError
from kronvpf.linear_forms import (
    LinearForm,
    alpha_beta,
    b_forms,
    b_identity,
    b_identity_forms,
    difference_forms,
    identity,
    inverse,
    ls_lt,
    ls_lt_explicit,
    permutation_sign,
    rs_rt,
    target_vector,
    vpf_input,
)
from kronvpf.partitions import Partition, PartitionTriple

SHAPES = [(2, 2), (2, 3), (3, 2), (2, 4), (3, 3)]


def partitions(length, max_part=8):
    return st.lists(st.integers(0, max_part), min_size=length, max_size=length).map(
        lambda xs: tuple(sorted(xs, reverse=True))
    )


@st.composite
def shape_lambda_sigma(draw):
    m, n = draw(st.sampled_from(SHAPES))
    lam = draw(partitions(m * n))
    sigma = tuple(draw(st.permutations(list(range(1, m * n + 1)))))
    return m, n, lam, sigma


def column_triple(lam, m, n):
    """λ with μ = (N) and ν = (N)"""
    N = sum(lam)
    return PartitionTriple.from_parts(lam, (N,), (N,), m, n)


@pytest.mark.parametrize(
    "m, n, expected",
    [(2, 2, (1, 3)), (2, 3, (5, 10, 12)), (3, 3, (14, 32, 21, 59))],
)
def test_alpha_beta(m, n, expected):
    assert alpha_beta(m, n) == expected


def test_alpha_beta_rejects_degenerate_shapes():
    with pytest.raises(UnsupportedShapeError):
        alpha_beta(1, 4)


def test_rs_rt_2x3():
    assert rs_rt(Partition((12, 3)), Partition((5, 4, 3)), 2, 3) == (8, 11, 14)


def test_target_vector_adds_shift():
    t = PartitionTriple.from_parts((6, 4, 4, 1), (12, 3), (5, 4, 3), 2, 3)
    assert target_vector(t) == (13, 21, 26)


@pytest.mark.parametrize(
    "m, n, expected",
    [(2, 2, (7, 11)), (2, 3, (7, 12, 11))],
)
def test_b_identity_of_atomic_example(m, n, expected):
    t = PartitionTriple.from_parts((12, 7, 4, 1), (12, 12), (12, 12), m, n)
    assert b_identity(t) == expected


def test_b_identity_2x2_closed_form():
    # (ν_2 - λ_3 - λ_4, μ_2 + ν_2 - λ_2 - λ_3 - 2λ_4)
    t = PartitionTriple.from_parts((5, 3, 2, 1), (6, 5), (7, 4), 2, 2)
    assert b_identity(t) == (4 - 2 - 1, 5 + 4 - 3 - 2 - 2)


def test_ls_lt_identity_2x3():
    lam = Partition((12, 7, 4, 1), 6)
    assert ls_lt(lam, identity(6), 2, 3) == (11, 23, 26)
    assert ls_lt_explicit(lam, identity(6), 2, 3) == (11, 23, 26)


@given(shape_lambda_sigma())
def test_ls_lt_matches_explicit_formula(case):
    m, n, lam, sigma = case
    p = Partition(lam, m * n)
    assert ls_lt(p, sigma, m, n) == ls_lt_explicit(p, sigma, m, n)


@given(shape_lambda_sigma())
def test_b_forms_evaluate_to_vpf_input(case):
    m, n, lam, sigma = case
    t = column_triple(lam, m, n)
    forms = b_forms(m, n, sigma)
    assert tuple(f.evaluate(t) for f in forms) == vpf_input(t, sigma).coords


@given(shape_lambda_sigma())
def test_identity_input_dominates_every_term(case):
    m, n, lam, sigma = case
    t = column_triple(lam, m, n)
    top = b_identity(t)
    other = vpf_input(t, sigma).coords
    assert all(a <= b for a, b in zip(other, top))
    assert all(f.dominates_over_partitions() for f in difference_forms(sigma, identity(m * n), m, n))


def test_b_identity_forms_are_cached():
    assert b_identity_forms(2, 3) is b_identity_forms(2, 3)


def test_vpf_input_rejects_degenerate_shapes():
    t = PartitionTriple.from_parts((1,), (1,), (1,), 1, 2)
    with pytest.raises(UnsupportedShapeError):
        vpf_input(t, (1, 2))


def test_permutation_sign_examples():
    assert permutation_sign((1, 2, 3)) == 1
    assert permutation_sign((2, 1, 3)) == -1
    assert permutation_sign((2, 3, 1)) == 1
    assert permutation_sign((4, 3, 2, 1)) == 1


@given(st.permutations(list(range(1, 7))))
def test_permutation_sign_is_inversion_parity(sigma):
    inversions = sum(1 for i, j in combinations(range(6), 2) if sigma[i] > sigma[j])
    assert permutation_sign(sigma) == (-1) ** inversions


@given(st.permutations(list(range(1, 7))))
def test_inverse(sigma):
    inv = inverse(sigma)
    assert tuple(sigma[inv[i] - 1] for i in range(6)) == identity(6)


def test_linear_form_arithmetic():
    m, n = 2, 2
    f = LinearForm((1, -1, 0, 0), (0, 0), (0, 1), 2)
    g = LinearForm.const(m, n, 3)
    t = PartitionTriple.from_parts((3, 1), (2, 2), (3, 1), m, n)
    assert f.evaluate(t) == 3 - 1 + 1 + 2
    assert (f + g).evaluate(t) == f.evaluate(t) + 3
    assert (f - f) == LinearForm.zero(m, n)
    assert (2 * f).evaluate(t) == 2 * f.evaluate(t)
    assert f.coefficients() == (1, -1, 0, 0, 0, 0, 0, 1)
    assert not f.is_constant_free


@pytest.mark.parametrize(
    "lam, mu, constant, expected",
    [
        ((1, -1, 0, 0), (0, 0), 0, True),
        ((0, 1, -1, 0), (0, 0), 0, True),
        ((-1, 1, 0, 0), (0, 0), 0, False),
        ((2, -1, -1, 0), (0, 0), 0, True),
        ((1, 0, 0, 0), (0, 0), -1, False),
        ((1, 0, 0, 0), (1, 0), 0, False),
    ],
)
def test_dominates_over_partitions(lam, mu, constant, expected):
    form = LinearForm(lam, mu, (0, 0), constant)
    assert form.dominates_over_partitions() is expected


@pytest.mark.parametrize("m, n", [(m, n) for m in range(2, 5) for n in range(2, 5)])
def test_identity_forms_have_no_constant_term(m, n):
    assert all(f.is_constant_free for f in b_identity_forms(m, n))


@pytest.mark.parametrize("m, n", [(2, 2), (2, 3), (3, 2)])
def test_degree_table_and_closed_form_agree_on_every_permutation(m, n):
    size = m * n
    lam = Partition(tuple(range(2 * size, 0, -2)), size)
    t = column_triple(lam.parts, m, n)
    for sigma in permutations(range(1, size + 1)):
        assert ls_lt(lam, sigma, m, n) == ls_lt_explicit(lam, sigma, m, n)
        assert tuple(f.evaluate(t) for f in b_forms(m, n, sigma)) == vpf_input(t, sigma).coords
