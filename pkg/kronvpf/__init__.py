from .partitions import Partition, PartitionTriple, parse_partition, staircase, hook_product
from .substitution import build_degree_table, build_matrix, check_matrix_properties
from .linear_forms import alpha_beta, rs_rt, ls_lt, vpf_input
from .vpf import vpf, brute_force_vpf, vpf_polynomial_degree, MemoTable
from .engine import kronecker, atomic, count_contributing_terms, stability_sequence
from .feasibility import feasible_sigma_set, build_sigma_poset
from .vanishing import check_vanishing, check_atomic_vanishing
from .stability import stable_mu_nu, is_stable_face_member, build_additive_tableau, verify_rank_condition
from .bounds import (
    atomic_binomial_bound,
    kron_factorial_bound,
    n_only_bound,
    pak_panova_bounds,
    compare_bounds,
    replacement_accounting,
)
from .characters import character_value, kronecker_by_characters
from .config import Settings, settings
from .exceptions import KronVpfError

__all__ = [
    'Partition',
    'PartitionTriple',
    'parse_partition',
    'staircase',
    'hook_product',
    'build_degree_table',
    'build_matrix',
    'check_matrix_properties',
    'alpha_beta',
    'rs_rt',
    'ls_lt',
    'vpf_input',
    'vpf',
    'brute_force_vpf',
    'vpf_polynomial_degree',
    'MemoTable',
    'kronecker',
    'atomic',
    'count_contributing_terms',
    'stability_sequence',
    'feasible_sigma_set',
    'build_sigma_poset',
    'check_vanishing',
    'check_atomic_vanishing',
    'stable_mu_nu',
    'is_stable_face_member',
    'build_additive_tableau',
    'verify_rank_condition',
    'atomic_binomial_bound',
    'kron_factorial_bound',
    'n_only_bound',
    'pak_panova_bounds',
    'compare_bounds',
    'replacement_accounting',
    'character_value',
    'kronecker_by_characters',
    'Settings',
    'settings',
    'KronVpfError'
]
