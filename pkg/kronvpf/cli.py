#!/usr/bin/env python3
"""
Command-line interface for computing Kronecker coefficients
"""

import argparse
import sys
from kronvpf.commands import (
    cmd_compute,
    cmd_atomic,
    cmd_bounds,
    cmd_vanish,
    cmd_stable_triple,
    cmd_feasible_set,
    cmd_poset,
    cmd_stability_seq,
    cmd_matrix,
    cmd_ressayre,
    cmd_reproduce
)
from kronvpf.models import JobConfig


def _add_common(parser, partitions=True):
    parser.add_argument("--m", type=int, default=2, help="Length bound of mu")
    parser.add_argument("--n", type=int, default=2, help="Length bound of nu")
    if partitions:
        parser.add_argument("--lambda", dest="lam", default="", help="Partition lambda, e.g. 6,4,4,1")
        parser.add_argument("--mu", default="", help="Partition mu")
        parser.add_argument("--nu", default="", help="Partition nu")
    parser.add_argument("--format", dest="output_format", choices=["json", "table"], default="json", help="Output format")
    parser.add_argument("--threads", type=int, help="Worker threads for the term sum")
    parser.add_argument("--cache-dir", help="Directory for matrix and memo caches")
    parser.add_argument("-v", "--verbose", action="store_true", help="Debug logging")


def build_parser():
    parser = argparse.ArgumentParser(description="Kronecker coefficients via vector partition functions")
    subparsers = parser.add_subparsers(dest="command", help="Available commands")

    # Compute command
    compute_parser = subparsers.add_parser("compute", help="Compute a Kronecker coefficient")
    _add_common(compute_parser)
    compute_parser.add_argument("--trace", help="Write every term evaluation to this JSON lines file")
    compute_parser.set_defaults(func=cmd_compute)

    # Atomic command
    atomic_parser = subparsers.add_parser("atomic", help="Compute an atomic Kronecker coefficient")
    _add_common(atomic_parser)
    atomic_parser.set_defaults(func=cmd_atomic)

    # Bounds command
    bounds_parser = subparsers.add_parser("bounds", help="Compare upper bounds")
    _add_common(bounds_parser)
    bounds_parser.add_argument("--with-atomic", action="store_true", help="Also report (mn)!/2 times the atomic value")
    bounds_parser.set_defaults(func=cmd_bounds)

    # Vanish command
    vanish_parser = subparsers.add_parser("vanish", help="Check vanishing conditions")
    _add_common(vanish_parser)
    vanish_parser.set_defaults(func=cmd_vanish)

    # Stable-triple command
    stable_parser = subparsers.add_parser("stable-triple", help="Build a stable triple from lambda")
    _add_common(stable_parser)
    stable_parser.add_argument("--no-evaluate", action="store_true", help="Skip computing g and the atomic value")
    stable_parser.set_defaults(func=cmd_stable_triple)

    # Feasible-set command
    feasible_parser = subparsers.add_parser("feasible-set", help="Count alternant terms that can contribute")
    _add_common(feasible_parser, partitions=False)
    feasible_parser.add_argument("--no-size-equality", action="store_true", help="Drop |lambda| = |mu| = |nu|")
    feasible_parser.add_argument("--compare", action="store_true", help="Both conventions against the published count")
    feasible_parser.add_argument("--list", action="store_true", help="List the feasible permutations")
    feasible_parser.set_defaults(func=cmd_feasible_set)

    # Poset command
    poset_parser = subparsers.add_parser("poset", help="Dominance order on alternant terms")
    _add_common(poset_parser, partitions=False)
    poset_parser.add_argument("--feasible-only", action="store_true", help="Restrict to the feasible set")
    poset_parser.add_argument("--no-size-equality", action="store_true", help="Feasibility without |lambda| = |mu| = |nu|")
    poset_parser.set_defaults(func=cmd_poset)

    # Stability-seq command
    stability_parser = subparsers.add_parser("stability-seq", help="g along base + k * direction")
    _add_common(stability_parser)
    stability_parser.add_argument("--base-lambda", dest="base_lam", default="", help="Base lambda (default 0)")
    stability_parser.add_argument("--base-mu", default="", help="Base mu (default 0)")
    stability_parser.add_argument("--base-nu", default="", help="Base nu (default 0)")
    stability_parser.add_argument("--k-max", type=int, default=5, help="Last k")
    stability_parser.set_defaults(func=cmd_stability_seq)

    # Matrix command
    matrix_parser = subparsers.add_parser("matrix", help="Build and check A^{m,n}")
    _add_common(matrix_parser, partitions=False)
    matrix_parser.add_argument("-o", "--output", help="Write the matrix to this path")
    matrix_parser.set_defaults(func=cmd_matrix)

    # Ressayre command
    ressayre_parser = subparsers.add_parser("ressayre", help="Ressayre inequalities and their counterexamples")
    _add_common(ressayre_parser)
    ressayre_parser.add_argument("--e", type=int, default=1, help="Ressayre parameter e")
    ressayre_parser.add_argument("--f", type=int, default=3, help="Ressayre parameter f")
    ressayre_parser.set_defaults(func=cmd_ressayre)

    # Reproduce command
    reproduce_parser = subparsers.add_parser(
        "reproduce", aliases=["reproduce-paper"], help="Reproduce the published worked examples"
    )
    _add_common(reproduce_parser, partitions=False)
    reproduce_parser.add_argument("--all", action="store_true", help="Include slow examples")
    reproduce_parser.add_argument("--catalogue", help="Alternative example catalogue (TOML)")
    reproduce_parser.set_defaults(func=cmd_reproduce)

    return parser


def run(job: JobConfig, **extra) -> int:
    """Run a validated job as the matching command; returns the exit status"""
    args = build_parser().parse_args([job.command])
    args.m, args.n = job.m, job.n
    args.lam, args.mu, args.nu = job.lam, job.mu, job.nu
    args.verbose = job.verbose
    args.threads = job.threads
    args.cache_dir = job.cache_dir
    args.output_format = job.output_format
    args.k_max = job.k_max
    args.no_size_equality = not job.size_equality
    for key, value in extra.items():
        setattr(args, key, value)
    try:
        args.func(args)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 1
    return 0


def main(argv=None):
    """Main CLI entry point"""
    parser = build_parser()
    args = parser.parse_args(argv)

    if not args.command:
        parser.print_help()
        sys.exit(1)

    args.func(args)


if __name__ == "__main__":
    main()
