"""Stability-seq command for kronvpf CLI"""

from kronvpf.engine import stability_sequence
from kronvpf.partitions import PartitionTriple

from .common import emit, fail, job_from_args, job_triple, started


def cmd_stability_seq(args):
    """g(base + k·direction) for k = 0..k_max; the direction comes from --lambda/--mu/--nu"""
    try:
        start = started()
        job = job_from_args(args, "stability-seq")
        direction = job_triple(job)
        base = PartitionTriple.parse(
            getattr(args, "base_lam", "") or "",
            getattr(args, "base_mu", "") or "",
            getattr(args, "base_nu", "") or "",
            job.m,
            job.n,
        )
        values = stability_sequence(base, direction, job.k_max)
        rows = [(f"k={k}", v) for k, v in enumerate(values)]
        emit(job, "report", {"base": [str(base.lam), str(base.mu), str(base.nu)], "values": [str(v) for v in values]}, start, rows=rows)
    except Exception as e:
        fail("computing stability sequence", e)
