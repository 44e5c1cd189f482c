"""Atomic command for kronvpf CLI"""

from kronvpf.engine import atomic
from kronvpf.linear_forms import b_identity

from .common import emit, fail, job_from_args, job_triple, started


def cmd_atomic(args):
    """Compute the atomic coefficient p_A(b(λ, μ, ν; Id))"""
    try:
        start = started()
        job = job_from_args(args, "atomic")
        t = job_triple(job)
        value = atomic(t)
        rows = [("atomic", value)]
        if t.m >= 2 and t.n >= 2:
            rows.append(("b(Id)", ",".join(str(v) for v in b_identity(t))))
        emit(job, "atomic", str(value), start, 1, 0, rows)
    except Exception as e:
        fail("computing atomic coefficient", e)
