"""Compute command for kronvpf CLI"""

from kronvpf.engine import kronecker
from kronvpf.trace import TermTrace

from .common import emit, fail, job_from_args, job_triple, started


def cmd_compute(args):
    """Compute g(λ, μ, ν) as a signed sum of vector partition function values"""
    try:
        start = started()
        job = job_from_args(args, "compute")
        t = job_triple(job)
        trace = TermTrace(args.trace, label=f"g({t.lam}; {t.mu}; {t.nu})") if getattr(args, "trace", None) else None
        result = kronecker(t, trace=trace)
        if trace is not None:
            trace.save()
        rows = [
            ("g", result.value),
            ("atomic", result.atomic),
            ("terms evaluated", result.terms_evaluated),
            ("terms skipped", result.terms_skipped),
            ("positive terms", result.positive_terms),
            ("negative terms", result.negative_terms),
        ]
        emit(job, "g", str(result.value), start, result.terms_evaluated, result.terms_skipped, rows)
    except Exception as e:
        fail("computing Kronecker coefficient", e)
