"""Bounds command for kronvpf CLI"""

from kronvpf.bounds import compare_bounds
from kronvpf.engine import atomic

from .common import emit, fail, job_from_args, job_triple, started


def cmd_bounds(args):
    """Evaluate every upper bound family and flag the smallest"""
    try:
        start = started()
        job = job_from_args(args, "bounds")
        t = job_triple(job)
        atomic_value = atomic(t) if getattr(args, "with_atomic", False) else None
        report = compare_bounds(t, atomic_value)
        rows = [(e.source, f"{e.display:>10}  {'<- best' if e.source == report.best else ''}") for e in report.entries]
        rows.append(("note", report.exponent_note))
        emit(job, "bounds", report.model_dump(mode="json"), start, rows=rows)
    except Exception as e:
        fail("computing bounds", e)
