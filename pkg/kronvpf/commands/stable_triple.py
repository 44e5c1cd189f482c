"""Stable-triple command for kronvpf CLI"""

from kronvpf.partitions import parse_partition
from kronvpf.stability import stable_triple_report

from .common import emit, fail, job_from_args, mark, started


def cmd_stable_triple(args):
    """Build (μ, ν) on the stable face from λ and verify it"""
    try:
        start = started()
        job = job_from_args(args, "stable-triple")
        lam = parse_partition(job.lam, job.m * job.n)
        report = stable_triple_report(lam, job.m, job.n, evaluate=not getattr(args, "no_evaluate", False))
        rows = [
            ("mu", ",".join(str(v) for v in report.mu)),
            ("nu", ",".join(str(v) for v in report.nu)),
            ("b(Id) = 0", mark(report.member)),
            ("tableau agrees", mark(report.tableau_agrees)),
        ]
        if report.kronecker is not None:
            rows += [("g", report.kronecker), ("atomic", report.atomic)]
        emit(job, "report", report.model_dump(mode="json"), start, rows=rows)
    except Exception as e:
        fail("building stable triple", e)
