"""Feasible-set command for kronvpf CLI"""

from kronvpf.feasibility import as_one_line, feasibility_report, feasible_sigma_set

from .common import emit, fail, job_from_args, started


def cmd_feasible_set(args):
    """Count the alternant terms that can contribute for some triple"""
    try:
        start = started()
        job = job_from_args(args, "feasible-set")
        if getattr(args, "compare", False):
            report = feasibility_report(job.m, job.n)
            rows = [
                ("with size equality", report.with_size_equality),
                ("without size equality", report.without_size_equality),
                ("published", report.published),
            ] + [("finding", f) for f in report.findings]
            emit(job, "report", report.model_dump(mode="json"), start, rows=rows)
            return
        found = sorted(feasible_sigma_set(job.m, job.n, job.size_equality))
        payload = {"size_equality": job.size_equality, "count": len(found)}
        if getattr(args, "list", False):
            payload["sigmas"] = [as_one_line(s) for s in found]
        emit(job, "report", payload, start, rows=[("feasible terms", len(found))])
    except Exception as e:
        fail("computing feasible set", e)
