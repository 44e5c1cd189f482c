"""Vanish command for kronvpf CLI"""

from kronvpf.vanishing import b_identity_report, check_atomic_vanishing, check_vanishing

from .common import emit, fail, job_from_args, job_triple, mark, started


def cmd_vanish(args):
    """Evaluate the vanishing inequalities and the atomic vanishing test"""
    try:
        start = started()
        job = job_from_args(args, "vanish")
        t = job_triple(job)
        report = check_vanishing(t)
        payload = report.model_dump(mode="json")
        if t.m >= 2 and t.n >= 2:
            payload["b_identity"] = list(b_identity_report(t))
            payload["atomic_forced_zero"] = check_atomic_vanishing(t)
        rows = [(c.label, f"{mark(c.holds)} {c.left} >= {c.right}") for c in report.inequalities]
        rows.append(("conclusion", report.conclusion))
        emit(job, "report", payload, start, rows=rows)
    except Exception as e:
        fail("checking vanishing conditions", e)
