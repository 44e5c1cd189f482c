"""Ressayre command for kronvpf CLI"""

from kronvpf.partitions import parse_partition
from kronvpf.vanishing import ressayre_counterexample, ressayre_inequalities

from .common import emit, fail, job_from_args, mark, started


def cmd_ressayre(args):
    """Evaluate Ressayre's inequalities; without partitions, show the two counterexamples"""
    try:
        start = started()
        job = job_from_args(args, "ressayre")
        if job.lam:
            e, f = args.e, args.f
            lam = parse_partition(job.lam, e + f + 1)
            mu = parse_partition(job.mu, e + 1)
            nu = parse_partition(job.nu, f + 1)
            checks = ressayre_inequalities(lam, mu, nu, e, f)
            payload = {"e": e, "f": f, "inequalities": [c.model_dump() for c in checks]}
            rows = [(c.label, f"{mark(c.holds)} {c.right} <= {c.left}") for c in checks]
            emit(job, "report", payload, start, rows=rows)
            return
        demonstrations = ressayre_counterexample()
        rows = []
        for d in demonstrations:
            label = f"{d['lambda']} {d['mu']} {d['nu']}"
            rows.append((label, f"violated {','.join(d['violated'])}, predicted 0, g = {d['kronecker']}"))
        emit(job, "report", demonstrations, start, rows=rows)
    except Exception as e:
        fail("evaluating Ressayre inequalities", e)
