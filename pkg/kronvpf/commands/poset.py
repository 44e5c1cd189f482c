"""Poset command for kronvpf CLI"""

from kronvpf.feasibility import as_one_line, build_sigma_poset, feasible_sigma_set

from .common import emit, fail, job_from_args, mark, started


def cmd_poset(args):
    """Order the alternant terms by dominance of their exponent forms"""
    try:
        start = started()
        job = job_from_args(args, "poset")
        restrict = None
        if getattr(args, "feasible_only", False):
            restrict = feasible_sigma_set(job.m, job.n, job.size_equality)
        poset = build_sigma_poset(job.m, job.n, restrict)
        covers = poset.covers
        maximal = poset.maximal()
        payload = {
            "elements": len(poset.elements),
            "covers": [[as_one_line(a), as_one_line(b)] for a, b in covers],
            "maximal": [as_one_line(s) for s in maximal],
            "transitive": poset.is_transitive(),
        }
        rows = [
            ("elements", len(poset.elements)),
            ("cover relations", len(covers)),
            ("maximal", " ".join(payload["maximal"])),
            ("transitive", mark(payload["transitive"])),
        ]
        emit(job, "report", payload, start, rows=rows)
    except Exception as e:
        fail("building poset", e)
