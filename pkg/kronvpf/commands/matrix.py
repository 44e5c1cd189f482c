"""Matrix command for kronvpf CLI"""

from pathlib import Path

from kronvpf.substitution import build_matrix, check_matrix_properties, write_matrix
from kronvpf.vpf import vpf_polynomial_degree

from .common import emit, fail, job_from_args, mark, started


def emit_matrix(m: int, n: int, path) -> Path:
    """Write A^{m,n} in the matrix cache format"""
    return write_matrix(build_matrix(m, n), Path(path))


def cmd_matrix(args):
    """Build A^{m,n}, check its properties and optionally write it out"""
    try:
        start = started()
        job = job_from_args(args, "matrix")
        A = build_matrix(job.m, job.n)
        report = check_matrix_properties(A)
        payload = report.model_dump(mode="json")
        payload["properties"] = report.properties
        payload["polynomial_degree"] = vpf_polynomial_degree(A)
        payload["hash"] = A.hash()
        output = getattr(args, "output", None)
        if output:
            payload["path"] = str(emit_matrix(job.m, job.n, output))
        rows = [("shape", f"{A.rows} x {A.cols}"), ("degree", payload["polynomial_degree"])]
        rows += [(f"property ({k})", mark(v)) for k, v in report.properties.items()]
        if output:
            rows.append(("written", payload["path"]))
        emit(job, "report", payload, start, rows=rows)
    except Exception as e:
        fail("building matrix", e)
