"""Shared plumbing for kronvpf CLI commands"""

import json
import logging
import sys
import time
from typing import Any, Dict, List, Optional, Sequence, Tuple

from pydantic import ValidationError

from kronvpf.config import configure, settings
from kronvpf.exceptions import KronVpfError
from kronvpf.models import JobConfig
from kronvpf.partitions import PartitionTriple

LOG_FORMAT = "%(levelname)s %(name)s: %(message)s"


def job_from_args(args, command: str) -> JobConfig:
    """Validate parsed flags into a JobConfig and apply its settings"""
    job = JobConfig(
        command=command,
        m=getattr(args, "m", 2),
        n=getattr(args, "n", 2),
        lam=getattr(args, "lam", "") or "",
        mu=getattr(args, "mu", "") or "",
        nu=getattr(args, "nu", "") or "",
        verbose=getattr(args, "verbose", False),
        threads=getattr(args, "threads", None),
        cache_dir=getattr(args, "cache_dir", None),
        output_format=getattr(args, "output_format", "json"),
        k_max=getattr(args, "k_max", 0) or 0,
        size_equality=not getattr(args, "no_size_equality", False),
    )
    logging.basicConfig(level=logging.DEBUG if job.verbose else logging.WARNING, format=LOG_FORMAT, force=True)
    configure(settings().with_overrides(threads=job.threads, cache_dir=job.cache_dir))
    return job


def job_triple(job: JobConfig) -> PartitionTriple:
    return PartitionTriple.parse(job.lam, job.mu, job.nu, job.m, job.n)


def started() -> float:
    return time.perf_counter()


def elapsed_ms(start: float) -> int:
    return int((time.perf_counter() - start) * 1000)


def emit(
    job: JobConfig,
    key: str,
    value: Any,
    start: float,
    terms_evaluated: Optional[int] = None,
    terms_skipped: Optional[int] = None,
    rows: Optional[Sequence[Tuple[str, Any]]] = None,
) -> Dict[str, Any]:
    """Print the result as JSON or as an aligned table"""
    payload: Dict[str, Any] = {
        "command": job.command,
        "m": job.m,
        "n": job.n,
        "lambda": job.lam,
        "mu": job.mu,
        "nu": job.nu,
        key: value,
        "terms_evaluated": terms_evaluated,
        "terms_skipped": terms_skipped,
        "wall_ms": elapsed_ms(start),
    }
    if job.output_format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print_table(rows if rows is not None else [(key, value)])
    return payload


def print_table(rows: Sequence[Tuple[str, Any]]) -> None:
    if not rows:
        return
    width = max(len(str(label)) for label, _ in rows)
    for label, value in rows:
        print(f"{str(label).ljust(width)}  {value}")


def mark(passed: bool) -> str:
    return "✅" if passed else "❌"


def exit_code_for(error: Exception) -> int:
    if isinstance(error, KronVpfError):
        return error.exit_code
    return 1


def describe(error: Exception) -> str:
    if isinstance(error, ValidationError):
        problems: List[str] = []
        for item in error.errors():
            flag = "--" + "-".join(str(p) for p in item.get("loc", ())).replace("_", "-")
            problems.append(f"{flag}: {item.get('msg')}")
        return "; ".join(problems)
    if isinstance(error, KronVpfError):
        return error.message
    return str(error)


def fail(doing: str, error: Exception) -> None:
    print(f"Error {doing}: {describe(error)}", file=sys.stderr)
    sys.exit(exit_code_for(error))
