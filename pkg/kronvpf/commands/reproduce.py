"""Reproduce command for kronvpf CLI"""

import json
import sys

from kronvpf.reference import run_catalogue

from .common import elapsed_ms, fail, job_from_args, started


def cmd_reproduce(args):
    """Run every catalogued worked example and print a pass/fail table"""
    try:
        start = started()
        job = job_from_args(args, "reproduce")
        checks = run_catalogue(include_slow=getattr(args, "all", False), path=getattr(args, "catalogue", None))
        failed = [c for c in checks if not c.passed and not c.documented]
        if job.output_format == "json":
            payload = {
                "command": job.command,
                "report": [c.model_dump() for c in checks],
                "failed": len(failed),
                "wall_ms": elapsed_ms(start),
            }
            print(json.dumps(payload, indent=2))
        else:
            width = max((len(c.name) for c in checks), default=0)
            for c in checks:
                status = "✅" if c.passed else ("⚠️ " if c.documented else "❌")
                print(f"{status} {c.name.ljust(width)}  expected {c.expected}, got {c.actual} ({c.wall_ms} ms)")
                if c.documented:
                    print(f"   finding: {c.finding}")
            passed = sum(1 for c in checks if c.passed)
            print(f"\n{passed}/{len(checks)} examples reproduced")
        if failed:
            sys.exit(1)
    except Exception as e:
        fail("reproducing examples", e)
