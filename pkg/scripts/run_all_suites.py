"""Run every verification suite and write the certificates as JSON lines.

    python scripts/run_all_suites.py --max-size 6 --out certificates.jsonl
"""
import argparse
import json
from dataclasses import dataclass

from fishtamari.verify import SUITES, run_suite


@dataclass
class SuiteRun:
    max_size: int = 6
    out: str = "certificates.jsonl"


def main(cfg: SuiteRun) -> bool:
    ok = True
    with open(cfg.out, "w") as fh:
        for name in SUITES:
            cert = run_suite(name, cfg.max_size)
            ok &= cert.ok
            fh.write(json.dumps(cert.to_json()) + "\n")
            print(f"{name:<12} {'ok' if cert.ok else 'FAILED':<7} {cert.checks:>7} checks  {cert.wall_time:.1f}s")
    return ok


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-size", type=int, default=SuiteRun.max_size)
    p.add_argument("--out", default=SuiteRun.out)
    raise SystemExit(0 if main(SuiteRun(**vars(p.parse_args()))) else 1)
