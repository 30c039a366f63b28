"""Distribution of Tamari distance over intervals of each size, computed from
the Hasse diagram and from the contact/descent formula, with the matching
fish areas.

    python scripts/distance_census.py --max-size 6
"""
import argparse
from collections import Counter
from dataclasses import dataclass

from fishtamari.bijection import phi_direct
from fishtamari.tamari import distance_formula, intervals, longest_chain


@dataclass
class CensusRun:
    max_size: int = 6


def main(cfg: CensusRun) -> int:
    mismatches = 0
    for n in range(cfg.max_size + 1):
        dist = Counter()
        for iv in intervals(n):
            L = longest_chain(iv)
            if L != distance_formula(iv) or phi_direct(iv).area != L + n:
                mismatches += 1
            dist[L] += 1
        row = " ".join(f"{k}:{dist[k]}" for k in sorted(dist))
        print(f"n={n} total={sum(dist.values())} mean={sum(k * v for k, v in dist.items()) / sum(dist.values()):.3f}  {row}")
    print("mismatches:", mismatches)
    return mismatches


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-size", type=int, default=CensusRun.max_size)
    raise SystemExit(1 if main(CensusRun(**vars(p.parse_args()))) else 0)
