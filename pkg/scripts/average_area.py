"""Normalized average area of extended fish against the limiting constant.

    python scripts/average_area.py --order 500 --every 50
"""
import argparse
from dataclasses import dataclass

from fishtamari.series import RHO, asymptotic_ratio


@dataclass
class AreaRun:
    order: int = 500
    every: int = 50


def main(cfg: AreaRun) -> None:
    est = asymptotic_ratio(cfg.order)
    rho = float(RHO)
    print(f"target constant {est.constant:.6f}, rho = {RHO} = {rho:.6f}")
    print(f"{'n':>5} {'e_n':>9} {'rel.err':>8} {'ratio':>9} {'rel.err':>8}")
    for n in range(cfg.every, cfg.order + 1, cfg.every):
        r = est.rho_ratios[n]
        print(f"{n:>5} {est.normalized_area[n]:>9.5f} {est.relative_error(n):>8.4f} "
              f"{r:>9.6f} {abs(r - rho) / rho:>8.5f}")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--order", type=int, default=AreaRun.order)
    p.add_argument("--every", type=int, default=AreaRun.every)
    main(AreaRun(**vars(p.parse_args())))
