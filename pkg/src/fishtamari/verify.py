"""Exhaustive verification suites producing certificates.

A failed identity is recorded with its counterexample; suites never raise
for a failed check.
"""
from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from . import config
from .bijection import phi_direct, phi_inverse, phi_recursive
from .dyck import conjugate_path, dyck_paths, step_stats
from .enumeration import (
    FORMULAS,
    KINDS,
    bivariate_fish_table,
    efish_by_composition,
    enumerate_objects,
    enumeration_polynomial,
    total_area,
)
from .fish import conjugate_fish, v_contract, v_expand
from .series import (
    RHO,
    area_series,
    asymptotic_ratio,
    h11_series,
    partial_sum_at,
    solve_master,
)
from .tamari import (
    conjugate_interval,
    distance_formula,
    gamma,
    intervals,
    is_synchronized,
    longest_chain,
)

SUITES = ("counts", "bijection", "distance", "series", "asymptotics", "involutions")


@dataclass
class VerificationCertificate:
    suite: str
    size_range: tuple[int, int]
    checks: int = 0
    tallies: Counter = field(default_factory=Counter)
    failures: list = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    def check(self, name: str, cond: bool, witness=None) -> bool:
        self.checks += 1
        self.tallies[name] += 1
        if not cond:
            self.failures.append({"check": name, "counterexample": _serialize(witness)})
        return cond

    def merge(self, other: VerificationCertificate) -> VerificationCertificate:
        lo = min(self.size_range[0], other.size_range[0])
        hi = max(self.size_range[1], other.size_range[1])
        return VerificationCertificate(
            self.suite, (lo, hi), self.checks + other.checks,
            self.tallies + other.tallies, self.failures + other.failures,
            self.wall_time + other.wall_time)

    def to_json(self) -> dict:
        return {"suite": self.suite, "size_range": list(self.size_range),
                "checks": self.checks, "tallies": dict(self.tallies),
                "failures": self.failures, "wall_time": round(self.wall_time, 3),
                "ok": self.ok}


def _serialize(obj):
    if obj is None or isinstance(obj, (int, str, bool, float)):
        return obj
    if hasattr(obj, "to_json"):
        return obj.to_json()
    if isinstance(obj, (tuple, list)):
        return [_serialize(x) for x in obj]
    if isinstance(obj, dict):
        return {str(k): _serialize(v) for k, v in obj.items()}
    return str(obj)


def _counts(cert: VerificationCertificate, max_size: int) -> None:
    for n in range(1, max_size + 1):
        sizes = {}
        for kind in KINDS:
            objs = list(enumerate_objects(kind, n))
            sizes[kind] = len(objs)
            cert.check(f"{kind}-formula", len(objs) == FORMULAS[kind](n),
                       {"kind": kind, "n": n, "observed": str(len(objs))})
            cert.check(f"{kind}-distinct", len(set(objs)) == len(objs), {"kind": kind, "n": n})
            if kind == "dyck":
                conj = {conjugate_path(p) for p in objs}
            elif kind in ("interval", "sync-interval"):
                conj = {conjugate_interval(iv) for iv in objs}
            else:
                conj = {conjugate_fish(f) for f in objs}
            cert.check(f"{kind}-conjugation-closed", conj == set(objs), {"kind": kind, "n": n})
        cert.check("sync-equals-fish", sizes["sync-interval"] == sizes["fish"], n)
        if n <= 5:
            same = efish_by_composition(n) == set(enumerate_objects("efish", n))
            cert.check("efish-two-routes", same, n)
        if n <= 5:
            a1 = area_series(n, 1)[n]
            a0 = area_series(n, 0)[n]
            cert.check("total-area-y1", total_area(n) == a1, n)
            cert.check("total-area-y0", total_area(n, fighting=True) == a0, n)
    for key, (seen, formula) in bivariate_fish_table(max_size).items():
        cert.check("bivariate", seen == formula, {"ij": list(key), "observed": seen})


def _bijection(cert: VerificationCertificate, max_size: int) -> None:
    for n in range(max_size + 1):
        images = set()
        for iv in intervals(n):
            f = phi_direct(iv)
            images.add(f)
            cert.check("direct-equals-recursive", f == phi_recursive(iv), iv)
            cert.check("inverse", phi_inverse(f) == iv, iv)
            cert.check("jaw", f.jaw == iv.c0, iv)
            cert.check("area", f.area == distance_formula(iv) + n, iv)
            cert.check("synchronized-iff-fighting", is_synchronized(iv) == f.is_fighting, iv)
            cert.check("conjugation", conjugate_fish(f) == phi_direct(conjugate_interval(iv)), iv)
            sp, sq = step_stats(iv.lower), step_stats(iv.upper)
            w = f.letters
            if n:
                cert.check("count-E", w.count("E") == sp.valleys + 1, iv)
                cert.check("count-N", w.count("N") == sp.double_rises + 1, iv)
                cert.check("count-W", w.count("W") == sq.valleys + 1, iv)
                cert.check("count-S", w.count("S") == sq.double_rises + 1, iv)
        if n <= 5:
            cert.check("surjective", images == efish_by_composition(n), n)


def _distance(cert: VerificationCertificate, max_size: int) -> None:
    for n in range(max_size + 1):
        for iv in intervals(n):
            c, d = iv.contact, iv.descent
            cert.check("compzero", all(c[i] * d[n - i] == 0 for i in range(n + 1)), iv)
            cert.check("formula-equals-chain", distance_formula(iv) == longest_chain(iv), iv)


def _series(cert: VerificationCertificate, max_size: int) -> None:
    top = min(max_size, 5)
    if max_size >= 1:
        h = solve_master(top)
        for n in range(1, top + 1):
            cert.check("master-vs-enumeration", h[n] == enumeration_polynomial(n), n)
    for y, kind in ((1, "efish"), (0, "fish")):
        hs = h11_series(max_size, y)
        for n in range(1, max_size + 1):
            cert.check(f"h11-y{y}", hs[n] == FORMULAS[kind](n), n)
        a = area_series(top, y)
        for n in range(1, top + 1):
            cert.check(f"area-y{y}", a[n] == total_area(n, fighting=(y == 0)), n)


def _asymptotics(cert: VerificationCertificate, max_size: int) -> None:
    cfg = config.get()
    order = cfg.asymptotic_order
    est = asymptotic_ratio(order)
    rho = float(RHO)
    k = min(400, order - 1)
    cert.check("rho-ratio", abs(est.rho_ratios[k] - rho) / rho < cfg.rho_tolerance,
               {"n": k, "ratio": est.rho_ratios[k]})
    cert.check("area-constant", est.relative_error(order) < cfg.constant_tolerance,
               {"n": order, "estimate": est.normalized_area[order]})
    half = order // 2
    cert.check("area-trend", est.relative_error(order) < est.relative_error(half),
               {"n": [half, order]})
    # partial sums of H(t,1,1) approach H(rho) = 5/27 from below as t -> rho
    h = h11_series(order, 1)
    sums = [partial_sum_at(h, RHO * (1 - Fraction(1, m))) for m in (4, 8, 16, 32)]
    cert.check("singular-trend", all(a < b < 5 / 27 for a, b in zip(sums, sums[1:])), sums)


def _involutions(cert: VerificationCertificate, max_size: int) -> None:
    for n in range(max_size + 1):
        for p in dyck_paths(n):
            cert.check("conj-path", conjugate_path(conjugate_path(p)) == p, p)
        for iv in intervals(n):
            ci = conjugate_interval(iv)
            cert.check("conj-interval", conjugate_interval(ci) == iv, iv)
            cert.check("conj-interval-distance", distance_formula(ci) == distance_formula(iv), iv)
            f = phi_direct(iv)
            cert.check("conj-fish", conjugate_fish(conjugate_fish(f)) == f, f)
            cert.check("v-expand", v_contract(*v_expand(f)) == f, f)
            if n <= 5:
                g = gamma(iv)
                cert.check("gamma-involution", gamma(g) == iv, iv)
                cert.check("gamma-distance", distance_formula(g) == distance_formula(iv), iv)


_RUNNERS = {
    "counts": _counts,
    "bijection": _bijection,
    "distance": _distance,
    "series": _series,
    "asymptotics": _asymptotics,
    "involutions": _involutions,
}


def run_suite(name: str, max_size: int | None = None) -> VerificationCertificate:
    if name not in _RUNNERS:
        raise ValueError(f"unknown suite {name!r}; expected one of {SUITES}")
    if max_size is None:
        max_size = config.get().suite_max_size
    cert = VerificationCertificate(name, (0, max_size))
    start = time.perf_counter()
    _RUNNERS[name](cert, max_size)
    cert.wall_time = time.perf_counter() - start
    return cert
