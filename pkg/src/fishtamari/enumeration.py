"""Exhaustive generators and closed-form counts."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterator

from . import config
from .bijection import phi_direct
from .dyck import dyck_paths
from .errors import BudgetExceeded
from .fish import EMPTY_FISH, FishWord, PointedFish, fish_compose_low
from .polys import MultiPoly
from .tamari import (
    EMPTY_INTERVAL,
    PointedInterval,
    TamariInterval,
    catalan,
    intervals,
    is_synchronized,
    left_compose,
)

KINDS = ("dyck", "interval", "sync-interval", "fish", "efish")


def _exact(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"{num}/{den} is not an integer")
    return q


def fish_count(n: int) -> int:
    """``2 / ((n+1)(2n+1)) * C(3n, n)``: fighting fish, synchronized intervals."""
    return _exact(2 * comb(3 * n, n), (n + 1) * (2 * n + 1))


def efish_count(n: int) -> int:
    """``2 / (n(n+1)) * C(4n+1, n-1)``: extended fighting fish."""
    return _exact(2 * comb(4 * n + 1, n - 1), n * (n + 1))


def interval_count(n: int) -> int:
    """``1 / ((n+1)(2n+1)) * C(4n+2, n)``: Tamari intervals."""
    return _exact(comb(4 * n + 2, n), (n + 1) * (2 * n + 1))


def bivariate_fish_count(i: int, j: int) -> int:
    """Fighting fish with ``i`` letters E and ``j`` letters N."""
    return _exact(comb(2 * i + j - 2, j - 1) * comb(2 * j + i - 2, i - 1), i * j)


FORMULAS = {
    "dyck": catalan,
    "interval": interval_count,
    "sync-interval": fish_count,
    "fish": fish_count,
    "efish": efish_count,
}


def _check_budget(n: int) -> None:
    limit = config.get().max_size
    if n > limit:
        raise BudgetExceeded(f"size {n} above the enumeration budget {limit}")
    if n < 0:
        raise ValueError("size must be nonnegative")


def enumerate_objects(kind: str, n: int) -> Iterator:
    """Stream every object of ``kind`` and size ``n`` exactly once."""
    _check_budget(n)
    if kind == "dyck":
        yield from dyck_paths(n)
    elif kind == "interval":
        yield from intervals(n)
    elif kind == "sync-interval":
        yield from (iv for iv in intervals(n) if is_synchronized(iv))
    elif kind == "efish":
        yield from (phi_direct(iv) for iv in intervals(n))
    elif kind == "fish":
        yield from (phi_direct(iv) for iv in intervals(n) if is_synchronized(iv))
    else:
        raise ValueError(f"unknown kind {kind!r}; expected one of {KINDS}")


@lru_cache(maxsize=None)
def efish_by_composition(n: int) -> frozenset[FishWord]:
    """Second generation route: every low composition of smaller fish."""
    _check_budget(n)
    if n == 0:
        return frozenset([EMPTY_FISH])
    out = set()
    for n1 in range(n):
        for f1 in efish_by_composition(n1):
            for i in range(1, f1.jaw + 2):
                fp = PointedFish(f1, i)
                for f2 in efish_by_composition(n - 1 - n1):
                    out.add(fish_compose_low(fp, f2))
    return frozenset(out)


@lru_cache(maxsize=None)
def intervals_by_composition(n: int) -> frozenset[TamariInterval]:
    _check_budget(n)
    if n == 0:
        return frozenset([EMPTY_INTERVAL])
    out = set()
    for n1 in range(n):
        for a in intervals_by_composition(n1):
            for i in range(1, a.c0 + 2):
                ip = PointedInterval(a, i)
                for b in intervals_by_composition(n - 1 - n1):
                    out.add(left_compose(ip, b))
    return frozenset(out)


@dataclass(frozen=True)
class CountReport:
    kind: str
    size: int
    observed: int | None
    formula: int

    @property
    def match(self) -> bool | None:
        return None if self.observed is None else self.observed == self.formula

    def to_json(self) -> dict:
        return {"kind": self.kind, "size": self.size,
                "observed": None if self.observed is None else str(self.observed),
                "formula": str(self.formula), "match": self.match}


def count_closed_form(kind: str, n: int) -> CountReport:
    """Evaluate the closed form and, within budget, compare with enumeration."""
    if n < 1:
        raise ValueError("closed forms are stated for n >= 1")
    if kind not in FORMULAS:
        raise ValueError(f"unknown kind {kind!r}")
    formula = FORMULAS[kind](n)
    observed = None
    if n <= config.get().max_size:
        observed = sum(1 for _ in enumerate_objects(kind, n))
    return CountReport(kind, n, observed, formula)


def bivariate_fish_table(max_size: int) -> dict[tuple[int, int], tuple[int, int]]:
    """``(i, j) -> (observed, formula)`` for fighting fish with ``i`` E's and
    ``j`` N's, over all sizes ``1 <= i + j - 1 <= max_size``."""
    table = {}
    for n in range(1, max_size + 1):
        seen: dict = {}
        for f in enumerate_objects("fish", n):
            key = (f.letters.count("E"), f.letters.count("N"))
            seen[key] = seen.get(key, 0) + 1
        for i in range(1, n + 1):
            j = n + 1 - i
            table[(i, j)] = (seen.get((i, j), 0), bivariate_fish_count(i, j))
    return table


def enumeration_polynomial(n: int) -> MultiPoly:
    """Sum of ``u^jaw q^area y^#V`` over extended fish of size ``n``."""
    terms: dict = {}
    for f in enumerate_objects("efish", n):
        key = (f.jaw, f.area, f.num_triangles)
        terms[key] = terms.get(key, 0) + 1
    return MultiPoly(terms)


def total_area(n: int, fighting: bool = False) -> int:
    return sum(f.area for f in enumerate_objects("fish" if fighting else "efish", n))
