"""Tamari order on Dyck paths, Tamari intervals and their decompositions."""
from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterator

from . import config
from .dyck import (
    EMPTY_PATH,
    DyckPath,
    _first_return,
    _trusted,
    conjugate_path,
    contact_vector,
    descent_vector,
    dyck_paths,
    first_excursion_split,
    last_excursion_split,
    non_initial_contacts,
    parse_path,
    type_vector,
)
from .errors import (
    BudgetExceeded,
    EmptyInterval,
    IndexOutOfRange,
    NotAnInterval,
    SizeMismatch,
)


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def covers(p: DyckPath) -> frozenset[DyckPath]:
    """Paths obtained from ``p`` by one right rotation ``V d P1 W -> V P1 d W``."""
    s = p.steps
    out = set()
    for k in range(len(s) - 1):
        if s[k] == "d" and s[k + 1] == "u":
            m = _first_return(s[k + 1:])
            out.add(_trusted(s[:k] + s[k + 1:k + 1 + m] + "d" + s[k + 1 + m:]))
    return frozenset(out)


class HasseDiagram:
    """Cover graph of the Tamari lattice of order ``n``.

    Reachability sets are memoized per source node; the diagram is read-only
    once built.
    """

    def __init__(self, n: int):
        self.n = n
        self.nodes: tuple[DyckPath, ...] = tuple(dyck_paths(n))
        self.edges: dict[DyckPath, frozenset[DyckPath]] = {p: covers(p) for p in self.nodes}
        self._up: dict[DyckPath, frozenset[DyckPath]] = {}
        self._longest: dict[tuple[DyckPath, DyckPath], int] = {}

    @property
    def num_edges(self) -> int:
        return sum(len(v) for v in self.edges.values())

    def up_set(self, p: DyckPath) -> frozenset[DyckPath]:
        got = self._up.get(p)
        if got is None:
            seen = {p}
            todo = deque([p])
            while todo:
                for q in self.edges[todo.popleft()]:
                    if q not in seen:
                        seen.add(q)
                        todo.append(q)
            got = self._up[p] = frozenset(seen)
        return got

    def leq(self, p: DyckPath, q: DyckPath) -> bool:
        return q in self.up_set(p)

    def longest_path(self, p: DyckPath, q: DyckPath) -> int:
        """Number of cover steps in a longest saturated chain from p to q."""
        key = (p, q)
        got = self._longest.get(key)
        if got is None:
            if p == q:
                got = 0
            else:
                got = 1 + max(self.longest_path(r, q) for r in self.edges[p]
                              if self.leq(r, q))
            self._longest[key] = got
        return got


_HASSE: dict[int, HasseDiagram] = {}


def build_hasse(n: int, node_budget: int | None = None) -> HasseDiagram:
    if n < 0:
        raise ValueError("order must be nonnegative")
    budget = config.get().node_budget if node_budget is None else node_budget
    if catalan(n) > budget:
        raise BudgetExceeded(f"Catalan({n}) = {catalan(n)} nodes exceeds budget {budget}")
    if n not in _HASSE:
        _HASSE[n] = HasseDiagram(n)
    return _HASSE[n]


def tamari_leq(p: DyckPath, q: DyckPath) -> bool:
    if p.size != q.size:
        raise SizeMismatch(f"sizes differ: {p.size} vs {q.size}")
    if p == q:
        return True
    return build_hasse(p.size).leq(p, q)


@dataclass(frozen=True)
class TamariInterval:
    lower: DyckPath
    upper: DyckPath

    def __post_init__(self):
        if self.lower.size != self.upper.size:
            raise NotAnInterval(f"sizes differ: {self.lower} vs {self.upper}")
        if not tamari_leq(self.lower, self.upper):
            raise NotAnInterval(f"{self.lower} is not below {self.upper}")

    @property
    def size(self) -> int:
        return self.lower.size

    @property
    def contact(self) -> tuple[int, ...]:
        return contact_vector(self.lower)

    @property
    def descent(self) -> tuple[int, ...]:
        return descent_vector(self.upper)

    @property
    def c0(self) -> int:
        return non_initial_contacts(self.lower)

    def __str__(self) -> str:
        return f"[{self.lower},{self.upper}]"

    def to_json(self) -> dict:
        return {"lower": self.lower.steps, "upper": self.upper.steps}

    @classmethod
    def from_json(cls, obj: dict | str) -> TamariInterval:
        if isinstance(obj, str):
            obj = json.loads(obj)
        return cls(parse_path(obj["lower"]), parse_path(obj["upper"]))


def _interval(lower: DyckPath, upper: DyckPath) -> TamariInterval:
    # results of the interval operations are intervals by construction
    iv = object.__new__(TamariInterval)
    object.__setattr__(iv, "lower", lower)
    object.__setattr__(iv, "upper", upper)
    return iv


def make_interval(lower: str, upper: str) -> TamariInterval:
    return TamariInterval(parse_path(lower), parse_path(upper))


EMPTY_INTERVAL = _interval(EMPTY_PATH, EMPTY_PATH)


def intervals(n: int) -> Iterator[TamariInterval]:
    """All intervals of order ``n``, filtered through the reachability sets."""
    h = build_hasse(n)
    for p in h.nodes:
        for q in sorted(h.up_set(p)):
            yield _interval(p, q)


@dataclass(frozen=True)
class PointedInterval:
    """An interval whose lower path has its ``point``-th contact, counted
    from right to left, distinguished."""
    interval: TamariInterval
    point: int

    def __post_init__(self):
        if not 1 <= self.point <= self.interval.c0 + 1:
            raise IndexOutOfRange(
                f"point {self.point} outside 1..{self.interval.c0 + 1} for {self.interval}")

    def split(self) -> tuple[DyckPath, DyckPath]:
        """``lower = left . right`` at the distinguished contact."""
        s = self.interval.lower.steps
        h = self.interval.lower.heights()
        contacts = [t for t, x in enumerate(h) if x == 0]
        pos = contacts[-self.point]
        return _trusted(s[:pos]), _trusted(s[pos:])

    @property
    def is_proper(self) -> bool:
        return self.point <= self.interval.c0

    def to_json(self) -> dict:
        return {**self.interval.to_json(), "point": self.point}

    @classmethod
    def from_json(cls, obj: dict | str) -> PointedInterval:
        if isinstance(obj, str):
            obj = json.loads(obj)
        return cls(TamariInterval.from_json(obj), int(obj["point"]))


def point_interval(iv: TamariInterval, i: int) -> PointedInterval:
    return PointedInterval(iv, i)


def interval_concat(a: TamariInterval, b: TamariInterval) -> TamariInterval:
    return _interval(a.lower + b.lower, a.upper + b.upper)


def interval_augment(ip: PointedInterval) -> TamariInterval:
    left, right = ip.split()
    iv = ip.interval
    return _interval(_trusted("u" + left.steps + "d" + right.steps),
                     _trusted("u" + iv.upper.steps + "d"))


def left_compose(ip: PointedInterval, b: TamariInterval) -> TamariInterval:
    return interval_concat(interval_augment(ip), b)


def right_compose(ip: PointedInterval, b: TamariInterval) -> TamariInterval:
    return interval_concat(b, interval_augment(ip))


def _unaugment(lower_head: str, q1: DyckPath) -> PointedInterval:
    # lower_head = u P1l d P1r, the image of an augmentation
    l, r = first_excursion_split(DyckPath(lower_head))
    p1 = l + r
    iv = _interval(p1, q1)
    return PointedInterval(iv, 1 + non_initial_contacts(r))


def decompose_left(iv: TamariInterval) -> tuple[PointedInterval, TamariInterval]:
    """Inverse of :func:`left_compose`: cut the upper path at its first return."""
    if iv.size == 0:
        raise EmptyInterval("[•,•] has no decomposition")
    q1, q2 = first_excursion_split(iv.upper)
    m = 2 * q1.size + 2
    p = iv.lower.steps
    return _unaugment(p[:m], q1), _interval(DyckPath(p[m:]), q2)


def decompose_right(iv: TamariInterval) -> tuple[PointedInterval, TamariInterval]:
    """Inverse of :func:`right_compose`: cut the upper path at its last return."""
    if iv.size == 0:
        raise EmptyInterval("[•,•] has no decomposition")
    q2, q1 = last_excursion_split(iv.upper)
    m = 2 * q2.size
    p = iv.lower.steps
    return _unaugment(p[m:], q1), _interval(DyckPath(p[:m]), q2)


def conjugate_interval(iv: TamariInterval) -> TamariInterval:
    return _interval(conjugate_path(iv.upper), conjugate_path(iv.lower))


@lru_cache(maxsize=1 << 16)
def gamma(iv: TamariInterval) -> TamariInterval:
    """Distance-preserving involution exchanging the right and left
    composition structures."""
    if iv.size == 0:
        return iv
    ip, b = decompose_right(iv)
    a = PointedInterval(gamma(ip.interval), ip.point)
    return left_compose(a, gamma(b))


def is_synchronized(iv: TamariInterval) -> bool:
    return type_vector(iv.lower) == type_vector(iv.upper)


def longest_chain(iv: TamariInterval) -> int:
    """Number of strict increases in a longest chain from lower to upper."""
    return build_hasse(iv.size).longest_path(iv.lower, iv.upper)


def distance_formula(iv: TamariInterval) -> int:
    """Sum over ``0 <= i < j <= n`` of ``(c_i - 1)(1 - d_{n-j})``."""
    c, d = iv.contact, iv.descent
    n = iv.size
    total = 0
    prefix = 0
    for j in range(n + 1):
        total += prefix * (1 - d[n - j])
        prefix += c[j] - 1
    return total
