"""Dyck paths over the letters ``u``/``d``, their statistics and vectors.

Paths are stored as step strings; the descent, contact and type vectors are
derived views returned as plain tuples of length ``n + 1``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, NamedTuple, Sequence

from .errors import EmptyPath, MalformedPath, NotADyckPath

EMPTY_SYMBOL = "•"


def _check_steps(steps: str, exc=MalformedPath) -> None:
    height = 0
    for pos, s in enumerate(steps):
        if s == "u":
            height += 1
        elif s == "d":
            height -= 1
            if height < 0:
                raise exc(f"prefix of length {pos + 1} dips below the axis in {steps!r}")
        else:
            raise exc(f"unexpected step {s!r} in {steps!r}")
    if height != 0:
        raise exc(f"unbalanced path {steps!r}")


@dataclass(frozen=True, order=True)
class DyckPath:
    steps: str = ""

    def __post_init__(self):
        _check_steps(self.steps)

    @property
    def size(self) -> int:
        return len(self.steps) // 2

    def __str__(self) -> str:
        return self.steps or EMPTY_SYMBOL

    def __add__(self, other: DyckPath) -> DyckPath:
        return _trusted(self.steps + other.steps)

    def heights(self) -> list[int]:
        out = [0]
        for s in self.steps:
            out.append(out[-1] + (1 if s == "u" else -1))
        return out


def _trusted(steps: str) -> DyckPath:
    # skips validation; callers guarantee a valid step string
    p = object.__new__(DyckPath)
    object.__setattr__(p, "steps", steps)
    return p


EMPTY_PATH = _trusted("")


def parse_path(text: str) -> DyckPath:
    text = text.strip()
    if text in (EMPTY_SYMBOL, "."):
        text = ""
    return DyckPath(text)


def dyck_paths(n: int) -> Iterator[DyckPath]:
    """All Dyck paths of size ``n`` in lexicographic order (``d`` < ``u``)."""
    def rec(prefix, ups, height):
        if ups == n and height == 0:
            yield prefix
            return
        if height > 0:
            yield from rec(prefix + "d", ups, height - 1)
        if ups < n:
            yield from rec(prefix + "u", ups + 1, height + 1)

    for s in rec("", 0, 0):
        yield _trusted(s)


def _last_return(steps: str) -> int:
    # index where the final excursion starts
    height = 0
    last = 0
    for pos, s in enumerate(steps[:-1]):
        height += 1 if s == "u" else -1
        if height == 0:
            last = pos + 1
    return last


def _first_return(steps: str) -> int:
    # length of the first excursion
    height = 0
    for pos, s in enumerate(steps):
        height += 1 if s == "u" else -1
        if height == 0:
            return pos + 1
    return 0


def last_excursion_split(p: DyckPath) -> tuple[DyckPath, DyckPath]:
    """Write ``p = p1 u p2 d`` where ``u p2 d`` is the final excursion."""
    if not p.steps:
        raise EmptyPath("the empty path has no excursion")
    k = _last_return(p.steps)
    return _trusted(p.steps[:k]), _trusted(p.steps[k + 1:-1])


def first_excursion_split(p: DyckPath) -> tuple[DyckPath, DyckPath]:
    """Write ``p = u p1 d p2`` where ``u p1 d`` is the first excursion."""
    if not p.steps:
        raise EmptyPath("the empty path has no excursion")
    k = _first_return(p.steps)
    return _trusted(p.steps[1:k - 1]), _trusted(p.steps[k:])


def non_initial_contacts(p: DyckPath) -> int:
    return _contact(p.steps)[0]


class StepStats(NamedTuple):
    valleys: int
    peaks: int
    double_rises: int
    double_descents: int


def step_stats(p: DyckPath) -> StepStats:
    s = p.steps
    pairs = [s[k:k + 2] for k in range(len(s) - 1)]
    return StepStats(pairs.count("du"), pairs.count("ud"), pairs.count("uu"), pairs.count("dd"))


def descent_vector(p: DyckPath) -> tuple[int, ...]:
    """``(d_0, ..., d_n)`` with ``p = d^{d_n} u d^{d_{n-1}} u ... u d^{d_0}``."""
    return _descent(p.steps)


@lru_cache(maxsize=1 << 16)
def _descent(steps: str) -> tuple[int, ...]:
    return tuple(len(run) for run in reversed(steps.split("u")))


def contact_vector(p: DyckPath) -> tuple[int, ...]:
    """``c_0`` counts non-initial contacts of ``p``; ``c_i`` those of the
    maximal excursion that starts right after the i-th up step."""
    return _contact(p.steps)


@lru_cache(maxsize=1 << 16)
def _contact(steps: str) -> tuple[int, ...]:
    # open[h] is the slot of the excursion currently sitting at height h;
    # it closes when the walk drops below h
    out = [0]
    open_at = [0]
    for ch in steps:
        if ch == "u":
            out.append(0)
            open_at.append(len(out) - 1)
        else:
            open_at.pop()
            out[open_at[-1]] += 1
    return tuple(out)


def type_vector(p: DyckPath) -> tuple[int, ...]:
    return tuple(int(c > 0) for c in contact_vector(p))


def path_from_descent_vector(v: Sequence[int]) -> DyckPath:
    return _trusted(_from_descent(tuple(v)))


@lru_cache(maxsize=1 << 16)
def _from_descent(v: tuple[int, ...]) -> str:
    if not v or any(x < 0 for x in v):
        raise NotADyckPath(f"not a descent vector: {tuple(v)}")
    steps = "u".join("d" * x for x in reversed(v))
    _check_steps(steps, NotADyckPath)
    return steps


@lru_cache(maxsize=1 << 16)
def _conj(steps: str) -> str:
    if not steps:
        return ""
    k = _last_return(steps)
    return _conj(steps[k + 1:-1]) + "u" + _conj(steps[:k]) + "d"


def conjugate_path(p: DyckPath) -> DyckPath:
    """Recursive conjugation ``Conj(p1 u p2 d) = Conj(p2) u Conj(p1) d``.

    An involution and an anti-automorphism of the Tamari order; it swaps the
    contact and descent vectors.
    """
    return _trusted(_conj(p.steps))


def path_from_contact_vector(v: Sequence[int]) -> DyckPath:
    return conjugate_path(path_from_descent_vector(v))
