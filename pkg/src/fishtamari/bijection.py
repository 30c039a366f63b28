"""The bijection between Tamari intervals and extended fighting fish."""
from __future__ import annotations

from functools import lru_cache

from .dyck import path_from_contact_vector, path_from_descent_vector
from .errors import InvalidFish, NotADyckPath, NotAnInterval
from .fish import (
    EMPTY_FISH,
    FishWord,
    PointedFish,
    _fish,
    block_vectors,
    fish_compose_low,
    parse_fish,
)
from .tamari import TamariInterval, _interval, decompose_left


def fish_blocks(iv: TamariInterval) -> list[str]:
    """Blocks ``w_0 .. w_n`` of the fish image of ``iv``."""
    c, d = iv.contact, iv.descent
    n = iv.size
    blocks = []
    for i in range(n + 1):
        ci, di = c[i], d[n - i]
        if ci and di:
            raise NotAnInterval(f"c_{i} and d_{n - i} both positive for {iv}")
        if ci:
            blocks.append("E" * (ci - 1) + "N")
        elif di:
            blocks.append("W" + "S" * (di - 1))
        else:
            blocks.append("V")
    return blocks


@lru_cache(maxsize=1 << 16)
def phi_direct(iv: TamariInterval) -> FishWord:
    return _fish("E" + "".join(fish_blocks(iv)) + "S")


@lru_cache(maxsize=1 << 16)
def phi_recursive(iv: TamariInterval) -> FishWord:
    """Reference form: transport the left decomposition to the fish side."""
    if iv.size == 0:
        return EMPTY_FISH
    ip, rest = decompose_left(iv)
    return fish_compose_low(PointedFish(phi_recursive(ip.interval), ip.point),
                            phi_recursive(rest))


def phi_inverse(f: FishWord | str, check_order: bool = True) -> TamariInterval:
    """Recover the interval from the blocks of ``f``.

    With ``check_order`` the pair of recovered paths is re-validated against
    the Tamari order, which makes this the full validity test for fish words.
    """
    if isinstance(f, str):
        f = parse_fish(f)
    c, d = block_vectors(f.letters)
    try:
        lower = path_from_contact_vector(c)
        upper = path_from_descent_vector(d)
    except NotADyckPath as exc:
        raise InvalidFish(f"{f}: vectors not realizable") from exc
    if not check_order:
        return _interval(lower, upper)
    try:
        return TamariInterval(lower, upper)
    except NotAnInterval as exc:
        raise InvalidFish(f"{f}: recovered paths are not comparable") from exc


def validate_fish(word: str) -> FishWord:
    """Parse ``word`` and run every validity check, order included."""
    f = parse_fish(word)
    phi_inverse(f, check_order=True)
    return f


def is_valid_fish(word: str) -> bool:
    try:
        validate_fish(word)
    except InvalidFish:
        return False
    return True
