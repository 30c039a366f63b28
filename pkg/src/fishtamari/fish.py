"""Extended fighting fish as words over ``E, N, W, S, V``.

A word is read as a walk in the quarter plane with steps
``E=(1,0), N=(0,1), W=(-1,0), S=(0,-1), V=(-1,1)``.  Every extended fish
factors as ``E w_0 w_1 ... w_n S`` with blocks ``E^a N``, ``W S^b`` or ``V``.
:class:`FishWord` checks the walk, the block grammar, and that the two paths
read off the blocks are comparable, so every accepted word is a genuine fish.
"""
from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field

from .dyck import path_from_contact_vector, path_from_descent_vector
from .errors import EmptyFish, IndexOutOfRange, InvalidFish, NotADyckPath
from .tamari import tamari_leq

STEPS = {"E": (1, 0), "N": (0, 1), "W": (-1, 0), "S": (0, -1), "V": (-1, 1)}
CONJUGATE_LETTER = str.maketrans("ENWSV", "SWNEV")
EMPTY_WORD = "EVS"
_WORD = re.compile(r"E((?:E*N|WS*|V)*)S")
_BLOCK = re.compile(r"E*N|WS*|V")


def parse_blocks(word: str) -> list[str]:
    """Split ``E w_0 ... w_n S`` into its blocks ``w_i``.

    The final ``S`` is the wrapper; every other ``S`` belongs to the
    ``W S^b`` block it follows.
    """
    m = _WORD.fullmatch(word)
    if m:
        return _BLOCK.findall(m.group(1))
    # slow path, only to report where parsing fails
    if len(word) < 3 or word[0] != "E" or word[-1] != "S":
        raise InvalidFish(f"{word!r} is not of the form E...S")
    body = word[1:-1]
    blocks = []
    k = 0
    while k < len(body):
        ch = body[k]
        if ch in "EN":
            j = k
            while j < len(body) and body[j] == "E":
                j += 1
            if j == len(body) or body[j] != "N":
                raise InvalidFish(f"E-run not closed by N in {word!r}")
            blocks.append(body[k:j + 1])
            k = j + 1
        elif ch == "W":
            j = k + 1
            while j < len(body) and body[j] == "S":
                j += 1
            blocks.append(body[k:j])
            k = j
        elif ch == "V":
            blocks.append("V")
            k += 1
        else:
            raise InvalidFish(f"unexpected {ch!r} at position {k + 1} in {word!r}")
    return blocks


def block_vectors(word: str) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Contact and descent vectors read off the blocks of ``word``."""
    blocks = parse_blocks(word)
    n = len(blocks) - 1
    c = [0] * (n + 1)
    d = [0] * (n + 1)
    for i, b in enumerate(blocks):
        if b[-1] == "N":
            c[i] = len(b)
        elif b[0] == "W":
            d[n - i] = len(b)
    return tuple(c), tuple(d)


def walk(word: str) -> list[tuple[int, int]]:
    pts = [(0, 0)]
    x = y = 0
    for ch in word:
        dx, dy = STEPS[ch]
        x += dx
        y += dy
        pts.append((x, y))
    return pts


def _check_word(word: str) -> None:
    if set(word) - set(STEPS):
        raise InvalidFish(f"letters outside ENWSV in {word!r}")
    pts = walk(word)
    if pts[-1] != (0, 0):
        raise InvalidFish(f"{word!r} does not return to the origin")
    if any(x < 0 or y < 0 for x, y in pts):
        raise InvalidFish(f"{word!r} leaves the quarter plane")
    counts = Counter(word)
    if counts["E"] + counts["N"] != counts["W"] + counts["S"]:
        raise InvalidFish(f"{word!r} has unequal lower and upper free edges")
    c, d = block_vectors(word)
    n = len(c) - 1
    if sum(c) != n or sum(d) != n:
        raise InvalidFish(f"{word!r}: block vectors do not sum to {n}")
    try:
        lower = path_from_contact_vector(c)
        upper = path_from_descent_vector(d)
    except NotADyckPath as exc:
        raise InvalidFish(f"{word!r}: block vectors are not realizable") from exc
    if not tamari_leq(lower, upper):
        raise InvalidFish(f"{word!r}: recovered paths {lower} and {upper} are not comparable")


@dataclass(frozen=True, order=True)
class FishWord:
    letters: str

    def __post_init__(self):
        _check_word(self.letters)

    def __str__(self) -> str:
        return self.letters

    @property
    def is_empty(self) -> bool:
        return self.letters == EMPTY_WORD

    @property
    def size(self) -> int:
        return self.letters.count("E") + self.letters.count("N") - 1

    @property
    def jaw(self) -> int:
        if self.is_empty:
            return 0
        return len(self.letters) - len(self.letters.lstrip("E"))

    @property
    def area(self) -> int:
        return word_area(self.letters)

    @property
    def num_triangles(self) -> int:
        return self.letters.count("V")

    @property
    def is_fighting(self) -> bool:
        return self.is_empty or "V" not in self.letters


def _fish(letters: str) -> FishWord:
    # outputs of the fish operations are valid by construction
    f = object.__new__(FishWord)
    object.__setattr__(f, "letters", letters)
    return f


EMPTY_FISH = _fish(EMPTY_WORD)
HEAD = _fish("ENWS")


def parse_fish(text: str) -> FishWord:
    text = text.strip()
    if text in ("ε", "eps"):
        return EMPTY_FISH
    return FishWord(text.upper())


def _lat_long_trace(word: str):
    lat = lon = 0
    trace = [(0, 0)]
    for ch in word:
        dx, dy = STEPS[ch]
        lon += dx
        lat += dy
        trace.append((lat, lon))
    return trace


def word_area(word: str) -> int:
    """Sum of (lat(prefix_i) - lat(prefix_{i-1})) * long(prefix_i)."""
    tr = _lat_long_trace(word)
    return sum((tr[i][0] - tr[i - 1][0]) * tr[i][1] for i in range(1, len(tr)))


@dataclass(frozen=True)
class FishStats:
    size: int
    jaw: int
    area: int
    letters: dict = field(compare=False)
    branch_points: int
    trace: tuple = field(compare=False, repr=False)

    def to_json(self) -> dict:
        return {"size": self.size, "jaw": self.jaw, "area": self.area,
                "letters": dict(self.letters), "branch_points": self.branch_points}


def fish_stats(f: FishWord | str) -> FishStats:
    if isinstance(f, str):
        f = parse_fish(f)
    w = f.letters
    counts = {ch: w.count(ch) for ch in "ENWSV"}
    return FishStats(f.size, f.jaw, f.area, counts, w.count("WN"),
                     tuple(_lat_long_trace(w)))


def conjugate_fish(f: FishWord) -> FishWord:
    """Reverse the word and swap E<->S, N<->W (reflection of the fish)."""
    return _fish(f.letters[::-1].translate(CONJUGATE_LETTER))


def v_expand(f: FishWord) -> tuple[str, tuple[int, ...]]:
    """Replace each ``V`` by ``WN``; return the fighting-fish word and the
    start positions of the marked ``WN`` factors.

    The empty fish has no genuine expansion; it maps to the formal marked
    word ``EWNS``, which is not a quarter-plane walk.
    """
    out = []
    marks = []
    for ch in f.letters:
        if ch == "V":
            marks.append(len(out))
            out.extend("WN")
        else:
            out.append(ch)
    return "".join(out), tuple(marks)


def v_contract(word: str, marks) -> FishWord:
    if word == "EWNS" and tuple(marks) == (1,):
        return EMPTY_FISH
    marks = set(marks)
    out = []
    k = 0
    while k < len(word):
        if k in marks:
            if word[k:k + 2] != "WN":
                raise InvalidFish(f"mark at {k} is not on a WN factor of {word!r}")
            out.append("V")
            k += 2
        else:
            out.append(word[k])
            k += 1
    return FishWord("".join(out))


@dataclass(frozen=True)
class PointedFish:
    fish: FishWord
    point: int

    def __post_init__(self):
        if not 1 <= self.point <= self.fish.jaw + 1:
            raise IndexOutOfRange(
                f"point {self.point} outside 1..{self.fish.jaw + 1} for {self.fish}")

    @property
    def is_proper(self) -> bool:
        return self.point <= self.fish.jaw


def fish_concat(f1: FishWord, f2: FishWord) -> FishWord:
    if f1.is_empty:
        return f2
    if f2.is_empty:
        return f1
    j2 = f2.jaw
    return _fish("E" * j2 + f1.letters[:-1] + f2.letters[j2 + 1:])


def fish_augment(fp: PointedFish) -> FishWord:
    f, i = fp.fish, fp.point
    if f.is_empty:
        return HEAD
    j = f.jaw
    g = f.letters[j + 1:]
    if i <= j:
        return _fish("E" * i + "N" + "E" * (j - i) + "N" + g + "S")
    # i == jaw + 1: a triangle closes the new strip
    return _fish("E" * (j + 1) + "NV" + g + "S")


def fish_compose_low(fp: PointedFish, f2: FishWord) -> FishWord:
    return fish_concat(fish_augment(fp), f2)


def fish_compose_high(fp: PointedFish, f2: FishWord) -> FishWord:
    return fish_concat(f2, fish_augment(fp))


def fish_decompose(f: FishWord) -> tuple[PointedFish, FishWord]:
    """The unique ``(F1^i, F2)`` with ``F = fish_compose_low(F1^i, F2)``."""
    from .bijection import phi_direct, phi_inverse
    from .tamari import decompose_left

    if f.is_empty:
        raise EmptyFish("the empty fish has no decomposition")
    ip, i2 = decompose_left(phi_inverse(f, check_order=False))
    out = PointedFish(phi_direct(ip.interval), ip.point), phi_direct(i2)
    assert fish_compose_low(*out) == f
    return out


def fish_decompose_high(f: FishWord) -> tuple[PointedFish, FishWord]:
    """The unique ``(F1^i, F2)`` with ``F = fish_compose_high(F1^i, F2)``."""
    from .bijection import phi_direct, phi_inverse
    from .tamari import decompose_right

    if f.is_empty:
        raise EmptyFish("the empty fish has no decomposition")
    ip, i2 = decompose_right(phi_inverse(f, check_order=False))
    out = PointedFish(phi_direct(ip.interval), ip.point), phi_direct(i2)
    assert fish_compose_high(*out) == f
    return out


def render(f: FishWord) -> str:
    """ASCII drawing of the walk; ``o`` marks the origin (the nose)."""
    pts = walk(f.letters)
    width = max(x for x, _ in pts)
    height = max(y for _, y in pts)
    rows = [[" "] * (2 * width + 1) for _ in range(2 * height + 1)]

    def put(x2, y2, ch):
        rows[2 * height - y2][x2] = ch

    for (x0, y0), (x1, y1) in zip(pts, pts[1:]):
        if y0 == y1:
            put(x0 + x1, 2 * y0, "-")
        elif x0 == x1:
            put(2 * x0, y0 + y1, "|")
        else:
            put(x0 + x1, y0 + y1, "\\")
    for x, y in pts:
        put(2 * x, 2 * y, "+")
    put(0, 0, "o")
    return "\n".join("".join(r).rstrip() for r in rows)
