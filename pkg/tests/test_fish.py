import pytest
from hypothesis import given, strategies as st

from conftest import INTERVALS
from fishtamari.bijection import phi_direct
from fishtamari.errors import EmptyFish, IndexOutOfRange, InvalidFish
from fishtamari.fish import (
    EMPTY_FISH,
    HEAD,
    FishWord,
    PointedFish,
    block_vectors,
    conjugate_fish,
    fish_augment,
    fish_compose_high,
    fish_compose_low,
    fish_concat,
    fish_decompose,
    fish_decompose_high,
    fish_stats,
    parse_blocks,
    parse_fish,
    render,
    v_contract,
    v_expand,
)
from oracles import extended_fish_by_rewriting, fish_area_oracle

F = parse_fish
FISH = {n: [phi_direct(iv) for iv in INTERVALS[n]] for n in range(7)}


def fish_up_to(n):
    return [f for k in range(n + 1) for f in FISH[k]]


def pointed_up_to(n):
    return [PointedFish(f, i) for f in fish_up_to(n) for i in range(1, f.jaw + 2)]


def revalidate(f):
    return FishWord(f.letters)


def test_stats_examples():
    s = fish_stats("ENWS")
    assert (s.size, s.jaw, s.area, s.letters["V"]) == (1, 1, 1, 0)
    s = fish_stats(EMPTY_FISH)
    assert (s.size, s.jaw, s.area) == (0, 0, 0)
    s = fish_stats("EENVWSS")
    assert (s.size, s.jaw, s.area, s.letters["V"]) == (2, 2, 3, 1)
    assert s.to_json()["letters"] == {"E": 2, "N": 1, "W": 1, "S": 2, "V": 1}
    assert fish_stats("EENWNWSS").branch_points == 1
    assert len(s.trace) == 8


def test_parse_and_reject():
    assert F("ε") == EMPTY_FISH and F("eps") == EMPTY_FISH and F("enws") == HEAD
    for bad in ("ENWNWS", "ENW", "ENSW", "EXS", "NEWS", "EEEENWS", "EWNS"):
        with pytest.raises(InvalidFish):
            F(bad)


def test_blocks():
    assert parse_blocks("EEENVVWSSS") == ["EEN", "V", "V", "WSS"]
    assert block_vectors("EENVWSS") == ((2, 0, 0), (2, 0, 0))


def test_conjugate_examples():
    assert conjugate_fish(HEAD) == HEAD
    assert conjugate_fish(F("EENWWS")) == F("ENNWSS")
    assert conjugate_fish(F("ENNWSS")) == F("EENWWS")
    assert conjugate_fish(F("EENVWSS")) == F("EENVWSS")


def test_v_expand_examples():
    word, marks = v_expand(F("EENVWSS"))
    assert word == "EENWNWSS" and len(marks) == 1
    assert v_expand(HEAD) == ("ENWS", ())
    assert v_expand(EMPTY_FISH) == ("EWNS", (1,))
    assert v_contract("EWNS", (1,)) == EMPTY_FISH
    with pytest.raises(InvalidFish):
        v_contract("ENWS", (0,))


def test_concat_examples():
    assert fish_concat(HEAD, HEAD) == F("EENWWS")
    for f in fish_up_to(3):
        assert fish_concat(f, EMPTY_FISH) == f
        assert fish_concat(EMPTY_FISH, f) == f


def test_augment_examples():
    assert fish_augment(PointedFish(EMPTY_FISH, 1)) == HEAD
    assert fish_augment(PointedFish(HEAD, 1)) == F("ENNWSS")
    assert fish_augment(PointedFish(HEAD, 2)) == F("EENVWSS")
    with pytest.raises(IndexOutOfRange):
        PointedFish(HEAD, 3)
    with pytest.raises(IndexOutOfRange):
        PointedFish(EMPTY_FISH, 2)


def test_composition_examples():
    e1 = PointedFish(EMPTY_FISH, 1)
    assert fish_compose_low(e1, EMPTY_FISH) == HEAD
    assert fish_compose_low(e1, HEAD) == F("EENWWS")
    assert fish_compose_low(PointedFish(HEAD, 2), EMPTY_FISH) == F("EENVWSS")
    assert fish_compose_high(e1, EMPTY_FISH) == HEAD
    assert fish_compose_high(e1, HEAD) == F("EENWWS")
    x = fish_compose_high(PointedFish(HEAD, 1), HEAD)
    assert x == fish_concat(HEAD, F("ENNWSS"))
    assert (x.size, x.jaw, x.area) == (3, 2, 3)


def test_decompose_examples():
    assert fish_decompose(HEAD) == (PointedFish(EMPTY_FISH, 1), EMPTY_FISH)
    assert fish_decompose(F("EENWWS")) == (PointedFish(EMPTY_FISH, 1), HEAD)
    assert fish_decompose(F("EENVWSS")) == (PointedFish(HEAD, 2), EMPTY_FISH)
    for dec in (fish_decompose, fish_decompose_high):
        with pytest.raises(EmptyFish):
            dec(EMPTY_FISH)


def test_generated_sets_match_rewriting_oracle():
    oracle = extended_fish_by_rewriting(5)
    for n in range(6):
        assert {f.letters for f in FISH[n]} == oracle[n]


def test_validity_closure():
    small = fish_up_to(5)
    for f in small:
        revalidate(conjugate_fish(f))
        for i in range(1, f.jaw + 2):
            revalidate(fish_augment(PointedFish(f, i)))
    for f in fish_up_to(4):
        for g in fish_up_to(4):
            revalidate(fish_concat(f, g))
    for fp in pointed_up_to(3):
        for g in fish_up_to(3):
            revalidate(fish_compose_low(fp, g))
            revalidate(fish_compose_high(fp, g))


@pytest.mark.parametrize("n", range(7))
def test_letter_balance_and_area(n):
    for f in FISH[n]:
        w = f.letters
        assert w.count("E") + w.count("N") == w.count("W") + w.count("S")
        assert f.size == n
        assert w.count("W") + w.count("S") - 1 == n
        if n <= 5:
            assert f.area == fish_area_oracle(w)


def _brute_decompositions(f, pool):
    hits = []
    for fp in pool:
        for g in FISH.get(f.size - 1 - fp.fish.size, []):
            if fish_compose_low(fp, g) == f:
                hits.append((fp, g))
    return hits


def test_decompose_matches_brute_force():
    pool = pointed_up_to(4)
    for f in fish_up_to(5):
        if f.is_empty:
            continue
        hits = _brute_decompositions(f, pool)
        assert hits == [fish_decompose(f)]


def test_decomposition_bijective():
    for fp in pointed_up_to(4):
        for g in fish_up_to(4):
            assert fish_decompose(fish_compose_low(fp, g)) == (fp, g)
    for f in fish_up_to(5):
        if not f.is_empty:
            assert fish_compose_low(*fish_decompose(f)) == f
            assert fish_compose_high(*fish_decompose_high(f)) == f


def test_fighting_closure():
    fighting = [f for f in fish_up_to(4) if f.is_fighting]
    for f in fighting:
        for i in range(1, max(f.jaw, 1) + 1):
            fp = PointedFish(f, i)
            for g in fighting:
                assert fish_compose_low(fp, g).is_fighting
                assert fish_compose_high(fp, g).is_fighting


def test_stats_laws():
    pool = fish_up_to(4)
    for f in pool:
        for i in range(1, f.jaw + 2):
            a = fish_augment(PointedFish(f, i))
            assert (a.size, a.jaw, a.area) == (f.size + 1, i, f.area + i)
        for g in pool:
            c = fish_concat(f, g)
            assert (c.size, c.jaw, c.area) == (f.size + g.size, f.jaw + g.jaw, f.area + g.area)


@given(st.sampled_from(fish_up_to(5)), st.sampled_from(fish_up_to(5)), st.data())
def test_composition_laws(f, g, data):
    i = data.draw(st.integers(1, f.jaw + 1))
    for x in (fish_compose_low(PointedFish(f, i), g), fish_compose_high(PointedFish(f, i), g)):
        assert x.size == f.size + g.size + 1
        assert x.jaw == g.jaw + i
        assert x.area == f.area + g.area + i


@pytest.mark.parametrize("n", range(7))
def test_conjugation_involution(n):
    for f in FISH[n]:
        c = conjugate_fish(f)
        assert conjugate_fish(c) == f
        assert (c.size, c.area) == (f.size, f.area)


@pytest.mark.parametrize("n", range(6))
def test_v_expand_roundtrip(n):
    for f in FISH[n]:
        word, marks = v_expand(f)
        assert v_contract(word, marks) == f
        if not f.is_empty:
            g = FishWord(word)
            assert g.is_fighting and g.size == n + f.num_triangles


def test_render():
    art = render(HEAD)
    assert art.splitlines() == ["+-+", "| |", "o-+"]
    assert render(F("EENVWSS")).count("\\") == 1


def test_acceptance_of_all_short_words():
    from itertools import product

    oracle = {w for ws in extended_fish_by_rewriting(3).values() for w in ws}
    accepted = set()
    for length in range(3, 10):
        for mid in product("ENWSV", repeat=length - 2):
            w = "E" + "".join(mid) + "S"
            try:
                FishWord(w)
            except InvalidFish:
                continue
            accepted.add(w)
    assert accepted == {w for w in oracle if len(w) <= 9}
