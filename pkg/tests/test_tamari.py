import json

import pytest
from hypothesis import given

from conftest import INTERVALS, PATHS, intervals_up_to
from fishtamari.dyck import EMPTY_PATH, contact_vector, conjugate_path, descent_vector, parse_path
from fishtamari.errors import (
    BudgetExceeded,
    EmptyInterval,
    IndexOutOfRange,
    NotAnInterval,
    SizeMismatch,
)
from fishtamari.tamari import (
    EMPTY_INTERVAL,
    PointedInterval,
    TamariInterval,
    build_hasse,
    catalan,
    conjugate_interval,
    covers,
    decompose_left,
    decompose_right,
    distance_formula,
    gamma,
    interval_augment,
    interval_concat,
    is_synchronized,
    left_compose,
    longest_chain,
    make_interval,
    point_interval,
    right_compose,
    tamari_leq,
)
from oracles import bracket_leq, closure_by_bfs, longest_chain_by_dfs, rotations

P = parse_path
I = make_interval
UD = I("ud", "ud")


def test_covers_examples():
    assert covers(P("udud")) == {P("uudd")}
    assert covers(P("uudd")) == set()
    assert covers(P("ududud")) == {P("uuddud"), P("uduudd")}


@pytest.mark.parametrize("n", range(8))
def test_covers_match_oracle(n):
    for p in PATHS[n]:
        assert {q.steps for q in covers(p)} == rotations(p.steps)


def test_hasse_examples():
    assert (len(build_hasse(2).nodes), build_hasse(2).num_edges) == (2, 1)
    assert (len(build_hasse(3).nodes), build_hasse(3).num_edges) == (5, 5)
    assert (len(build_hasse(0).nodes), build_hasse(0).num_edges) == (1, 0)
    assert len(build_hasse(7).nodes) == catalan(7)


def test_hasse_budget():
    with pytest.raises(BudgetExceeded):
        build_hasse(6, node_budget=100)


def test_leq_examples():
    assert tamari_leq(P("udud"), P("uudd"))
    assert not tamari_leq(P("uudd"), P("udud"))
    assert tamari_leq(P("ududud"), P("ududud"))
    with pytest.raises(SizeMismatch):
        tamari_leq(P("ud"), P("udud"))


@pytest.mark.parametrize("n", range(8))
def test_order_matches_bfs_closure(n):
    up = closure_by_bfs(n)
    for p in PATHS[n]:
        for q in PATHS[n]:
            expected = q.steps in up[p.steps]
            assert tamari_leq(p, q) == expected
            if n <= 6:
                assert bracket_leq(p.steps, q.steps) == expected


def test_interval_validation_and_json():
    with pytest.raises(NotAnInterval):
        I("uudd", "udud")
    with pytest.raises(NotAnInterval):
        I("ud", "udud")
    iv = I("udud", "uudd")
    assert TamariInterval.from_json(json.dumps(iv.to_json())) == iv
    with pytest.raises(NotAnInterval):
        TamariInterval.from_json({"lower": "uudd", "upper": "udud"})


def test_interval_counts():
    assert [len(INTERVALS[n]) for n in range(7)] == [1, 1, 3, 13, 68, 399, 2530]


def test_distance_examples():
    for iv, want in ((UD, 0), (I("udud", "uudd"), 1), (I("ududud", "uuuddd"), 3)):
        assert longest_chain(iv) == want
        assert distance_formula(iv) == want


@pytest.mark.parametrize("n", range(6))
def test_longest_chain_matches_dfs(n):
    up = closure_by_bfs(n)
    for iv in INTERVALS[n]:
        assert longest_chain(iv) == longest_chain_by_dfs(iv.lower.steps, iv.upper.steps, up)


def test_synchronized_examples():
    assert is_synchronized(UD)
    assert not is_synchronized(I("udud", "uudd"))
    assert is_synchronized(I("udud", "udud"))


def test_pointing():
    assert tuple(x.steps for x in point_interval(UD, 1).split()) == ("ud", "")
    assert tuple(x.steps for x in point_interval(UD, 2).split()) == ("", "ud")
    with pytest.raises(IndexOutOfRange):
        point_interval(UD, 3)
    with pytest.raises(IndexOutOfRange):
        point_interval(UD, 0)
    ip = point_interval(I("udud", "uudd"), 2)
    assert PointedInterval.from_json(ip.to_json()) == ip


def test_operation_examples():
    assert interval_concat(UD, UD) == I("udud", "udud")
    assert interval_concat(I("udud", "uudd"), EMPTY_INTERVAL) == I("udud", "uudd")
    assert interval_concat(I("udud", "uudd"), UD) == I("ududud", "uuddud")
    assert interval_augment(PointedInterval(EMPTY_INTERVAL, 1)) == UD
    assert interval_augment(PointedInterval(UD, 1)) == I("uudd", "uudd")
    assert interval_augment(PointedInterval(UD, 2)) == I("udud", "uudd")
    e1 = PointedInterval(EMPTY_INTERVAL, 1)
    for compose in (left_compose, right_compose):
        assert compose(e1, EMPTY_INTERVAL) == UD
        assert compose(e1, UD) == I("udud", "udud")
        assert compose(PointedInterval(UD, 2), EMPTY_INTERVAL) == I("udud", "uudd")


def test_decompose_examples():
    assert decompose_left(UD) == (PointedInterval(EMPTY_INTERVAL, 1), EMPTY_INTERVAL)
    assert decompose_left(I("udud", "uudd")) == (PointedInterval(UD, 2), EMPTY_INTERVAL)
    assert decompose_left(I("udud", "udud")) == (PointedInterval(EMPTY_INTERVAL, 1), UD)
    for f in (decompose_left, decompose_right):
        with pytest.raises(EmptyInterval):
            f(EMPTY_INTERVAL)


def _pointed(max_size):
    return [PointedInterval(iv, i) for n in range(max_size + 1)
            for iv in INTERVALS[n] for i in range(1, iv.c0 + 2)]


def test_compositions_are_bijective_small():
    pts = _pointed(3)
    ivs = [iv for n in range(4) for iv in INTERVALS[n]]
    for ip in pts:
        for b in ivs:
            assert decompose_left(left_compose(ip, b)) == (ip, b)
            assert decompose_right(right_compose(ip, b)) == (ip, b)


@pytest.mark.parametrize("n", range(1, 7))
def test_decompose_then_compose(n):
    for iv in INTERVALS[n]:
        assert left_compose(*decompose_left(iv)) == iv
        assert right_compose(*decompose_right(iv)) == iv
        # compositions always land back in the order
        TamariInterval(iv.lower, iv.upper)


@pytest.mark.parametrize("n", range(1, 7))
def test_synchronized_restriction(n):
    for iv in INTERVALS[n]:
        if not is_synchronized(iv):
            continue
        for dec in (decompose_left, decompose_right):
            ip, b = dec(iv)
            # the empty interval pointed at 1 is the base case, proper by convention
            assert ip.is_proper or ip.interval.size == 0
            assert is_synchronized(ip.interval) and is_synchronized(b)


def test_compositions_preserve_synchronized():
    ivs = [iv for n in range(4) for iv in INTERVALS[n] if is_synchronized(iv)]
    for a in ivs:
        for i in range(1, max(a.c0, 1) + 1):
            for b in ivs:
                ip = PointedInterval(a, i)
                assert is_synchronized(left_compose(ip, b))
                assert is_synchronized(right_compose(ip, b))


def test_statistic_recurrences():
    ivs = [iv for n in range(4) for iv in INTERVALS[n]]
    for a in ivs:
        c, d = a.contact, a.descent
        for i in range(1, a.c0 + 2):
            x = interval_augment(PointedInterval(a, i))
            assert x.contact == (i, c[0] + 1 - i) + c[1:]
            assert x.descent == (d[0] + 1,) + d[1:] + (0,)
            assert distance_formula(x) == distance_formula(a) + i - 1
        for b in ivs:
            x = interval_concat(a, b)
            cb, db = b.contact, b.descent
            assert x.contact == (c[0] + cb[0],) + c[1:] + cb[1:]
            assert x.descent == db[:-1] + d
            assert distance_formula(x) == distance_formula(a) + distance_formula(b)


@given(intervals_up_to(5), intervals_up_to(5))
def test_composition_laws(a, b):
    for i in range(1, a.c0 + 2):
        ip = PointedInterval(a, i)
        for x in (left_compose(ip, b), right_compose(ip, b)):
            assert x.size == a.size + b.size + 1
            assert x.c0 == b.c0 + i
            assert distance_formula(x) == distance_formula(a) + distance_formula(b) + i - 1


@pytest.mark.parametrize("n", range(7))
def test_compzero(n):
    for iv in INTERVALS[n]:
        c, d = iv.contact, iv.descent
        assert all(c[i] * d[n - i] == 0 for i in range(n + 1))


def test_conjugate_examples():
    assert conjugate_interval(UD) == UD
    assert conjugate_interval(I("udud", "uudd")) == I("udud", "uudd")
    assert conjugate_interval(I("udud", "udud")) == I("uudd", "uudd")


@pytest.mark.parametrize("n", range(6))
def test_conjugation_is_anti_automorphism(n):
    for p in PATHS[n]:
        for q in PATHS[n]:
            assert tamari_leq(p, q) == tamari_leq(conjugate_path(q), conjugate_path(p))


@pytest.mark.parametrize("n", range(7))
def test_conjugate_interval_involution(n):
    for iv in INTERVALS[n]:
        ci = conjugate_interval(iv)
        TamariInterval(ci.lower, ci.upper)
        assert conjugate_interval(ci) == iv
        assert distance_formula(ci) == distance_formula(iv)
        assert contact_vector(ci.lower) == descent_vector(iv.upper)


def test_gamma_examples():
    assert gamma(EMPTY_INTERVAL) == EMPTY_INTERVAL
    assert gamma(UD) == UD


@pytest.mark.parametrize("n", range(6))
def test_gamma_involution(n):
    for iv in INTERVALS[n]:
        g = gamma(iv)
        TamariInterval(g.lower, g.upper)
        assert gamma(g) == iv
        assert distance_formula(g) == distance_formula(iv)


def test_empty_interval():
    assert EMPTY_INTERVAL.lower == EMPTY_PATH and EMPTY_INTERVAL.size == 0
    assert str(EMPTY_INTERVAL) == "[•,•]"
