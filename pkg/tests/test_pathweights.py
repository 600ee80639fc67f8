import pytest
from hypothesis import given, settings, strategies as st

from toptree.errors import IsolatedVertex, NotSameTree, SameVertex
from toptree.oracle import OracleForest
from toptree.pathweights import PathForest


def path123(better=max):
    p = PathForest(4, better=better)
    p.link(1, 2, 5)
    p.link(2, 3, 7)
    return p


def test_single_edge():
    p = PathForest(2)
    p.link(0, 1, 5)
    assert p.path_max(0, 1) == 5
    assert p.tree_max(0) == 5


def test_path_max_and_add():
    p = path123()
    assert p.path_max(1, 3) == 7
    p.path_add(1, 3, 10)
    assert p.path_max(1, 3) == 17
    assert p.edge_weights() == {0: 15, 1: 17}


def test_distance():
    p = path123()
    assert p.distance(1, 3) == 12
    assert p.distance(3, 1) == 12
    assert p.distance(2, 2) == 0


def test_min_variant():
    p = path123(min)
    assert p.path_max(1, 3) == 5
    assert p.tree_max(2) == 5


def test_tree_max_on_star():
    p = PathForest(4)
    for leaf, w in ((1, 1), (2, 4), (3, 2)):
        p.link(0, leaf, w)
    assert p.tree_max(0) == 4
    # raising an edge off the 1..0 path through a sub-path add
    p.path_add(0, 3, 5)
    assert p.tree_max(1) == 7


def test_zero_add_changes_nothing():
    p = path123()
    p.path_add(1, 3, 0)
    assert p.edge_weights() == {0: 5, 1: 7}


def test_overlapping_adds_accumulate():
    p = PathForest(5)
    for u in range(4):
        p.link(u, u + 1, 1)
    p.path_add(0, 3, 2)
    p.path_add(1, 4, 3)
    assert p.edge_weights() == {0: 3, 1: 6, 2: 6, 3: 4}


def test_add_survives_cut_of_off_path_edge():
    p = PathForest(5)
    p.link(0, 1, 1)
    p.link(1, 2, 1)
    off = p.link(1, 3, 1)
    p.path_add(0, 2, 4)
    p.cut(off)
    assert p.path_max(0, 2) == 5
    assert p.edge_weights() == {0: 5, 1: 5}


def test_errors():
    p = path123()
    with pytest.raises(SameVertex):
        p.path_max(1, 1)
    with pytest.raises(NotSameTree):
        p.path_max(0, 1)
    with pytest.raises(IsolatedVertex):
        p.tree_max(0)


def test_checked_mode_detects_overflow():
    p = PathForest(2, checked=True)
    p.link(0, 1, 2**62)
    with pytest.raises(OverflowError):
        p.path_add(0, 1, 2**62)


ops = st.lists(st.tuples(st.integers(0, 5), st.integers(0, 999), st.integers(0, 999),
                         st.integers(-20, 20)), max_size=80)


@settings(max_examples=80, deadline=None)
@given(ops, st.sampled_from([max, min]), st.integers(0, 3))
def test_matches_oracle(script, better, seed):
    n = 9
    p = PathForest(n, seed=seed, better=better)
    o = OracleForest(n)
    live = []
    for sel, a, b, x in script:
        u, v = a % n, b % n
        if sel <= 1:
            if u != v and not o.connected(u, v):
                e = p.link(u, v, x)
                assert e == o.link(u, v, x)
                live.append(e)
        elif sel == 2 and live:
            e = live.pop(a % len(live))
            p.cut(e)
            o.cut(e)
        elif u != v and o.connected(u, v):
            if sel == 3:
                p.path_add(u, v, x)
                o.path_add(u, v, x)
            assert p.path_max(u, v) == o.path_max(u, v, better)
            assert p.distance(u, v) == o.distance(u, v)
            assert p.tree_max(u) == o.tree_max(u, better)
    assert p.edge_weights() == {e: w for e, (_, _, w) in o.edges.items()}
