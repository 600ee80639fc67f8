import random

import pytest
from hypothesis import given, settings, strategies as st

from helpers import random_tree
from toptree import TopTreeForest
from toptree.cluster import is_path_child, leaves
from toptree.errors import EmptyPath, EmptyTree, NestedSearch
from toptree.metric import MetricForest
from toptree.oracle import OracleForest
from toptree.search import Side, search, search_on_path


def tree(n, seed):
    rng = random.Random(seed)
    tf = TopTreeForest(seed=seed)
    tf.add_vertices(n)
    tf.composite([("link", u, v, w) for u, v, w in random_tree(rng, n)])
    return tf, rng


def coin_select(rng):
    return lambda top, c: Side(rng.randrange(2))


def test_single_edge_needs_no_select():
    tf = TopTreeForest()
    tf.add_vertices(2)
    e = tf.link(0, 1, 1)
    calls = []
    root = tf.expose(0)
    assert search(tf, root, lambda t, c: calls.append(1) or Side.LEFT) == e
    assert calls == []


def test_empty_inputs():
    tf = TopTreeForest()
    tf.add_vertices(3)
    with pytest.raises(EmptyTree):
        search(tf, None, lambda t, c: Side.LEFT)
    tf.link(0, 1, 1)
    tf.link(1, 2, 1)
    with pytest.raises(EmptyPath):
        search_on_path(tf, tf.expose(0), lambda t, c: Side.LEFT)


def test_nested_search_is_rejected():
    tf, _ = tree(10, 0)
    root = tf.expose(0)

    def select(top, c):
        search(tf, top, lambda t, c2: Side.LEFT)
        return Side.LEFT

    with pytest.raises(NestedSearch):
        search(tf, root, select)
    assert not tf.searching


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 80), st.integers(0, 10**6))
def test_search_restores_and_contains(n, seed):
    tf, rng = tree(n, seed)
    root = tf.expose(rng.randrange(n))
    before = tf.serialize_all()
    work = tf.stats.joins + tf.stats.splits
    trace = []
    covered = []

    def select(top, c):
        covered.append(sorted(l.edge for l in leaves(top)))
        assert top.boundary == tf.ext
        return Side(rng.randrange(2))

    e = search(tf, root, select, trace)
    assert tf.serialize_all() == before
    assert not tf.searching
    assert len(trace) <= root.height
    # temporary joins and splits stay linear in the height
    assert tf.stats.joins + tf.stats.splits - work <= 16 * (root.height + 1)
    every = sorted(tf.forest.ends)
    for step, cover in zip(trace, covered):
        assert cover == every
        chosen = step["left"] if step["side"] == Side.LEFT else step["right"]
        assert e in {l.edge for l in leaves(chosen)}


@settings(max_examples=60, deadline=None)
@given(st.integers(3, 80), st.integers(0, 10**6))
def test_path_search_only_offers_path_children(n, seed):
    tf, rng = tree(n, seed)
    o = OracleForest(n)
    for e in sorted(tf.forest.ends):
        u, v = tf.endpoints(e)
        o.link(u, v, 1)
    x, y = rng.sample(range(n), 2)
    on_path = set(o.path_edges(x, y))
    root = tf.expose(x, y)
    before = tf.serialize_all()
    trace = []
    e = search_on_path(tf, root, coin_select(rng), trace)
    assert e in on_path
    assert tf.serialize_all() == before
    for step in trace:
        for ch in (step["left"], step["right"]):
            assert is_path_child(step["current"], ch)
            assert on_path & {l.edge for l in leaves(ch)}


def test_jump_on_four_vertex_path_picks_middle_edge():
    m = MetricForest(5)
    for u in (1, 2, 3):
        m.link(u, u + 1, 1)
    m.select_log = []
    assert m.jump(1, 4, 2) == 3
    kind, pair, e = m.select_log[-1]
    assert kind == "jump"
    assert m.forest.endpoints(e) == (2, 3)


def test_adjacent_path_needs_no_select():
    tf, _ = tree(20, 1)
    e = 0
    x, y = tf.endpoints(e)
    root = tf.expose(x, y)
    calls = []
    assert search_on_path(tf, root, lambda t, c: calls.append(1) or Side.LEFT) == e
    assert calls == []
