import random

from hypothesis import given, settings, strategies as st

from helpers import random_tree
from toptree.oracle import OracleForest


def test_hand_examples():
    o = OracleForest(4)
    o.link(1, 2, 5)
    o.link(2, 3, 7)
    assert o.path_max(1, 3) == 7
    assert o.distance(1, 3) == 12
    s = OracleForest(4)
    for leaf, w in ((1, 1), (2, 4), (3, 2)):
        s.link(0, leaf, w)
    assert s.tree_max(2) == 4
    assert s.meet(1, 1, 3) == 1


def test_center_and_median_sets():
    o = OracleForest(3)
    o.link(0, 1, 1)
    o.link(1, 2, 1)
    assert o.center_set(0) == (1, {1})
    o.set_vertex_weight(2, 10)
    assert o.median_set(0) == (3, {2})


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 40), st.integers(0, 10**6))
def test_linear_modes_agree_with_all_pairs(n, seed):
    rng = random.Random(seed)
    fast = OracleForest(n)
    exact = OracleForest(n, exact=True)
    for u, v, w in random_tree(rng, n):
        fast.link(u, v, w)
        exact.link(u, v, w)
    for v in range(n):
        x = rng.randint(1, 9)
        fast.set_vertex_weight(v, x)
        exact.set_vertex_weight(v, x)
    r = rng.randrange(n)
    assert fast.eccentricities(r) == exact.eccentricities(r)
    assert fast.weighted_sums(r) == exact.weighted_sums(r)
    assert fast.center_set(r) == exact.center_set(r)
    assert fast.median_set(r) == exact.median_set(r)
