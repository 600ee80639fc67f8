"""Shared helpers for driving random operation streams in tests."""
import random

from hypothesis import strategies as st

from toptree.audit import audit

# raw ops: (selector, a, b, w), interpreted against the current forest
raw_ops = st.lists(
    st.tuples(st.integers(0, 9), st.integers(0, 10**6), st.integers(0, 10**6), st.integers(1, 50)),
    max_size=60,
)


def apply_raw(tf, ops, n, live, on_op=None):
    """Turn raw tuples into valid link/cut/expose/deexpose calls on ``tf``."""
    for sel, a, b, w in ops:
        u, v = a % n, b % n
        if sel < 5:
            if u != v and not tf.connected(u, v):
                live.append(tf.link(u, v, w))
        elif sel < 8:
            if live:
                tf.cut(live.pop(a % len(live)))
        elif sel == 8:
            if tf.connected(u, v):
                tf.expose(u, v)
        else:
            tf.deexpose()
        if on_op is not None:
            on_op(tf)


def assert_clean(tf):
    bad = audit(tf)
    assert bad == [], bad[:5]


def random_tree(rng, n, max_w=20):
    """Random recursive tree as (u, v, w) triples."""
    return [(rng.randrange(v), v, rng.randint(1, max_w)) for v in range(1, n)]


def seeded(seed):
    return random.Random(seed)


# one summary line per acceptance criterion, printed by conftest at the end
ACCEPTANCE = []


def report(number, ok, detail):
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'} {detail}"
    ACCEPTANCE.append(line)
    print(line, flush=True)
