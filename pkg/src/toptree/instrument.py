"""Per-operation height and work samples for the bound checks."""
from __future__ import annotations

import random
from dataclasses import dataclass

from .engine import TopTreeForest


@dataclass
class Sample:
    kind: str      # link, cut or expose
    n: int         # vertices in the forest
    size: int      # vertices in the tree the operation touched
    height: int    # height of that tree's root afterwards
    work: int      # joins + splits spent by the operation


def random_forest_samples(n, ops, seed, link_rate=0.55):
    """Random link/cut/expose stream on ``n`` vertices starting from no edges."""
    rng = random.Random(seed)
    tf = TopTreeForest(seed=seed)
    tf.add_vertices(n)
    st = tf.stats
    live = []
    out = []
    for _ in range(ops):
        r = rng.random()
        before = st.joins + st.splits
        if r < link_rate or not live:
            u, v = rng.randrange(n), rng.randrange(n)
            if u == v or tf.connected(u, v):
                continue
            live.append(tf.link(u, v, 1))
            kind, at = "link", u
        elif r < 0.85:
            j = rng.randrange(len(live))
            live[j], live[-1] = live[-1], live[j]
            e = live.pop()
            u, v = tf.endpoints(e)
            tf.cut(e)
            b = tf.forest.component(v)
            a = tf.forest.component(u)
            out.append(Sample("cut", n, max(len(a), len(b)), max(tf.height(u), tf.height(v)),
                              st.joins + st.splits - before))
            continue
        else:
            u = tf.endpoints(rng.choice(live))[0]
            comp = tf.forest.component(u)
            v = rng.choice(comp)
            tf.expose(u, v)
            kind, at = "expose", u
        out.append(Sample(kind, n, len(tf.forest.component(at)), tf.height(at),
                          st.joins + st.splits - before))
    return out
