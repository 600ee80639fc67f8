"""Seeded random scripts in the CLI command language.

The generator tracks the forest with a private :class:`OracleForest` so that
every emitted command is valid (links join different trees, pair queries
stay inside one tree, jump distances are in range, and so on).
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field

from .oracle import OracleForest

METRIC_MIX = {
    "link": 20, "cut": 7, "setvw": 5, "mark": 4, "unmark": 3,
    "diam": 8, "center": 8, "median": 8, "nearest": 9, "jump": 9, "meet": 8, "dist": 9,
    "connected": 1, "expose": 1, "deexpose": 1, "composite": 1,
}
PATH_MIX = {
    "link": 22, "cut": 8, "pathadd": 20, "pathmax": 20, "treemax": 13, "dist": 13,
    "connected": 1, "expose": 1, "deexpose": 1, "composite": 1,
}
QUERIES = {"diam", "center", "median", "nearest", "jump", "meet", "dist",
           "pathmax", "treemax", "connected"}


@dataclass
class WorkloadConfig:
    profile: str = "metric"
    n: int = 64
    ops: int = 1000
    seed: int = 0
    max_weight: int = 100
    max_add: int = 20
    mix: dict = field(default_factory=dict)

    def weights(self):
        if self.mix:
            return self.mix
        return METRIC_MIX if self.profile == "metric" else PATH_MIX


class _State:
    def __init__(self, n, rng):
        self.o = OracleForest(n)
        self.rng = rng
        self.live = []

    def comp(self, v):
        return self.o._tree(v)[0]

    def edge_vertex(self):
        """A random vertex with at least one edge, or None."""
        if not self.live:
            return None
        e = self.rng.choice(self.live)
        return self.o.edges[e][self.rng.randrange(2)]

    def pair(self):
        u = self.edge_vertex()
        if u is None:
            return None
        c = self.comp(u)
        v = self.rng.choice(c)
        while v == u:
            v = self.rng.choice(c)
        return u, v

    def split_pair(self):
        n = len(self.o.adj)
        for _ in range(20):
            u = self.rng.randrange(n)
            v = self.rng.randrange(n)
            if u != v and not self.o.connected(u, v):
                return u, v
        return None

    def link(self, u, v, w):
        e = self.o.link(u, v, w)
        self.live.append(e)
        return e

    def cut_random(self):
        j = self.rng.randrange(len(self.live))
        self.live[j], self.live[-1] = self.live[-1], self.live[j]
        e = self.live.pop()
        self.o.cut(e)
        return e


def generate(cfg: WorkloadConfig):
    """Return the script for ``cfg`` as a list of lines."""
    rng = random.Random(cfg.seed)
    st = _State(cfg.n, rng)
    verbs = list(cfg.weights())
    wts = [cfg.weights()[v] for v in verbs]
    lines = [f"profile {cfg.profile}", f"vertices {cfg.n}"]
    n = cfg.n
    done = 0
    while done < cfg.ops:
        verb = rng.choices(verbs, wts)[0]
        line = _emit(verb, st, rng, cfg, n)
        if line is None:
            continue
        lines.extend(line if isinstance(line, list) else [line])
        done += 1
    return lines


def _emit(verb, st, rng, cfg, n):
    o = st.o
    if verb == "link":
        p = st.split_pair()
        if p is None:
            return None
        w = rng.randint(1, cfg.max_weight)
        st.link(p[0], p[1], w)
        return f"link {p[0]} {p[1]} {w}"
    if verb == "cut":
        if not st.live:
            return None
        return f"cut {st.cut_random()}"
    if verb == "composite":
        # swap one edge of a tree for another edge reconnecting it
        if not st.live:
            return None
        return _swap(st, rng, cfg)
    if verb in ("setvw", "mark", "unmark"):
        v = rng.randrange(n)
        if verb == "setvw":
            w = rng.randint(1, cfg.max_weight)
            o.set_vertex_weight(v, w)
            return f"setvw {v} {w}"
        o.mark(v, verb == "mark")
        return f"{verb} {v}"
    if verb in ("diam", "center", "median", "nearest"):
        v = st.edge_vertex() if rng.random() < 0.9 else rng.randrange(n)
        if v is None:
            v = rng.randrange(n)
        return f"{verb} {v}"
    if verb == "treemax":
        v = st.edge_vertex()
        return None if v is None else f"treemax {v}"
    if verb == "expose":
        p = st.pair()
        if p is None:
            return None
        return f"expose {p[0]} {p[1]}" if rng.random() < 0.6 else f"expose {p[0]}"
    if verb == "deexpose":
        return "deexpose"
    if verb == "connected":
        return f"connected {rng.randrange(n)} {rng.randrange(n)}"
    p = st.pair()
    if p is None:
        return None
    u, v = p
    if verb in ("dist", "pathmax"):
        return f"{verb} {u} {v}"
    if verb == "pathadd":
        x = rng.randint(-cfg.max_add, cfg.max_add)
        o.path_add(u, v, x)
        return f"pathadd {u} {v} {x}"
    if verb == "jump":
        d = rng.randint(0, o.hops(u, v))
        return f"jump {u} {v} {d}"
    if verb == "meet":
        z = rng.choice(st.comp(u))
        return f"meet {u} {v} {z}"
    raise ValueError(verb)


def _swap(st, rng, cfg):
    """``composite 2``: cut a random edge and reconnect the two halves elsewhere."""
    o = st.o
    e = rng.choice(st.live)
    a, b, _ = o.edges[e]
    j = st.live.index(e)
    st.live[j] = st.live[-1]
    st.live.pop()
    o.cut(e)
    x = rng.choice(st.comp(a))
    y = rng.choice(st.comp(b))
    w = rng.randint(1, cfg.max_weight)
    st.link(x, y, w)
    return ["composite 2", f"cut {e}", f"link {x} {y} {w}"]


def core_mix(profile):
    """The default mix without connected/expose/deexpose/composite."""
    mix = METRIC_MIX if profile == "metric" else PATH_MIX
    return {k: v for k, v in mix.items() if k not in ("connected", "expose", "deexpose", "composite")}
