"""Seeded scaling benchmark.

A random tree on ``n`` vertices is built with one composite update, then the
workload repeats (cut a random edge, relink the halves at random vertices,
expose a random pair). Work is read from the engine's own counters.
"""
from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass

from .bounds import BOUNDS
from .engine import TopTreeForest


@dataclass
class BenchConfig:
    n: int = 1024
    ops: int = 3000
    seed: int = 0
    timing: bool = True


def random_tree_links(n, rng, max_weight=100):
    """Edges of a random recursive tree on 0..n-1 as link tuples."""
    out = []
    for v in range(1, n):
        out.append(("link", rng.randrange(v), v, rng.randint(1, max_weight)))
    return out


def run_bench(cfg: BenchConfig):
    if cfg.n < 2:
        raise ValueError("bench needs n >= 2")
    rng = random.Random(cfg.seed)
    tf = TopTreeForest(seed=cfg.seed)
    tf.add_vertices(cfg.n)
    t0 = time.perf_counter()
    eids = tf.composite(random_tree_links(cfg.n, rng))
    build = time.perf_counter() - t0
    live = list(eids)
    st = tf.stats
    work = {"link": [], "cut": [], "expose": []}
    max_height = tf.height(0)
    height_ok = max_height <= BOUNDS.height(cfg.n)
    n_ops = 0
    t0 = time.perf_counter()
    while n_ops < cfg.ops:
        j = rng.randrange(len(live))
        e = live[j]
        u, v = tf.endpoints(e)
        before = st.joins + st.splits
        tf.cut(e)
        work["cut"].append(st.joins + st.splits - before)
        r = rng.randrange(cfg.n)
        a, b = (r, v) if tf.connected(r, u) else (u, r)
        before = st.joins + st.splits
        live[j] = tf.link(a, b, rng.randint(1, 100))
        work["link"].append(st.joins + st.splits - before)
        x, y = rng.randrange(cfg.n), rng.randrange(cfg.n)
        before = st.joins + st.splits
        tf.expose(x, y)
        work["expose"].append(st.joins + st.splits - before)
        n_ops += 3
        h = tf.height(x)
        if h > max_height:
            max_height = h
        if h > BOUNDS.height(cfg.n):
            height_ok = False
    elapsed = time.perf_counter() - t0
    worst = max(max(w) for w in work.values())
    report = {
        "n": cfg.n,
        "ops": n_ops,
        "seed": cfg.seed,
        "mean_link_work": sum(work["link"]) / len(work["link"]),
        "mean_cut_work": sum(work["cut"]) / len(work["cut"]),
        "mean_expose_work": sum(work["expose"]) / len(work["expose"]),
        "max_op_work": worst,
        "max_height": max_height,
        "height_bound": BOUNDS.height(cfg.n),
        "work_bound": BOUNDS.work(cfg.n),
        "within_bounds": height_ok and worst <= BOUNDS.work(cfg.n),
        "log2_n": math.log2(cfg.n),
    }
    if cfg.timing:
        report["build_seconds"] = build
        report["us_per_op"] = elapsed / n_ops * 1e6
    return report


def format_report(report):
    out = []
    for k, v in report.items():
        if isinstance(v, float):
            v = f"{v:.3f}"
        elif isinstance(v, bool):
            v = str(v).lower()
        out.append(f"{k}={v}")
    return out
