"""Measure height and per-operation work ratios used to pick the frozen bounds.

Prints, for each forest size, the worst (height - k) / log2(size) and
(work - k) / log2(n) seen, for the offset k given on the command line.
"""
import argparse
import math

from toptree.bench import BenchConfig, run_bench
from toptree.bounds import BOUNDS
from toptree.instrument import random_forest_samples


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--k", type=float, default=BOUNDS.k)
    ap.add_argument("--seeds", type=int, default=5)
    ap.add_argument("--ops", type=int, default=4000)
    a = ap.parse_args()
    worst_h = worst_w = 0.0
    for n in (4, 16, 64, 256, 1024, 4096):
        for seed in range(a.seeds):
            for s in random_forest_samples(n, a.ops, seed):
                worst_h = max(worst_h, (s.height - a.k) / math.log2(max(s.size, 2)))
                worst_w = max(worst_w, (s.work - a.k) / math.log2(n))
        print(f"n={n} worst_height_ratio={worst_h:.3f} worst_work_ratio={worst_w:.3f}", flush=True)
    for k in (10, 14, 16):
        r = run_bench(BenchConfig(n=2 ** k, ops=1500, seed=1, timing=False))
        worst_h = max(worst_h, (r["max_height"] - a.k) / math.log2(r["n"]))
        worst_w = max(worst_w, (r["max_op_work"] - a.k) / math.log2(r["n"]))
        print(f"bench n=2^{k} worst_height_ratio={worst_h:.3f} worst_work_ratio={worst_w:.3f}", flush=True)
    print(f"frozen: c_h={BOUNDS.c_h} c_ops={BOUNDS.c_ops} k={BOUNDS.k}")


if __name__ == "__main__":
    main()
