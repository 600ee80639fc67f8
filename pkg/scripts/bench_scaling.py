"""Scaling table: work and time per operation across forest sizes.

    python3 scripts/bench_scaling.py --sizes 10 12 14 16 17
"""
import argparse

from toptree.bench import BenchConfig, run_bench


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--sizes", type=int, nargs="+", default=[10, 12, 14, 16, 17])
    ap.add_argument("--ops", type=int, default=3000)
    ap.add_argument("--seed", type=int, default=7)
    ap.add_argument("--no-timing", action="store_true")
    a = ap.parse_args()
    cols = ["n", "mean_link_work", "mean_cut_work", "mean_expose_work", "max_op_work", "max_height"]
    if not a.no_timing:
        cols.append("us_per_op")
    print(" ".join(f"{c:>16}" for c in cols))
    for k in a.sizes:
        r = run_bench(BenchConfig(n=2 ** k, ops=a.ops, seed=a.seed, timing=not a.no_timing))
        print(" ".join(f"{r[c]:>16.2f}" if isinstance(r[c], float) else f"{r[c]:>16}" for c in cols),
              flush=True)


if __name__ == "__main__":
    main()
