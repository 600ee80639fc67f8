"""Differential run: generated scripts through the CLI runner in check mode.

    python3 scripts/oracle_diff.py --profile metric --workloads 5 --ops 10000
"""
import argparse
import random
import time

from toptree.cli import Runner
from toptree.workload import WorkloadConfig, generate


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--profile", choices=("metric", "pathweights"), default="metric")
    ap.add_argument("--workloads", type=int, default=5)
    ap.add_argument("--ops", type=int, default=10_000)
    ap.add_argument("--max-n", type=int, default=512)
    a = ap.parse_args()
    total = 0
    for seed in range(a.workloads):
        n = random.Random(seed).randint(8, a.max_n)
        t = time.perf_counter()
        r = Runner(seed=seed, check=True)
        code = r.run(generate(WorkloadConfig(profile=a.profile, n=n, ops=a.ops, seed=seed)))
        total += r.mismatches
        print(f"seed={seed} n={n} exit={code} checked={r.checked} mismatches={r.mismatches} "
              f"seconds={time.perf_counter() - t:.1f}", flush=True)
        for line in r.errors[:5]:
            print("  " + line)
    print(f"total mismatches={total}")


if __name__ == "__main__":
    main()
