"""The eight acceptance criteria, each printing one pass/fail line.

Slow: the two oracle-equivalence runs execute 200 workloads of 10^4
operations each. Run alone with ``pytest tests/test_acceptance.py -s``.
"""
import os
import random
import subprocess
import sys
import time
from pathlib import Path

from helpers import random_tree, report
from toptree.audit import audit
from toptree.bench import BenchConfig, run_bench
from toptree.bounds import BOUNDS
from toptree.cli import Runner, run_script
from toptree.instrument import random_forest_samples
from toptree.metric import MetricForest
from toptree.oracle import OracleForest
from toptree.workload import WorkloadConfig, core_mix, generate

DATA = Path(__file__).parent / "data"
WORKLOADS = 200
OPS = 10_000


def _equivalence(profile, number, limit):
    start = time.perf_counter()
    checked = mismatches = failures = 0
    for seed in range(WORKLOADS):
        n = random.Random(seed).randint(8, 512)
        cfg = WorkloadConfig(profile=profile, n=n, ops=OPS, seed=seed, mix=core_mix(profile))
        r = Runner(seed=seed, check=True)
        code = r.run(generate(cfg))
        checked += r.checked
        mismatches += r.mismatches
        failures += code != 0
    elapsed = time.perf_counter() - start
    ok = mismatches == 0 and failures == 0 and elapsed < limit
    report(number, ok, f"{profile}: {WORKLOADS} workloads x {OPS} ops, {checked} queries checked, "
                       f"{mismatches} mismatches, {elapsed:.1f} s (limit {limit} s)")
    assert mismatches == 0 and failures == 0
    assert elapsed < limit, f"correct but too slow: {elapsed:.1f} s"


def test_criterion_1_metric_equivalence():
    _equivalence("metric", 1, 60)


def test_criterion_2_pathweights_equivalence():
    _equivalence("pathweights", 2, 30)


def test_criterion_3_structural_audit():
    audited = 0
    violations = []

    def check(runner):
        nonlocal audited
        audited += 1
        bad = audit(runner.lib.tf)
        if bad:
            violations.extend(bad[:3])

    seed = 0
    while audited < 100_000:
        profile = "metric" if seed % 2 == 0 else "pathweights"
        cfg = WorkloadConfig(profile=profile, n=8 + seed % 40, ops=2000, seed=1000 + seed)
        r = Runner(seed=seed)
        r.after_command = check
        assert r.run(generate(cfg)) == 0, r.errors
        seed += 1
    ok = not violations
    report(3, ok, f"{audited} operations audited over {seed} scripts, {len(violations)} violations")
    assert ok, violations[:5]


def test_criterion_4_height_and_work_bounds():
    points = 0
    bad = []
    for n in (16, 64, 256, 1024):
        for seed in range(100, 103):
            for s in random_forest_samples(n, 3000, seed):
                points += 1
                if s.height > BOUNDS.height(s.size) or s.work > BOUNDS.work(n):
                    bad.append(s)
    for k in (10, 12):
        rep = run_bench(BenchConfig(n=2 ** k, ops=1500, seed=100, timing=False))
        points += rep["ops"]
        if not rep["within_bounds"]:
            bad.append(rep)
    ok = not bad
    report(4, ok, f"{points} instrumented points, c_h={BOUNDS.c_h} c_ops={BOUNDS.c_ops} "
                  f"k={BOUNDS.k}, {len(bad)} over bound")
    assert ok, bad[:5]


def _shape(node):
    out = []
    stack = [node]
    while stack:
        n = stack.pop()
        if isinstance(n, str):
            out.append(n)
        elif n.edge is not None:
            out.append(str(n.edge))
        else:
            stack.extend([")", n.right, ",", n.left, "("])
    return "".join(out)


def test_criterion_5_search_restoration():
    queries = 0
    changed = 0
    shape_changed = 0
    rng = random.Random(5)
    while queries < 10_000:
        n = rng.randint(2, 60)
        m = MetricForest(n, seed=rng.randrange(1 << 30))
        for u, v, w in random_tree(rng, n):
            m.link(u, v, w)
        for v in range(n):
            m.set_vertex_weight(v, rng.randint(1, 9))
        state = rng.randrange(3)
        if state:
            a, b = rng.randrange(n), rng.randrange(n)
            r = m.tf.expose(a, b)
            shape = _shape(r)
            if state == 2:
                m.tf.deexpose()
                shape_changed += _shape(m.tf.top_root(a)) != shape
        for _ in range(50):
            before = m.tf.serialize_all()
            kind = rng.randrange(3)
            x = rng.randrange(n)
            if kind == 0:
                m.center(x)
            elif kind == 1:
                m.median(x)
            else:
                y = rng.randrange(n)
                m.jump(x, y, rng.randint(0, m.hops(x, y)))
            queries += 1
            changed += m.tf.serialize_all() != before
    ok = changed == 0 and shape_changed == 0
    report(5, ok, f"{queries} center/median/jump queries, {changed} serializations changed, "
                  f"{shape_changed} deexpose shape changes")
    assert ok


def test_criterion_6_select_soundness():
    rng = random.Random(6)
    counts = {"center": 0, "median": 0, "jump": 0}
    bad = []
    while min(counts.values()) < 3000:
        n = rng.randint(2, 80)
        m = MetricForest(n, seed=rng.randrange(1 << 30))
        o = OracleForest(n)
        for u, v, w in random_tree(rng, n):
            m.link(u, v, w)
            o.link(u, v, w)
        for v in range(n):
            m.set_vertex_weight(v, rng.randint(1, 9))
        m.select_log = []
        for _ in range(40):
            x, y = rng.randrange(n), rng.randrange(n)
            m.center(x)
            m.median(y)
            if x != y:
                m.jump(x, y, rng.randint(0, o.hops(x, y)))
            on_path = set(o.path_edges(x, y)) if x != y else set()
            for entry in m.select_log:
                kind = entry[0]
                counts[kind] += 1
                if kind == "jump":
                    if entry[2] not in on_path:
                        bad.append(entry)
                elif entry[1] < entry[2]:
                    bad.append(entry)
            m.select_log.clear()
    ok = not bad
    report(6, ok, f"{counts['center']} center and {counts['median']} median select calls, "
                  f"{counts['jump']} path searches, {len(bad)} unsound")
    assert ok, bad[:5]


def test_criterion_7_scaling():
    start = time.perf_counter()
    small = run_bench(BenchConfig(n=2 ** 10, ops=3000, seed=7))
    large = run_bench(BenchConfig(n=2 ** 16, ops=3000, seed=7))
    t14 = run_bench(BenchConfig(n=2 ** 14, ops=3000, seed=7))
    t17 = run_bench(BenchConfig(n=2 ** 17, ops=3000, seed=7))
    elapsed = time.perf_counter() - start
    work_ratio = large["mean_link_work"] / small["mean_link_work"]
    time_ratio = t17["us_per_op"] / t14["us_per_op"]
    ok = work_ratio <= 1.8 and time_ratio <= 3 and elapsed < 120
    report(7, ok, f"link work 2^16/2^10 = {work_ratio:.2f} (limit 1.8), "
                  f"time per op 2^17/2^14 = {time_ratio:.2f} (limit 3), {elapsed:.1f} s (limit 120 s)")
    assert work_ratio <= 1.8
    assert time_ratio <= 3
    assert elapsed < 120


def _cli(path, hash_seed):
    env = dict(os.environ, PYTHONHASHSEED=str(hash_seed))
    return subprocess.run([sys.executable, "-m", "toptree", "run", "--check", "--stats", str(path)],
                          capture_output=True, env=env)


def test_criterion_8_determinism():
    results = []
    for path in sorted(DATA.glob("*_10k.txt")):
        a = _cli(path, 1)
        b = _cli(path, 2)
        tail = a.stdout.decode().split("\n---\n")[0].splitlines()[-1]
        results.append((path.name, a.returncode, a.stdout == b.stdout and a.stderr == b.stderr, tail))
    # in-process replay of a generated script
    lines = generate(WorkloadConfig(profile="metric", n=64, ops=2000, seed=8))
    same = run_script(lines, stats=True) == run_script(lines, stats=True)
    ok = same and all(code == 0 and ident and tail.endswith(" 0 mismatches")
                      for _, code, ident, tail in results)
    detail = "; ".join(f"{name}: {tail}, replay {'identical' if ident else 'DIFFERS'}"
                       for name, _, ident, tail in results)
    report(8, ok, detail)
    assert len(results) == 2
    assert ok


def test_bundled_scripts_exist():
    assert {p.name for p in DATA.glob("*_10k.txt")} == {"metric_10k.txt", "pathweights_10k.txt"}

