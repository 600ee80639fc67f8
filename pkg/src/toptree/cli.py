"""Line-oriented driver: ``toptree run``, ``toptree bench``, ``toptree gen``."""
from __future__ import annotations

import argparse
import sys

from .bench import BenchConfig, format_report, run_bench
from .errors import ForestError, NonPositiveWeight, ParseError, WrongProfile
from .metric import MetricForest
from .oracle import OracleForest
from .pathweights import PathForest
from .workload import WorkloadConfig, generate

# verb -> number of integer arguments (expose takes one or two)
COMMON = {"vertices": 1, "link": 3, "cut": 1, "connected": 2, "expose": (1, 2),
          "deexpose": 0, "dist": 2, "composite": 1}
PATH_VERBS = {"pathmax": 2, "pathadd": 3, "treemax": 1}
METRIC_VERBS = {"diam": 1, "center": 1, "median": 1, "setvw": 2, "mark": 1,
                "unmark": 1, "nearest": 1, "jump": 3, "meet": 3}
UPDATES = {"link", "cut", "expose"}


def _parse(line, lineno):
    parts = line.split()
    verb = parts[0]
    arity = COMMON.get(verb, PATH_VERBS.get(verb, METRIC_VERBS.get(verb)))
    if verb == "profile":
        if len(parts) != 2 or parts[1] not in ("metric", "pathweights"):
            raise ParseError(lineno)
        return verb, [parts[1]]
    if arity is None:
        raise ParseError(lineno)
    ok = len(parts) - 1 in arity if isinstance(arity, tuple) else len(parts) - 1 == arity
    if not ok:
        raise ParseError(lineno)
    try:
        args = [int(x) for x in parts[1:]]
    except ValueError:
        raise ParseError(lineno) from None
    return verb, args


class Runner:
    """Executes a script; ``out`` collects the query answers."""

    def __init__(self, seed=0, check=False, trace=False):
        self.seed = seed
        self.check = check
        self.trace = trace
        self.lib = None
        self.oracle = None
        self.out = []
        self.errors = []
        self.trace_lines = []
        self.commands = 0
        self.queries = 0
        self.checked = 0
        self.mismatches = 0
        self.max_height = 0
        # called with the runner after every successful command
        self.after_command = None

    # setup
    def _profile(self, name, lineno):
        if self.lib is not None:
            raise ParseError(lineno)
        cls = MetricForest if name == "metric" else PathForest
        self.lib = cls(0, seed=self.seed, trace=self.trace)
        if self.check:
            self.oracle = OracleForest(0)

    def _verb_allowed(self, verb):
        if verb in PATH_VERBS and self.lib.profile != "pathweights":
            raise WrongProfile(verb)
        if verb in METRIC_VERBS and self.lib.profile != "metric":
            raise WrongProfile(verb)

    def _compare(self, lineno, got, want, ok=None):
        self.checked += 1
        if ok is None:
            ok = got == want
        if not ok:
            self.mismatches += 1
            self.errors.append(f"MISMATCH line {lineno}: got {got} expected {want}")

    def _emit(self, text):
        self.out.append(str(text))

    def _note_height(self, *vs):
        tf = self.lib.tf
        for v in vs:
            h = tf.height(v)
            if h > self.max_height:
                self.max_height = h

    # execution
    def run(self, lines):
        """Run the script; returns the exit code."""
        i = 0
        lines = list(lines)
        while i < len(lines):
            lineno = i + 1
            text = lines[i].strip()
            i += 1
            if not text or text.startswith("#"):
                continue
            try:
                verb, args = _parse(text, lineno)
                if verb == "profile":
                    self._profile(args[0], lineno)
                    continue
                if self.lib is None:
                    raise ParseError(lineno)
                self._verb_allowed(verb)
                self.commands += 1
                if verb == "composite":
                    k = args[0]
                    if k < 0 or i + k > len(lines):
                        raise ParseError(lineno)
                    block = []
                    for j in range(k):
                        sub, sargs = _parse(lines[i + j].strip() or "?", i + j + 1)
                        if sub not in UPDATES:
                            raise ParseError(i + j + 1)
                        block.append((sub, sargs))
                    i += k
                    self._composite(block)
                else:
                    self._command(verb, args, lineno)
            except ForestError as exc:
                if isinstance(exc, ParseError) and exc.args and isinstance(exc.args[0], int):
                    lineno = exc.args[0]
                self._flush_trace()
                self.errors.append(f"ERROR line {lineno}: {exc.kind}")
                return 1
            self._flush_trace()
            if self.after_command is not None:
                self.after_command(self)
        if self.check:
            self._emit(f"checked {self.checked} queries, {self.mismatches} mismatches")
            if self.mismatches:
                return 1
        return 0

    def _flush_trace(self):
        tr = self.lib.tf.trace if self.lib is not None else None
        if tr:
            self.trace_lines.extend(tr)
            tr.clear()

    def _composite(self, block):
        ups = []
        for verb, args in block:
            if verb == "link":
                ups.append(("link", *args))
            elif verb == "cut":
                ups.append(("cut", args[0]))
            else:
                ups.append(("expose", *args))
        lib = self.lib
        for u in ups:
            if u[0] == "link" and lib.profile == "metric" and u[3] < 1:
                raise NonPositiveWeight(u[3])
        added = []
        if lib.profile == "pathweights":
            # weights of new edges are needed by the create callback
            nxt = lib.tf.forest.next_edge
            for u in ups:
                if u[0] == "link":
                    lib.ann.weights[nxt] = u[3]
                    added.append(nxt)
                    nxt += 1
        try:
            res = lib.tf.composite(ups)
        except ForestError:
            for e in added:
                lib.ann.weights.pop(e, None)
            raise
        for u, r in zip(ups, res):
            if u[0] == "link":
                self._emit(f"edge {r}")
                self._note_height(u[1])
                if self.oracle is not None:
                    self.oracle.link(u[1], u[2], u[3])
            elif u[0] == "cut":
                if lib.profile == "pathweights":
                    lib.ann.weights.pop(u[1], None)
                if self.oracle is not None:
                    self.oracle.cut(u[1])

    def _command(self, verb, args, lineno):
        lib = self.lib
        o = self.oracle
        if verb == "vertices":
            if args[0] < 0:
                raise ParseError(lineno)
            for _ in range(args[0]):
                lib.new_vertex()
                if o is not None:
                    o.new_vertex()
            return
        if verb == "link":
            e = lib.link(*args)
            self._emit(f"edge {e}")
            self._note_height(args[0])
            if o is not None:
                o.link(*args)
            return
        if verb == "cut":
            u, v = lib.tf.endpoints(args[0])
            lib.cut(args[0])
            self._note_height(u, v)
            if o is not None:
                o.cut(args[0])
            return
        if verb == "expose":
            lib.tf.expose(*args)
            self._note_height(args[0])
            return
        if verb == "deexpose":
            lib.tf.deexpose()
            return
        if verb == "setvw":
            lib.set_vertex_weight(*args)
            if o is not None:
                o.set_vertex_weight(*args)
            return
        if verb in ("mark", "unmark"):
            lib.mark(args[0], verb == "mark")
            if o is not None:
                o.mark(args[0], verb == "mark")
            return
        if verb == "pathadd":
            lib.path_add(*args)
            if o is not None:
                o.path_add(*args)
            return
        self.queries += 1
        self._query(verb, args, lineno)

    def _query(self, verb, args, lineno):
        lib = self.lib
        o = self.oracle
        if verb == "connected":
            r = lib.connected(*args)
            self._emit("true" if r else "false")
            if o is not None:
                self._compare(lineno, r, o.connected(*args))
        elif verb == "dist":
            r = lib.distance(*args)
            self._emit(r)
            if o is not None:
                self._compare(lineno, r, o.distance(*args) if args[0] != args[1] else 0)
        elif verb == "pathmax":
            r = lib.path_max(*args)
            self._emit(r)
            if o is not None:
                self._compare(lineno, r, o.path_max(*args))
        elif verb == "treemax":
            r = lib.tree_max(*args)
            self._emit(r)
            if o is not None:
                self._compare(lineno, r, o.tree_max(*args))
        elif verb == "diam":
            r = lib.diameter(*args)
            self._emit(r)
            if o is not None:
                self._compare(lineno, r, o.diameter(*args))
        elif verb == "center":
            r = lib.center(*args)
            self._emit(r)
            if o is not None:
                best, _ = o.center_set(args[0])
                got = o.center_objective(args[0], r)
                self._compare(lineno, got, best, o.connected(r, args[0]) and got == best)
        elif verb == "median":
            r = lib.median(*args)
            self._emit(r)
            if o is not None:
                best, _ = o.median_set(args[0])
                got = o.median_objective(args[0], r)
                self._compare(lineno, got, best, o.connected(r, args[0]) and got == best)
        elif verb == "nearest":
            r = lib.nearest_marked(*args)
            self._emit("none" if r is None else f"{r[0]} {r[1]}")
            if o is not None:
                want = o.nearest_marked(args[0])
                if r is None or want is None:
                    ok = r == want
                else:
                    ok = (r[0] == want[0] and o.marked[r[1]] and o.connected(args[0], r[1])
                          and (0 if args[0] == r[1] else o.distance(args[0], r[1])) == r[0])
                self._compare(lineno, r, want, ok)
        elif verb == "jump":
            r = lib.jump(*args)
            self._emit(r)
            if o is not None:
                self._compare(lineno, r, o.jump(*args))
        elif verb == "meet":
            r = lib.meet(*args)
            self._emit(r)
            if o is not None:
                self._compare(lineno, r, o.meet(*args))

    def stats_lines(self):
        lib = self.lib
        out = ["---"]
        if lib is None:
            return out
        tf = lib.tf
        st = tf.stats
        h = max((r.height for r in tf.roots()), default=-1)
        items = [("profile", lib.profile), ("seed", self.seed), ("vertices", tf.num_vertices),
                 ("edges", tf.num_edges), ("commands", self.commands), ("queries", self.queries),
                 ("joins", st.joins), ("splits", st.splits), ("creates", st.creates),
                 ("destroys", st.destroys), ("max_height", max(h, self.max_height)),
                 ("final_max_height", h)]
        out.extend(f"{k}={v}" for k, v in items)
        return out


def run_script(lines, seed=0, check=False, stats=False, trace=False):
    """Run ``lines``; returns (stdout lines, stderr lines, exit code)."""
    r = Runner(seed=seed, check=check, trace=trace)
    code = r.run(lines)
    out = list(r.out)
    if stats:
        out.extend(r.stats_lines())
    err = [f"trace {t}" for t in r.trace_lines] + r.errors
    return out, err, code


def main(argv=None):
    ap = argparse.ArgumentParser(prog="toptree")
    sub = ap.add_subparsers(dest="cmd", required=True)
    p = sub.add_parser("run", help="run a command script")
    p.add_argument("script", nargs="?", default="-")
    p.add_argument("--check", action="store_true")
    p.add_argument("--stats", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trace", action="store_true")
    b = sub.add_parser("bench", help="seeded scaling benchmark")
    b.add_argument("--n", type=int, default=1024)
    b.add_argument("--ops", type=int, default=3000)
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--no-timing", action="store_true")
    g = sub.add_parser("gen", help="generate a random script")
    g.add_argument("--profile", choices=("metric", "pathweights"), default="metric")
    g.add_argument("--n", type=int, default=64)
    g.add_argument("--ops", type=int, default=1000)
    g.add_argument("--seed", type=int, default=0)
    a = ap.parse_args(argv)

    if a.cmd == "run":
        if a.script == "-":
            lines = sys.stdin.read().splitlines()
        else:
            with open(a.script) as fh:
                lines = fh.read().splitlines()
        out, err, code = run_script(lines, a.seed, a.check, a.stats, a.trace)
        for line in out:
            print(line)
        for line in err:
            print(line, file=sys.stderr)
        return code
    if a.cmd == "bench":
        try:
            rep = run_bench(BenchConfig(a.n, a.ops, a.seed, not a.no_timing))
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        print("\n".join(format_report(rep)))
        return 0
    cfg = WorkloadConfig(profile=a.profile, n=a.n, ops=a.ops, seed=a.seed)
    print("\n".join(generate(cfg)))
    return 0


if __name__ == "__main__":
    sys.exit(main())
