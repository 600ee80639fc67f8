"""Path aggregates with lazy path addition.

Each cluster stores the best edge weight on its cluster path, the best weight
off the path, the path length in weight and in hops, and a pending addend for
the path edges of its descendants. ``better`` is ``max`` by default; pass
``min`` to get path minima instead.

Missing values are ``None`` and lose against any number.
"""
from __future__ import annotations

from dataclasses import dataclass

from .cluster import is_path_child
from .engine import ClusterCallbacks, TopTreeForest
from .errors import IsolatedVertex, NotSameTree, SameVertex
from .forest import check_int64


class PathAnn:
    __slots__ = ("best", "off", "extra", "length", "hops")

    def __init__(self, best, off, extra, length, hops):
        self.best = best
        self.off = off
        self.extra = extra
        self.length = length
        self.hops = hops

    def __repr__(self):
        return f"best={self.best} off={self.off} extra={self.extra} len={self.length} hops={self.hops}"


def _pick(fn, a, b):
    if a is None:
        return b
    if b is None:
        return a
    return fn(a, b)


class PathWeights(ClusterCallbacks):
    """Annotation bundle. Keeps the effective edge weights in ``weights``."""

    def __init__(self, better=max, checked=False):
        self.better = better
        self.checked = checked
        self.weights = {}

    def create(self, leaf):
        w = self.weights[leaf.edge]
        if len(leaf.boundary) == 2:
            leaf.ann = PathAnn(w, None, 0, w, 1)
        else:
            leaf.ann = PathAnn(None, w, 0, 0, 0)

    def join(self, node):
        fn = self.better
        best = None
        off = None
        length = 0
        hops = 0
        for ch in (node.left, node.right):
            a = ch.ann
            off = _pick(fn, off, a.off)
            if is_path_child(node, ch):
                best = _pick(fn, best, a.best)
                length += a.length
                hops += a.hops
            else:
                # a path cluster whose path leaves the parent path
                off = _pick(fn, off, a.best)
        if self.checked:
            check_int64(length)
        node.ann = PathAnn(best, off, 0, length, hops)

    def split(self, node):
        x = node.ann.extra
        if not x:
            return
        for ch in (node.left, node.right):
            if is_path_child(node, ch):
                a = ch.ann
                if a.best is not None:
                    a.best += x
                a.length += x * a.hops
                a.extra += x
                if self.checked:
                    check_int64(a.best)
                    check_int64(a.length)
        node.ann.extra = 0

    def destroy(self, leaf):
        # remember the weight including every addition pushed down so far
        a = leaf.ann
        if a is not None and len(leaf.boundary) == 2:
            self.weights[leaf.edge] = a.best

    def describe(self, ann):
        return repr(ann)


def effective_weights(tf, root):
    """Edge weights below ``root`` with all pending additions applied."""
    out = {}
    stack = [(root, 0)]
    while stack:
        n, add = stack.pop()
        a = n.ann
        if n.edge is not None:
            out[n.edge] = a.best + add if len(n.boundary) == 2 else a.off
            continue
        for ch in (n.left, n.right):
            if is_path_child(n, ch):
                stack.append((ch, add + a.extra))
            else:
                stack.append((ch, 0))
    return out


class PathForest:
    """Forest with path max (or min), lazy path add, tree max and distances."""

    profile = "pathweights"

    def __init__(self, n=0, seed=0, better=max, trace=False, checked=False):
        self.ann = PathWeights(better, checked)
        self.tf = TopTreeForest(self.ann, seed=seed, trace=trace)
        self.better = better
        self.checked = checked
        self.tf.add_vertices(n)

    def new_vertex(self):
        return self.tf.new_vertex()

    def link(self, u, v, w):
        if self.checked:
            check_int64(w)
        e = self.tf.forest.next_edge
        self.ann.weights[e] = w
        try:
            return self.tf.link(u, v, w)
        except Exception:
            del self.ann.weights[e]
            raise

    def cut(self, e):
        self.tf.cut(e)
        self.ann.weights.pop(e, None)

    def connected(self, u, v):
        return self.tf.connected(u, v)

    def _check_pair(self, u, v):
        fr = self.tf.forest
        fr.check_vertex(u)
        fr.check_vertex(v)
        if u == v:
            raise SameVertex(u)
        if not self.tf.connected(u, v):
            raise NotSameTree((u, v))

    def path_max(self, u, v):
        self._check_pair(u, v)
        with self.tf.exposed(u, v) as root:
            return root.ann.best

    def path_add(self, u, v, x):
        self._check_pair(u, v)
        with self.tf.exposed(u, v) as root:
            a = root.ann
            a.best += x
            a.length += x * a.hops
            a.extra += x
            if self.checked:
                check_int64(a.best)

    def tree_max(self, v):
        r = self.tf.top_root(v)
        if r is None:
            raise IsolatedVertex(v)
        return _pick(self.better, r.ann.off, r.ann.best)

    def distance(self, u, v):
        fr = self.tf.forest
        fr.check_vertex(u)
        fr.check_vertex(v)
        if u == v:
            return 0
        if not self.tf.connected(u, v):
            raise NotSameTree((u, v))
        with self.tf.exposed(u, v) as root:
            return root.ann.length

    def edge_weights(self):
        """Current weight of every live edge, flushing pending additions."""
        out = {}
        for r in self.tf.roots():
            out.update(effective_weights(self.tf, r))
        return out
