"""Distance-based queries: diameter, center, median, nearest marked vertex,
jump and meet.

Cluster annotation:

* ``length``/``hops``: weighted and hop length of the cluster path,
* ``diam``: diameter of the cluster,
* ``far[a]``: largest distance from boundary vertex ``a`` inside the cluster,
* ``inner``: total vertex weight of the non-boundary vertices,
* ``mark[a]``: (distance, vertex) of the nearest marked non-boundary vertex
  seen from boundary vertex ``a``, or None.
"""
from __future__ import annotations

from .cluster import is_path_child
from .engine import ClusterCallbacks, TopTreeForest
from .errors import NonPositiveWeight, NotSameTree, OutOfRange
from .search import Side, search, search_on_path


class MetricAnn:
    __slots__ = ("length", "hops", "diam", "far", "inner", "mark")

    def __init__(self, length, hops, diam, far, inner, mark):
        self.length = length
        self.hops = hops
        self.diam = diam
        self.far = far
        self.inner = inner
        self.mark = mark

    def __repr__(self):
        far = ",".join(f"{k}:{self.far[k]}" for k in sorted(self.far))
        mark = ",".join(f"{k}:{self.mark[k]}" for k in sorted(self.mark))
        return (f"len={self.length} hops={self.hops} diam={self.diam} far={far} "
                f"inner={self.inner} mark={mark}")


def _closer(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return a if a <= b else b


class MetricAnnotations(ClusterCallbacks):
    def __init__(self, forest, vweight, marked):
        self.forest = forest
        self.vweight = vweight
        self.marked = marked

    def create(self, leaf):
        fr = self.forest
        x = fr.weights[leaf.edge]
        u, v = fr.ends[leaf.edge]
        bnd = leaf.boundary
        far = {}
        mark = {}
        inner = 0
        for a, b in ((u, v), (v, u)):
            if a in bnd:
                far[a] = x
                mark[a] = (x, b) if self.marked[b] and b not in bnd else None
            else:
                inner += self.vweight[a]
        path = len(bnd) == 2
        leaf.ann = MetricAnn(x if path else 0, 1 if path else 0, x, far, inner, mark)

    def join(self, node):
        A, B = node.left, node.right
        a, b = A.ann, B.ann
        c = node.shared
        bnd = node.boundary
        diam = max(a.diam, b.diam, a.far[c] + b.far[c])
        far = {}
        mark = {}
        for z in bnd:
            if z == c:
                far[z] = max(a.far[c], b.far[c])
                mark[z] = _closer(a.mark[c], b.mark[c])
            else:
                k, o = (a, b) if z in A.boundary else (b, a)
                far[z] = max(k.far[z], k.length + o.far[c])
                m = o.mark[c]
                if c not in bnd and self.marked[c]:
                    m = (0, c)
                if m is not None:
                    m = (k.length + m[0], m[1])
                mark[z] = _closer(k.mark[z], m)
        inner = a.inner + b.inner + (0 if c in bnd else self.vweight[c])
        length = 0
        hops = 0
        if len(bnd) == 2:
            for ch in (A, B):
                if is_path_child(node, ch):
                    length += ch.ann.length
                    hops += ch.ann.hops
        node.ann = MetricAnn(length, hops, diam, far, inner, mark)

    def describe(self, ann):
        return repr(ann)


def vert_weight(node, vweight):
    """Total vertex weight of a cluster, boundary included."""
    return node.ann.inner + sum(vweight[z] for z in node.boundary)


class MetricForest:
    profile = "metric"

    def __init__(self, n=0, seed=0, trace=False):
        self.vweight = []
        self.marked = []
        self.tf = TopTreeForest(None, seed=seed, trace=trace)
        self.ann = MetricAnnotations(self.tf.forest, self.vweight, self.marked)
        self.tf.cb = self.ann
        # when a list, every select decision is recorded here
        self.select_log = None
        for _ in range(n):
            self.new_vertex()

    def new_vertex(self):
        self.vweight.append(1)
        self.marked.append(False)
        return self.tf.new_vertex()

    @property
    def forest(self):
        return self.tf.forest

    def link(self, u, v, w):
        if w < 1:
            raise NonPositiveWeight(w)
        return self.tf.link(u, v, w)

    def cut(self, e):
        self.tf.cut(e)

    def connected(self, u, v):
        return self.tf.connected(u, v)

    def _pair(self, u, v):
        fr = self.tf.forest
        fr.check_vertex(u)
        fr.check_vertex(v)
        if not self.tf.connected(u, v):
            raise NotSameTree((u, v))

    def distance(self, u, v):
        self._pair(u, v)
        if u == v:
            return 0
        with self.tf.exposed(u, v) as root:
            return root.ann.length

    def hops(self, u, v):
        self._pair(u, v)
        if u == v:
            return 0
        with self.tf.exposed(u, v) as root:
            return root.ann.hops

    def diameter(self, v):
        self.tf.forest.check_vertex(v)
        if self.tf.forest.deg[v] == 0:
            return 0
        with self.tf.exposed(v) as root:
            return root.ann.diam

    def _log(self, kind, chosen, other):
        if self.select_log is not None:
            self.select_log.append((kind, chosen, other))

    def _select_center(self, top, c):
        da = top.left.ann.far[c]
        db = top.right.ann.far[c]
        if da >= db:
            self._log("center", da, db)
            return Side.LEFT
        self._log("center", db, da)
        return Side.RIGHT

    def _select_median(self, top, c):
        wa = vert_weight(top.left, self.vweight)
        wb = vert_weight(top.right, self.vweight)
        if wa >= wb:
            self._log("median", wa, wb)
            return Side.LEFT
        self._log("median", wb, wa)
        return Side.RIGHT

    def _search_edge(self, u, select):
        root = self.tf.expose(u)
        if root.edge is not None:
            return root.edge
        return search(self.tf, root, select)

    def center(self, u):
        self.tf.forest.check_vertex(u)
        if self.tf.forest.deg[u] == 0:
            return u
        prior = self.tf.exposure()
        try:
            e = self._search_edge(u, self._select_center)
            v, w = self.tf.forest.ends[e]
            d = self.tf.expose(v, w)
            return v if d.ann.far[v] < d.ann.far[w] else w
        finally:
            self.tf.restore_exposure(prior)

    def median(self, u):
        self.tf.forest.check_vertex(u)
        if self.tf.forest.deg[u] == 0:
            return u
        prior = self.tf.exposure()
        try:
            e = self._search_edge(u, self._select_median)
            v, w = self.tf.forest.ends[e]
            x = self.tf.forest.weights[e]
            self.tf.composite([("cut", e)])
            try:
                sv = self._component_weight(v)
                sw = self._component_weight(w)
            finally:
                self.tf.composite([("link", v, w, x, e)])
            if sv != sw:
                return v if sv > sw else w
            return min(v, w)
        finally:
            self.tf.restore_exposure(prior)

    def _component_weight(self, v):
        r = self.tf.top_root(v)
        if r is None:
            return self.vweight[v]
        return vert_weight(r, self.vweight)

    def set_vertex_weight(self, v, w):
        self.tf.forest.check_vertex(v)
        if w < 1:
            raise NonPositiveWeight(w)
        with self.tf.exposed(v):
            self.vweight[v] = w

    def vertex_weight(self, v):
        self.tf.forest.check_vertex(v)
        return self.vweight[v]

    def mark(self, v, flag=True):
        self.tf.forest.check_vertex(v)
        with self.tf.exposed(v):
            self.marked[v] = flag

    def unmark(self, v):
        self.mark(v, False)

    def nearest_marked(self, u):
        self.tf.forest.check_vertex(u)
        if self.marked[u]:
            return (0, u)
        if self.tf.forest.deg[u] == 0:
            return None
        with self.tf.exposed(u) as root:
            return root.ann.mark[u]

    def jump(self, x, y, d):
        self._pair(x, y)
        h = self.hops(x, y)
        if not 0 <= d <= h:
            raise OutOfRange(d)
        if d == 0:
            return x
        if d == h:
            return y
        prior = self.tf.exposure()
        try:
            root = self.tf.expose(x, y)

            def select(top, c):
                left = top.left
                near, far_side = (Side.LEFT, Side.RIGHT) if x in left.boundary else (Side.RIGHT, Side.LEFT)
                reach = (left if near == Side.LEFT else top.right).ann.hops
                return near if d <= reach else far_side

            e = root.edge if root.edge is not None else search_on_path(self.tf, root, select)
            v, w = self.tf.forest.ends[e]
            if self.select_log is not None:
                self.select_log.append(("jump", (x, y), e))
            # the returned edge joins the vertices at hop distance d-1 and d
            dv = self.tf.expose(x, v).ann.hops if v != x else 0
            return v if dv == d else w
        finally:
            self.tf.restore_exposure(prior)

    def meet(self, x, y, z):
        self._pair(x, y)
        self._pair(y, z)
        dxz = self.hops(x, z)
        dyz = self.hops(y, z)
        dxy = self.hops(x, y)
        return self.jump(z, x, (dxz + dyz - dxy) // 2)
