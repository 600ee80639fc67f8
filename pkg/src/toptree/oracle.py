"""Reference forest answering every query by direct traversal.

Shares no code with the top-tree side. Updates are O(1); queries walk the
tree. ``center_set``/``median_set``/``diameter`` come in two forms: the
all-pairs brute force (``exact=True``) and linear-time tree algorithms
(double sweep for eccentricities, rerooting for weighted distance sums) used
when workloads are large. Both are cross-checked in the test suite.
"""
from __future__ import annotations

from .errors import (IsolatedVertex, NotSameTree, SameTree, SameVertex,
                     SelfLoop, UnknownEdge, UnknownVertex, OutOfRange,
                     NonPositiveWeight)


class OracleForest:
    def __init__(self, n=0, exact=False):
        self.adj = []      # vertex -> {neighbour: edge id}
        self.edges = {}    # edge id -> [u, v, weight]
        self.vweight = []
        self.marked = []
        self.next_edge = 0
        self.exact = exact
        for _ in range(n):
            self.new_vertex()

    def new_vertex(self):
        self.adj.append({})
        self.vweight.append(1)
        self.marked.append(False)
        return len(self.adj) - 1

    def _v(self, v):
        if not isinstance(v, int) or not 0 <= v < len(self.adj):
            raise UnknownVertex(v)

    # updates
    def link(self, u, v, w):
        self._v(u)
        self._v(v)
        if u == v:
            raise SelfLoop(u)
        if self.connected(u, v):
            raise SameTree((u, v))
        e = self.next_edge
        self.next_edge += 1
        self.edges[e] = [u, v, w]
        self.adj[u][v] = e
        self.adj[v][u] = e
        return e

    def cut(self, e):
        if e not in self.edges:
            raise UnknownEdge(e)
        u, v, _ = self.edges.pop(e)
        del self.adj[u][v]
        del self.adj[v][u]

    def endpoints(self, e):
        if e not in self.edges:
            raise UnknownEdge(e)
        u, v, _ = self.edges[e]
        return (min(u, v), max(u, v))

    def set_vertex_weight(self, v, w):
        self._v(v)
        if w < 1:
            raise NonPositiveWeight(w)
        self.vweight[v] = w

    def mark(self, v, flag=True):
        self._v(v)
        self.marked[v] = flag

    def unmark(self, v):
        self.mark(v, False)

    # traversal helpers
    def _tree(self, s):
        """Vertices of s's tree with parent pointers and distances from s."""
        parent = {s: None}
        dist = {s: 0}
        hops = {s: 0}
        order = [s]
        for x in order:
            for y, e in self.adj[x].items():
                if y not in parent:
                    parent[y] = x
                    dist[y] = dist[x] + self.edges[e][2]
                    hops[y] = hops[x] + 1
                    order.append(y)
        return order, parent, dist, hops

    def connected(self, u, v):
        self._v(u)
        self._v(v)
        if u == v:
            return True
        _, parent, _, _ = self._tree(u)
        return v in parent

    def path(self, u, v):
        """Vertices on the unique u..v path, from u to v."""
        self._v(u)
        self._v(v)
        _, parent, _, _ = self._tree(v)
        if u not in parent:
            raise NotSameTree((u, v))
        out = [u]
        while out[-1] != v:
            out.append(parent[out[-1]])
        return out

    def path_edges(self, u, v):
        p = self.path(u, v)
        return [self.adj[p[i]][p[i + 1]] for i in range(len(p) - 1)]

    # path queries
    def path_max(self, u, v, better=max):
        if u == v:
            self._v(u)
            raise SameVertex(u)
        return better(self.edges[e][2] for e in self.path_edges(u, v))

    def path_add(self, u, v, x):
        if u == v:
            self._v(u)
            raise SameVertex(u)
        for e in self.path_edges(u, v):
            self.edges[e][2] += x

    def distance(self, u, v):
        return sum(self.edges[e][2] for e in self.path_edges(u, v))

    def hops(self, u, v):
        return len(self.path(u, v)) - 1

    def tree_max(self, v, better=max):
        self._v(v)
        order, parent, _, _ = self._tree(v)
        ws = [self.edges[self.adj[x][parent[x]]][2] for x in order if parent[x] is not None]
        if not ws:
            raise IsolatedVertex(v)
        return better(ws)

    # metric queries
    def eccentricities(self, v):
        """Largest distance from every vertex of v's tree."""
        order, _, _, _ = self._tree(v)
        if self.exact:
            return {x: max(self._tree(x)[2].values()) for x in order}
        _, _, d0, _ = self._tree(v)
        p = max(order, key=lambda x: (d0[x], x))
        _, _, dp, _ = self._tree(p)
        q = max(order, key=lambda x: (dp[x], x))
        _, _, dq, _ = self._tree(q)
        return {x: max(dp[x], dq[x]) for x in order}

    def diameter(self, v):
        self._v(v)
        return max(self.eccentricities(v).values())

    def center_set(self, v):
        """(minimum eccentricity, set of vertices attaining it)."""
        self._v(v)
        ecc = self.eccentricities(v)
        best = min(ecc.values())
        return best, {x for x, d in ecc.items() if d == best}

    def center_objective(self, v, c):
        return max(self._tree(c)[2].values())

    def weighted_sums(self, v):
        """Sum of weight(x) * dist(x, m) for every vertex m of v's tree."""
        order, parent, dist, _ = self._tree(v)
        if self.exact:
            out = {}
            for m in order:
                dm = self._tree(m)[2]
                out[m] = sum(self.vweight[x] * dm[x] for x in order)
            return out
        sub = {x: self.vweight[x] for x in order}
        for x in reversed(order):
            if parent[x] is not None:
                sub[parent[x]] += sub[x]
        total = sub[v]
        out = {v: sum(self.vweight[x] * dist[x] for x in order)}
        for x in order:
            if parent[x] is not None:
                w = self.edges[self.adj[x][parent[x]]][2]
                out[x] = out[parent[x]] + w * (total - 2 * sub[x])
        return out

    def median_set(self, v):
        self._v(v)
        s = self.weighted_sums(v)
        best = min(s.values())
        return best, {x for x, d in s.items() if d == best}

    def median_objective(self, v, m):
        order, _, dist, _ = self._tree(m)
        return sum(self.vweight[x] * dist[x] for x in order)

    def nearest_marked(self, u):
        """(distance, vertex) of the nearest marked vertex, ties by smaller id."""
        self._v(u)
        order, _, dist, _ = self._tree(u)
        cands = [(dist[x], x) for x in order if self.marked[x]]
        return min(cands) if cands else None

    def nearest_distance(self, u):
        r = self.nearest_marked(u)
        return None if r is None else r[0]

    def distances_from(self, u):
        return dict(self._tree(u)[2])

    def jump(self, x, y, d):
        p = self.path(x, y)
        if not 0 <= d < len(p):
            raise OutOfRange(d)
        return p[d]

    def meet(self, x, y, z):
        pxy = set(self.path(x, y))
        pyz = set(self.path(y, z))
        pxz = set(self.path(x, z))
        common = pxy & pyz & pxz
        assert len(common) == 1
        return common.pop()
