"""Vertex and edge bookkeeping for the underlying forest.

This layer knows nothing about clusters. It hands out dense vertex ids,
never-recycled edge ids, and keeps incidence lists and degrees.
"""
from __future__ import annotations

from .errors import UnknownEdge, UnknownVertex, SelfLoop

INT64_MIN = -(1 << 63)
INT64_MAX = (1 << 63) - 1


def check_int64(x):
    """Debug helper: raise OverflowError if ``x`` leaves the signed 64-bit range."""
    if x is not None and not INT64_MIN <= x <= INT64_MAX:
        raise OverflowError(f"weight {x} outside signed 64-bit range")
    return x


class Forest:
    """Incidence structure of a forest with weighted edges."""

    def __init__(self):
        self.inc: list[dict[int, int]] = []  # vertex -> {edge id: other endpoint}
        self.deg: list[int] = []
        self.ends: dict[int, tuple[int, int]] = {}
        self.weights: dict[int, int] = {}
        self.next_edge = 0

    # vertices
    def new_vertex(self) -> int:
        self.inc.append({})
        self.deg.append(0)
        return len(self.deg) - 1

    @property
    def num_vertices(self):
        return len(self.deg)

    @property
    def num_edges(self):
        return len(self.ends)

    def check_vertex(self, v):
        if not isinstance(v, int) or not 0 <= v < len(self.deg):
            raise UnknownVertex(v)

    def check_edge(self, e):
        if e not in self.ends:
            raise UnknownEdge(e)

    def degree(self, v) -> int:
        self.check_vertex(v)
        return self.deg[v]

    def endpoints(self, e) -> tuple[int, int]:
        self.check_edge(e)
        return self.ends[e]

    def weight(self, e) -> int:
        self.check_edge(e)
        return self.weights[e]

    def incident(self, v):
        """Edge ids incident to ``v`` in increasing order."""
        return sorted(self.inc[v])

    def neighbors(self, v):
        return list(self.inc[v].values())

    def edges(self):
        return sorted(self.ends)

    # mutation; callers are responsible for acyclicity
    def add_edge(self, u, v, w, eid=None) -> int:
        self.check_vertex(u)
        self.check_vertex(v)
        if u == v:
            raise SelfLoop(u)
        if eid is None:
            eid = self.next_edge
            self.next_edge += 1
        a, b = (u, v) if u < v else (v, u)
        self.ends[eid] = (a, b)
        self.weights[eid] = w
        self.inc[u][eid] = v
        self.inc[v][eid] = u
        self.deg[u] += 1
        self.deg[v] += 1
        return eid

    def remove_edge(self, e):
        self.check_edge(e)
        u, v = self.ends.pop(e)
        w = self.weights.pop(e)
        del self.inc[u][e]
        del self.inc[v][e]
        self.deg[u] -= 1
        self.deg[v] -= 1
        return u, v, w

    def component(self, v):
        """Vertices of the tree containing ``v`` (breadth-first order)."""
        seen = {v}
        order = [v]
        for x in order:
            for y in self.inc[x].values():
                if y not in seen:
                    seen.add(y)
                    order.append(y)
        return order

    def component_labels(self):
        """Map each vertex to the smallest vertex of its tree."""
        label = [-1] * len(self.deg)
        for s in range(len(self.deg)):
            if label[s] < 0:
                for x in self.component(s):
                    label[x] = s
        return label
