"""Top-tree nodes.

A cluster is a connected set of edges with at most two boundary vertices.
Leaves are single edges; an internal node is the union of two children
that share exactly one vertex (``shared``).

Boundaries are stored as sorted tuples together with ``counts``, the number
of the cluster's edges incident to each boundary vertex. Counts make the
boundary of a join computable from the children alone: a vertex stays on
the boundary while some of its edges lie outside, or while it is external.
"""
from __future__ import annotations

# merge cases, named after how the shared vertex c ends up
COMPRESS = "compress"      # two path children, c internal, path through c
PATH_RAKE = "path-rake"    # path child plus a point child hanging at c, c on the path end
POINT_CLOSE = "point-close"  # path child closed off at c, result is a point cluster
POINT_RAKE = "point-rake"  # point clusters glued at c, c stays the boundary
ROOT = "root"              # whole tree, no boundary
LEAF = "leaf"


class Cluster:
    __slots__ = ("left", "right", "parent", "edge", "boundary", "counts",
                 "shared", "case", "height", "ann", "serial", "key")

    def __init__(self, boundary, counts, serial, left=None, right=None,
                 shared=None, edge=None, case=LEAF, height=0):
        self.left = left
        self.right = right
        self.parent = None
        self.edge = edge
        self.boundary = boundary
        self.counts = counts
        self.shared = shared
        self.case = case
        self.height = height
        self.ann = None
        self.serial = serial
        # smallest edge id inside; a canonical tie-breaker unlike serial
        self.key = edge if edge is not None else min(left.key, right.key)

    @property
    def is_leaf(self):
        return self.edge is not None

    @property
    def is_path(self):
        return len(self.boundary) == 2

    @property
    def is_point(self):
        return len(self.boundary) == 1

    def children(self):
        return () if self.edge is not None else (self.left, self.right)

    def sibling(self, child):
        return self.right if child is self.left else self.left

    def __repr__(self):
        if self.edge is not None:
            return f"<leaf e{self.edge} {list(self.boundary)}>"
        return f"<node #{self.serial} {self.case} {list(self.boundary)} h={self.height}>"


def merge_case(shared, boundary):
    if len(boundary) == 2:
        return PATH_RAKE if shared in boundary else COMPRESS
    if len(boundary) == 1:
        return POINT_RAKE if boundary[0] == shared else POINT_CLOSE
    return ROOT


def is_path_child(parent, child):
    """True when ``child`` shares an edge with the parent's cluster path."""
    pb = parent.boundary
    if len(pb) != 2:
        return False
    cb = child.boundary
    if cb == pb:
        return True
    # otherwise both children are path clusters meeting in the middle of the path
    other = parent.sibling(child).boundary
    return len(set(cb) | set(other)) == 3


def leaves(node):
    """Leaf clusters below ``node`` (left to right)."""
    out = []
    stack = [node]
    while stack:
        n = stack.pop()
        if n.edge is not None:
            out.append(n)
        else:
            stack.append(n.right)
            stack.append(n.left)
    return out
