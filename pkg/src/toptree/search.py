"""Select-guided descent through a top tree.

Starting at the root, each step splits the current cluster C into A and B,
rebuilds the whole tree as the join of A* and B* (each child together with
the outside clusters hanging off it), and lets ``select`` pick a side. The
chosen child becomes the next current cluster; the other one is folded into
the outside cluster at the shared vertex. The returned edge lies in every
chosen cluster. All temporary joins and splits are undone afterwards.
"""
from __future__ import annotations

from enum import IntEnum

from .cluster import is_path_child
from .errors import EmptyTree, EmptyPath, NestedSearch


class Side(IntEnum):
    LEFT = 0
    RIGHT = 1


class _Session:
    """Temporary modifications of one search, undone in reverse."""

    def __init__(self, tf):
        self.tf = tf
        self.log = []
        self.steps = 0

    def split(self, n):
        self.tf._split(n)
        self.log.append((0, n))
        return n.left, n.right

    def join(self, a, b):
        n = self.tf._join_now(a, b)
        self.log.append((1, n))
        return n

    def undo_to(self, mark):
        tf = self.tf
        log = self.log
        while len(log) > mark:
            kind, n = log.pop()
            if kind == 1:
                tf._split(n)
            else:
                tf._rejoin(n)


def _fold(sess, base, extras):
    for x in extras:
        base = sess.join(base, x)
    return base


def _begin(tf):
    if tf.searching:
        raise NestedSearch("search already running")
    tf.searching = True
    return _Session(tf)


def search(tf, root, select, trace=None):
    """Edge contained in every cluster chosen by ``select``.

    ``root`` must be the root of a tree with at most one external boundary
    vertex. ``select(node, shared)`` receives a temporary root whose children
    are A* (left) and B* (right) and returns :class:`Side`. When ``trace`` is
    a list, one dict per select call is appended to it.
    """
    if root is None:
        raise EmptyTree("search on an empty tree")
    if len(root.boundary) > 1:
        raise ValueError("search needs at most one external boundary vertex")
    sess = _begin(tf)
    try:
        c_cur = root
        outside = {}
        while c_cur.edge is None:
            a, b = sess.split(c_cur)
            c = c_cur.shared
            # the outside cluster at c (if any) goes last to keep boundaries small
            zs = sorted(outside, key=lambda z: (z == c, z))
            xa = [outside[z] for z in zs if z in a.boundary]
            xb = [outside[z] for z in zs if z not in a.boundary]
            mark = len(sess.log)
            a_star = _fold(sess, a, xa)
            b_star = _fold(sess, b, xb)
            top = sess.join(a_star, b_star)
            side = select(top, c)
            sess.steps += 1
            if trace is not None:
                trace.append({"current": c_cur, "left": a, "right": b, "shared": c,
                              "side": Side(side), "root": top})
            sess.undo_to(mark)
            chosen, other = (a, b) if side == Side.LEFT else (b, a)
            gather = [outside[z] for z in zs if z in other.boundary]
            new_x = _fold(sess, other, gather)
            outside = {z: outside[z] for z in outside if z in chosen.boundary and z != c}
            outside[c] = new_x
            c_cur = chosen
        return c_cur.edge
    finally:
        sess.undo_to(0)
        tf.searching = False


def search_on_path(tf, root, select, trace=None):
    """Like :func:`search` for a tree exposed at two vertices x and y.

    Only path children are ever offered to ``select``; a child off the x-y
    path is merged into the outside cluster at its attachment vertex. The
    returned edge lies on the x-y path.
    """
    if root is None:
        raise EmptyTree("search on an empty tree")
    if len(root.boundary) != 2:
        raise EmptyPath("path search needs two distinct external boundary vertices")
    sess = _begin(tf)
    try:
        c_cur = root
        outside = {}
        while c_cur.edge is None:
            a, b = sess.split(c_cur)
            c = c_cur.shared
            pa = is_path_child(c_cur, a)
            pb = is_path_child(c_cur, b)
            if pa and pb:
                ea = next(z for z in a.boundary if z != c)
                eb = next(z for z in b.boundary if z != c)
                mark = len(sess.log)
                a_star = sess.join(outside[ea], a) if ea in outside else a
                b_star = sess.join(outside[eb], b) if eb in outside else b
                top = sess.join(a_star, b_star)
                side = select(top, c)
                sess.steps += 1
                if trace is not None:
                    trace.append({"current": c_cur, "left": a, "right": b, "shared": c,
                                  "side": Side(side), "root": top})
                sess.undo_to(mark)
                if side == Side.LEFT:
                    chosen, other, eo = a, b, eb
                else:
                    chosen, other, eo = b, a, ea
                new_x = sess.join(other, outside[eo]) if eo in outside else other
                keep = {z: outside[z] for z in outside if z in chosen.boundary and z != c}
                keep[c] = new_x
                outside = keep
                c_cur = chosen
            else:
                path, off = (a, b) if pa else (b, a)
                z = off.boundary[0]
                outside[z] = sess.join(outside[z], off) if z in outside else off
                c_cur = path
        return c_cur.edge
    finally:
        sess.undo_to(0)
        tf.searching = False
