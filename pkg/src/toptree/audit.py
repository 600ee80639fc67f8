"""Structural audit of a :class:`~toptree.engine.TopTreeForest`.

Recomputes every node's vertex set from scratch and checks it against the
stored boundary, counts, shared vertex, merge case and height. Returns a list
of human-readable violations; an empty list means the structure is sound.
"""
from __future__ import annotations

from .cluster import merge_case


def audit_tree(tf, root, out, ext=()):
    fr = tf.forest
    deg = fr.deg
    # post-order traversal computing incidence counts per node
    inc = {}
    order = []
    stack = [root]
    while stack:
        n = stack.pop()
        order.append(n)
        if n.edge is None:
            stack.append(n.left)
            stack.append(n.right)
    nodes = 0
    for n in reversed(order):
        nodes += 1
        if n.edge is not None:
            if n.edge not in fr.ends:
                out.append(f"leaf {n} holds a dead edge")
                continue
            u, v = fr.ends[n.edge]
            cnt = {u: 1, v: 1}
        else:
            a, b = n.left, n.right
            if a.parent is not n or b.parent is not n:
                out.append(f"{n}: child parent pointer broken")
            ca, cb = inc.pop(id(a), {}), inc.pop(id(b), {})
            common = [x for x in ca if x in cb]
            if len(common) != 1:
                out.append(f"{n}: children share {len(common)} vertices")
            elif common[0] != n.shared:
                out.append(f"{n}: shared vertex {n.shared} but children meet at {common[0]}")
            cnt = ca
            for x, k in cb.items():
                cnt[x] = cnt.get(x, 0) + k
            h = max(a.height, b.height) + 1
            if n.height != h:
                out.append(f"{n}: height {n.height} expected {h}")
        inc[id(n)] = cnt
        bnd = tuple(sorted(x for x, k in cnt.items() if k < deg[x] or x in ext))
        if bnd != n.boundary:
            out.append(f"{n}: boundary {n.boundary} expected {bnd}")
        elif tuple(cnt[x] for x in bnd) != n.counts:
            out.append(f"{n}: boundary counts {n.counts} wrong")
        if len(bnd) > 2:
            out.append(f"{n}: {len(bnd)} boundary vertices")
        if n is not root and not bnd:
            out.append(f"{n}: non-root cluster without boundary")
        if n.edge is None and n.case != merge_case(n.shared, n.boundary):
            out.append(f"{n}: merge case {n.case} wrong")
    if root.parent is not None:
        out.append(f"{root}: root has a parent")
    if root.boundary != tuple(sorted(ext)):
        out.append(f"{root}: root boundary {root.boundary} but external set {ext}")
    cnt = inc[id(root)]
    verts = list(cnt)
    comp = fr.component(verts[0])
    if sorted(comp) != sorted(verts):
        out.append(f"{root}: covers {len(verts)} vertices, tree has {len(comp)}")
    edges = sum(cnt.values()) // 2
    if nodes != 2 * edges - 1:
        out.append(f"{root}: {nodes} nodes for {edges} edges")
    return verts


def audit(tf):
    """Check all trees of ``tf``; return a list of violations."""
    out = []
    fr = tf.forest
    roots = {}
    for v in range(fr.num_vertices):
        e = tf.enc[v]
        if fr.deg[v] == 0:
            if e is not None:
                out.append(f"isolated vertex {v} has an enclosing cluster")
            continue
        if e is None:
            out.append(f"vertex {v} of degree {fr.deg[v]} has no enclosing cluster")
            continue
        r = e
        while r.parent is not None:
            r = r.parent
        roots[id(r)] = r
    ov = tf.overlay
    seen_edges = set()
    for r in roots.values():
        ext = tf.ext if ov is not None and r is ov.root else ()
        audit_tree(tf, r, out, ext)
        for leaf in _leaves(r):
            if leaf.edge in seen_edges:
                out.append(f"edge {leaf.edge} in two trees")
            seen_edges.add(leaf.edge)
            if tf.leaf.get(leaf.edge) is not leaf and ov is None:
                out.append(f"edge {leaf.edge}: base leaf table out of date")
    if seen_edges != set(fr.ends):
        out.append(f"leaves cover {len(seen_edges)} of {len(fr.ends)} edges")
    # smallest enclosing clusters
    for v in range(fr.num_vertices):
        n = tf.enc[v]
        if n is None:
            continue
        if v in n.boundary:
            if not (ov is not None and v in tf.ext and n is ov.root):
                out.append(f"vertex {v} is on the boundary of its enclosing cluster {n}")
            continue
        if n.edge is not None:
            if v not in fr.ends.get(n.edge, ()):
                out.append(f"vertex {v} enclosed by a leaf it is not part of")
            continue
        if n.shared != v:
            out.append(f"vertex {v}: enclosing cluster {n} does not make it internal")
    return out


def _leaves(node):
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
