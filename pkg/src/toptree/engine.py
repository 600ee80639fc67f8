"""Top trees over a dynamic forest.

``TopTreeForest`` owns a :class:`~toptree.forest.Forest` and one top tree per
component. The base top trees come from :mod:`toptree.contraction`; expose
builds a temporary overlay on top of a base tree, and searches make
temporary joins and splits that they undo before returning.

Annotations are maintained through a :class:`ClusterCallbacks` object with
four hooks. For every update the hooks fire as: splits top-down, destroys,
creates, joins bottom-up.
"""
from __future__ import annotations

import heapq
from contextlib import contextmanager
from dataclasses import dataclass, field

from .cluster import Cluster, merge_case, LEAF
from .contraction import Contraction
from .errors import (NotSameTree, SameTree, SelfLoop, UnknownEdge,
                     UnknownVertex, NestedSearch)
from .forest import Forest


class ClusterCallbacks:
    """Annotation hooks. The default keeps no annotations."""

    def create(self, leaf):
        pass

    def join(self, node):
        pass

    def split(self, node):
        pass

    def destroy(self, leaf):
        pass

    def describe(self, ann):
        return "" if ann is None else repr(ann)


@dataclass
class Overlay:
    root: Cluster
    ext: tuple
    split: list             # base nodes split by expose, in split order
    base_leaves: list       # base leaves replaced while exposed
    overlay_leaves: list
    joined: list            # overlay nodes in creation order
    deexposed: bool = False


@dataclass
class OpStats:
    joins: int = 0
    splits: int = 0
    creates: int = 0
    destroys: int = 0

    def snapshot(self):
        return (self.joins, self.splits, self.creates, self.destroys)


class TopTreeForest:
    def __init__(self, callbacks=None, seed=0, trace=False):
        self.forest = Forest()
        self.cb = callbacks if callbacks is not None else ClusterCallbacks()
        self.seed = seed
        self.leaf = {}
        self.enc = []            # smallest cluster each vertex is internal to
        self.ext = ()            # external vertices of the exposed tree
        self.overlay = None
        self.searching = False
        self.stats = OpStats()
        self.trace = [] if trace else None
        self._serial = 0
        self._new = []
        self.contraction = Contraction(self.forest, self._plan_join, seed)

    # registry passthrough
    def new_vertex(self):
        v = self.forest.new_vertex()
        self.enc.append(None)
        self.contraction.add_vertex(v)
        return v

    def add_vertices(self, n):
        return [self.new_vertex() for _ in range(n)]

    @property
    def num_vertices(self):
        return self.forest.num_vertices

    @property
    def num_edges(self):
        return self.forest.num_edges

    def endpoints(self, e):
        return self.forest.endpoints(e)

    def degree(self, v):
        return self.forest.degree(v)

    def weight(self, e):
        return self.forest.weight(e)

    # node construction
    def _next_serial(self):
        self._serial += 1
        return self._serial

    def _leaf_boundary(self, eid):
        u, v = self.forest.ends[eid]
        deg = self.forest.deg
        ext = self.ext
        return tuple(x for x in (u, v) if deg[x] > 1 or x in ext)

    def _make_leaf(self, eid):
        bnd = self._leaf_boundary(eid)
        return Cluster(bnd, (1,) * len(bnd), self._next_serial(), edge=eid)

    def _merge(self, a, b):
        deg = self.forest.deg
        ext = self.ext
        ab = a.boundary
        verts = list(ab)
        cnts = list(a.counts)
        c = None
        for v, k in zip(b.boundary, b.counts):
            if v in ab:
                cnts[ab.index(v)] += k
                c = v
            else:
                verts.append(v)
                cnts.append(k)
        if c is None:
            raise AssertionError(f"joining clusters without a common boundary vertex: {a} {b}")
        keep = [(v, k) for v, k in zip(verts, cnts) if k < deg[v] or v in ext]
        if len(keep) > 2:
            raise AssertionError(f"cluster with {len(keep)} boundary vertices")
        if len(keep) == 2 and keep[0][0] > keep[1][0]:
            keep.reverse()
        return c, tuple(v for v, _ in keep), tuple(k for _, k in keep)

    def _node(self, a, b, c, bnd, cnts):
        h = a.height if a.height > b.height else b.height
        return Cluster(bnd, cnts, self._next_serial(), a, b, c, None,
                       merge_case(c, bnd), h + 1)

    def _plan_join(self, a, b):
        c, bnd, cnts = self._merge(a, b)
        p = a.parent
        if p is not None and p.left is a and p.right is b and p.boundary == bnd:
            return p
        n = self._node(a, b, c, bnd, cnts)
        self._new.append(n)
        return n

    # the four mutations
    def _split(self, n):
        self.cb.split(n)
        self.stats.splits += 1
        if self.trace is not None:
            self.trace.append(f"split {self.describe(n)}")
        n.left.parent = None
        n.right.parent = None

    def _attach(self, n):
        a, b = n.left, n.right
        a.parent = n
        b.parent = n
        n.height = (a.height if a.height > b.height else b.height) + 1
        self.cb.join(n)
        self.stats.joins += 1
        if self.trace is not None:
            self.trace.append(f"join {self.describe(n)}")
        c = n.shared
        if c not in n.boundary:
            self.enc[c] = n

    def _create(self, leaf):
        self.cb.create(leaf)
        self.stats.creates += 1
        if self.trace is not None:
            self.trace.append(f"create {self.describe(leaf)}")
        bnd = leaf.boundary
        for x in self.forest.ends[leaf.edge]:
            if x not in bnd:
                self.enc[x] = leaf

    def _destroy(self, leaf):
        self.cb.destroy(leaf)
        self.stats.destroys += 1
        if self.trace is not None:
            self.trace.append(f"destroy {self.describe(leaf)}")

    def _join_now(self, a, b):
        """Join two root clusters immediately (used by expose and search)."""
        c, bnd, cnts = self._merge(a, b)
        n = self._node(a, b, c, bnd, cnts)
        self._attach(n)
        return n

    def _rejoin(self, n):
        """Re-attach an existing node whose children are currently roots."""
        c, bnd, cnts = self._merge(n.left, n.right)
        n.shared = c
        n.boundary = bnd
        n.counts = cnts
        n.case = merge_case(c, bnd)
        self._attach(n)

    def describe(self, n):
        if n.edge is not None:
            return f"e{n.edge}{list(n.boundary)}"
        return f"#{n.serial}{list(n.boundary)}"

    # queries on the structure
    def top_root(self, v):
        self.forest.check_vertex(v)
        n = self.enc[v]
        if n is None:
            return None
        while n.parent is not None:
            n = n.parent
        return n

    def connected(self, u, v):
        self.forest.check_vertex(u)
        self.forest.check_vertex(v)
        if u == v:
            return True
        ru = self.top_root(u)
        return ru is not None and ru is self.top_root(v)

    def height(self, v):
        r = self.top_root(v)
        return -1 if r is None else r.height

    def roots(self):
        """Root clusters of all trees with at least one edge."""
        seen = {}
        for v in range(self.num_vertices):
            r = self.top_root(v)
            if r is not None:
                seen[id(r)] = r
        return sorted(seen.values(), key=lambda r: min(self.forest.ends[l.edge][0] for l in _leaves(r)))

    # updates
    def link(self, u, v, w=1):
        return self.composite([("link", u, v, w)])[0]

    def cut(self, e):
        self.composite([("cut", e)])

    def composite(self, updates):
        """Apply a sequence of link/cut/expose updates in one pass.

        Each update is validated against the forest produced by the previous
        ones; nothing is modified if any of them is invalid. Links and cuts
        share a single split/destroy/create/join pass. Returns one result per
        update: the new edge id for a link, None for a cut, and for an expose
        the root cluster (only the last expose stays in effect).
        """
        updates = [tuple(u) for u in updates]
        if not updates:
            return []
        self._check_not_searching()
        pending_expose = self._validate(updates)
        structural = [u for u in updates if u[0] in ("link", "cut")]
        results = []
        if structural:
            self._revert_overlay()
            eids = self._apply_updates(structural)
        it = iter(eids) if structural else iter(())
        root = None
        if pending_expose is not None:
            root = self.expose(*pending_expose)
        for u in updates:
            if u[0] == "link":
                results.append(next(it))
            elif u[0] == "cut":
                results.append(None)
            else:
                results.append(root)
        return results

    def _validate(self, updates):
        """Check a sequence of updates; return the expose left in effect."""
        fr = self.forest
        added = {}
        removed = set()
        exposed = None
        label = None
        has_cut = any(u[0] == "cut" for u in updates)
        uf = {}

        def find(x):
            while uf.get(x, x) != x:
                uf[x] = uf.get(uf[x], uf[x])
                x = uf[x]
            return x

        def reach(u, v):
            if u == v:
                return True
            if not has_cut and len(updates) == 1:
                return self.connected(u, v)
            if not has_cut:
                return find(label[u]) == find(label[v])
            seen = {u}
            todo = [u]
            while todo:
                x = todo.pop()
                nbrs = [(e, y) for e, y in fr.inc[x].items() if e not in removed]
                nbrs += [(e, (b if a == x else a)) for e, (a, b) in added.items() if x in (a, b)]
                for e, y in nbrs:
                    if y == v:
                        return True
                    if y not in seen:
                        seen.add(y)
                        todo.append(y)
            return False

        if not has_cut and len(updates) > 1:
            label = fr.component_labels()
        next_id = fr.next_edge
        for up in updates:
            kind = up[0]
            if kind == "link":
                u, v, w = up[1:4]
                fr.check_vertex(u)
                fr.check_vertex(v)
                if u == v:
                    raise SelfLoop(u)
                if reach(u, v):
                    raise SameTree((u, v))
                if label is not None:
                    uf[find(label[u])] = find(label[v])
                if len(up) > 4:
                    if up[4] in fr.ends or up[4] in added:
                        raise ValueError(f"edge id {up[4]} in use")
                    added[up[4]] = (u, v)
                else:
                    added[next_id] = (u, v)
                    next_id += 1
                if exposed is not None and (reach(exposed[0], u) or reach(exposed[0], v)):
                    exposed = None
            elif kind == "cut":
                e = up[1]
                if e in added:
                    a, b = added.pop(e)
                elif e in fr.ends and e not in removed:
                    removed.add(e)
                    a, b = fr.ends[e]
                else:
                    raise UnknownEdge(e)
                if exposed is not None and (reach(exposed[0], a) or reach(exposed[0], b)
                                            or exposed[0] in (a, b)):
                    exposed = None
            elif kind == "expose":
                u = up[1]
                v = up[2] if len(up) > 2 else None
                fr.check_vertex(u)
                if v is not None:
                    fr.check_vertex(v)
                    if not reach(u, v):
                        raise NotSameTree((u, v))
                exposed = (u, v)
            else:
                raise ValueError(f"unknown update {kind!r}")
        return exposed

    def _apply_updates(self, updates):
        fr = self.forest
        touched = {}
        new_eids = []
        cut_edges = {}
        new_set = set()
        for up in updates:
            if up[0] == "link":
                u, v, w = up[1:4]
                e = fr.add_edge(u, v, w, up[4] if len(up) > 4 else None)
                new_eids.append(e)
                new_set.add(e)
                touched[u] = None
                touched[v] = None
            else:
                e = up[1]
                ends = fr.ends[e]
                fr.remove_edge(e)
                touched[ends[0]] = None
                touched[ends[1]] = None
                if e in new_set:
                    new_set.discard(e)
                else:
                    cut_edges[e] = ends
        dead = [self.leaf.pop(e) for e in cut_edges]
        born = []
        for e in new_eids:
            if e in new_set:
                leaf = self._make_leaf(e)
                self.leaf[e] = leaf
                born.append(leaf)
        deg = fr.deg
        for z in touched:
            if deg[z] <= 2:
                for e in fr.inc[z]:
                    if e in new_set:
                        continue
                    old = self.leaf[e]
                    if self._leaf_boundary(e) != old.boundary:
                        leaf = self._make_leaf(e)
                        self.leaf[e] = leaf
                        dead.append(old)
                        born.append(leaf)
        self._new = []
        removed = self.contraction.update(touched, cut_edges, self.leaf)
        self._apply_plan(removed, dead, born)
        for z in touched:
            if deg[z] == 0:
                self.enc[z] = None
        return new_eids

    def _apply_plan(self, removed, dead, born):
        gone = set(removed)
        gone.update(dead)
        tops = [n for n in removed if n.parent is None or n.parent not in gone]
        for n in tops:
            if n.parent is not None:
                raise AssertionError(f"removed node {n} below a kept node")
        tops.sort(key=lambda n: n.serial, reverse=True)
        stack = tops
        while stack:
            n = stack.pop()
            self._split(n)
            r = n.right
            l = n.left
            if r in gone and r.edge is None:
                stack.append(r)
            if l in gone and l.edge is None:
                stack.append(l)
        for leaf in sorted(dead, key=lambda n: n.edge):
            self._destroy(leaf)
        for leaf in sorted(born, key=lambda n: n.edge):
            self._create(leaf)
        for n in self._new:
            self._attach(n)
        self._new = []

    # expose and the overlay
    def _check_not_searching(self):
        if self.searching:
            raise NestedSearch("structure is locked by a running search")

    def expose(self, u, v=None):
        """Make ``u`` (and ``v``) the external boundary of their tree.

        Returns the new root cluster, or None when ``u`` is isolated.
        Any previous exposure is undone first.
        """
        self._check_not_searching()
        fr = self.forest
        fr.check_vertex(u)
        if v is not None:
            fr.check_vertex(v)
            if v == u:
                v = None
            elif not self.connected(u, v):
                raise NotSameTree((u, v))
        self._revert_overlay()
        if fr.deg[u] == 0:
            return None
        ext = (u,) if v is None else ((u, v) if u < v else (v, u))
        root = self.top_root(u)
        doomed = set()
        for x in ext:
            n = self.enc[x]
            while n is not None and n not in doomed:
                doomed.add(n)
                n = n.parent
        order = []
        free = []
        old_leaves = []
        stack = [root]
        while stack:
            n = stack.pop()
            if n.edge is not None:
                old_leaves.append(n)
                continue
            self._split(n)
            order.append(n)
            for ch in (n.right, n.left):
                if ch in doomed:
                    stack.append(ch)
                else:
                    free.append(ch)
        for leaf in old_leaves:
            self._destroy(leaf)
        self.ext = ext
        new_leaves = []
        for leaf in old_leaves:
            nl = self._make_leaf(leaf.edge)
            self._create(nl)
            new_leaves.append(nl)
            free.append(nl)
        joined = []
        top = self._assemble(free, ext, joined)
        for x in ext:
            self.enc[x] = top
        self.overlay = Overlay(top, ext, order, old_leaves, new_leaves, joined)
        return top

    def _assemble(self, free, ext, joined):
        """Join free root clusters into one: point clusters first, then the path."""
        if len(free) == 1:
            return free[0]
        by_vertex = {}
        alive = set(free)
        heap = []
        for k in free:
            for z in k.boundary:
                by_vertex.setdefault(z, []).append(k)
            if len(k.boundary) == 1:
                heapq.heappush(heap, (k.height, k.key, k))

        def join(a, b):
            n = self._join_now(a, b)
            joined.append(n)
            alive.discard(a)
            alive.discard(b)
            alive.add(n)
            for z in n.boundary:
                by_vertex.setdefault(z, []).append(n)
            return n

        while heap and len(alive) > 1:
            _, _, p = heapq.heappop(heap)
            if p not in alive:
                continue
            z = p.boundary[0]
            best = None
            for k in by_vertex[z]:
                if k is not p and k in alive and (best is None or (k.height, k.key) < (best.height, best.key)):
                    best = k
            if best is None:
                continue
            n = join(p, best) if p.key < best.key else join(best, p)
            if len(n.boundary) == 1:
                heapq.heappush(heap, (n.height, n.key, n))
        if len(alive) == 1:
            return next(iter(alive))
        # remaining clusters form a path from ext[0] to ext[1]
        path = []
        z = ext[0]
        prev = None
        while len(path) < len(alive):
            nxt = None
            for k in by_vertex.get(z, ()):
                if k in alive and k is not prev:
                    nxt = k
                    break
            if nxt is None:
                raise AssertionError("free clusters do not form a path")
            path.append(nxt)
            prev = nxt
            z = nxt.boundary[1] if nxt.boundary[0] == z else nxt.boundary[0]
        while len(path) > 1:
            nxt = []
            for j in range(0, len(path) - 1, 2):
                nxt.append(join(path[j], path[j + 1]))
            if len(path) % 2:
                nxt.append(path[-1])
            path = nxt
        return path[0]

    def _revert_overlay(self):
        ov = self.overlay
        if ov is None:
            return
        self.overlay = None
        joined = set(ov.joined)
        stack = [ov.root]
        while stack:
            n = stack.pop()
            if n in joined:
                self._split(n)
                stack.append(n.right)
                stack.append(n.left)
        if not ov.deexposed:
            for leaf in ov.overlay_leaves:
                self._destroy(leaf)
        self.ext = ()
        if not ov.deexposed:
            for leaf in ov.base_leaves:
                self._create(leaf)
        for n in reversed(ov.split):
            self._rejoin(n)

    def deexpose(self):
        """Clear the external boundary of the most recently exposed tree.

        The overlay keeps its shape; nodes whose boundary loses an external
        vertex are split and joined again, and replaced leaves go back to
        their base versions.
        """
        self._check_not_searching()
        ov = self.overlay
        if ov is None or ov.deexposed:
            return
        deg = self.forest.deg
        ext = self.ext
        changed = [n for n in ov.joined
                   if any(z in ext and k == deg[z] for z, k in zip(n.boundary, n.counts))]
        for n in reversed(changed):
            self._split(n)
        swap = {}
        for old, new in zip(ov.base_leaves, ov.overlay_leaves):
            if old.boundary != new.boundary:
                swap[new] = old
        for leaf in swap:
            self._destroy(leaf)
        self.ext = ()
        for new, old in swap.items():
            self._create(old)
        for n in changed:
            if n.left in swap:
                n.left = swap[n.left]
            if n.right in swap:
                n.right = swap[n.right]
            self._rejoin(n)
        if ov.root in swap:
            ov.root = swap[ov.root]
        ov.overlay_leaves = [swap.get(l, l) for l in ov.overlay_leaves]
        ov.deexposed = True

    def exposure(self):
        """Current exposure as (external vertices, deexposed flag), or None."""
        ov = self.overlay
        if ov is None:
            return None
        return (ov.ext, ov.deexposed)

    @contextmanager
    def exposed(self, u, v=None):
        """Expose for the duration of a query, then restore the prior exposure."""
        want = (u,) if v is None or v == u else ((u, v) if u < v else (v, u))
        ov = self.overlay
        if ov is not None and not ov.deexposed and ov.ext == want:
            yield ov.root
            return
        prior = self.exposure()
        try:
            yield self.expose(u, v)
        finally:
            self.restore_exposure(prior)

    def restore_exposure(self, prior):
        self._revert_overlay()
        if prior is not None:
            ext, deexposed = prior
            self.expose(*ext)
            if deexposed:
                self.deexpose()

    # serialization
    def serialize(self, node):
        if node is None:
            return "-"
        out = []
        d = self.cb.describe
        stack = [node]
        while stack:
            n = stack.pop()
            if isinstance(n, str):
                out.append(n)
                continue
            if n.edge is not None:
                out.append(f"e{n.edge}{list(n.boundary)}{{{d(n.ann)}}}")
            else:
                out.append(f"({n.case}{list(n.boundary)}{{{d(n.ann)}}} ")
                stack.append(")")
                stack.append(n.right)
                stack.append(" ")
                stack.append(n.left)
        return "".join(out)

    def serialize_all(self):
        return "\n".join(self.serialize(r) for r in self.roots())


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
