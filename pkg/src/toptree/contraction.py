"""Balanced base top trees by randomized tree contraction.

The forest is first made ternary: a vertex of degree d > 3 is replaced by a
chain of copies joined by dummy edges, each copy holding one or two real
edges. The ternary forest is then contracted in rounds. In every round
each remaining vertex either

* finalizes (no neighbours left; its accumulated cluster is the root),
* rakes (degree one: its accumulated cluster and its only edge cluster are
  joined and handed to the neighbour),
* compresses (degree two, coin heads, no neighbour compressing or raking
  into it: its two edge clusters and its accumulated cluster become one
  edge cluster between its neighbours), or
* stays.

Every join of two non-dummy clusters is a top-tree node, so the contraction
history is the base top tree. Coins are a hash of the vertex key and the
round, which makes the result a function of the current forest only.

Updates re-run only the parts of the history that can differ: a vertex is
revisited in a round when its own state or a neighbour's state changed.
Nodes whose children and boundary are unchanged are reused.
"""
from __future__ import annotations

import hashlib

STAY, RAKE, COMPRESS, FINALIZE, UNSET = 0, 1, 2, 3, -1
COIN_BITS = 256


def chain_layout(z, edges):
    """Split the sorted edge ids of vertex ``z`` over ternary copies.

    Returns a list of (key, held edge ids) in chain order. The first copy is
    keyed by ``z``; the others get negative keys derived from the first edge
    they hold, so that the layout depends only on the edge list.
    """
    d = len(edges)
    if d <= 3:
        return [(z, edges)]
    out = [(z, edges[:2])]
    for j in range(2, d - 2):
        out.append((None, edges[j:j + 1]))
    out.append((None, edges[d - 2:]))
    return out


class TVertex:
    """A vertex of the ternary forest together with its contraction history.

    ``adj[i]`` maps neighbours at round i to the cluster on that edge (None
    for dummy-only edges), ``acc[i]`` is the point cluster accumulated at the
    vertex, ``act[i]`` the action taken in round i, ``out[i]`` its product
    and ``made[i]`` the nodes joined by this vertex in round i.
    """
    __slots__ = ("key", "orig", "bits", "adj", "acc", "act", "out", "made", "alive")

    def __init__(self, key, orig, bits):
        self.key = key
        self.orig = orig
        self.bits = bits
        self.adj = [{}]
        self.acc = [None]
        self.act = [UNSET]
        self.out = [None]
        self.made = [[]]
        self.alive = True

    def __repr__(self):
        return f"<tv {self.key} of {self.orig} rounds={len(self.adj)}>"


class Contraction:
    def __init__(self, forest, join, seed=0):
        self.forest = forest
        self.join_fn = join
        self.seed = seed
        self.tv = {}
        self.chain = []  # original vertex -> list of copies
        self.slot = []   # original vertex -> {edge id: copy holding it}
        self.cand = set()
        self.remade = set()
        self.max_rounds = 0

    def _bits(self, key):
        h = hashlib.blake2b(f"{self.seed}:{key}".encode(), digest_size=COIN_BITS // 8)
        return int.from_bytes(h.digest(), "little")

    def coin(self, p, i):
        if i < COIN_BITS:
            return (p.bits >> i) & 1
        h = hashlib.blake2b(f"{self.seed}:{p.key}:{i}".encode(), digest_size=1)
        return h.digest()[0] & 1

    def _copy_key(self, z, eid):
        a, b = self.forest.ends[eid]
        return -(2 * eid + (0 if z == a else 1) + 1)

    def add_vertex(self, z):
        t = TVertex(z, z, self._bits(z))
        t.act[0] = FINALIZE
        self.tv[z] = t
        self.chain.append([t])
        self.slot.append({})

    # ternary forest maintenance
    def update(self, touched, cut_edges, leaf):
        """Bring the history up to date after the registry changed.

        ``touched`` are original vertices whose incidence changed or whose
        incident leaves were replaced, ``cut_edges`` maps removed edge ids to
        their old endpoints, and ``leaf`` maps live edge ids to their current
        leaf clusters. Returns the set of old nodes that are no longer used.
        """
        self.cand = set()
        self.remade = set()
        dirty = {}
        forced = {}

        def unlink(p, q):
            del p.adj[0][q]
            del q.adj[0][p]
            dirty[p] = None
            dirty[q] = None

        def link(p, q, cl):
            p.adj[0][q] = cl
            q.adj[0][p] = cl
            dirty[p] = None
            dirty[q] = None

        for eid, (u, v) in cut_edges.items():
            p = self.slot[u].pop(eid)
            q = self.slot[v].pop(eid)
            unlink(p, q)

        old_slot = {}
        old_chain = {}
        for z in touched:
            old_slot[z] = self.slot[z]
            old_chain[z] = self.chain[z]
            edges = sorted(self.forest.inc[z])
            chain = []
            slot = {}
            for key, held in chain_layout(z, edges):
                if key is None:
                    key = self._copy_key(z, held[0])
                t = self.tv.get(key)
                if t is None:
                    t = TVertex(key, z, self._bits(key))
                    self.tv[key] = t
                    dirty[t] = None
                chain.append(t)
                for e in held:
                    slot[e] = t
            self.chain[z] = chain
            self.slot[z] = slot

        # real edges whose ternary endpoints or leaf changed
        seen = set()
        for z in touched:
            for eid in self.forest.inc[z]:
                if eid in seen:
                    continue
                seen.add(eid)
                a, b = self.forest.ends[eid]
                pa = self.slot[a][eid]
                pb = self.slot[b][eid]
                oa = old_slot[a].get(eid) if a in old_slot else pa
                ob = old_slot[b].get(eid) if b in old_slot else pb
                cl = leaf[eid]
                if oa is not None and ob is not None:
                    if oa is pa and ob is pb and pa.adj[0].get(pb, 0) is cl:
                        continue
                    if ob in oa.adj[0]:
                        unlink(oa, ob)
                link(pa, pb, cl)

        # dummy edges along the chains
        for z in touched:
            old = old_chain[z]
            new = self.chain[z]
            oldp = {(old[j], old[j + 1]) for j in range(len(old) - 1)}
            newp = {(new[j], new[j + 1]) for j in range(len(new) - 1)}
            for p, q in sorted(oldp - newp, key=lambda t: t[0].key):
                if q in p.adj[0] and p.adj[0][q] is None:
                    unlink(p, q)
            for p, q in sorted(newp - oldp, key=lambda t: t[0].key):
                link(p, q, None)
            # retire copies that left the chain
            keep = set(new)
            for t in old:
                if t not in keep:
                    self._retire(t, forced)
                    dirty.pop(t, None)
        for t in list(dirty):
            if not t.alive:
                del dirty[t]
        self._propagate(dirty, forced)
        return self.cand - self.remade

    def _retire(self, t, forced):
        assert not t.adj[0], "retired copy still has edges"
        t.alive = False
        del self.tv[t.key]
        for j in range(len(t.adj)):
            if j > 0:
                fj = forced.setdefault(j, {})
                for r in t.adj[j]:
                    fj[r] = None
            self.cand.update(t.made[j])

    # contraction rounds
    def _decide(self, p, i):
        adj = p.adj[i]
        d = len(adj)
        if d == 0:
            return FINALIZE
        if d == 1:
            for q in adj:
                if len(q.adj[i]) == 1 and q.key < p.key:
                    return STAY
            return RAKE
        if d == 2:
            if not self.coin(p, i):
                return STAY
            for q in adj:
                dq = len(q.adj[i])
                if dq == 1 or (dq == 2 and self.coin(q, i)):
                    return STAY
            return COMPRESS
        return STAY

    def _join(self, a, b, made):
        if a is None:
            return b
        if b is None:
            return a
        n = self.join_fn(a, b)
        made.append(n)
        self.remade.add(n)
        return n

    def _product(self, p, i, act, made):
        if act == RAKE:
            for q, cl in p.adj[i].items():
                return self._join(p.acc[i], cl, made)
        if act == COMPRESS:
            (u, cu), (w, cw) = sorted(p.adj[i].items(), key=lambda t: t[0].key)
            return self._join(self._join(cu, p.acc[i], made), cw, made)
        return p.acc[i]

    def _advance(self, q, i):
        """State of a staying vertex ``q`` at round i + 1."""
        adj = {}
        rakes = []
        for x, cl in q.adj[i].items():
            a = x.act[i]
            if a == STAY:
                adj[x] = cl
            elif a == RAKE:
                rakes.append(x)
            else:
                for y in x.adj[i]:
                    if y is not q:
                        adj[y] = x.out[i]
                        break
        acc = q.acc[i]
        made = q.made[i]
        if made:
            self.cand.update(made)
        q.made[i] = made = []
        if rakes:
            if len(rakes) > 1:
                rakes.sort(key=lambda t: t.key)
            for x in rakes:
                acc = self._join(acc, x.out[i], made)
        return adj, acc

    def _truncate(self, p, i, forced):
        for j in range(i + 1, len(p.adj)):
            fj = forced.setdefault(j, {})
            for r in p.adj[j]:
                fj[r] = None
            self.cand.update(p.made[j])
        del p.adj[i + 1:]
        del p.acc[i + 1:]
        del p.act[i + 1:]
        del p.out[i + 1:]
        del p.made[i + 1:]

    def _propagate(self, changed, forced):
        i = 0
        while changed or forced:
            P = {}
            for p in changed:
                if p.alive and len(p.adj) > i:
                    P[p] = None
                    for q in p.adj[i]:
                        P[q] = None
            for p in P:
                new = self._decide(p, i)
                old = p.act[i]
                if new != old:
                    if old == STAY:
                        self._truncate(p, i, forced)
                    p.act[i] = new
                if new != STAY:
                    made = p.made[i]
                    if made:
                        self.cand.update(made)
                    p.made[i] = made = []
                    p.out[i] = self._product(p, i, new, made)
            seen = dict(P)
            for p in P:
                for q in p.adj[i]:
                    seen[q] = None
            f = forced.pop(i + 1, None)
            if f:
                for q in f:
                    seen[q] = None
            work = list(seen)
            work.reverse()
            nxt = {}
            while work:
                q = work.pop()
                if not q.alive or len(q.adj) <= i or q.act[i] != STAY:
                    continue
                adj, acc = self._advance(q, i)
                if len(q.adj) > i + 1:
                    oadj = q.adj[i + 1]
                    if acc is q.acc[i + 1] and adj == oadj:
                        continue
                    q.adj[i + 1] = adj
                    q.acc[i + 1] = acc
                    for r in oadj:
                        if r not in seen:
                            seen[r] = None
                            work.append(r)
                else:
                    q.adj.append(adj)
                    q.acc.append(acc)
                    q.act.append(UNSET)
                    q.out.append(None)
                    q.made.append([])
                for r in adj:
                    if r not in seen:
                        seen[r] = None
                        work.append(r)
                nxt[q] = None
            changed = nxt
            i += 1
        if i > self.max_rounds:
            self.max_rounds = i

    def rounds(self):
        return max((len(t.adj) for t in self.tv.values()), default=0)
