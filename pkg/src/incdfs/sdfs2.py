"""SDFS2: bristle-restricted static rebuilds.

The tree is split into its stick (the top path from the root down to the
last vertex before branching) and the bristles (the subtree hanging below
the stick).  Non-tree edges touching the stick proper can never invalidate
the tree again, so they are discarded on sight.  The remaining non-tree
edges live entirely inside the bristles and are kept in a stored-edge
structure.  A violating insertion (undirected: cross; directed:
anti-cross) triggers a static DFS over the bristle-induced subgraph only:
the stick's tree edges are never touched, and afterwards the stick is
recomputed and stored edges swallowed by its growth are pruned.
"""
from __future__ import annotations

from .base import IncrementalDfs
from .core import ROOT, EdgeClass, classify_edge


class Sdfs2State(IncrementalDfs):
    name = "sdfs2"
    supports_batch = False

    def __init__(self, n: int, directed: bool = False):
        super().__init__(n, directed=directed)
        self.discarded_edges = 0
        self.on_stick = bytearray(n + 1)  # stick proper: excludes bristle root
        self._stick: list[int] = []
        self.bristle_root = ROOT
        # stored non-tree edges, both endpoints in bristles; undirected
        # lists are symmetric, directed ones are source-keyed with a
        # companion in-list used only for pruning
        self._stored = [[] for _ in range(n + 1)]
        self._stored_in = [[] for _ in range(n + 1)] if directed else None
        # called once per discarded edge; used by the streaming wrapper
        self.prune_hook = None
        self._recompute_stick()

    # -- stick maintenance -------------------------------------------------

    def _recompute_stick(self):
        """Re-derive on_stick and bristle_root; prune stored edges on any
        vertex that newly joined the stick proper."""
        stick = []
        cur = ROOT
        while len(self.tree.children[cur]) == 1:
            cur = self.tree.children[cur][0]
            stick.append(cur)
        if stick:
            self.bristle_root = stick.pop()
        else:
            self.bristle_root = ROOT
        fresh = [q for q in stick if not self.on_stick[q]]
        for q in self._stick:
            self.on_stick[q] = 0
        for q in stick:
            self.on_stick[q] = 1
        self._stick = stick
        for q in fresh:
            self._prune_vertex(q)

    def _prune_vertex(self, q):
        for v in self._stored[q]:
            self._discard(q, v)
            if self._stored_in is None:
                self._stored[v].remove(q)
            else:
                self._stored_in[v].remove(q)
        self._stored[q] = []
        if self._stored_in is not None:
            for u in self._stored_in[q]:
                self._discard(u, q)
                self._stored[u].remove(q)
            self._stored_in[q] = []

    def _discard(self, u, v):
        self.discarded_edges += 1
        if self.prune_hook is not None:
            self.prune_hook(u, v)

    def _store(self, u, v):
        self._stored[u].append(v)
        if self._stored_in is None:
            self._stored[v].append(u)
        else:
            self._stored_in[v].append(u)

    # -- insertion ---------------------------------------------------------

    def _apply(self, u, v):
        self.counters.edges_processed += 1
        if self.on_stick[u] or self.on_stick[v]:
            # stick-incident edges are always conforming: drop on sight
            self._discard(u, v)
            return
        cls = classify_edge(self.tree, u, v, self.directed)
        violating = (
            cls is EdgeClass.ANTI_CROSS if self.directed else cls is EdgeClass.CROSS
        )
        if not violating:
            self._store(u, v)
            return
        self._rebuild(u, v)

    # -- bristle rebuild ---------------------------------------------------

    def _rebuild(self, eu, ev):
        tree = self.tree
        root = self.bristle_root
        # the bristle set is exactly the subtree of the bristle root
        bristles = []
        stack = [root]
        while stack:
            q = stack.pop()
            bristles.append(q)
            stack.extend(tree.children[q])
        # adjacency over the bristle-induced subgraph: current tree edges,
        # stored non-tree edges, then the triggering edge -- a fixed order
        # so replay on an isolated bristle subgraph scans identically
        adj = {}
        for q in bristles:
            if self.directed:
                adj[q] = tree.children[q] + self._stored[q]
            else:
                up = [] if q == root else [tree.parent[q]]
                adj[q] = tree.children[q] + up + self._stored[q]
        adj[eu] = adj[eu] + [ev]
        if not self.directed:
            adj[ev] = adj[ev] + [eu]
        old_edges = set()
        for q in bristles:
            # pseudo edges from the root are connectivity scaffolding, not
            # real edges: they never enter the stored set
            if q != ROOT:
                for c in tree.children[q]:
                    old_edges.add((q, c))
            for t in self._stored[q]:
                if self.directed or q < t:
                    old_edges.add((q, t))
        old_edges.add((eu, ev))

        # static DFS from the bristle root, metered like the full rebuilds:
        # directed charges every scanned out-entry, undirected charges each
        # edge once (at discovery or the descendant-side scan)
        parent, depth, children = tree.parent, tree.depth, tree.children
        state = {q: 0 for q in bristles}
        for q in bristles:
            children[q] = []
        state[root] = 1
        scanned = 0
        stack = [(root, iter(adj[root]))]
        while stack:
            q, it = stack[-1]
            advanced = False
            for w in it:
                st = state[w]
                if self.directed or st == 0 or (st == 1 and parent[q] != w):
                    scanned += 1
                if st == 0:
                    state[w] = 1
                    parent[w] = q
                    depth[w] = depth[q] + 1
                    children[q].append(w)
                    stack.append((w, iter(adj[w])))
                    advanced = True
                    break
            if not advanced:
                stack.pop()
                state[q] = 2
        self.counters.edges_processed += scanned
        self.counters.rebuilds += 1
        tree.dfn_valid = False

        # re-derive the stored set: everything that did not become a tree
        # edge stays stored (subject to the stick pruning that follows)
        for q in bristles:
            self._stored[q] = []
            if self._stored_in is not None:
                self._stored_in[q] = []
        for a, b in old_edges:
            if parent[b] == a:
                continue
            if not self.directed and parent[a] == b:
                continue
            self._store(a, b)
        self._recompute_stick()
