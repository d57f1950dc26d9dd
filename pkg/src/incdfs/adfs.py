"""ADFS1 / ADFS2: incremental DFS for undirected graphs via subtree
re-hanging with path reversal.

A newly inserted edge whose endpoints are tree-comparable is a back edge
and is stored in O(1).  A cross edge (x, y) with w = lca(x, y), x the
deeper endpoint and v the child of w above y triggers a re-hang: T(v) is
re-rooted at y, hung from the edge (x, y), and the tree path from y up to
v is reversed.  Stored back edges keyed on the reversed path may have
turned into cross edges; they are all moved to a pending pool and
reprocessed under the variant's order until the pool is empty.

Every edge popped from the pool (and the inserted edge itself) charges
edges_processed once.  Structural bookkeeping — path reversal, depth
refresh of the moved subtree, stick recomputation — is deliberately
uncharged.
"""
from __future__ import annotations

from .base import IncrementalDfs
from .core import ROOT, GraphError, lca


class AdfsState(IncrementalDfs):
    """Shared machinery; ADFS1/ADFS2 differ only in pool order."""

    variant = "adfs"

    def __init__(self, n: int, directed: bool = False, adversarial_order: bool = False):
        if directed:
            raise GraphError("ADFS applies to undirected graphs only")
        super().__init__(n, directed=False)
        self.adversarial_order = adversarial_order
        self.pending: list = []
        # stored non-tree (back) edges keyed by their shallower endpoint
        self._back = [[] for _ in range(n + 1)]
        self._stick_valid = False
        self._on_stick = bytearray(n + 1)
        self._stick = []
        self._refresh_stick()

    # -- classification helpers -------------------------------------------

    def _relation(self, u, v):
        """Return lca(u, v); on-stick endpoints short-circuit to a back
        edge since stick vertices are comparable with every vertex."""
        if self._stick_valid and (self._on_stick[u] or self._on_stick[v]):
            return u if self.tree.depth[u] < self.tree.depth[v] else v
        return lca(self.tree, u, v)

    def _store_back(self, u, v):
        key = u if self.tree.depth[u] < self.tree.depth[v] else v
        self._back[key].append((u, v))

    # -- re-hang ----------------------------------------------------------

    def _rehang(self, x, y, w):
        """Re-root the child subtree of w containing y at y and hang it
        from (x, y), reversing the tree path from y to that child."""
        tree = self.tree
        parent, children, depth = tree.parent, tree.children, tree.depth
        path = [y]
        while parent[path[-1]] != w:
            path.append(parent[path[-1]])
        v = path[-1]
        # displaced candidates: every stored edge keyed on a path vertex
        for q in path:
            if self._back[q]:
                self.pending.extend(self._back[q])
                self._back[q] = []
        # relink: parent(y) = x, parents along the path flip downward
        children[w].remove(v)
        # the detached tree edge (w, v) survives as a graph edge and is
        # still a back edge after the move (w stays an ancestor of v)
        if self.graph.has_edge(w, v) and w != ROOT:
            self._back[w].append((w, v))
        for i in range(len(path) - 1):
            children[path[i + 1]].remove(path[i])
        children[x].append(y)
        parent[y] = x
        depth[y] = depth[x] + 1
        for i in range(len(path) - 1):
            parent[path[i + 1]] = path[i]
            children[path[i]].append(path[i + 1])
        # depth refresh of the moved subtree (uncharged bookkeeping)
        stack = [y]
        while stack:
            q = stack.pop()
            dq = depth[q] + 1
            for c in children[q]:
                depth[c] = dq
                stack.append(c)
        tree.dfn_valid = False
        self._stick_valid = False
        self.counters.rebuilds += 1

    # -- pool policies -----------------------------------------------------

    def _pop(self):
        raise NotImplementedError

    def _pop_lifo(self):
        return self.pending.pop()

    def _pop_adversarial(self):
        # deepest shallower endpoint first, then shallowest deeper
        # endpoint: picks the stage witness in the worst-case replays
        depth = self.tree.depth
        best_i, best_key = 0, None
        for i, (u, v) in enumerate(self.pending):
            du, dv = depth[u], depth[v]
            key = (min(du, dv), -max(du, dv), -min(u, v), -max(u, v))
            if best_key is None or key > best_key:
                best_i, best_key = i, key
        return self.pending.pop(best_i)

    def _pop_min_shallow(self):
        # ADFS2: minimum-depth shallower endpoint, ties on its vertex id
        depth = self.tree.depth
        best_i, best_key = 0, None
        for i, (u, v) in enumerate(self.pending):
            if depth[u] > depth[v] or (depth[u] == depth[v] and u > v):
                u, v = v, u
            key = (depth[u], u, v)
            if best_key is None or key < best_key:
                best_i, best_key = i, key
        return self.pending.pop(best_i)

    # -- driver ------------------------------------------------------------

    def _process(self, u, v):
        self.counters.edges_processed += 1
        w = self._relation(u, v)
        if w == u or w == v:
            self._store_back(u, v)
            return
        x, y = (u, v) if self.tree.depth[u] >= self.tree.depth[v] else (v, u)
        self._rehang(x, y, w)

    def _drain(self):
        while self.pending:
            u, v = self._pop()
            self._process(u, v)

    def _apply(self, u, v):
        self._process(u, v)
        self._drain()
        self._refresh_stick()

    def _apply_batch(self, edges):
        for u, v in edges:
            self.counters.edges_processed += 1
            w = self._relation(u, v)
            if w == u or w == v:
                self._store_back(u, v)
            else:
                self.pending.append((u, v))
        self._drain()
        self._refresh_stick()

    def _refresh_stick(self):
        if self._stick_valid:
            return
        for q in self._stick:
            self._on_stick[q] = 0
        stick = []
        cur = ROOT
        while len(self.tree.children[cur]) == 1:
            cur = self.tree.children[cur][0]
            stick.append(cur)
        if stick:
            stick.pop()  # the last chain vertex is the bristle root
        for q in stick:
            self._on_stick[q] = 1
        self._stick = stick
        self._stick_valid = True


class ADFS1(AdfsState):
    name = "adfs1"
    variant = "adfs1"

    def _pop(self):
        if self.adversarial_order:
            return self._pop_adversarial()
        return self._pop_lifo()


class ADFS2(AdfsState):
    name = "adfs2"
    variant = "adfs2"

    def _pop(self):
        return self._pop_min_shallow()
