"""SDFS3: localized static rebuilds.

Undirected mode: a violating (cross) edge (x, y) with w = lca(x, y)
identifies the two child subtrees of w containing x and y.  A lock-step
probe walks both subtrees one vertex at a time to find the smaller one
without paying for the larger (the probe's vertex touches are metered as
vertices_remarked, not edge scans); the smaller subtree is then marked
unvisited and rebuilt by a DFS restricted to its vertex set, started at
the inserted edge's endpoint inside it and hung from the other endpoint.
Ties rebuild the subtree containing y.

Directed mode: the same candidate set as the rank-interval algorithm is
computed for an anti-cross edge, but instead of splicing only what a
partial DFS reaches, every candidate subtree is detached and marked
unvisited: traversal resumes through (x, y), then each still-unvisited
detached root is re-traversed in original left-to-right order and re-hung
in place.  Post-order ranks are restored by a plain rescan.  The full
re-traversal of the candidate subtrees is what costs Theta(m^2) in the
worst case.
"""
from __future__ import annotations

from .base import IncrementalDfs
from .core import ROOT, GraphError, lca
from .fdfs import CycleError


class Sdfs3State(IncrementalDfs):
    name = "sdfs3"
    supports_batch = False

    def __init__(self, n: int, mode: str = "undirected"):
        if mode not in ("undirected", "directed", "dag"):
            raise GraphError(f"unknown sdfs3 mode {mode!r}")
        self.mode = mode
        super().__init__(n, directed=(mode != "undirected"))
        self._stamp = [0] * (n + 1)
        self._epoch = 0

    def _apply(self, x, y):
        self.counters.edges_processed += 1
        if self.directed:
            self._apply_directed(x, y)
        else:
            self._apply_undirected(x, y)

    # -- undirected: rebuild the smaller side ------------------------------

    def _subtree_walker(self, root):
        stack = [root]
        while stack:
            v = stack.pop()
            stack.extend(self.tree.children[v])
            yield v

    def _apply_undirected(self, x, y):
        tree = self.tree
        w = lca(tree, x, y)
        if w == x or w == y:
            return  # back edge: stored implicitly, the tree stands
        r1 = x
        while tree.parent[r1] != w:
            r1 = tree.parent[r1]
        r2 = y
        while tree.parent[r2] != w:
            r2 = tree.parent[r2]
        # lock-step size probe: one vertex per side per step, metered as
        # vertex touches; the side that exhausts first is smaller, a tie
        # goes to the subtree containing y
        it1, it2 = self._subtree_walker(r1), self._subtree_walker(r2)
        while True:
            if next(it2, None) is None:
                side, root, entry, anchor = 2, r2, y, x
                break
            self.counters.vertices_remarked += 1
            if next(it1, None) is None:
                side, root, entry, anchor = 1, r1, x, y
                break
            self.counters.vertices_remarked += 1
        members = list(self._subtree_walker(root))
        # per-member state: 0 unvisited, 1 active, 2 finished
        state = {v: 0 for v in members}
        for v in members:
            tree.children[v] = []
        tree.children[w].remove(root)
        # restricted DFS over the smaller side, entered through the new
        # edge; undirected metering charges each internal edge once (at
        # discovery or the descendant-side scan of a back edge) and each
        # edge leaving the subtree once, from the inside
        parent, depth, children = tree.parent, tree.depth, tree.children
        adj = self.graph.out_adj
        parent[entry] = anchor
        depth[entry] = depth[anchor] + 1
        children[anchor].append(entry)
        state[entry] = 1
        stack = [(entry, iter(adj[entry]))]
        while stack:
            q, it = stack[-1]
            advanced = False
            for t in it:
                if t == ROOT:
                    continue  # pseudo scaffolding edge
                st = state.get(t)
                if st is None or st == 0 or (st == 1 and parent[q] != t):
                    self.counters.edges_processed += 1
                if st == 0:
                    state[t] = 1
                    parent[t] = q
                    depth[t] = depth[q] + 1
                    children[q].append(t)
                    stack.append((t, iter(adj[t])))
                    advanced = True
                    break
            if not advanced:
                stack.pop()
                state[q] = 2
        tree.dfn_valid = False
        self.counters.rebuilds += 1

    # -- directed: full candidate-set re-traversal -------------------------

    def _reject(self, x, y):
        self.graph.remove_edge(x, y)
        self.counters.insertions -= 1
        raise CycleError(f"insertion ({x},{y}) closes a cycle")

    def _apply_directed(self, x, y):
        tree = self.tree
        if not tree.dfn_valid:
            tree.recompute_dfn()
        dfn = tree.dfn
        if dfn[x] >= dfn[y]:
            return
        w = lca(tree, x, y)
        if w == y:
            if self.mode == "dag":
                self._reject(x, y)
            return
        lo = dfn[x]
        if self.mode == "dag":
            hi = dfn[y]
        else:
            c = y
            while tree.parent[c] != w:
                c = tree.parent[c]
            hi = dfn[c]
        self._epoch += 1
        epoch, stamp = self._epoch, self._stamp
        CAND, SEEN = epoch, -epoch
        candidates = [v for v in range(1, tree.n + 1) if lo < dfn[v] <= hi]
        blocked = set()
        a = tree.parent[x]
        while a != w:
            blocked.add(a)
            a = tree.parent[a]
        candidates = [v for v in candidates if v not in blocked]
        for v in candidates:
            stamp[v] = CAND
        self.counters.vertices_remarked += len(candidates)
        roots = sorted(
            (v for v in candidates if stamp[tree.parent[v]] != CAND),
            key=lambda v: dfn[v],
        )
        adj = self.graph.out_adj

        # phase 1: resume through (x, y); mutation is deferred so a cycle
        # found while replaying a dag sequence leaves the state untouched
        stamp[y] = SEEN
        dfs_children = {y: []}
        stack = [(y, iter(adj[y]))]
        while stack:
            q, it = stack[-1]
            advanced = False
            for t in it:
                self.counters.edges_processed += 1
                if self.mode == "dag" and (t == x or t in blocked):
                    for v in dfs_children:
                        stamp[v] = 0
                    self._reject(x, y)
                if stamp[t] == CAND:
                    stamp[t] = SEEN
                    dfs_children[q].append(t)
                    dfs_children[t] = []
                    stack.append((t, iter(adj[t])))
                    advanced = True
                    break
            if not advanced:
                stack.pop()

        parent, depth, children = tree.parent, tree.depth, tree.children
        touched_parents = {parent[r] for r in roots}
        for v in candidates:
            children[v] = []
        for v, kids in dfs_children.items():
            children[v] = kids
            for k in kids:
                parent[k] = v
        parent[y] = x
        children[x].append(y)
        depth[y] = depth[x] + 1
        walk = [y]
        while walk:
            q = walk.pop()
            dq = depth[q] + 1
            for k in children[q]:
                depth[k] = dq
                walk.append(k)

        # phase 2: re-traverse every detached subtree whose root was not
        # absorbed, left to right, re-hung in place; each re-traversal
        # scans all out-edges of what it visits -- the expensive part
        for r in roots:
            if stamp[r] != CAND:
                continue
            stamp[r] = SEEN
            stack = [(r, iter(adj[r]))]
            while stack:
                q, it = stack[-1]
                advanced = False
                for t in it:
                    self.counters.edges_processed += 1
                    if stamp[t] == CAND:
                        stamp[t] = SEEN
                        parent[t] = q
                        depth[t] = depth[q] + 1
                        children[q].append(t)
                        stack.append((t, iter(adj[t])))
                        advanced = True
                        break
                if not advanced:
                    stack.pop()

        # absorbed roots leave their old parents through this filter; the
        # survivors keep their original left-to-right positions
        for p in touched_parents:
            children[p] = [ch for ch in children[p] if parent[ch] == p]
        tree.recompute_dfn()
        self.counters.rebuilds += 1
