"""FDFS: incremental DFS for DAGs and general directed graphs.

The tree's post-order numbering (dfn) is maintained exactly.  An inserted
edge (x, y) with dfn(x) >= dfn(y) never invalidates the tree and is
absorbed in O(1).  Otherwise the edge is an anti-cross edge and a partial
DFS is run from y over a candidate set bounded by dfn ranks; the reached
vertices are re-rooted at y, hung from (x, y), and the affected contiguous
rank interval is renumbered.

Candidate set: vertices with dfn in (dfn(x), U], excluding proper
ancestors of x, where U = dfn(y) in dag mode and U = dfn(c) in directed
mode with c the child of lca(x, y) whose subtree contains y (the whole
subtree is eligible there, not just ranks up to y).
"""
from __future__ import annotations

from .base import IncrementalDfs
from .core import GraphError, lca


class CycleError(GraphError):
    """Raised in dag mode when an insertion would create a cycle."""


class FdfsState(IncrementalDfs):
    name = "fdfs"
    supports_batch = False

    def __init__(self, n: int, mode: str = "dag"):
        if mode not in ("dag", "directed"):
            raise GraphError(f"unknown fdfs mode {mode!r}")
        self.mode = mode
        super().__init__(n, directed=True)
        self.dfn_index = [0] * (n + 2)  # rank -> vertex
        for v, r in enumerate(self.tree.dfn):
            self.dfn_index[r] = v
        # epoch-stamped scratch marks: visited / ineligible
        self._stamp = [0] * (n + 1)
        self._epoch = 0

    # -- candidate machinery ----------------------------------------------

    def _upper_rank(self, x, y, w):
        if self.mode == "dag":
            return self.tree.dfn[y]
        c = y
        while self.tree.parent[c] != w:
            c = self.tree.parent[c]
        return self.tree.dfn[c]

    def candidate_set(self, x, y):
        """Eligible vertices for the pending anti-cross edge (x, y)."""
        tree = self.tree
        if tree.dfn[x] >= tree.dfn[y]:
            raise GraphError("candidate set defined only for dfn(x) < dfn(y)")
        w = lca(tree, x, y)
        hi = self._upper_rank(x, y, w)
        out = set(self.dfn_index[tree.dfn[x] + 1 : hi + 1])
        a = tree.parent[x]
        while a != w:
            out.discard(a)
            a = tree.parent[a]
        return out

    # -- rebuild ----------------------------------------------------------

    def _apply(self, x, y):
        tree = self.tree
        self.counters.edges_processed += 1
        if tree.dfn[x] >= tree.dfn[y]:
            return  # back/forward/cross for the maintained order: stored
        w = lca(tree, x, y)
        if w == y:
            # back edge: y already reaches x through the tree
            if self.mode == "dag":
                self._reject(x, y)
            return
        self._rebuild(x, y, w)

    def _reject(self, x, y):
        self.graph.remove_edge(x, y)
        self.counters.insertions -= 1
        raise CycleError(f"insertion ({x},{y}) closes a cycle")

    def _rebuild(self, x, y, w):
        tree = self.tree
        dfn, index = tree.dfn, self.dfn_index
        lo, hi = dfn[x], self._upper_rank(x, y, w)
        self._epoch += 1
        epoch, stamp = self._epoch, self._stamp
        VISITED, BLOCKED = epoch, -epoch
        a = tree.parent[x]
        while a != w:
            stamp[a] = BLOCKED
            a = tree.parent[a]

        def eligible(v):
            return lo < dfn[v] <= hi and stamp[v] != BLOCKED

        # phase 1: partial DFS from y over the candidate set; every
        # out-edge of a visited vertex is scanned and charged
        adj = self.graph.out_adj
        stamp[y] = VISITED
        dfs_children = {y: []}
        stack = [(y, iter(adj[y]))]
        while stack:
            v, it = stack[-1]
            advanced = False
            for t in it:
                self.counters.edges_processed += 1
                if self.mode == "dag" and (t == x or stamp[t] == BLOCKED):
                    # y reaches x or a tree ancestor of x: cycle
                    self._reject(x, y)
                if stamp[t] != VISITED and eligible(t):
                    stamp[t] = VISITED
                    dfs_children[v].append(t)
                    dfs_children[t] = []
                    stack.append((t, iter(adj[t])))
                    advanced = True
                    break
            if not advanced:
                stack.pop()

        # phase 2: splice the reached set in as a subtree rooted at y
        reached = dfs_children.keys()
        for v in reached:
            p = tree.parent[v]
            if stamp[p] != VISITED:
                tree.children[p].remove(v)
        for v in reached:
            keep = [c for c in tree.children[v] if stamp[c] != VISITED]
            tree.children[v] = dfs_children[v] + keep
            for c in dfs_children[v]:
                tree.parent[c] = v
        tree.parent[y] = x
        tree.children[x].append(y)
        tree.depth[y] = tree.depth[x] + 1
        walk = [y]
        while walk:
            v = walk.pop()
            dv = tree.depth[v] + 1
            for c in tree.children[v]:
                tree.depth[c] = dv
                walk.append(c)

        # phase 3: renumber the contiguous rank interval [lo, hi]:
        # spliced subtree of y in post-order, then x, then the untouched
        # interval members in their old relative order
        old_block = [index[r] for r in range(lo, hi + 1)]
        post = []
        walk = [(y, False)]
        while walk:
            v, done = walk.pop()
            if done:
                post.append(v)
                continue
            walk.append((v, True))
            for c in reversed(tree.children[v]):
                walk.append((c, False))
        moved = set(post)
        new_block = post + [x]
        new_block += [v for v in old_block if v not in moved and v != x]
        for r, v in zip(range(lo, hi + 1), new_block):
            dfn[v] = r
            index[r] = v
        self.counters.rebuilds += 1
