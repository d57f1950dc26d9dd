"""Single-pass semi-streaming DFS tree and strong-connectivity answers.

Edges arrive one at a time and are never re-read.  An edge touching the
stick proper is dropped immediately: it can never invalidate the tree
again.  In directed mode, before a dropped edge u -> v with v on the
stick is forgotten, v is remembered as u's highest discarded target when
it beats the current one; since every stick vertex is an ancestor of the
whole tree, one such witness per source is enough to recover every
strongly connected component exactly from the retained subgraph.

Bristle-internal edges are delegated to a wrapped incremental maintainer
(re-hanging for undirected streams, bristle rebuilds for directed ones).
Whenever the stick grows, retained edges swallowed by it are pruned, so
the retained count stays O(n log n) on random streams.
"""
from __future__ import annotations

from .adfs import ADFS2
from .core import ROOT, GraphError
from .sdfs2 import Sdfs2State


class StreamState:
    """Wrapper holding the core maintainer and the retention accounting."""

    def __init__(self, n: int, directed: bool = False):
        self.n = n
        self.directed = directed
        self.duplicates = 0
        self.dropped = 0
        self.streamed = 0
        self.peak_retained = 0
        # minimum-depth discarded stick target per source vertex
        self.highest_back: list[int | None] = [None] * (n + 1)
        if directed:
            self.core = Sdfs2State(n, directed=True)
            self.core.prune_hook = self._on_core_discard
        else:
            self.core = ADFS2(n)
            self._known_stick = 0  # prefix length of the core stick seen so far
            self._pruned = 0

    # -- stick helpers -----------------------------------------------------

    def _on_stick(self, v) -> bool:
        if self.directed:
            return bool(self.core.on_stick[v])
        return bool(self.core._on_stick[v])

    def _stick_depth(self, v) -> int:
        return self.core.tree.depth[v]

    @property
    def retained_edges(self) -> int:
        """Stored non-tree edges with both endpoints in the bristles."""
        core = self.core
        tree_real = self.n - len(core.tree.children[ROOT])
        if self.directed:
            return core.graph.m - tree_real - core.discarded_edges
        return core.graph.m - tree_real - self._pruned

    # -- directed bookkeeping ----------------------------------------------

    def _record_highest(self, u, v):
        # v sits on the stick, hence is an ancestor of every vertex; its
        # depth is frozen for the rest of the stream.  A source already on
        # the stick needs no witness: it reaches the whole tree anyway.
        if self._on_stick(u):
            return
        cur = self.highest_back[u]
        if cur is None or self._stick_depth(v) < self._stick_depth(cur):
            self.highest_back[u] = v

    def _on_core_discard(self, u, v):
        if self._on_stick(v):
            self._record_highest(u, v)

    # -- undirected pruning ------------------------------------------------

    def _prune_undirected(self):
        core = self.core
        stick = core._stick
        while self._known_stick < len(stick):
            q = stick[self._known_stick]
            self._known_stick += 1
            # stored back edges are keyed on their shallower endpoint, and
            # the deeper endpoint of a stick-keyed edge is the only one
            # that can still be off the stick -- pruning by key is complete
            self._pruned += len(core._back[q])
            core._back[q] = []

    # -- streaming ---------------------------------------------------------

    def stream_edge(self, u: int, v: int) -> bool:
        """Consume one stream element; returns True when it was retained."""
        self.streamed += 1
        if u == v or self.core.graph.has_edge(u, v):
            self.duplicates += 1
            return False
        if self._on_stick(u) or self._on_stick(v):
            self.dropped += 1
            if self.directed and self._on_stick(v):
                self._record_highest(u, v)
            return False
        self.core.insert(u, v)
        if not self.directed:
            self._prune_undirected()
        self.peak_retained = max(self.peak_retained, self.retained_edges)
        return True

    def stream_sequence(self, edges):
        for u, v in edges:
            self.stream_edge(u, v)

    def stream_file(self, path):
        """Consume a dumped edge list line by line (no buffering)."""
        with open(path, "r", encoding="utf-8") as fh:
            header = fh.readline()
            if not header:
                raise GraphError(f"{path}: empty stream file")
            for line in fh:
                parts = line.split()
                if len(parts) < 2:
                    raise GraphError(f"{path}: malformed stream line {line!r}")
                self.stream_edge(int(parts[0]), int(parts[1]))

    # -- queries -----------------------------------------------------------

    def scc_query(self):
        """Strongly connected components of the streamed graph, recovered
        from tree edges, retained edges and the per-source witnesses.

        Returns the partition as sorted component lists ordered by their
        minimum member."""
        if not self.directed:
            raise GraphError("scc_query requires a directed stream")
        n = self.n
        adj = [[] for _ in range(n + 1)]
        tree = self.core.tree
        for v in range(1, n + 1):
            p = tree.parent[v]
            if p != ROOT:
                adj[p].append(v)
        for u in range(1, n + 1):
            adj[u].extend(self.core._stored[u])
            hb = self.highest_back[u]
            if hb is not None:
                adj[u].append(hb)
        comps = _tarjan_scc(n, adj)
        comps = [sorted(c) for c in comps]
        comps.sort(key=lambda c: c[0])
        return comps


def _tarjan_scc(n, adj):
    """Iterative Tarjan over vertices 1..n."""
    index = [0] * (n + 1)  # 0 = unvisited; otherwise 1-based discovery index
    low = [0] * (n + 1)
    on_stack = bytearray(n + 1)
    stack = []
    comps = []
    counter = 1
    for start in range(1, n + 1):
        if index[start]:
            continue
        work = [(start, 0)]
        while work:
            v, ei = work[-1]
            if ei == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = 1
            advanced = False
            while ei < len(adj[v]):
                w = adj[v][ei]
                ei += 1
                if not index[w]:
                    work[-1] = (v, ei)
                    work.append((w, 0))
                    advanced = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = 0
                    comp.append(w)
                    if w == v:
                        break
                comps.append(comp)
            if work:
                pv, pei = work[-1]
                low[pv] = min(low[pv], low[v])
                work[-1] = (pv, pei)
    return comps
