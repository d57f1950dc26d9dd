"""Common driver interface shared by all incremental DFS maintainers."""
from __future__ import annotations

from .core import Counters, Graph, static_dfs


class IncrementalDfs:
    """Base class: owns the graph, the current tree, and the work counters.

    Subclasses implement _apply(u, v) to restore the DFS-tree invariant
    after one edge insertion, and may override _apply_batch for grouped
    updates.
    """

    name = "base"
    supports_batch = True

    def __init__(self, n: int, directed: bool = False):
        self.graph = Graph(n, directed=directed)
        self.counters = Counters()
        self.tree = static_dfs(self.graph)

    @property
    def n(self):
        return self.graph.n

    @property
    def directed(self):
        return self.graph.directed

    def insert(self, u: int, v: int) -> bool:
        """Insert one edge and restore the invariant.

        Duplicate edges (and self loops) are ignored and return False.
        """
        if u == v or self.graph.has_edge(u, v):
            return False
        self.graph.add_edge(u, v)
        self.counters.insertions += 1
        self._apply(u, v)
        return True

    def insert_batch(self, edges) -> int:
        """Insert a group of edges, restoring the invariant once at the end."""
        if not self.supports_batch:
            raise NotImplementedError(f"{self.name} has no batch mode")
        fresh = []
        for u, v in edges:
            if u == v or self.graph.has_edge(u, v):
                continue
            self.graph.add_edge(u, v)
            self.counters.insertions += 1
            fresh.append((u, v))
        if fresh:
            self._apply_batch(fresh)
        return len(fresh)

    def _apply(self, u, v):
        raise NotImplementedError

    def _apply_batch(self, edges):
        for u, v in edges:
            self._apply(u, v)
