import copy
import math

import pytest

from incdfs.core import ROOT, is_valid_dfs_tree, stick_profile
from incdfs.generators import gen_gnm
from incdfs.sdfs2 import Sdfs2State


def build_chain(n):
    algo = Sdfs2State(n)
    for v in range(1, n):
        algo.insert(v, v + 1)
    return algo


def stored_count(algo):
    if algo.directed:
        return sum(len(lst) for lst in algo._stored)
    return sum(len(lst) for lst in algo._stored) // 2


def bristle_tree_edges(algo):
    count, stack = 0, [algo.bristle_root]
    while stack:
        q = stack.pop()
        count += len(algo.tree.children[q])
        stack.extend(algo.tree.children[q])
    return count


class TestStickHandling:
    def test_chain_stick_and_discard(self):
        algo = build_chain(5)
        assert algo.tree.parent == [-1, 0, 1, 2, 3, 4]
        assert [v for v in range(1, 6) if algo.on_stick[v]] == [1, 2, 3, 4]
        assert algo.bristle_root == 5
        parents = list(algo.tree.parent)
        before = algo.counters.rebuilds
        algo.insert(2, 4)
        assert algo.tree.parent == parents
        assert algo.counters.rebuilds == before
        assert algo.discarded_edges >= 1
        assert stored_count(algo) == 0

    def test_low_density_rebuild_covers_everything(self):
        algo = Sdfs2State(2)
        assert algo.bristle_root == ROOT
        algo.insert(1, 2)
        assert algo.counters.rebuilds == 1
        assert is_valid_dfs_tree(algo.graph, algo.tree).ok

    def test_on_stick_matches_stick_profile(self):
        seq = gen_gnm(80, 600, seed=14)
        algo = Sdfs2State(80)
        for u, v in seq.edges:
            algo.insert(u, v)
            prof = stick_profile(algo.tree)
            marked = {v for v in range(1, 81) if algo.on_stick[v]}
            assert len(marked) == prof.l_s
            assert algo.bristle_root == prof.bristle_root

    def test_no_stored_edge_touches_stick(self):
        seq = gen_gnm(100, 900, seed=3)
        algo = Sdfs2State(100)
        for u, v in seq.edges:
            algo.insert(u, v)
            for q in range(1, 101):
                if algo.on_stick[q]:
                    assert not algo._stored[q]

    def test_prune_hook_sees_every_discard(self):
        seq = gen_gnm(60, 500, seed=21)
        algo = Sdfs2State(60)
        log = []
        algo.prune_hook = lambda u, v: log.append((u, v))
        for u, v in seq.edges:
            algo.insert(u, v)
        assert len(log) == algo.discarded_edges
        assert algo.discarded_edges > 0
        for u, v in log:
            assert algo.graph.has_edge(u, v)


@pytest.mark.parametrize("mode", ["undirected", "directed", "dag"])
def test_valid_after_every_insertion(mode):
    seq = gen_gnm(50, 350, seed=8, mode=mode)
    algo = Sdfs2State(seq.n, directed=seq.directed)
    for u, v in seq.edges:
        algo.insert(u, v)
        assert is_valid_dfs_tree(algo.graph, algo.tree).ok


def test_dag_stick_stays_empty():
    for seed in range(3):
        seq = gen_gnm(60, 700, seed=seed, mode="dag")
        algo = Sdfs2State(60, directed=True)
        for u, v in seq.edges:
            algo.insert(u, v)
            assert stick_profile(algo.tree).l_s == 0


def test_rebuild_cost_is_bristle_subgraph_size():
    # a rebuild scans exactly the bristle-induced subgraph: its tree
    # edges, the stored non-tree edges, and the triggering edge
    for mode in ("undirected", "directed"):
        seq = gen_gnm(40, 300, seed=5, mode=mode)
        algo = Sdfs2State(40, directed=(mode == "directed"))
        rebuilds_seen = 0
        for u, v in seq.edges:
            expect = bristle_tree_edges(algo) + stored_count(algo) + 1
            before = algo.counters.edges_processed
            nrb = algo.counters.rebuilds
            algo.insert(u, v)
            if algo.counters.rebuilds > nrb:
                rebuilds_seen += 1
                assert algo.counters.edges_processed - before == 1 + expect
        assert rebuilds_seen > 5


def test_rebuild_cost_independent_of_stick():
    # contracting the stick away must not change what a trigger scans
    seq = gen_gnm(60, 2 * 60 * 7, seed=2)
    algo = Sdfs2State(60)
    compared = 0
    for u, v in seq.edges:
        if algo._stick and not algo.on_stick[u] and not algo.on_stick[v]:
            twin = copy.deepcopy(algo)
            t = twin.tree
            for q in twin._stick:
                t.parent[q] = -2
                t.children[q] = []
            t.children[ROOT] = [twin.bristle_root]
            t.parent[twin.bristle_root] = ROOT
            t.refresh_depths(twin.bristle_root)
            twin.on_stick = bytearray(61)
            twin._stick = []
            b0, b1 = algo.counters.edges_processed, twin.counters.edges_processed
            algo.insert(u, v)
            twin.insert(u, v)
            assert (
                algo.counters.edges_processed - b0
                == twin.counters.edges_processed - b1
            )
            compared += 1
        else:
            algo.insert(u, v)
    assert compared > 20


def test_stored_edge_budget():
    n = 200
    seq = gen_gnm(n, 6000, seed=7)
    algo = Sdfs2State(n)
    peak = 0
    for u, v in seq.edges:
        algo.insert(u, v)
        peak = max(peak, stored_count(algo))
    assert peak <= 4 * n * math.log(n)


def test_stick_grows_monotonically_past_threshold():
    n = 150
    m = n * n // 4
    seq = gen_gnm(n, m, seed=12)
    algo = Sdfs2State(n)
    threshold = int(2 * n * math.log(n))
    prev = 0
    for i, (u, v) in enumerate(seq.edges):
        algo.insert(u, v)
        if i >= threshold:
            ls = stick_profile(algo.tree).l_s
            assert ls >= prev
            prev = ls
    assert prev > 0


def test_no_batch_mode():
    algo = Sdfs2State(5)
    with pytest.raises(NotImplementedError):
        algo.insert_batch([(1, 2)])
