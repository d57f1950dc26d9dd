import math

import numpy as np
import pytest
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from incdfs.core import GraphError, is_valid_dfs_tree
from incdfs.generators import gen_gnm
from incdfs.streaming import StreamState


def offline_scc(n, edges):
    """Reference partition via scipy's strong connectivity."""
    if edges:
        u, v = zip(*edges)
    else:
        u, v = (), ()
    mat = csr_matrix(
        (np.ones(len(edges)), (np.array(u, dtype=int) - 1, np.array(v, dtype=int) - 1)),
        shape=(n, n),
    )
    _, labels = connected_components(mat, directed=True, connection="strong")
    comps = {}
    for vertex, lab in enumerate(labels, start=1):
        comps.setdefault(lab, []).append(vertex)
    out = [sorted(c) for c in comps.values()]
    out.sort(key=lambda c: c[0])
    return out


class TestBasics:
    def test_no_edges_all_singletons(self):
        st = StreamState(5, directed=True)
        assert st.scc_query() == [[1], [2], [3], [4], [5]]

    @pytest.mark.parametrize("order", [[(1, 2), (2, 3), (3, 1)], [(3, 1), (1, 2), (2, 3)]])
    def test_directed_triangle_one_component(self, order):
        st = StreamState(3, directed=True)
        st.stream_sequence(order)
        assert st.scc_query() == [[1, 2, 3]]

    def test_scc_query_rejected_undirected(self):
        st = StreamState(4, directed=False)
        with pytest.raises(GraphError):
            st.scc_query()

    def test_duplicates_counted_and_ignored(self):
        st = StreamState(4, directed=False)
        st.stream_edge(1, 2)
        st.stream_edge(1, 2)
        st.stream_edge(2, 1)
        st.stream_edge(3, 3)
        assert st.duplicates == 3
        assert st.core.graph.m == 1


class TestStickDiscard:
    def test_both_endpoints_on_stick_dropped(self):
        st = StreamState(5, directed=False)
        st.stream_sequence([(1, 2), (2, 3), (3, 4), (4, 5)])
        assert st._on_stick(1) and st._on_stick(3)
        before = st.retained_edges
        assert not st.stream_edge(1, 3)
        assert st.retained_edges == before
        assert st.dropped == 1

    def test_bristle_back_edge_retained(self):
        st = StreamState(6, directed=False)
        st.stream_sequence([(1, 2), (2, 3), (3, 4), (4, 5), (3, 6)])
        assert not st._on_stick(3) and not st._on_stick(5)
        assert st.stream_edge(3, 5)
        assert st.retained_edges == 1

    def test_retained_never_counts_stick_edges(self):
        # once the stick swallows a stored edge's endpoints it gets pruned
        st = StreamState(60, directed=False)
        seq = gen_gnm(60, 400, seed=3)
        for u, v in seq.edges:
            st.stream_edge(u, v)
            stick = [q for q in range(1, 61) if st._on_stick(q)]
            back = st.core._back
            for q in stick:
                assert not back[q]

    def test_directed_witness_targets_stick(self):
        st = StreamState(40, directed=True)
        seq = gen_gnm(40, 300, seed=2, mode="directed")
        st.stream_sequence(seq.edges)
        depth = st.core.tree.depth
        for u in range(1, 41):
            hb = st.highest_back[u]
            if hb is not None:
                assert st._on_stick(hb)
                assert depth[hb] < depth[u]


class TestSccOracle:
    @pytest.mark.parametrize("seed", range(6))
    def test_random_streams_match_offline_oracle(self, seed):
        rng = np.random.Generator(np.random.PCG64(seed))
        n = int(rng.integers(20, 80))
        m = int(rng.integers(n, min(3 * n, n * (n - 1))))
        seq = gen_gnm(n, m, seed=seed, mode="directed")
        st = StreamState(n, directed=True)
        st.stream_sequence(seq.edges)
        assert st.scc_query() == offline_scc(n, seq.edges)

    def test_mid_stream_query(self):
        n = 50
        seq = gen_gnm(n, 400, seed=11, mode="directed")
        st = StreamState(n, directed=True)
        for cut in (100, 250, 400):
            start = st.streamed
            st.stream_sequence(seq.edges[start:cut])
            assert st.scc_query() == offline_scc(n, seq.edges[:cut])


class TestSpaceBound:
    def test_peak_retained_small_dense_stream(self):
        n = 200
        seq = gen_gnm(n, n * (n - 1) // 2, seed=0)
        st = StreamState(n, directed=False)
        st.stream_sequence(seq.edges)
        assert st.peak_retained <= 4 * n * math.log(n)
        rep = is_valid_dfs_tree(st.core.graph, st.core.tree)
        assert rep.ok

    def test_stream_file_roundtrip(self, tmp_path):
        from incdfs.generators import dump_sequence

        seq = gen_gnm(30, 90, seed=5, mode="directed")
        path = tmp_path / "stream.txt"
        dump_sequence(seq, path)
        st = StreamState(30, directed=True)
        st.stream_file(path)
        assert st.scc_query() == offline_scc(30, seq.edges)
