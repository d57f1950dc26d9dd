"""Incremental DFS-tree maintenance algorithms and benchmark harness."""

from incdfs.adfs import ADFS1, ADFS2
from incdfs.bench import (
    ALGORITHM_NAMES,
    ExperimentConfig,
    MetricRow,
    compute_pc,
    fit_exponent,
    make_algorithm,
    predict_stick,
    read_csv,
    replay,
    run_experiment,
    write_csv,
)
from incdfs.core import (
    ROOT,
    Counters,
    DfsTree,
    EdgeClass,
    Graph,
    GraphError,
    StickProfile,
    ValidityReport,
    classify_edge,
    is_valid_dfs_tree,
    lca,
    static_dfs,
    stick_profile,
)
from incdfs.fdfs import CycleError, FdfsState
from incdfs.generators import (
    GeneratorError,
    UpdateSequence,
    batches,
    gen_gnm,
    gen_gnp,
    gen_worstcase_adfs1,
    gen_worstcase_fdfs,
    gen_worstcase_sdfs3,
    load_dataset,
)
from incdfs.sdfs import SDFS, SDFSInt
from incdfs.sdfs2 import Sdfs2State
from incdfs.sdfs3 import Sdfs3State
from incdfs.streaming import StreamState

__all__ = [
    "ADFS1",
    "ADFS2",
    "ALGORITHM_NAMES",
    "Counters",
    "CycleError",
    "DfsTree",
    "EdgeClass",
    "ExperimentConfig",
    "FdfsState",
    "GeneratorError",
    "Graph",
    "GraphError",
    "MetricRow",
    "ROOT",
    "SDFS",
    "SDFSInt",
    "Sdfs2State",
    "Sdfs3State",
    "StickProfile",
    "StreamState",
    "UpdateSequence",
    "ValidityReport",
    "batches",
    "classify_edge",
    "compute_pc",
    "fit_exponent",
    "gen_gnm",
    "gen_gnp",
    "gen_worstcase_adfs1",
    "gen_worstcase_fdfs",
    "gen_worstcase_sdfs3",
    "is_valid_dfs_tree",
    "lca",
    "load_dataset",
    "make_algorithm",
    "predict_stick",
    "read_csv",
    "replay",
    "run_experiment",
    "static_dfs",
    "stick_profile",
    "write_csv",
]
