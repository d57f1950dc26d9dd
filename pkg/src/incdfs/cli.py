"""Command-line harness.

Subcommands: bench (metric replay), broomstick (stick/cross-probability
sweep with the theoretical prediction), worstcase (adversarial families),
stream (semi-streaming run with SCC check), validate (oracle replay).
"""
from __future__ import annotations

import argparse
import math
import sys

from .bench import (
    ALGORITHM_NAMES,
    ExperimentConfig,
    make_algorithm,
    predict_stick,
    replay,
    run_experiment,
    write_csv,
)
from .core import is_valid_dfs_tree, stick_profile
from .generators import (
    batches,
    gen_gnm,
    gen_worstcase_adfs1,
    gen_worstcase_fdfs,
    gen_worstcase_sdfs3,
    load_dataset,
)
from .streaming import StreamState, _tarjan_scc


def _add_common(p):
    p.add_argument("--algo", choices=ALGORITHM_NAMES, default="sdfs")
    p.add_argument("--n", type=int, default=100)
    p.add_argument("--m", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=1)
    p.add_argument("--mode", choices=["undirected", "directed", "dag"],
                   default="undirected")
    p.add_argument("--batch", action="store_true")
    p.add_argument("--dataset", metavar="PATH", default=None)
    p.add_argument("--sample-every", type=int, default=1, metavar="K")
    p.add_argument("--out", metavar="PATH.csv", default=None)


def _emit(rows, out):
    if out is None:
        write_csv(rows, sys.stdout)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            write_csv(rows, fh)


def _get_sequence(args):
    if args.dataset is not None:
        return load_dataset(args.dataset, directed=args.mode != "undirected")
    return gen_gnm(args.n, args.m, seed=args.seed, mode=args.mode)


def cmd_bench(args):
    cfg = ExperimentConfig(
        algo=args.algo, n=args.n, m=args.m, seed=args.seed, trials=args.trials,
        mode=args.mode, batch=args.batch, dataset=args.dataset,
        sample_every=args.sample_every, out=args.out,
    )
    _emit(run_experiment(cfg), args.out)
    return 0


def cmd_broomstick(args):
    seq = _get_sequence(args)
    algo = make_algorithm(args.algo, seq.n, args.mode)
    rows = replay(algo, seq, sample_every=args.sample_every)
    _emit(rows, args.out)
    prof = stick_profile(algo.tree)
    pred = predict_stick(seq.n, len(seq.edges), c=1.0)
    print(
        f"# n={seq.n} m={len(seq.edges)} measured l_s={prof.l_s} "
        f"bristle={prof.bristle} predicted l_s>={pred}",
        file=sys.stderr,
    )
    return 0


def cmd_worstcase(args):
    family = {
        "adfs1": (gen_worstcase_adfs1, "adfs1"),
        "adfs2": (gen_worstcase_adfs1, "adfs2"),
        "fdfs": (gen_worstcase_fdfs, "fdfs"),
        "sdfs3": (gen_worstcase_sdfs3, "sdfs3"),
    }.get(args.algo)
    if family is None:
        print(f"no adversarial family for {args.algo}", file=sys.stderr)
        return 2
    gen, algo_name = family
    seq = gen(args.n, args.m)
    mode = "dag" if seq.dag else ("directed" if seq.directed else "undirected")
    algo = make_algorithm(algo_name, seq.n, mode)
    if algo_name == "adfs1":
        algo.adversarial_order = True
    rows = replay(algo, seq, sample_every=args.sample_every)
    _emit(rows, args.out)
    total = algo.counters.edges_processed
    print(
        f"# {seq.provenance}: n={seq.n} m={len(seq.edges)} total={total} "
        f"total/m^2={total / len(seq.edges) ** 2:.6g}",
        file=sys.stderr,
    )
    return 0


def cmd_stream(args):
    directed = args.mode != "undirected"
    if args.dataset is not None:
        seq = load_dataset(args.dataset, directed=directed)
        n, edges = seq.n, seq.edges
    else:
        n = args.n
        edges = gen_gnm(args.n, args.m, seed=args.seed, mode=args.mode).edges
    st = StreamState(n, directed=directed)
    st.stream_sequence(edges)
    bound = 4 * st.n * math.log(max(st.n, 2))
    print(
        f"streamed={st.streamed} retained={st.retained_edges} "
        f"peak_retained={st.peak_retained} bound(4 n ln n)={bound:.0f} "
        f"dropped={st.dropped} duplicates={st.duplicates}"
    )
    if directed:
        comps = st.scc_query()
        adj = [[] for _ in range(st.n + 1)]
        for u, v in edges:
            adj[u].append(v)
        offline = [sorted(c) for c in _tarjan_scc(st.n, adj)]
        offline.sort(key=lambda c: c[0])
        ok = comps == offline
        print(f"scc components={len(comps)} oracle_match={ok}")
        if not ok:
            return 1
    return 0


def cmd_validate(args):
    seq = _get_sequence(args)
    algo = make_algorithm(args.algo, seq.n, args.mode)
    inserted = 0
    for group in batches(seq):
        for u, v in group:
            algo.insert(u, v)
            inserted += 1
            if inserted % args.sample_every == 0:
                rep = is_valid_dfs_tree(algo.graph, algo.tree)
                if not rep.ok:
                    print(f"INVALID at m={algo.graph.m}: {rep.reason}", file=sys.stderr)
                    return 1
    rep = is_valid_dfs_tree(algo.graph, algo.tree)
    if not rep.ok:
        print(f"INVALID at m={algo.graph.m}: {rep.reason}", file=sys.stderr)
        return 1
    print(f"valid: algo={args.algo} n={seq.n} m={algo.graph.m}")
    return 0


def main(argv=None):
    parser = argparse.ArgumentParser(prog="incdfs")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, fn in (
        ("bench", cmd_bench),
        ("broomstick", cmd_broomstick),
        ("worstcase", cmd_worstcase),
        ("stream", cmd_stream),
        ("validate", cmd_validate),
    ):
        p = sub.add_parser(name)
        _add_common(p)
        p.set_defaults(func=fn)
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
