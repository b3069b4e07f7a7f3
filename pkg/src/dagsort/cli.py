"""Command-line interface: ``dagsort {gen,sort,count,estimate,analyze,bench}``.

Exit codes: 0 success, 2 bad input or arguments, 3 cyclic graph,
4 hidden order inconsistent with the graph, 5 graph too large to count.
"""

from __future__ import annotations

import argparse
import csv
import json
import random
import sys
import time
from statistics import fmean
from typing import Sequence

from . import analysis, extensions, fileio, generate
from .dag import CycleError, DagError, kahn_order, longest_path
from .extensions import MAX_EXACT_N, SizeGuardError
from .oracle import InconsistentOrderError, make_provider
from .sorter import ALGORITHMS, topological_heapsort_with_insertion

EXIT_OK, EXIT_INPUT, EXIT_CYCLE, EXIT_INCONSISTENT, EXIT_GUARD = 0, 2, 3, 4, 5

BENCH_COLUMNS = ["kind", "n", "m", "seed", "algo", "comparisons", "log2T", "ell", "reduced_n", "micros"]


def _run_sort(dag, order, algo: str, epsilon: float | None = None):
    provider = make_provider(dag, order)
    start = time.perf_counter()
    if algo == "thsi":
        run = topological_heapsort_with_insertion(dag, provider, record=False, skip_reduction_epsilon=epsilon)
    else:
        run = ALGORITHMS[algo](dag, provider, record=False)
    micros = int((time.perf_counter() - start) * 1e6)
    if run.ell is None:
        run.ell = len(longest_path(dag))
    return run, micros


def cmd_gen(args) -> int:
    dag, order = generate.generate(args.kind, args.n, p=args.p, layers=args.layers, seed=args.seed)
    graph_path = args.graph or f"{args.out}.dag"
    order_path = args.order or f"{args.out}.order"
    fileio.write_dag(graph_path, dag)
    fileio.write_order(order_path, order)
    print(f"wrote {graph_path} (n={dag.n} m={dag.m}) and {order_path}")
    return EXIT_OK


def cmd_sort(args) -> int:
    dag = fileio.read_dag(args.graph)
    order = fileio.read_order(args.order, dag.n)
    kahn_order(dag)
    run, micros = _run_sort(dag, order, args.algo, args.skip_reduction_epsilon)
    stats = {
        "algo": args.algo,
        "comparisons": run.comparisons,
        "n": dag.n,
        "m": dag.m,
        "ell": run.ell,
        "reduced_n": run.reduced_n,
        "micros": micros,
    }
    if args.json:
        print(json.dumps({"order": run.order, **stats}))
        return EXIT_OK
    print(" ".join(map(str, run.order)))
    if args.stats:
        print(" ".join(f"{k}={'NA' if v is None else v}" for k, v in stats.items()))
    return EXIT_OK


def cmd_count(args) -> int:
    dag = fileio.read_dag(args.graph)
    t, log2 = extensions.count_extensions(dag)
    if args.json:
        print(json.dumps({"T": str(t), "log2": log2}))
    else:
        print(f"T={t} log2={log2!r}")
    return EXIT_OK


def cmd_estimate(args) -> int:
    dag = fileio.read_dag(args.graph)
    kahn_order(dag)
    table = extensions.extension_table(dag)
    rows = []
    for i in range(args.repeats):
        seed = args.seed + i
        order = table.sample(random.Random(seed))
        run = topological_heapsort_with_insertion(dag, make_provider(dag, order), record=False)
        rows.append((seed, run.comparisons))
    mean = fmean(c for _, c in rows) if rows else 0.0
    if args.json:
        print(json.dumps({"runs": [{"seed": s, "comparisons": c} for s, c in rows], "mean": mean}))
    else:
        for s, c in rows:
            print(f"seed={s} comparisons={c}")
        print(f"mean={mean!r}")
    return EXIT_OK


def _verdict(ok: bool | None) -> str:
    return "skipped" if ok is None else ("pass" if ok else "FAIL")


def cmd_analyze(args) -> int:
    dag = fileio.read_dag(args.graph)
    order = fileio.read_order(args.order, dag.n)
    kahn_order(dag)
    run = ALGORITHMS[args.algo](dag, make_provider(dag, order))
    t = extensions.count_extensions(dag).value if dag.n <= MAX_EXACT_N else None
    cert = analysis.certify(dag, run, t)
    part = cert.partition
    checks = {
        "partition_bound": cert.partition_bound,
        "working_set_bound": cert.working_set_bound,
        "path_bound": cert.path_bound,
    }
    if args.json:
        print(json.dumps({
            "algo": args.algo,
            "comparisons": run.comparisons,
            "cliques": part.cliques,
            "critical_times": part.critical_times,
            "sum_c_log_c": part.size_entropy(),
            "lower_bound": cert.lower_bound,
            "sum_log_w": cert.working_sets.sum_log_w,
            "ell": cert.ell,
            "log2T": cert.log2_t,
            "checks": checks,
            "arcs_forward": cert.arcs_forward,
        }))
    else:
        print(f"algo={args.algo} n={dag.n} m={dag.m} comparisons={run.comparisons} ell={cert.ell}")
        for i, (clique, t_crit) in enumerate(zip(part.cliques, part.critical_times), 1):
            print(f"C{i} critical_time={t_crit} size={len(clique)} vertices={' '.join(map(str, clique))}")
        print(f"sum_c_log_c={part.size_entropy()!r}")
        print(f"lower_bound={cert.lower_bound!r}")
        print(f"sum_log_w={cert.working_sets.sum_log_w!r}")
        print(f"log2T={'NA' if cert.log2_t is None else repr(cert.log2_t)}")
        if cert.log2_t is not None:
            print(f"partition_bound_margin={cert.log2_t - cert.lower_bound!r}")
        for name, ok in checks.items():
            print(f"{name}: {_verdict(ok)}")
        print(f"arcs_forward: {_verdict(cert.arcs_forward)}")
    return EXIT_OK if all(ok is not False for ok in checks.values()) else 1


def bench_rows(kinds, sizes, seeds, algos, p=0.3, layers=3):
    """Yield one CSV row dict per (kind, n, seed, algo) cell."""
    for kind in kinds:
        for n in sizes:
            for seed in seeds:
                dag, order = generate.generate(kind, n, p=p, layers=layers, seed=seed)
                log2t = f"{extensions.count_extensions(dag).log2:.6f}" if n <= MAX_EXACT_N else "NA"
                for algo in algos:
                    run, micros = _run_sort(dag, order, algo)
                    yield {
                        "kind": kind,
                        "n": n,
                        "m": dag.m,
                        "seed": seed,
                        "algo": algo,
                        "comparisons": run.comparisons,
                        "log2T": log2t,
                        "ell": run.ell,
                        "reduced_n": "NA" if run.reduced_n is None else run.reduced_n,
                        "micros": micros,
                    }


def cmd_bench(args) -> int:
    rows = bench_rows(args.kind, args.n, args.seed, args.algo, p=args.p, layers=args.layers)
    out = open(args.out, "w", newline="") if args.out else sys.stdout
    try:
        writer = csv.DictWriter(out, fieldnames=BENCH_COLUMNS, lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow(row)
    finally:
        if out is not sys.stdout:
            out.close()
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dagsort", description="Sort DAG vertices with few comparisons.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a graph file and a consistent hidden-order file")
    p.add_argument("--kind", choices=generate.KINDS, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=float, default=0.3, help="edge probability (random, layered)")
    p.add_argument("--layers", type=int, default=3, help="layer count (layered)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default="instance", help="output prefix for PREFIX.dag and PREFIX.order")
    p.add_argument("--graph", help="graph output path (overrides --out)")
    p.add_argument("--order", help="order output path (overrides --out)")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("sort", help="sort a graph under a hidden order")
    p.add_argument("--algo", choices=sorted(ALGORITHMS), default="thsi")
    p.add_argument("--graph", required=True)
    p.add_argument("--order", required=True)
    p.add_argument("--stats", action="store_true")
    p.add_argument("--json", action="store_true")
    p.add_argument("--skip-reduction-epsilon", type=float, default=None,
                   help="thsi: plain heapsort when the longest path has <= (1-eps)*n vertices")
    p.set_defaults(func=cmd_sort)

    p = sub.add_parser("count", help="exact number of topological orders")
    p.add_argument("--graph", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("estimate", help="estimate log2 T from sampled hidden orders")
    p.add_argument("--graph", required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--repeats", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_estimate)

    p = sub.add_parser("analyze", help="clique partition and bound checks for one run")
    p.add_argument("--algo", choices=sorted(ALGORITHMS), default="ths")
    p.add_argument("--graph", required=True)
    p.add_argument("--order", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("bench", help="comparison counts over a grid of generated instances")
    p.add_argument("--kind", nargs="+", choices=generate.KINDS, default=["random"])
    p.add_argument("--n", nargs="+", type=int, default=[12])
    p.add_argument("--p", type=float, default=0.3)
    p.add_argument("--layers", type=int, default=3)
    p.add_argument("--seed", nargs="+", type=int, default=[0])
    p.add_argument("--algo", nargs="+", choices=sorted(ALGORITHMS), default=["ths", "thsi"])
    p.add_argument("--out", help="CSV path (default stdout)")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CycleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        print("cycle: " + " ".join(map(str, exc.cycle)), file=sys.stderr)
        return EXIT_CYCLE
    except InconsistentOrderError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT
    except SizeGuardError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (DagError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
