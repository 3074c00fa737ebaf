"""
Command-line front end.

::

    graphkmeans graph  --input FILE (--directed | --undirected) --k K --out PREFIX [options]
    graphkmeans points --input FILE --epsilon E --k K --out PREFIX [options]
    graphkmeans mesh   --input FILE --k K --out PREFIX [options]

Each run writes ``PREFIX.assignment.json`` and ``PREFIX.dot``. Exit status is
0 on success, 2 for bad arguments or unreadable input, 1 when clustering
itself fails (for example ``k`` larger than the node count).

``assignment.json`` layout (keys sorted)::

    {
      "centroids": [label, ...],        # one per cluster, cluster order
      "cluster_sizes": [int, ...],
      "converged": bool,
      "damping": float,
      "epsilon": float | null,          # points subcommand only
      "input": str,                     # path as given
      "iterations": int,
      "k": int,
      "kind": "graph" | "points" | "mesh",
      "directed": bool,
      "max_iterations": int,
      "measure": str,
      "node_count": int,
      "nodes": {label: int | null},     # null = unassigned
      "seed": int,
      "unassigned": int
    }

Wall-clock time goes to stderr so the files stay byte-identical across runs.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import TextIO

from .centrality import MEASURES, PageRankParams
from .clustering import ClusteringConfig, ClusteringResult, cluster
from .errors import ConvergenceError, GraphError, ParseError
from .graph import Graph
from .ingest import (
    LabelTable,
    mesh_to_graph,
    neighborhood_graph,
    read_edge_list,
    read_obj_mesh,
    read_point_cloud,
)

__all__ = ["PALETTE", "UNASSIGNED_COLOR", "main", "run_report", "write_dot"]

PALETTE = (
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
    "#e377c2", "#bcbd22", "#17becf", "#aec7e8", "#ffbb78", "#98df8a",
)
UNASSIGNED_COLOR = "#7f7f7f"


class InputError(Exception):
    """Bad input file; maps to exit status 2."""


def _quote(label: str) -> str:
    return '"' + label.replace("\\", "\\\\").replace('"', '\\"') + '"'


def write_dot(g: Graph, result: ClusteringResult, labels: LabelTable, out: TextIO) -> None:
    """Write ``g`` as Graphviz DOT with nodes filled by cluster colour.

    Cluster ``i`` uses ``PALETTE[i % 12]``; unassigned nodes are grey and
    centroids get a double outline.
    """
    kind, arrow = ("digraph", "->") if g.directed else ("graph", "--")
    centroids = set(result.centroids)
    out.write(f"{kind} clusters {{\n")
    out.write("  node [style=filled];\n")
    for v in range(g.node_count):
        c = result.assignment[v]
        color = UNASSIGNED_COLOR if c is None else PALETTE[c % len(PALETTE)]
        attrs = f'fillcolor="{color}", cluster="{"none" if c is None else c}"'
        if v in centroids:
            attrs += ", peripheries=2"
        out.write(f"  {_quote(labels.label_of(v))} [{attrs}];\n")
    for u, v, w in g.edges:
        out.write(
            f"  {_quote(labels.label_of(u))} {arrow} {_quote(labels.label_of(v))} [weight={w!r}];\n"
        )
    out.write("}\n")


def run_report(g: Graph, labels: LabelTable, result: ClusteringResult, args) -> dict:
    sizes = [len(c) for c in result.clusters]
    return {
        "input": args.input,
        "kind": args.command,
        "directed": g.directed,
        "node_count": g.node_count,
        "k": args.k,
        "measure": args.measure,
        "damping": args.damping,
        "seed": args.seed,
        "max_iterations": args.max_iters,
        "epsilon": getattr(args, "epsilon", None),
        "iterations": result.iterations,
        "converged": result.converged,
        "cluster_sizes": sizes,
        "unassigned": len(result.unassigned),
        "centroids": [labels.label_of(c) for c in result.centroids],
        "nodes": {labels.label_of(v): a for v, a in enumerate(result.assignment)},
    }


def _positive_float(text):
    x = float(text)
    if not x > 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {text}")
    return x


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", required=True, help="input file")
    common.add_argument("--k", type=int, required=True, help="number of clusters")
    common.add_argument("--measure", choices=sorted(MEASURES), default="pagerank")
    common.add_argument("--damping", type=float, default=0.85, help="PageRank damping factor")
    common.add_argument("--seed", type=int, default=0, help="initialisation seed")
    common.add_argument("--max-iters", type=int, default=100)
    common.add_argument("--out", required=True, help="output path prefix")

    parser = argparse.ArgumentParser(
        prog="graphkmeans", description="k-means style clustering of graphs by centrality"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("graph", parents=[common], help="cluster an edge-list graph")
    orient = p.add_mutually_exclusive_group(required=True)
    orient.add_argument("--directed", dest="directed", action="store_true")
    orient.add_argument("--undirected", dest="directed", action="store_false")

    p = sub.add_parser("points", parents=[common], help="cluster a point cloud via its epsilon-graph")
    p.add_argument("--epsilon", type=_positive_float, required=True)

    sub.add_parser("mesh", parents=[common], help="cluster the vertices of an OBJ triangle mesh")
    return parser


def _load(args) -> tuple[Graph, LabelTable]:
    try:
        with open(args.input, encoding="utf-8") as fh:
            if args.command == "graph":
                return read_edge_list(fh, directed=args.directed, source=args.input)
            if args.command == "points":
                pc = read_point_cloud(fh, source=args.input)
                return neighborhood_graph(pc, args.epsilon), LabelTable.range(len(pc))
            mesh = read_obj_mesh(fh, source=args.input)
            # labels follow the OBJ file's 1-based vertex numbering
            return mesh_to_graph(mesh), LabelTable.range(len(mesh.vertices), start=1)
    except OSError as exc:
        raise InputError(f"cannot read {args.input}: {exc.strerror or exc}") from None
    except ParseError as exc:
        raise InputError(str(exc)) from None
    except (GraphError, ValueError) as exc:
        raise InputError(f"{args.input}: {exc}") from None


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    try:
        g, labels = _load(args)
    except InputError as exc:
        print(f"graphkmeans: error: {exc}", file=sys.stderr)
        return 2

    started = time.perf_counter()
    try:
        config = ClusteringConfig(
            k=args.k,
            measure=args.measure,
            pagerank_params=PageRankParams(damping=args.damping),
            max_iterations=args.max_iters,
            rng_seed=args.seed,
        )
        result = cluster(g, config)
    except (GraphError, ConvergenceError, ValueError) as exc:
        print(f"graphkmeans: error: {exc}", file=sys.stderr)
        return 1
    elapsed_ms = (time.perf_counter() - started) * 1000.0

    report = run_report(g, labels, result, args)
    try:
        with open(f"{args.out}.assignment.json", "w", encoding="utf-8") as fh:
            json.dump(report, fh, indent=2, sort_keys=True)
            fh.write("\n")
        with open(f"{args.out}.dot", "w", encoding="utf-8") as fh:
            write_dot(g, result, labels, fh)
    except OSError as exc:
        print(f"graphkmeans: error: cannot write output: {exc}", file=sys.stderr)
        return 1

    print(
        f"{g.node_count} nodes, k={args.k}, {result.iterations} iterations, "
        f"converged={result.converged}, unassigned={len(result.unassigned)}, "
        f"{elapsed_ms:.1f} ms",
        file=sys.stderr,
    )
    return 0


if __name__ == "__main__":
    sys.exit(main())
