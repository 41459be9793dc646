"""Command-line front end.

Subcommands: generate, assign, compare, bound, bench. All output is
deterministic; exit codes are 0 (success), 1 (infeasible or budget
exhausted without a result), 2 (usage or input error).
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from pathlib import Path

from . import baselines, ca, capacity, metrics, nocag, topology
from .errors import GridMeshError, InfeasibleError

EXIT_OK = 0
EXIT_INFEASIBLE = 1
EXIT_USAGE = 2


def _parse_grid(text: str) -> tuple[int, int]:
    try:
        rows, cols = text.lower().split("x")
        return int(rows), int(cols)
    except ValueError:
        raise GridMeshError(f"bad --grid value {text!r}; expected RxC like 3x3")


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _load_topology_file(path: str) -> topology.Topology:
    return topology.load_topology(Path(path).read_text(encoding="utf-8"))


def _topology_from_args(args) -> topology.Topology:
    if getattr(args, "topology", None):
        return _load_topology_file(args.topology)
    if not args.grid:
        raise GridMeshError("either --topology FILE or --grid RxC is required")
    rows, cols = _parse_grid(args.grid)
    spec = topology.GridSpec(
        rows=rows, cols=cols, radios=args.radios, channels=args.channels
    )
    return topology.make_grid(spec)


def cmd_generate(args) -> int:
    rows, cols = _parse_grid(args.grid)
    spec = topology.GridSpec(
        rows=rows,
        cols=cols,
        radios=args.radios,
        channels=args.channels,
        spacing_m=args.spacing,
    )
    _emit(topology.save_topology(topology.make_grid(spec)), args.out)
    return EXIT_OK


def cmd_assign(args) -> int:
    topo = _topology_from_args(args)
    channels = args.channels if args.grid else topo.channels
    if args.algo == "nocag":
        assignment, trace = nocag.assign_nocag(topo, channels, args.radius)
        if args.trace:
            for step in trace.steps:
                sys.stderr.write(json.dumps(dataclasses.asdict(step)) + "\n")
            for node, chan in trace.fill:
                sys.stderr.write(json.dumps({"fill": [node, chan]}) + "\n")
        _emit(ca.save_assignment(assignment), args.out)
        return EXIT_OK
    if args.algo == "cca":
        assignment = baselines.assign_cca(topo, channels, args.radius)
        _emit(ca.save_assignment(assignment), args.out)
        return EXIT_OK
    budget = baselines.SearchBudget(
        max_states=args.budget, symmetry_pruning=not args.no_prune
    )
    result = baselines.assign_bfca(topo, channels, budget, args.radius)
    doc = json.loads(ca.save_assignment(result.assignment))
    doc["search"] = {
        "optimal_metric": result.optimal_metric,
        "states_explored": result.states_explored,
        "exhausted": result.exhausted,
    }
    _emit(json.dumps(doc, indent=2) + "\n", args.out)
    return EXIT_OK


def _report_rows(ranked, grid_label: str) -> list[dict]:
    rows = []
    for label, report in ranked:
        row = {
            "algo": label,
            "grid": grid_label,
            "tid": report.tid,
            "spread": report.spread,
            "usage": metrics.usage_string(report.usage),
        }
        for chan in sorted(report.usage):
            row[f"usage_{chan}"] = report.usage[chan]
        rows.append(row)
    return rows


def _format_rows(rows: list[dict], fmt: str) -> str:
    if not rows:
        return ""
    if fmt == "json":
        return json.dumps(rows, indent=2) + "\n"
    columns = list(rows[0].keys())
    if fmt == "csv":
        lines = [",".join(columns)]
        lines += [",".join(str(r[c]) for c in columns) for r in rows]
        return "\n".join(lines) + "\n"
    # markdown
    lines = [
        "| " + " | ".join(columns) + " |",
        "| " + " | ".join("---" for _ in columns) + " |",
    ]
    lines += ["| " + " | ".join(str(r[c]) for c in columns) + " |" for r in rows]
    return "\n".join(lines) + "\n"


def cmd_compare(args) -> int:
    topo = _load_topology_file(args.topology)
    from .conflict import build_conflict_graph

    cg = build_conflict_graph(topo, args.radius)
    labeled = []
    for path in args.assignments:
        assignment = ca.load_assignment(Path(path).read_text(encoding="utf-8"))
        if len(assignment.sets) != topo.node_count:
            raise GridMeshError(
                f"{path}: assignment covers {len(assignment.sets)} nodes, "
                f"topology has {topo.node_count}"
            )
        labeled.append((Path(path).stem, metrics.evaluate(topo, assignment, cg)))
    ranked = metrics.compare(labeled)
    grid_label = f"{topo.rows}x{topo.cols}"
    _emit(_format_rows(_report_rows(ranked, grid_label), args.format), args.out)
    return EXIT_OK


def cmd_bound(args) -> int:
    spec = topology.GridSpec(
        rows=args.grid, cols=args.grid, radios=args.radios, channels=args.channels
    )
    topo = topology.make_grid(spec)
    scenario = capacity.build_scenario(topo, args.capacity)
    bound = capacity.upper_bound(topo, scenario)
    rows = [
        {
            "grid": f"{args.grid}x{args.grid}",
            "flow_id": idx,
            "src": scenario.flows[idx].source,
            "dst": scenario.flows[idx].sink,
            "bound_mbps": round(bound.per_flow[idx], 6),
        }
        for idx in sorted(bound.per_flow)
    ]
    rows.append(
        {
            "grid": f"{args.grid}x{args.grid}",
            "flow_id": "aggregate",
            "src": "",
            "dst": "",
            "bound_mbps": round(bound.aggregate, 6),
        }
    )
    _emit(_format_rows(rows, args.format), args.out)
    return EXIT_OK


def cmd_bench(args) -> int:
    from .conflict import build_conflict_graph

    algos = [a.strip() for a in args.algos.split(",") if a.strip()]
    known = {"nocag", "bfca", "cca"}
    unknown = set(algos) - known
    if unknown:
        raise GridMeshError(f"unknown algorithms: {sorted(unknown)}")
    rows = []
    for n in range(getattr(args, "from"), args.to + 1):
        spec = topology.GridSpec(
            rows=n, cols=n, radios=args.radios, channels=args.channels
        )
        topo = topology.make_grid(spec)
        cg = build_conflict_graph(topo, args.radius)
        agg = ""
        if n >= 2:
            scenario = capacity.build_scenario(topo)
            agg = round(capacity.upper_bound(topo, scenario).aggregate, 6)
        for algo in algos:
            extra = {}
            if algo == "nocag":
                assignment, _ = nocag.assign_nocag(topo, args.channels, args.radius)
            elif algo == "cca":
                assignment = baselines.assign_cca(topo, args.channels, args.radius)
            else:
                budget = baselines.SearchBudget(
                    max_states=args.budget, symmetry_pruning=not args.no_prune
                )
                result = baselines.assign_bfca(topo, args.channels, budget, args.radius)
                assignment = result.assignment
                extra = {
                    "states_explored": result.states_explored,
                    "exhausted": result.exhausted,
                }
            report = metrics.evaluate(topo, assignment, cg)
            row = {
                "algo": algo,
                "grid": f"{n}x{n}",
                "tid": report.tid,
                "spread": report.spread,
                "usage": metrics.usage_string(report.usage),
                "bound_mbps": agg,
            }
            row.update(extra)
            rows.append(row)
    # Pad rows so csv/markdown columns line up across algorithms.
    columns = []
    for row in rows:
        for key in row:
            if key not in columns:
                columns.append(key)
    rows = [{c: row.get(c, "") for c in columns} for row in rows]
    _emit(_format_rows(rows, args.format), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gridmesh",
        description="Plan and evaluate channel assignments for grid mesh networks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--radios", type=int, default=2)
        p.add_argument("--channels", type=int, default=3)
        p.add_argument("--radius", type=int, default=2,
                       help="interference radius in grid hops")
        p.add_argument("--format", choices=["json", "csv", "markdown"],
                       default="json")
        p.add_argument("--out", default=None, help="output file (default stdout)")

    g = sub.add_parser("generate", help="write a grid topology JSON document")
    g.add_argument("--grid", required=True, help="dimensions RxC, e.g. 3x3")
    g.add_argument("--spacing", type=float, default=topology.DEFAULT_SPACING_M)
    add_common(g)
    g.set_defaults(func=cmd_generate)

    a = sub.add_parser("assign", help="run an assignment algorithm")
    a.add_argument("--topology", help="topology JSON file")
    a.add_argument("--grid", help="dimensions RxC (instead of --topology)")
    a.add_argument("--algo", choices=["nocag", "bfca", "cca"], required=True)
    a.add_argument("--budget", type=int, default=baselines.DEFAULT_MAX_STATES)
    a.add_argument("--no-prune", action="store_true",
                   help="disable symmetry pruning in the exhaustive search")
    a.add_argument("--trace", action="store_true",
                   help="emit step records to stderr (nocag only)")
    add_common(a)
    a.set_defaults(func=cmd_assign)

    c = sub.add_parser("compare", help="rank assignment files on one topology")
    c.add_argument("--topology", required=True)
    c.add_argument("assignments", nargs="+", help="assignment JSON files")
    add_common(c)
    c.set_defaults(func=cmd_compare)

    b = sub.add_parser("bound", help="throughput upper bound for an n x n grid")
    b.add_argument("--grid", type=int, required=True, help="grid side n")
    b.add_argument("--capacity", type=float,
                   default=capacity.DEFAULT_LINK_CAPACITY_MBPS)
    add_common(b)
    b.set_defaults(func=cmd_bound)

    be = sub.add_parser("bench", help="run algorithms over a range of grid sizes")
    be.add_argument("--from", type=int, required=True, dest="from")
    be.add_argument("--to", type=int, required=True)
    be.add_argument("--algos", default="nocag,cca",
                    help="comma-separated subset of nocag,bfca,cca")
    be.add_argument("--budget", type=int, default=baselines.DEFAULT_MAX_STATES)
    be.add_argument("--no-prune", action="store_true")
    add_common(be)
    be.set_defaults(func=cmd_bench)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InfeasibleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except (GridMeshError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
