"""Assignment evaluation: conflict count, usage histogram, fairness spread.

Additional metrics can be registered by name; a metric is any pure
function (topology, assignment, conflict_graph) -> orderable score.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .ca import ChannelAssignment, ValidityReport, validate
from .conflict import ConflictGraph, active_conflicts
from .errors import MismatchedTopologyError
from .topology import Topology


@dataclass(frozen=True)
class MetricReport:
    tid: int
    usage: dict[int, int]  # channel id -> radios using it (0 for unused)
    spread: int
    validity: ValidityReport
    node_count: int
    link_count: int


def evaluate(
    topology: Topology, ca: ChannelAssignment, conflict_graph: ConflictGraph
) -> MetricReport:
    usage = {c: 0 for c in range(1, ca.channels_available + 1)}
    for chans in ca.sets:
        for c in chans:
            usage[c] += 1
    counts = list(usage.values())
    return MetricReport(
        tid=active_conflicts(conflict_graph, ca),
        usage=usage,
        spread=max(counts) - min(counts),
        validity=validate(topology, ca),
        node_count=topology.node_count,
        link_count=len(topology.links),
    )


def compare(reports: list[tuple[str, MetricReport]]) -> list[tuple[str, MetricReport]]:
    """Rank labeled reports by conflict count, then fairness spread."""
    shapes = {(r.node_count, r.link_count) for _, r in reports}
    if len(shapes) > 1:
        raise MismatchedTopologyError(
            f"reports computed over different topologies: {sorted(shapes)}"
        )
    return sorted(reports, key=lambda item: (item[1].tid, item[1].spread, item[0]))


def usage_string(usage: dict[int, int]) -> str:
    """Histogram in the zero-padded x:y:z notation, channels ascending."""
    return ":".join(f"{usage[c]:02d}" for c in sorted(usage))


_METRICS: dict[str, Callable] = {}


def register_metric(name: str, fn: Callable) -> None:
    _METRICS[name] = fn


def get_metric(name: str) -> Callable:
    return _METRICS[name]


register_metric("tid", lambda topo, ca, cg: active_conflicts(cg, ca))
