"""Cross-traffic scenario and the interference-free throughput bound.

An n x n grid carries 2n concurrent flows: one per column running top to
bottom and one per row running left to right. With every link at its
effective capacity and interference ignored, each flow is bounded by its
path bottleneck, so the aggregate bound is 2n times the link capacity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping, Sequence

from .errors import InvalidSpecError, ScenarioError
from .topology import Link, Topology

# Effective 802.11g link capacity in Mbps (54 Mbps PHY after RTS/CTS and
# TCP ACK overhead).
DEFAULT_LINK_CAPACITY_MBPS = 9.1


@dataclass(frozen=True)
class Flow:
    source: int
    sink: int
    path: tuple[int, ...]

    def links(self) -> list[Link]:
        return [
            (min(a, b), max(a, b))
            for a, b in zip(self.path, self.path[1:])
        ]


@dataclass(frozen=True)
class TrafficScenario:
    flows: tuple[Flow, ...]
    link_capacity: float = DEFAULT_LINK_CAPACITY_MBPS
    rectangular_extension: bool = False


@dataclass(frozen=True)
class CapacityBound:
    per_flow: dict[int, float]  # flow index -> Mbps
    aggregate: float


def build_scenario(
    topology: Topology, link_capacity: float = DEFAULT_LINK_CAPACITY_MBPS
) -> TrafficScenario:
    """Straight-line column flows then row flows, in index order.

    Rectangular grids get cols + rows flows by the same rule, flagged as
    an extension of the square-grid scenario.
    """
    rows, cols = topology.rows, topology.cols
    if rows < 2 or cols < 2:
        raise ScenarioError(
            f"{rows}x{cols} grid has degenerate straight-line flows; need >= 2x2"
        )
    flows = []
    for col in range(cols):  # vertical: top node down to bottom node
        path = tuple(r * cols + col for r in range(rows))
        flows.append(Flow(path[0], path[-1], path))
    for row in range(rows):  # horizontal: leftmost node across to rightmost
        path = tuple(row * cols + c for c in range(cols))
        flows.append(Flow(path[0], path[-1], path))
    return TrafficScenario(
        tuple(flows), link_capacity, rectangular_extension=(rows != cols)
    )


def path_capacity(path: Sequence[int], link_capacities) -> float:
    """Bottleneck rate of a path: minimum capacity over its links.

    ``link_capacities`` is either a mapping from (low, high) link to Mbps
    or a sequence of per-hop capacities aligned with the path.
    """
    if len(path) < 2:
        raise ScenarioError(f"path {list(path)} has no links")
    hops = [(min(a, b), max(a, b)) for a, b in zip(path, path[1:])]
    if isinstance(link_capacities, Mapping):
        caps = [link_capacities[h] for h in hops]
    else:
        caps = list(link_capacities)
        if len(caps) != len(hops):
            raise ScenarioError(
                f"{len(caps)} capacities given for a {len(hops)}-link path"
            )
    if any(c <= 0 for c in caps):
        raise ScenarioError("link capacities must be positive")
    return min(caps)


def upper_bound(topology: Topology, scenario: TrafficScenario) -> CapacityBound:
    """Per-flow bottleneck bound with every link at full capacity."""
    if topology.channels < topology.max_radios():
        raise InvalidSpecError(
            f"channel count {topology.channels} below max radios "
            f"{topology.max_radios()}"
        )
    per_flow = {
        idx: path_capacity(flow.path, [scenario.link_capacity] * (len(flow.path) - 1))
        for idx, flow in enumerate(scenario.flows)
    }
    # Round away float summation noise (9.1 is not binary-exact) so table
    # values like 2n * 9.1 come out exact in Mbps.
    return CapacityBound(per_flow, round(math.fsum(per_flow.values()), 6))


def verify_flow_conservation(
    scenario: TrafficScenario, per_flow: Mapping[int, float], tol: float = 1e-9
) -> bool:
    """Check a rate vector against flow constraints.

    Routes each flow's rate along its path and confirms: non-negative
    rates, no directed link above the link capacity, in/out balance at
    every node (net of what the node sources and sinks), and total
    sourced >= total sunk.
    """
    if set(per_flow) != set(range(len(scenario.flows))):
        return False
    load: dict[tuple[int, int], float] = {}
    net: dict[int, float] = {}  # inflow - outflow per node
    sourced = 0.0
    sunk = 0.0
    for idx, flow in enumerate(scenario.flows):
        rate = per_flow[idx]
        if rate < 0:
            return False
        sourced += rate
        sunk += rate
        for a, b in zip(flow.path, flow.path[1:]):
            load[(a, b)] = load.get((a, b), 0.0) + rate
            net[a] = net.get(a, 0.0) - rate
            net[b] = net.get(b, 0.0) + rate
        net[flow.source] = net.get(flow.source, 0.0) + rate
        net[flow.sink] = net.get(flow.sink, 0.0) - rate
    if any(l > scenario.link_capacity + tol for l in load.values()):
        return False
    if any(abs(v) > tol for v in net.values()):
        return False
    return sourced >= sunk - tol
