"""Baseline assignment algorithms: exhaustive search and link-greedy CCA.

The exhaustive searcher enumerates per-node channel subsets (radios are
interchangeable, so subsets rather than per-radio tuples), prunes branches
that leave a decided link uncovered, and optionally fixes node 0's subset
to break channel-relabeling symmetry.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .ca import ChannelAssignment, assignment_from_sets
from .conflict import build_conflict_graph, active_conflicts
from .errors import InfeasibleError, InvalidSpecError
from .topology import Topology

DEFAULT_MAX_STATES = 10**7


@dataclass(frozen=True)
class SearchBudget:
    max_states: int = DEFAULT_MAX_STATES
    symmetry_pruning: bool = True

    def __post_init__(self):
        if self.max_states < 1:
            raise InvalidSpecError("max_states must be >= 1")


@dataclass(frozen=True)
class BfcaResult:
    assignment: ChannelAssignment
    optimal_metric: int
    states_explored: int
    exhausted: bool


def _usage_spread(sets, cs_max: int) -> int:
    counts = [0] * cs_max
    for chans in sets:
        for c in chans:
            counts[c - 1] += 1
    return max(counts) - min(counts)


def assign_bfca(
    topology: Topology,
    cs_max: int,
    budget: SearchBudget | None = None,
    radius_hops: int = 2,
) -> BfcaResult:
    """Exhaustive minimum-conflict search over complete assignments.

    Minimizes the active-conflict count; ties break by fairness spread,
    then by lexicographic assignment order. Stops early when the state
    budget is hit (exhausted=False), returning the best found so far.
    """
    if budget is None:
        budget = SearchBudget()
    if cs_max < topology.max_radios():
        raise InvalidSpecError(
            f"need at least {topology.max_radios()} channels, got {cs_max}"
        )
    cg = build_conflict_graph(topology, radius_hops)
    n = topology.node_count
    choices = []
    for node in range(n):
        subsets = list(itertools.combinations(range(1, cs_max + 1), topology.radios(node)))
        if node == 0 and budget.symmetry_pruning:
            subsets = [tuple(range(1, topology.radios(0) + 1))]
        choices.append(subsets)
    # Links whose higher endpoint is this node: decidable once it's set.
    links_ending_at = [[] for _ in range(n)]
    for a, b in topology.links:
        links_ending_at[b].append((a, b))

    best = None  # (tid, spread, sets-tuple)
    states = 0
    exhausted = True
    partial: list[tuple[int, ...]] = []

    stack = [(0, iter(choices[0]))]
    while stack:
        depth, it = stack[-1]
        subset = next(it, None)
        if subset is None:
            stack.pop()
            if partial:
                partial.pop()
            continue
        if len(partial) > depth:
            partial.pop()
        if any(
            not (set(subset) & set(partial[a]))
            for a, _ in links_ending_at[depth]
        ):
            continue
        partial.append(subset)
        if depth + 1 == n:
            states += 1
            tid = active_conflicts(cg, ChannelAssignment(cs_max, tuple(partial)))
            key = (tid, _usage_spread(partial, cs_max), tuple(partial))
            if best is None or key < best:
                best = key
            if states >= budget.max_states:
                exhausted = False
                break
            partial.pop()
        else:
            stack.append((depth + 1, iter(choices[depth + 1])))

    if best is None:
        raise InfeasibleError(
            "no topology-preserving assignment found"
            + ("" if exhausted else f" within budget of {budget.max_states} states")
        )
    ca = assignment_from_sets(cs_max, best[2])
    return BfcaResult(ca, best[0], states, exhausted)


def assign_cca(
    topology: Topology, cs_max: int, radius_hops: int = 2
) -> ChannelAssignment:
    """Link-ordered greedy baseline.

    Processes links by descending potential-conflict degree and always
    grabs the lowest usable channel id; leftover radios are filled with
    the lowest id missing from the node. Channel usage balance is
    deliberately ignored.
    """
    if cs_max < topology.max_radios():
        raise InvalidSpecError(
            f"need at least {topology.max_radios()} channels, got {cs_max}"
        )
    cg = build_conflict_graph(topology, radius_hops)
    ordered = sorted(topology.links, key=lambda l: (-cg.degree(l), l))
    sets: list[list[int]] = [[] for _ in topology.nodes]

    def free(node: int) -> bool:
        return len(sets[node]) < topology.radios(node)

    for a, b in ordered:
        if set(sets[a]) & set(sets[b]):
            continue
        # Lowest channel that can cover the link: each endpoint lacking it
        # must have a free radio. No usage balancing, so channel 1 cascades
        # across the grid.
        for chan in range(1, cs_max + 1):
            targets = [n for n in (a, b) if chan not in sets[n]]
            if all(free(n) for n in targets):
                for n in targets:
                    sets[n].append(chan)
                break

    for node in range(topology.node_count):
        while free(node):
            unused = [c for c in range(1, cs_max + 1) if c not in sets[node]]
            if not unused:
                break
            sets[node].append(unused[0])
    return assignment_from_sets(cs_max, sets)
