"""Near-optimal channel assignment heuristic for grid mesh networks.

The sweep visits every node in id order and, for each, its neighbors in
east/south/west/north order. Each directed pair is handled by exactly one
of five scenarios depending on which endpoints still have a free radio.
A final fill pass gives any leftover radio the channel that least
increases the active-conflict count.

Under-specified corners are resolved deterministically (ties always break
toward the lowest channel id) so that identical inputs always produce
identical results; see the scenario helpers for the exact rules.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .ca import ChannelAssignment, assignment_from_sets
from .conflict import build_conflict_graph, covered_conflicts
from .errors import InvalidSpecError
from .topology import Topology, neighbors

SCENARIO_SKIP = "skip-common"
SCENARIO_BOTH_FREE = "both-free"
SCENARIO_I_FREE = "i-free"
SCENARIO_J_FREE = "j-free"
SCENARIO_SWAP = "both-full-swap"


@dataclass(frozen=True)
class TraceStep:
    pair: tuple[int, int]
    scenario: str
    channels: tuple[int, ...]  # channels assigned/swapped at this step
    usage: dict[int, int]  # neighborhood usage counts consulted


@dataclass(frozen=True)
class NocagTrace:
    steps: tuple[TraceStep, ...]
    fill: tuple[tuple[int, int], ...]  # (node, channel) from the fill pass


def step_count(trace: NocagTrace) -> int:
    """Number of directed pair visits in the sweep."""
    return len(trace.steps)


def _neighborhood_usage(sets, topo, node: int, exclude: int) -> Counter:
    """Channel occurrence counts over the node's neighbors, one per radio set."""
    usage = Counter()
    for u in neighbors(topo, node):
        if u == exclude:
            continue
        usage.update(sets[u])
    return usage


def _least_used(candidates, usage: Counter, global_usage: Counter) -> int:
    """Lowest neighborhood usage, then lowest network-wide usage, then id.

    The secondary key keeps the overall histogram even; without it every
    neighborhood tie falls to the lowest id and low channels crowd out
    high ones on larger grids.
    """
    return min(candidates, key=lambda c: (usage[c], global_usage[c], c))


def _would_multi_common(sets, topo, node: int, chan: int) -> bool:
    """True if adding chan to node creates a >=2 common-channel pair."""
    node_set = set(sets[node])
    for u in neighbors(topo, node):
        if chan in sets[u] and node_set & set(sets[u]):
            return True
    return False


def assign_nocag(
    topology: Topology, cs_max: int, radius_hops: int = 2
) -> tuple[ChannelAssignment, NocagTrace]:
    """Run the pair sweep plus fill pass; returns the assignment and trace."""
    if cs_max < topology.max_radios():
        raise InvalidSpecError(
            f"need at least {topology.max_radios()} channels, got {cs_max}"
        )
    all_channels = range(1, cs_max + 1)
    sets: list[list[int]] = [[] for _ in topology.nodes]
    steps: list[TraceStep] = []

    def free(n: int) -> bool:
        return len(sets[n]) < topology.radios(n)

    cg = build_conflict_graph(topology, radius_hops)
    overall = Counter()  # network-wide channel usage, kept incrementally

    for i in range(topology.node_count):
        for j in neighbors(topology, i):
            step = _visit_pair(topology, cg, sets, i, j, all_channels, free, overall)
            steps.append(step)

    fill = _fill_pass(topology, cg, sets, all_channels, overall)
    ca = assignment_from_sets(cs_max, sets)
    return ca, NocagTrace(tuple(steps), tuple(fill))


def _visit_pair(topo, cg, sets, i, j, all_channels, free, overall) -> TraceStep:
    cs_i, cs_j = set(sets[i]), set(sets[j])
    if cs_i & cs_j:
        return TraceStep((i, j), SCENARIO_SKIP, (), {})

    usage_i = _neighborhood_usage(sets, topo, i, exclude=j)
    usage_j = _neighborhood_usage(sets, topo, j, exclude=i)

    if free(i) and free(j):
        return _both_free(topo, cg, sets, i, j, all_channels, usage_i, usage_j, overall)
    if free(i):
        chan = _pull_from_partner(sets[j], usage_i, overall)
        sets[i].append(chan)
        overall[chan] += 1
        return TraceStep((i, j), SCENARIO_I_FREE, (chan,), dict(usage_i))
    if free(j):
        chan = _pull_from_partner(sets[i], usage_j, overall)
        sets[j].append(chan)
        overall[chan] += 1
        return TraceStep((i, j), SCENARIO_J_FREE, (chan,), dict(usage_j))
    return _both_full_swap(sets, i, j, usage_i, usage_j, overall)


def _both_free(topo, cg, sets, i, j, all_channels, usage_i, usage_j, overall) -> TraceStep:
    cs_i, cs_j = set(sets[i]), set(sets[j])
    fresh = [c for c in all_channels if c not in cs_i and c not in cs_j]
    combined = usage_i + usage_j

    refined = [c for c in fresh if usage_i[c] == 0 and usage_j[c] == 0]
    if refined:
        chan = _least_used(refined, combined, overall)
        sets[i].append(chan)
        sets[j].append(chan)
        overall[chan] += 2
        return TraceStep((i, j), SCENARIO_BOTH_FREE, (chan,), dict(combined))

    # Every fresh channel is already in use nearby; only take one that does
    # not give some adjacent pair a second common channel.
    safe = [
        c
        for c in fresh
        if not _would_multi_common(sets, topo, i, c)
        and not _would_multi_common(sets, topo, j, c)
    ]
    if safe:
        chan = _least_used(safe, combined, overall)
        sets[i].append(chan)
        sets[j].append(chan)
        overall[chan] += 2
        return TraceStep((i, j), SCENARIO_BOTH_FREE, (chan,), dict(combined))

    # No common channel can be added cleanly: cover the link one-sided by
    # copying a channel from the partner, like the single-free scenarios.
    for node, partner, usage in ((i, j, usage_i), (j, i, usage_j)):
        options = [
            c
            for c in sets[partner]
            if c not in sets[node] and not _would_multi_common(sets, topo, node, c)
        ]
        if options:
            chan = _least_used(options, usage, overall)
            sets[node].append(chan)
            overall[chan] += 1
            scenario = SCENARIO_I_FREE if node == i else SCENARIO_J_FREE
            return TraceStep((i, j), scenario, (chan,), dict(usage))

    if fresh:
        chan = _least_used(fresh, combined, overall)
        sets[i].append(chan)
        sets[j].append(chan)
        overall[chan] += 2
        return TraceStep((i, j), SCENARIO_BOTH_FREE, (chan,), dict(combined))

    # All channels sit on one of the two nodes; copy whichever single
    # channel least increases the current conflict count.
    best = None
    for chan in all_channels:
        target = None
        if chan in sets[i] and chan not in sets[j]:
            target = j
        elif chan in sets[j] and chan not in sets[i]:
            target = i
        if target is None:
            continue
        sets[target].append(chan)
        cost = covered_conflicts(cg, sets)
        sets[target].pop()
        if best is None or (cost, chan) < best[:2]:
            best = (cost, chan, target)
    if best is not None:
        _, chan, target = best
        sets[target].append(chan)
        overall[chan] += 1
        scenario = SCENARIO_I_FREE if target == i else SCENARIO_J_FREE
        return TraceStep((i, j), scenario, (chan,), dict(combined))
    # Unreachable for disjoint sets, but keep the sweep total.
    return TraceStep((i, j), SCENARIO_SKIP, (), dict(combined))


def _pull_from_partner(partner_set, usage: Counter, overall: Counter) -> int:
    """Channel from the partner's set, preferring ones unused nearby."""
    unused = [c for c in partner_set if usage[c] == 0]
    if unused:
        return min(unused, key=lambda c: (overall[c], c))
    return _least_used(partner_set, usage, overall)


def _both_full_swap(sets, i, j, usage_i, usage_j, overall) -> TraceStep:
    k = _least_used(sets[i], usage_j, overall)
    l = _least_used(sets[j], usage_i, overall)
    if k in sets[j]:
        # Swapping in k would duplicate it on j; leave the pair alone.
        return TraceStep((i, j), SCENARIO_SWAP, (), dict(usage_i + usage_j))
    sets[j].remove(l)
    sets[j].append(k)
    overall[l] -= 1
    overall[k] += 1
    return TraceStep((i, j), SCENARIO_SWAP, (k, l), dict(usage_i + usage_j))


def _fill_pass(topo, cg, sets, all_channels, overall) -> list[tuple[int, int]]:
    """Give every leftover radio the channel that least raises conflicts."""
    fill = []
    for node in range(topo.node_count):
        while len(sets[node]) < topo.radios(node):
            candidates = [c for c in all_channels if c not in sets[node]]
            if not candidates:
                break  # more radios than channels; nothing valid to add
            best = None
            for chan in candidates:
                sets[node].append(chan)
                cost = covered_conflicts(cg, sets)
                sets[node].pop()
                if best is None or (cost, overall[chan], chan) < best:
                    best = (cost, overall[chan], chan)
            sets[node].append(best[2])
            overall[best[2]] += 1
            fill.append((node, best[2]))
    return fill
