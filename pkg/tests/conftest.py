import itertools

import pytest

import gridmesh as gm


@pytest.fixture
def walkthrough_grid():
    """2x2 grid, 2 radios per node, 3 channels."""
    return gm.make_grid(gm.GridSpec(2, 2, radios=2, channels=3))


def naive_optimal_tid(topology, cs_max, radius_hops=2):
    """Independent exhaustive oracle over per-radio channel tuples.

    Enumerates every radio's channel independently (no subset encoding,
    no symmetry pruning), skips per-node duplicates, and returns the
    minimum active-conflict count over topology-preserving assignments.
    """
    cg = gm.build_conflict_graph(topology, radius_hops)
    per_node = []
    for node in topology.nodes:
        tuples = [
            tuple(sorted(t))
            for t in itertools.product(range(1, cs_max + 1), repeat=node.radios)
            if len(set(t)) == node.radios
        ]
        per_node.append(tuples)
    best = None
    for combo in itertools.product(*per_node):
        ca = gm.ChannelAssignment(cs_max, combo)
        if not all(ca.common(link) for link in topology.links):
            continue
        tid = gm.active_conflicts(cg, ca)
        if best is None or tid < best:
            best = tid
    return best
