"""Conflict graph over links and co-channel conflict counting (TID).

Two links potentially conflict when some endpoint of one lies within a
configurable number of grid hops of some endpoint of the other. A conflict
is active under an assignment when both links operate on the same channel.
"""

from __future__ import annotations

from dataclasses import dataclass

from .ca import ChannelAssignment
from .errors import IncompleteAssignmentError, InvalidSpecError
from .topology import Link, Topology


@dataclass(frozen=True)
class ConflictGraph:
    links: tuple[Link, ...]
    conflict_pairs: frozenset[tuple[Link, Link]]  # pairs ordered low < high
    interference_radius_hops: int

    def degree(self, link: Link) -> int:
        return sum(1 for pair in self.conflict_pairs if link in pair)


def build_conflict_graph(topology: Topology, radius_hops: int = 2) -> ConflictGraph:
    """Pair up links whose closest endpoints are within radius_hops grid hops."""
    if radius_hops < 1:
        raise InvalidSpecError(f"interference radius must be >= 1, got {radius_hops}")
    links = topology.links
    pos = {n.id: (n.row, n.col) for n in topology.nodes}
    links_at: dict[int, list[Link]] = {n.id: [] for n in topology.nodes}
    for link in links:
        links_at[link[0]].append(link)
        links_at[link[1]].append(link)

    # A link pair conflicts iff some endpoint of one lies within the radius
    # of some endpoint of the other, so it suffices to scan the nodes in
    # each endpoint's hop ball and take the links incident to them.
    pairs = set()
    for a in links:
        nearby = set()
        for u in a:
            ru, cu = pos[u]
            for dr in range(-radius_hops, radius_hops + 1):
                span = radius_hops - abs(dr)
                r = ru + dr
                if not 0 <= r < topology.rows:
                    continue
                for c in range(max(0, cu - span), min(topology.cols, cu + span + 1)):
                    nearby.add(r * topology.cols + c)
        for w in nearby:
            for b in links_at[w]:
                if b != a:
                    pairs.add((a, b) if a < b else (b, a))
    return ConflictGraph(links, frozenset(pairs), radius_hops)


def active_conflicts(cg: ConflictGraph, ca: ChannelAssignment) -> int:
    """Count conflict pairs whose links operate on the same channel."""
    op = {}
    for link in cg.links:
        shared = ca.common(link)
        if not shared:
            raise IncompleteAssignmentError(
                f"link {link} has no operating channel; assignment is incomplete"
            )
        op[link] = min(shared)
    return sum(1 for a, b in cg.conflict_pairs if op[a] == op[b])


def covered_conflicts(cg: ConflictGraph, sets) -> int:
    """Active-conflict count restricted to links already covered.

    Used by assignment algorithms mid-construction, where some links may
    not yet have a common channel. ``sets`` is any per-node sequence of
    channel collections.
    """
    op = {}
    for link in cg.links:
        a, b = link
        shared = set(sets[a]) & set(sets[b])
        if shared:
            op[link] = min(shared)
    return sum(
        1
        for a, b in cg.conflict_pairs
        if a in op and b in op and op[a] == op[b]
    )
