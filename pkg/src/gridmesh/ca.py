"""Channel assignments and the structural checks every algorithm shares.

A ChannelAssignment maps each node to the ordered set of channels on its
radios. Channel ids run from 1 to channels_available. A link is usable
only when its endpoints share at least one channel; its operating channel
is the lowest shared id.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import ChannelRangeError, TopologyFormatError, UncoveredLinkError
from .topology import Link, Topology


@dataclass(frozen=True)
class ChannelAssignment:
    channels_available: int
    sets: tuple[tuple[int, ...], ...]  # index = node id, ascending channels

    def channel_set(self, node_id: int) -> tuple[int, ...]:
        return self.sets[node_id]

    def common(self, link: Link) -> set[int]:
        a, b = link
        return set(self.sets[a]) & set(self.sets[b])


def assignment_from_sets(channels_available: int, sets) -> ChannelAssignment:
    """Normalize per-node channel iterables into a ChannelAssignment."""
    norm = []
    for node_id, chans in enumerate(sets):
        chans = sorted(chans)
        if len(set(chans)) != len(chans):
            raise ChannelRangeError(f"duplicate channel on node {node_id}: {chans}")
        for c in chans:
            if not 1 <= c <= channels_available:
                raise ChannelRangeError(
                    f"channel {c} on node {node_id} outside 1..{channels_available}"
                )
        norm.append(tuple(chans))
    return ChannelAssignment(channels_available, tuple(norm))


@dataclass(frozen=True)
class ValidityReport:
    topology_preserved: bool
    uncovered_links: tuple[Link, ...]
    multi_common_pairs: tuple[Link, ...]
    unassigned_radios: int


def validate(topology: Topology, ca: ChannelAssignment) -> ValidityReport:
    """Check topology preservation, multi-common pairs, and free radios."""
    for node_id, chans in enumerate(ca.sets):
        for c in chans:
            if not 1 <= c <= ca.channels_available:
                raise ChannelRangeError(
                    f"channel {c} on node {node_id} outside 1..{ca.channels_available}"
                )
    uncovered = []
    multi = []
    for link in topology.links:
        shared = ca.common(link)
        if not shared:
            uncovered.append(link)
        elif len(shared) >= 2:
            multi.append(link)
    unassigned = sum(
        topology.radios(n.id) - len(ca.sets[n.id]) for n in topology.nodes
    )
    return ValidityReport(
        topology_preserved=not uncovered,
        uncovered_links=tuple(uncovered),
        multi_common_pairs=tuple(multi),
        unassigned_radios=unassigned,
    )


def operating_channel(ca: ChannelAssignment, link: Link) -> int:
    """Lowest channel id shared by the link's endpoints."""
    shared = ca.common(link)
    if not shared:
        raise UncoveredLinkError(f"link {link} endpoints share no channel")
    return min(shared)


def save_assignment(ca: ChannelAssignment) -> str:
    doc = {
        "channels_available": ca.channels_available,
        "assignment": [
            {"node": node_id, "channels": list(chans)}
            for node_id, chans in enumerate(ca.sets)
        ],
    }
    return json.dumps(doc, indent=2) + "\n"


def load_assignment(text: str) -> ChannelAssignment:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise TopologyFormatError(f"assignment document is not valid JSON: {exc}") from exc
    try:
        cs_max = doc["channels_available"]
        entries = {e["node"]: e["channels"] for e in doc["assignment"]}
    except (KeyError, TypeError) as exc:
        raise TopologyFormatError("malformed assignment document") from exc
    if set(entries) != set(range(len(entries))):
        raise TopologyFormatError("assignment node ids must be 0..n-1")
    return assignment_from_sets(cs_max, [entries[i] for i in range(len(entries))])


def assignment_csv(ca: ChannelAssignment) -> str:
    lines = ["node,channels"]
    for node_id, chans in enumerate(ca.sets):
        lines.append(f"{node_id},{' '.join(str(c) for c in chans)}")
    return "\n".join(lines) + "\n"
