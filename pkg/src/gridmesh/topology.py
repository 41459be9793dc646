"""Grid mesh topologies: construction, neighbor queries, JSON round-trip.

Nodes are numbered row-major starting at 0. Links join only horizontally
or vertically adjacent grid positions and are stored as (low, high) id
pairs.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import InvalidSpecError, TopologyFormatError, UnknownNodeError

Link = tuple[int, int]

DEFAULT_SPACING_M = 250.0


@dataclass(frozen=True)
class GridSpec:
    """Parameters for building a grid topology.

    ``radios`` is either a single int applied to every node or a mapping
    from node id to radio count.
    """

    rows: int
    cols: int
    radios: int | dict[int, int] = 2
    channels: int = 3
    spacing_m: float = DEFAULT_SPACING_M

    def radio_count(self, node_id: int) -> int:
        if isinstance(self.radios, dict):
            return self.radios.get(node_id, 2)
        return self.radios


@dataclass(frozen=True)
class Node:
    id: int
    row: int
    col: int
    radios: int


@dataclass(frozen=True)
class Topology:
    rows: int
    cols: int
    spacing_m: float
    channels: int
    nodes: tuple[Node, ...]
    links: tuple[Link, ...]
    _adjacency: dict[int, tuple[int, ...]] = field(
        default=None, compare=False, repr=False
    )

    @property
    def node_count(self) -> int:
        return len(self.nodes)

    def radios(self, node_id: int) -> int:
        return self.nodes[node_id].radios

    def max_radios(self) -> int:
        return max(n.radios for n in self.nodes)

    def position(self, node_id: int) -> tuple[int, int]:
        n = self.nodes[node_id]
        return (n.row, n.col)

    def has_node(self, node_id) -> bool:
        return isinstance(node_id, int) and 0 <= node_id < len(self.nodes)


def _neighbor_ids(rows: int, cols: int, node_id: int) -> tuple[int, ...]:
    # Canonical order: east, south, west, north.
    r, c = divmod(node_id, cols)
    out = []
    if c + 1 < cols:
        out.append(node_id + 1)
    if r + 1 < rows:
        out.append(node_id + cols)
    if c > 0:
        out.append(node_id - 1)
    if r > 0:
        out.append(node_id - cols)
    return tuple(out)


def make_grid(spec: GridSpec) -> Topology:
    """Build a rows x cols grid with 4-neighborhood links."""
    if spec.rows < 1 or spec.cols < 1:
        raise InvalidSpecError(f"grid dimensions must be >= 1, got {spec.rows}x{spec.cols}")
    if spec.channels < 1:
        raise InvalidSpecError("channel count must be >= 1")
    nodes = []
    for nid in range(spec.rows * spec.cols):
        r, c = divmod(nid, spec.cols)
        radios = spec.radio_count(nid)
        if radios < 1:
            raise InvalidSpecError(f"node {nid} has radio count {radios} < 1")
        nodes.append(Node(nid, r, c, radios))
    max_r = max(n.radios for n in nodes)
    if spec.channels < max_r:
        raise InvalidSpecError(
            f"channel count {spec.channels} < max radios per node {max_r}"
        )
    links = []
    for n in nodes:
        if n.col + 1 < spec.cols:
            links.append((n.id, n.id + 1))
        if n.row + 1 < spec.rows:
            links.append((n.id, n.id + spec.cols))
    links.sort()
    adjacency = {
        n.id: _neighbor_ids(spec.rows, spec.cols, n.id) for n in nodes
    }
    return Topology(
        rows=spec.rows,
        cols=spec.cols,
        spacing_m=spec.spacing_m,
        channels=spec.channels,
        nodes=tuple(nodes),
        links=tuple(links),
        _adjacency=adjacency,
    )


def neighbors(topology: Topology, node_id: int) -> list[int]:
    """Adjacent node ids in east, south, west, north order."""
    if not topology.has_node(node_id):
        raise UnknownNodeError(f"no node {node_id!r} in topology")
    if topology._adjacency is not None:
        return list(topology._adjacency[node_id])
    return list(_neighbor_ids(topology.rows, topology.cols, node_id))


def save_topology(topology: Topology) -> str:
    """Serialize to the JSON document format (stable key order)."""
    doc = {
        "rows": topology.rows,
        "cols": topology.cols,
        "spacing_m": topology.spacing_m,
        "channels": topology.channels,
        "nodes": [
            {"id": n.id, "row": n.row, "col": n.col, "radios": n.radios}
            for n in topology.nodes
        ],
        "links": [list(l) for l in topology.links],
    }
    return json.dumps(doc, indent=2) + "\n"


def load_topology(text: str) -> Topology:
    """Parse and validate a topology JSON document."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise TopologyFormatError(f"topology document is not valid JSON: {exc}") from exc
    for key in ("rows", "cols", "channels", "nodes", "links"):
        if key not in doc:
            raise TopologyFormatError(f"missing field {key!r}")
    rows, cols = doc["rows"], doc["cols"]
    if not (isinstance(rows, int) and isinstance(cols, int) and rows >= 1 and cols >= 1):
        raise TopologyFormatError(f"bad dimensions rows={rows!r} cols={cols!r}")
    spacing = float(doc.get("spacing_m", DEFAULT_SPACING_M))
    channels = doc["channels"]

    nodes = []
    for entry in doc["nodes"]:
        try:
            nodes.append(Node(entry["id"], entry["row"], entry["col"], entry["radios"]))
        except (KeyError, TypeError) as exc:
            raise TopologyFormatError(f"bad node entry {entry!r}") from exc
    nodes.sort(key=lambda n: n.id)
    if len(nodes) != rows * cols:
        raise TopologyFormatError(
            f"expected {rows * cols} nodes, document has {len(nodes)}"
        )
    for n in nodes:
        if n.id != n.row * cols + n.col:
            raise TopologyFormatError(
                f"node {n.id} position ({n.row},{n.col}) is not row-major consistent"
            )
        if n.radios < 1:
            raise TopologyFormatError(f"node {n.id} has radios {n.radios} < 1")
    if channels < max(n.radios for n in nodes):
        raise TopologyFormatError("channel count below max radios per node")

    links = []
    seen = set()
    for pair in doc["links"]:
        if not (isinstance(pair, list) and len(pair) == 2):
            raise TopologyFormatError(f"bad link entry {pair!r}")
        a, b = pair
        if a >= b:
            raise TopologyFormatError(f"link {pair!r} must be ordered id_low < id_high")
        if not (0 <= a < len(nodes) and 0 <= b < len(nodes)):
            raise TopologyFormatError(f"link {pair!r} references unknown node")
        ra, ca = divmod(a, cols)
        rb, cb = divmod(b, cols)
        if abs(ra - rb) + abs(ca - cb) != 1:
            raise TopologyFormatError(f"link {pair!r} is not a 4-neighborhood edge")
        if (a, b) in seen:
            raise TopologyFormatError(f"duplicate link {pair!r}")
        seen.add((a, b))
        links.append((a, b))
    expected = rows * (cols - 1) + cols * (rows - 1)
    if len(links) != expected:
        raise TopologyFormatError(
            f"expected {expected} links for {rows}x{cols} grid, document has {len(links)}"
        )
    links.sort()
    adjacency = {n.id: _neighbor_ids(rows, cols, n.id) for n in nodes}
    return Topology(
        rows=rows,
        cols=cols,
        spacing_m=spacing,
        channels=channels,
        nodes=tuple(nodes),
        links=tuple(links),
        _adjacency=adjacency,
    )
