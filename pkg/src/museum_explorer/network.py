"""Network graph model: artifacts connected through shared dimensions.

Two edge semantics:

* hub -- bipartite: one synthetic node per (dimension, value), each
  artifact linked to the values it carries. Edge count stays linear in
  the collection size.
* pairwise -- artifact-to-artifact edges for every shared value. Reads
  literally as "connections between artifacts" but grows quadratically.

"Unknown" never creates a connection: sharing absence of data is not a
relationship.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .catalog import UNKNOWN, Catalog, Dimension


class GraphMode(Enum):
    HUB = "hub"
    PAIRWISE = "pairwise"


class NodeKind(Enum):
    ARTIFACT = "artifact"
    DIMENSION_VALUE = "dimension_value"


class EmptyDims(ValueError):
    pass


@dataclass(frozen=True)
class Node:
    id: str
    kind: NodeKind
    label: str
    weight: int = 1
    dimension: Dimension | None = None


@dataclass(frozen=True)
class Edge:
    src: str
    dst: str
    edge_type: Dimension


@dataclass
class NetworkGraphModel:
    mode: GraphMode
    nodes: list[Node] = field(default_factory=list)
    edges: list[Edge] = field(default_factory=list)


def value_node_id(d: Dimension, value: str) -> str:
    return f"dim:{d.value}:{value}"


def build_network(cat: Catalog, dims, mode: GraphMode) -> NetworkGraphModel:
    """Build the graph over the given dimension subset.

    Node and edge ordering is deterministic: artifact nodes in catalog
    order, value nodes grouped by dimension in first-seen value order.
    """
    dims = list(dict.fromkeys(dims))
    if not dims:
        raise EmptyDims("at least one dimension is required")

    nodes = [Node(id=r.id, kind=NodeKind.ARTIFACT, label=r.title) for r in cat.records]
    edges = []

    if mode is GraphMode.HUB:
        value_counts = {}  # (dim, value) -> artifact count
        for rec in cat.records:
            for d in dims:
                value = rec.dims[d]
                if value == UNKNOWN:
                    continue
                key = (d, value)
                value_counts[key] = value_counts.get(key, 0) + 1
                edges.append(Edge(src=rec.id, dst=value_node_id(d, value), edge_type=d))
        for (d, value), count in value_counts.items():
            nodes.append(
                Node(
                    id=value_node_id(d, value),
                    kind=NodeKind.DIMENSION_VALUE,
                    label=value,
                    weight=count,
                    dimension=d,
                )
            )
    else:
        for i, a in enumerate(cat.records):
            for b in cat.records[i + 1 :]:
                for d in dims:
                    if a.dims[d] == b.dims[d] != UNKNOWN:
                        edges.append(Edge(src=a.id, dst=b.id, edge_type=d))

    return NetworkGraphModel(mode=mode, nodes=nodes, edges=edges)


def graph_stats(g: NetworkGraphModel):
    per_type = {d.value: 0 for d in Dimension}
    for e in g.edges:
        per_type[e.edge_type.value] += 1
    degree = {n.id: 0 for n in g.nodes}
    for e in g.edges:
        degree[e.src] += 1
        degree[e.dst] += 1
    histogram = {}
    for deg in degree.values():
        histogram[deg] = histogram.get(deg, 0) + 1
    return {
        "node_count": len(g.nodes),
        "edge_count": len(g.edges),
        "edge_types": per_type,
        "degree_histogram": dict(sorted(histogram.items())),
    }
