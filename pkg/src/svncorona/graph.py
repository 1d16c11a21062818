"""Immutable labeled graphs, subdivisions, and SVN coronas.

The subdivision S(G) inserts one new vertex into every edge of G.  The
subdivision-vertex neighbourhood corona of G (order n) and H takes S(G),
adds n disjoint copies of H, and joins every vertex of the i-th copy to
every inserted vertex adjacent to u_i in S(G).  Base vertices are never
joined to copies.

Vertex-id layout is fixed so colorings serialize portably:

    0 .. n-1                     base vertices u_i (original ids preserved)
    n .. n+e-1                   inserted vertices s_{i,j}, edges sorted (i, j)
    n+e + i*t + k                copy vertices v_{i,k}

Degrees in the corona are forced: d(u_i) = deg_G(u_i); every inserted vertex
has degree 2|V(H)| + 2; and d(v_{i,k}) = deg_G(u_i) + deg_H(v_k).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from .errors import ArityMismatch, EmptyOperand, UnknownLabel
from .families import FamilySpec

BASE = "u"
INSERTED = "s"
COPY = "v"


@dataclass(frozen=True, order=True)
class VertexLabel:
    """Role of a vertex in a subdivision or corona.

    kind "u": base vertex i of the left graph.
    kind "s": vertex inserted into edge (i, j); stored with i < j but
    ``inserted(j, i)`` resolves to the same label.
    kind "v": copy k of the right graph attached for base vertex i.
    """

    kind: str
    i: int
    j: int = -1

    def __str__(self) -> str:
        if self.kind == BASE:
            return f"u:{self.i}"
        return f"{self.kind}:{self.i}:{self.j}"


def base(i: int) -> VertexLabel:
    return VertexLabel(BASE, i)


def inserted(i: int, j: int) -> VertexLabel:
    if i == j:
        raise UnknownLabel(f"inserted vertex needs two distinct endpoints, got ({i}, {j})")
    return VertexLabel(INSERTED, min(i, j), max(i, j))


def copy(i: int, k: int) -> VertexLabel:
    return VertexLabel(COPY, i, k)


def parse_label(text: str) -> VertexLabel:
    parts = text.split(":")
    if parts[0] == BASE and len(parts) == 2:
        return base(int(parts[1]))
    if parts[0] == INSERTED and len(parts) == 3:
        return inserted(int(parts[1]), int(parts[2]))
    if parts[0] == COPY and len(parts) == 3:
        return copy(int(parts[1]), int(parts[2]))
    raise UnknownLabel(f"cannot parse vertex label {text!r}")


@dataclass(frozen=True)
class Provenance:
    op: str  # "family" | "subdivision" | "svn_corona"
    left: Optional[FamilySpec] = None
    right: Optional[FamilySpec] = None

    def to_json(self) -> dict:
        out: dict = {"op": self.op}
        if self.left is not None:
            out["left"] = {"kind": self.left.kind, "size": self.left.size}
        if self.right is not None:
            out["right"] = {"kind": self.right.kind, "size": self.right.size}
        return out

    @staticmethod
    def from_json(data: dict) -> "Provenance":
        def spec(key):
            raw = data.get(key)
            return FamilySpec(raw["kind"], raw["size"]) if raw else None

        return Provenance(data["op"], spec("left"), spec("right"))


class Graph:
    """Immutable simple graph with sorted adjacency and optional labels."""

    __slots__ = ("order", "_adj", "labels", "provenance", "_label_ids")

    def __init__(
        self,
        order: int,
        edges: Iterable[tuple[int, int]],
        labels: Optional[tuple[VertexLabel, ...]] = None,
        provenance: Optional[Provenance] = None,
    ):
        adj: list[set[int]] = [set() for _ in range(order)]
        for a, b in edges:
            if a == b:
                raise ArityMismatch(f"self-loop on vertex {a}")
            if not (0 <= a < order and 0 <= b < order):
                raise ArityMismatch(f"edge ({a}, {b}) outside 0..{order - 1}")
            adj[a].add(b)
            adj[b].add(a)
        self.order = order
        self._adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(s)) for s in adj)
        self.labels = labels
        self.provenance = provenance
        self._label_ids = (
            {lab: v for v, lab in enumerate(labels)} if labels is not None else None
        )

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def degrees(self) -> list[int]:
        return [len(nbrs) for nbrs in self._adj]

    def max_degree(self) -> int:
        return max((len(nbrs) for nbrs in self._adj), default=0)

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as (a, b) with a < b, in lexicographic order."""
        for a in range(self.order):
            for b in self._adj[a]:
                if b > a:
                    yield (a, b)

    @property
    def num_edges(self) -> int:
        return sum(len(nbrs) for nbrs in self._adj) // 2

    def has_edge(self, a: int, b: int) -> bool:
        return b in self._adj[a]

    def vertex_of(self, label: VertexLabel) -> int:
        if self._label_ids is None:
            raise UnknownLabel("graph carries no labels")
        try:
            return self._label_ids[label]
        except KeyError:
            raise UnknownLabel(f"no vertex labeled {label}") from None

    def label_of(self, v: int) -> VertexLabel:
        if self.labels is None:
            raise UnknownLabel("graph carries no labels")
        return self.labels[v]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.order == other.order
            and self._adj == other._adj
            and self.labels == other.labels
        )

    def __hash__(self):
        return hash((self.order, self._adj))

    def __repr__(self) -> str:
        return f"Graph(order={self.order}, edges={self.num_edges})"

    # -- serialization ---------------------------------------------------

    def to_json(self) -> dict:
        out: dict = {
            "order": self.order,
            "edges": [list(e) for e in self.edges()],
        }
        if self.labels is not None:
            out["labels"] = {str(v): str(lab) for v, lab in enumerate(self.labels)}
        if self.provenance is not None:
            out["provenance"] = self.provenance.to_json()
        return out

    @staticmethod
    def from_json(data: dict) -> "Graph":
        labels = None
        if "labels" in data:
            raw = data["labels"]
            labels = tuple(parse_label(raw[str(v)]) for v in range(data["order"]))
        prov = Provenance.from_json(data["provenance"]) if "provenance" in data else None
        return Graph(data["order"], [tuple(e) for e in data["edges"]], labels, prov)

    def dump(self, path) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(self.to_json(), fh, indent=1, sort_keys=True)
            fh.write("\n")

    @staticmethod
    def load(path) -> "Graph":
        with open(path, encoding="utf-8") as fh:
            return Graph.from_json(json.load(fh))


def build_family(spec: FamilySpec) -> Graph:
    """Canonical graph of a family spec (validated by the spec itself)."""
    return Graph(
        spec.order,
        spec.edge_list(),
        labels=tuple(base(i) for i in range(spec.order)),
        provenance=Provenance("family", spec),
    )


def subdivision(g: Graph) -> Graph:
    """Insert one new vertex into every edge; original ids are preserved."""
    n = g.order
    edge_list = list(g.edges())
    labels = [base(i) for i in range(n)]
    edges: list[tuple[int, int]] = []
    for idx, (a, b) in enumerate(edge_list):
        s = n + idx
        labels.append(inserted(a, b))
        edges.append((a, s))
        edges.append((s, b))
    prov = Provenance("subdivision", g.provenance.left if g.provenance else None)
    return Graph(n + len(edge_list), edges, tuple(labels), prov)


def svn_corona(g: Graph, h: Graph) -> Graph:
    """Subdivision-vertex neighbourhood corona of g and h.

    Copy i is fully joined to the inserted vertices on edges at u_i; when g
    has no edges the result degenerates to g plus disjoint copies of h.
    """
    if g.order == 0 or h.order == 0:
        raise EmptyOperand("corona operands must have at least one vertex")
    n, t = g.order, h.order
    edge_list = list(g.edges())
    e = len(edge_list)
    labels = [base(i) for i in range(n)]
    edges: list[tuple[int, int]] = []

    inserted_at: list[list[int]] = [[] for _ in range(n)]
    for idx, (a, b) in enumerate(edge_list):
        s = n + idx
        labels.append(inserted(a, b))
        edges.append((a, s))
        edges.append((s, b))
        inserted_at[a].append(s)
        inserted_at[b].append(s)

    copy_base = n + e
    for i in range(n):
        offset = copy_base + i * t
        for k in range(t):
            labels.append(copy(i, k))
        for a, b in h.edges():
            edges.append((offset + a, offset + b))
        for s in inserted_at[i]:
            for k in range(t):
                edges.append((s, offset + k))

    prov = Provenance(
        "svn_corona",
        g.provenance.left if g.provenance else None,
        h.provenance.left if h.provenance else None,
    )
    return Graph(n + e + n * t, edges, tuple(labels), prov)


def corona_from_specs(left: FamilySpec, right: FamilySpec) -> Graph:
    return svn_corona(build_family(left), build_family(right))


def corona_degree(g: Graph, h: Graph, label: VertexLabel) -> int:
    """Closed-form degree of a labeled vertex in svn_corona(g, h).

    Computed without building the corona, as an independent check against
    constructed adjacency: base keeps its g-degree, inserted vertices get
    2|V(H)| + 2, and copies add the g-degree of their anchor to their
    h-degree.
    """
    if label.kind == BASE:
        if not 0 <= label.i < g.order:
            raise UnknownLabel(f"{label} not in corona")
        return g.degree(label.i)
    if label.kind == INSERTED:
        if not g.has_edge(label.i, label.j):
            raise UnknownLabel(f"{label} not in corona: ({label.i}, {label.j}) is not an edge")
        return 2 * h.order + 2
    if label.kind == COPY:
        if not (0 <= label.i < g.order and 0 <= label.j < h.order):
            raise UnknownLabel(f"{label} not in corona")
        return g.degree(label.i) + h.degree(label.j)
    raise UnknownLabel(f"unknown label kind {label.kind!r}")


class CoronaIndex:
    """Id arithmetic for the fixed corona layout of ``svn_corona(g, h)``."""

    def __init__(self, g: Graph, h: Graph):
        self.n = g.order
        self.t = h.order
        self.e = g.num_edges
        self._edge_ids = {edge: self.n + idx for idx, edge in enumerate(g.edges())}
        self._copy_base = self.n + self.e

    def base(self, i: int) -> int:
        return i

    def inserted(self, i: int, j: int) -> int:
        key = (min(i, j), max(i, j))
        try:
            return self._edge_ids[key]
        except KeyError:
            raise UnknownLabel(f"no inserted vertex for non-edge {key}") from None

    def has_inserted(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self._edge_ids

    def copy(self, i: int, k: int) -> int:
        return self._copy_base + i * self.t + k

    def copy_block(self, i: int) -> range:
        start = self._copy_base + i * self.t
        return range(start, start + self.t)
