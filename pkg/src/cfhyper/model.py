"""Core hypergraph data model: construction, statistics, duality, vertex removal.

Vertices are dense 1-based integers. Edges are stored as strictly sorted
tuples; the edge list is ordered and may contain duplicates (multiset
semantics), so 2-uniform hypergraphs double as multigraphs. All values are
immutable and every operation is a pure function.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence


class HypergraphError(ValueError):
    """Raised when data violates a structural invariant of the model."""


@dataclass(frozen=True)
class Hypergraph:
    """A hypergraph on vertices 1..n with an ordered multiset of edges.

    Invariants: every vertex id lies in 1..n, no vertex repeats inside an
    edge, and every edge is nonempty. Edge indices are 1-based positions in
    the edge list.
    """

    n: int
    edges: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise HypergraphError(f"vertex count must be >= 0, got {self.n}")
        for idx, edge in enumerate(self.edges, start=1):
            if not edge:
                raise HypergraphError(f"edge {idx} is empty")
            prev = 0
            for v in edge:
                if not 1 <= v <= self.n:
                    raise HypergraphError(
                        f"edge {idx} contains vertex {v}, outside 1..{self.n}")
                if v == prev:
                    raise HypergraphError(f"edge {idx} repeats vertex {v}")
                if v < prev:
                    raise HypergraphError(f"edge {idx} is not sorted")
                prev = v

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Hypergraph":
        """Build a hypergraph, sorting each edge on ingest."""
        return cls(n, tuple(tuple(sorted(e)) for e in edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    def edge(self, index: int) -> tuple[int, ...]:
        """Return the edge with 1-based ``index``."""
        if not 1 <= index <= self.m:
            raise IndexError(f"edge index {index} outside 1..{self.m}")
        return self.edges[index - 1]

    def vertex_degrees(self) -> list[int]:
        """Incident-edge count per vertex (parallel edges count separately)."""
        deg = [0] * (self.n + 1)
        for edge in self.edges:
            for v in edge:
                deg[v] += 1
        return deg[1:]

    def incident_edges(self) -> list[list[int]]:
        """For each vertex 1..n, the sorted list of 1-based incident edge indices.

        Entry 0 is a placeholder so the list can be indexed by vertex id.
        """
        inc: list[list[int]] = [[] for _ in range(self.n + 1)]
        for idx, edge in enumerate(self.edges, start=1):
            for v in edge:
                inc[v].append(idx)
        return inc

    def is_graph(self) -> bool:
        """True when every edge has exactly two vertices."""
        return all(len(e) == 2 for e in self.edges)


@dataclass(frozen=True)
class VertexRole:
    """Structural label attached to a vertex of a generated construction."""

    kind: str  # one of 'U', 'V', 'M', 'u', 'w', 'plain'
    copy: int = 0


PLAIN = VertexRole("plain")


@dataclass(frozen=True)
class VertexRoleMap:
    """Per-vertex roles for generated instances; empty for loaded ones."""

    roles: tuple[VertexRole, ...] = ()

    def role(self, v: int) -> VertexRole:
        return self.roles[v - 1] if 1 <= v <= len(self.roles) else PLAIN

    def vertices(self, kind: str, copy: int | None = None) -> list[int]:
        """All vertices carrying ``kind`` (and ``copy``, when given)."""
        return [
            v
            for v, r in enumerate(self.roles, start=1)
            if r.kind == kind and (copy is None or r.copy == copy)
        ]


@dataclass(frozen=True)
class HypergraphStats:
    """Derived statistics of a hypergraph.

    ``max_edge_degree`` counts, for the worst edge, the other edges sharing
    at least one vertex with it. ``uniform_r`` / ``regular_a`` are None when
    edge sizes / vertex degrees are not all equal (or there is nothing to
    measure).
    """

    n: int
    m: int
    max_degree: int
    max_edge_degree: int
    uniform_r: int | None
    regular_a: int | None
    connected: bool


def primal_adjacency(h: Hypergraph) -> list[list[int]]:
    """Vertex adjacency of the primal graph: co-membership in some edge.

    Entry 0 is a placeholder; entry v is the sorted neighbor list of v.
    """
    adj: list[set[int]] = [set() for _ in range(h.n + 1)]
    for edge in h.edges:
        for i, v in enumerate(edge):
            for w in edge[i + 1:]:
                adj[v].add(w)
                adj[w].add(v)
    return [sorted(s) for s in adj]


def _star_adjacency(h: Hypergraph) -> list[list[int]]:
    # spanning star per edge: same reachability as the primal graph,
    # linear size even for huge edges
    adj: list[set[int]] = [set() for _ in range(h.n + 1)]
    for edge in h.edges:
        anchor = edge[0]
        for v in edge[1:]:
            adj[anchor].add(v)
            adj[v].add(anchor)
    return [sorted(s) for s in adj]


def _connected(h: Hypergraph) -> bool:
    if h.n <= 1:
        return True
    adj = _star_adjacency(h)
    seen = [False] * (h.n + 1)
    queue: deque[int] = deque([1])
    seen[1] = True
    count = 1
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if not seen[w]:
                seen[w] = True
                count += 1
                queue.append(w)
    return count == h.n


def stats(h: Hypergraph) -> HypergraphStats:
    """Compute size, degree, uniformity, regularity, and connectivity data."""
    degrees = h.vertex_degrees()
    max_degree = max(degrees, default=0)

    inc = h.incident_edges()
    max_edge_degree = 0
    for idx, edge in enumerate(h.edges, start=1):
        touching: set[int] = set()
        for v in edge:
            touching.update(inc[v])
        touching.discard(idx)
        if len(touching) > max_edge_degree:
            max_edge_degree = len(touching)

    sizes = {len(e) for e in h.edges}
    uniform_r = sizes.pop() if len(sizes) == 1 else None
    regular_a = degrees[0] if h.n > 0 and len(set(degrees)) == 1 else None

    return HypergraphStats(
        n=h.n,
        m=h.m,
        max_degree=max_degree,
        max_edge_degree=max_edge_degree,
        uniform_r=uniform_r,
        regular_a=regular_a,
        connected=_connected(h),
    )


def dual(h: Hypergraph) -> Hypergraph:
    """Swap vertices and edges through incidence.

    Dual vertex i corresponds to edge i of the input; for every input vertex
    v there is one dual edge listing the indices of edges containing v. An
    a-regular r-uniform input yields an r-regular a-uniform output, and
    ``dual(dual(h)) == h`` whenever no vertex is isolated.
    """
    inc = h.incident_edges()
    for v in range(1, h.n + 1):
        if not inc[v]:
            raise HypergraphError(
                f"vertex {v} has degree 0; dual would contain an empty edge")
    return Hypergraph(h.m, tuple(tuple(inc[v]) for v in range(1, h.n + 1)))


def remove_vertices(
    h: Hypergraph, removed: Iterable[int]
) -> tuple[Hypergraph, dict[int, int]]:
    """Delete a vertex set, shrink every edge, and drop emptied edges.

    Returns the shrunk hypergraph together with the old-id -> new-id map for
    the surviving vertices (which are relabeled densely, order preserved).
    """
    removed_set = set(removed)
    for v in removed_set:
        if not 1 <= v <= h.n:
            raise HypergraphError(f"cannot remove vertex {v}, outside 1..{h.n}")
    relabel: dict[int, int] = {}
    for v in range(1, h.n + 1):
        if v not in removed_set:
            relabel[v] = len(relabel) + 1
    new_edges = []
    for edge in h.edges:
        shrunk = tuple(relabel[v] for v in edge if v not in removed_set)
        if shrunk:
            new_edges.append(shrunk)
    return Hypergraph(len(relabel), tuple(new_edges)), relabel
