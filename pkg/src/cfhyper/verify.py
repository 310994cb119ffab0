"""Ground-truth checkers for colorings.

A coloring is conflict-free when every edge has a vertex whose color appears
exactly once inside that edge, proper when no edge is monochromatic, and
satisfies the strong condition when every edge of an r-uniform hypergraph
carries more than r/2 distinct colors (which forces a uniquely colored
vertex by pigeonhole).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .model import Hypergraph, HypergraphError


@dataclass(frozen=True)
class Coloring:
    """Total assignment of positive-integer colors to vertices 1..n."""

    colors: tuple[int, ...]

    def __post_init__(self) -> None:
        for v, c in enumerate(self.colors, start=1):
            if c < 1:
                raise HypergraphError(f"vertex {v} has non-positive color {c}")

    @property
    def palette(self) -> int:
        """Palette size: the largest color used (0 when there are no vertices)."""
        return max(self.colors, default=0)

    def color(self, v: int) -> int:
        return self.colors[v - 1]


def _check_lengths(h: Hypergraph, c: Coloring) -> None:
    if len(c.colors) != h.n:
        raise HypergraphError(
            f"coloring has {len(c.colors)} entries for {h.n} vertices")


def unique_color_witness(h: Hypergraph, c: Coloring, edge_index: int) -> int | None:
    """Smallest vertex of the edge whose color occurs exactly once in it."""
    _check_lengths(h, c)
    edge = h.edge(edge_index)
    counts = Counter(c.colors[v - 1] for v in edge)
    for v in edge:  # edges are sorted, so the first hit is the smallest id
        if counts[c.colors[v - 1]] == 1:
            return v
    return None


def is_conflict_free(h: Hypergraph, c: Coloring) -> list[int]:
    """Return the sorted indices of edges without a uniquely colored vertex.

    An empty list means the coloring is conflict-free.
    """
    _check_lengths(h, c)
    bad = []
    for idx, edge in enumerate(h.edges, start=1):
        counts = Counter(c.colors[v - 1] for v in edge)
        if 1 not in counts.values():
            bad.append(idx)
    return bad


def is_proper(h: Hypergraph, c: Coloring) -> list[int]:
    """Return the sorted indices of monochromatic edges (size-1 edges always are)."""
    _check_lengths(h, c)
    bad = []
    for idx, edge in enumerate(h.edges, start=1):
        first = c.colors[edge[0] - 1]
        if all(c.colors[v - 1] == first for v in edge):
            bad.append(idx)
    return bad


def strong_condition(h: Hypergraph, c: Coloring) -> list[int]:
    """Return the indices of edges with at most r/2 distinct colors.

    Only defined for r-uniform hypergraphs. An empty result implies the
    coloring is conflict-free: with more than r/2 distinct colors among r
    vertices, some color must appear exactly once.
    """
    _check_lengths(h, c)
    sizes = {len(e) for e in h.edges}
    if len(sizes) > 1:
        raise HypergraphError("strong condition requires a uniform hypergraph")
    bad = []
    for idx, edge in enumerate(h.edges, start=1):
        r = len(edge)
        distinct = len({c.colors[v - 1] for v in edge})
        if 2 * distinct <= r:
            bad.append(idx)
    return bad
