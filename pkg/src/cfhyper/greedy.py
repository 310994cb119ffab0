"""Greedy conflict-free coloring via strongly independent set peeling.

A vertex set is strongly independent when every edge contains at most one
of its members. Peeling a maximal such set together with all incident
edges lowers the maximum degree by at least one, so repeated peeling colors
any hypergraph with at most max_degree + 1 colors, each layer getting one
fresh color.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .model import Hypergraph, HypergraphError
from .verify import Coloring


@dataclass(frozen=True)
class StronglyIndependentSet:
    """Vertices meeting every edge of the host at most once."""

    members: frozenset[int]


def maximal_strongly_independent_set(h: Hypergraph) -> StronglyIndependentSet:
    """Greedy maximal strongly independent set, built by ascending vertex id."""
    members = _greedy_layer(h.m, list(range(1, h.n + 1)), h.incident_edges())
    return StronglyIndependentSet(frozenset(members))


def _greedy_layer(
    m: int,
    alive_vertices: list[int],
    incident: list[list[int]],
    alive_edge: list[bool] | None = None,
) -> list[int]:
    """One greedy peel over the still-alive part of the hypergraph."""
    taken = [0] * (m + 1)  # members already inside each edge
    members = []
    for v in alive_vertices:
        if all(
            taken[e] == 0
            for e in incident[v]
            if alive_edge is None or alive_edge[e]
        ):
            members.append(v)
            for e in incident[v]:
                if alive_edge is None or alive_edge[e]:
                    taken[e] += 1
    return members


def _peel_layers(
    h: Hypergraph, stop_at_degree: int
) -> tuple[list[list[int]], list[int], list[bool]]:
    """Peel strongly independent layers until max degree <= stop_at_degree.

    Returns (layers, surviving vertices, surviving edge flags). Each layer
    removal also removes every edge incident to the layer; every removed
    edge contains exactly one layer member, which the fresh layer color
    then makes uniquely colored.
    """
    incident = h.incident_edges()
    alive_vertex = [True] * (h.n + 1)
    alive_edge = [True] * (h.m + 1)
    alive_vertices = list(range(1, h.n + 1))

    def max_degree() -> int:
        best = 0
        for v in alive_vertices:
            d = sum(1 for e in incident[v] if alive_edge[e])
            if d > best:
                best = d
        return best

    layers: list[list[int]] = []
    while alive_vertices and max_degree() > stop_at_degree:
        layer = _greedy_layer(h.m, alive_vertices, incident, alive_edge)
        layers.append(layer)
        for v in layer:
            alive_vertex[v] = False
            for e in incident[v]:
                alive_edge[e] = False
        alive_vertices = [v for v in alive_vertices if alive_vertex[v]]
    return layers, alive_vertices, alive_edge


def greedy_cf_coloring(h: Hypergraph) -> Coloring:
    """Conflict-free coloring with at most max_degree + 1 colors.

    Layer i of the peeling gets color i; the final layers realize the
    disjoint-edge base case (one designated vertex per edge, then the rest).
    """
    incident = h.incident_edges()
    alive_edge = [True] * (h.m + 1)
    alive_vertices = list(range(1, h.n + 1))
    colors = [0] * (h.n + 1)
    layer_color = 0
    while alive_vertices:
        layer_color += 1
        layer = _greedy_layer(h.m, alive_vertices, incident, alive_edge)
        layer_set = set(layer)
        for v in layer:
            colors[v] = layer_color
            for e in incident[v]:
                alive_edge[e] = False
        alive_vertices = [v for v in alive_vertices if v not in layer_set]
    return Coloring(tuple(colors[1:]))


def peel_then_solve(
    h: Hypergraph,
    target_degree: int,
    base: Callable[[Hypergraph], Coloring],
) -> Coloring:
    """Peel layers until max degree <= target_degree, then defer to ``base``.

    ``base`` must color any hypergraph of max degree <= target_degree with
    at most target_degree colors; each peeled layer then gets one fresh
    color on top, for max(max_degree(h), target_degree) colors in total.
    The peeled part of the instance is passed to ``base`` with surviving
    vertices relabeled densely.
    """
    if target_degree < 0:
        raise HypergraphError(f"target degree must be >= 0, got {target_degree}")
    layers, kept_vertices, alive_edge = _peel_layers(h, target_degree)

    relabel = {v: i + 1 for i, v in enumerate(kept_vertices)}
    rest_edges = tuple(
        tuple(relabel[v] for v in edge)
        for idx, edge in enumerate(h.edges, start=1)
        if alive_edge[idx]
    )
    rest = Hypergraph(len(kept_vertices), rest_edges)
    base_coloring = base(rest)
    allowed = max(target_degree, 1) if rest.n else 0
    if base_coloring.palette > allowed:
        raise HypergraphError(
            f"base solver used {base_coloring.palette} colors, "
            f"more than the guaranteed {allowed}")

    colors = [0] * (h.n + 1)
    for v in kept_vertices:
        colors[v] = base_coloring.colors[relabel[v] - 1]
    next_free = max(base_coloring.palette, 0)
    for layer in reversed(layers):
        next_free += 1
        for v in layer:
            colors[v] = next_free
    return Coloring(tuple(colors[1:]))
