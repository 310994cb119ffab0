"""Generators for the counterexample families and small benchmark instances.

The g_tr family (with its h_block and g_prime stages) produces, for odd t
and odd r >= (t+1)(t+2), an r-regular graph carrying no {t, r-t}-factor.
The remaining generators cover complete graphs, odd cycles, the two
gap families whose conflict-free chromatic number reaches max_degree + 1
while the proper one stays at 2, and the 3-regular mixed-size gadget that
needs 4 colors.

Vertex layout is contiguous per copy, with structural roles recorded in a
VertexRoleMap so tests and the CLI can locate hubs, partite sets, and
matched vertices by role rather than by id arithmetic.
"""

from __future__ import annotations

from .model import Hypergraph, HypergraphError, VertexRole, VertexRoleMap

KINDS = (
    "g_tr",
    "h_block",
    "g_prime",
    "complete_graph",
    "odd_cycle",
    "gap_nested",
    "two_cliques",
    "k4e_gadget",
)


def _check_tr(t: int, r: int) -> None:
    if t < 1 or t % 2 == 0:
        raise HypergraphError(f"t must be a positive odd integer, got {t}")
    if r % 2 == 0:
        raise HypergraphError(f"r must be odd, got {r}")
    if r < (t + 1) * (t + 2):
        raise HypergraphError(
            f"r must be at least (t+1)(t+2) = {(t + 1) * (t + 2)}, got {r}")


def _h_block_edges(
    t: int, r: int, base: int, hub: int, copy: int,
    roles: list[VertexRole],
) -> list[tuple[int, int]]:
    """Edges of one building block, vertices base+1..base+2r-1 plus ``hub``.

    The block is a complete bipartite graph between r-1 left and r right
    vertices, a matching on the first r-t-2 right vertices, and t+2 edges
    from the remaining right vertices to the hub. Every non-hub vertex ends
    with degree r; the hub collects degree t+2 per block.
    """
    left = [base + i for i in range(1, r)]  # r-1 vertices
    right = [base + (r - 1) + i for i in range(1, r + 1)]  # r vertices
    matched = right[: r - t - 2]
    hubbed = right[r - t - 2:]
    for v in left:
        roles[v] = VertexRole("U", copy)
    for v in matched:
        roles[v] = VertexRole("M", copy)
    for v in hubbed:
        roles[v] = VertexRole("V", copy)

    edges = [(u, v) for u in left for v in right]
    edges.extend((matched[i], matched[i + 1]) for i in range(0, len(matched), 2))
    edges.extend((v, hub) for v in hubbed)
    return edges


def build_h_block(t: int, r: int) -> tuple[Hypergraph, VertexRoleMap]:
    """The single building block: 2r vertices, r(r-1) + (r-t-2)/2 + t+2 edges."""
    _check_tr(t, r)
    n = 2 * r
    hub = n
    roles = [VertexRole("plain")] * (n + 1)
    roles[hub] = VertexRole("u", 1)
    edges = _h_block_edges(t, r, 0, hub, 1, roles)
    h = Hypergraph.from_edges(n, edges)
    return h, VertexRoleMap(tuple(roles[1:]))


def build_g_prime(t: int, r: int) -> tuple[Hypergraph, VertexRoleMap]:
    """t+1 blocks sharing one hub vertex w: the hub reaches degree (t+1)(t+2)."""
    _check_tr(t, r)
    block_size = 2 * r - 1  # block vertices other than the shared hub
    n = (t + 1) * block_size + 1
    hub = n
    roles = [VertexRole("plain")] * (n + 1)
    roles[hub] = VertexRole("w", 1)
    edges: list[tuple[int, int]] = []
    for copy in range(1, t + 2):
        edges.extend(
            _h_block_edges(t, r, (copy - 1) * block_size, hub, copy, roles))
    h = Hypergraph.from_edges(n, edges)
    return h, VertexRoleMap(tuple(roles[1:]))


def build_g_tr(t: int, r: int) -> tuple[Hypergraph, VertexRoleMap]:
    """The full r-regular family member without a {t, r-t}-factor.

    delta+1 disjoint copies of the hub fan (delta = r - (t+1)(t+2)) plus a
    complete graph on the hub vertices, which lifts every hub to degree r.
    """
    _check_tr(t, r)
    delta = r - (t + 1) * (t + 2)
    gp, gp_roles = build_g_prime(t, r)
    copies = delta + 1
    n = copies * gp.n
    roles = [VertexRole("plain")] * (n + 1)
    edges: list[tuple[int, int]] = []
    hubs = []
    for c in range(copies):
        offset = c * gp.n
        edges.extend(
            (offset + u, offset + v) for (u, v) in gp.edges)
        for v in range(1, gp.n + 1):
            src = gp_roles.role(v)
            if src.kind == "w":
                roles[offset + v] = VertexRole("w", c + 1)
                hubs.append(offset + v)
            else:
                roles[offset + v] = VertexRole(
                    src.kind, src.copy + c * (t + 1))
    edges.extend(
        (hubs[i], hubs[j])
        for i in range(len(hubs))
        for j in range(i + 1, len(hubs)))
    h = Hypergraph.from_edges(n, edges)
    return h, VertexRoleMap(tuple(roles[1:]))


def complete_graph(n: int) -> Hypergraph:
    """K_n as a 2-uniform hypergraph, edges in lexicographic order."""
    if n < 1:
        raise HypergraphError(f"complete graph needs n >= 1, got {n}")
    return Hypergraph.from_edges(
        n, [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)])


def odd_cycle(n: int) -> Hypergraph:
    """C_n for odd n >= 3; conflict-free chromatic number 3."""
    if n < 3 or n % 2 == 0:
        raise HypergraphError(f"odd cycle needs odd n >= 3, got {n}")
    edges = [(i, i + 1) for i in range(1, n)]
    edges.append((1, n))
    return Hypergraph.from_edges(n, edges)


def gap_nested(max_degree: int) -> Hypergraph:
    """Nested family with proper chromatic number 2 but conflict-free
    chromatic number max_degree + 1.

    Level 1 is a single 2-vertex edge; each level takes two disjoint copies
    of the previous one and adds an edge covering all their vertices.
    """
    if max_degree < 1:
        raise HypergraphError(f"max degree must be >= 1, got {max_degree}")
    h = Hypergraph.from_edges(2, [(1, 2)])
    for _ in range(max_degree - 1):
        shift = h.n
        edges = list(h.edges)
        edges.extend(tuple(v + shift for v in e) for e in h.edges)
        edges.append(tuple(range(1, 2 * h.n + 1)))
        h = Hypergraph.from_edges(2 * h.n, edges)
    return h


def two_cliques(max_degree: int) -> Hypergraph:
    """Two disjoint complete graphs K_d plus one edge covering everything.

    Max degree is exactly d and no conflict-free coloring with d colors
    exists: both cliques would use all d colors, repeating each color twice
    on the covering edge.
    """
    if max_degree < 2:
        raise HypergraphError(f"max degree must be >= 2, got {max_degree}")
    d = max_degree
    edges: list[tuple[int, ...]] = [
        (i, j) for i in range(1, d + 1) for j in range(i + 1, d + 1)]
    edges.extend(
        (i + d, j + d) for i in range(1, d + 1) for j in range(i + 1, d + 1))
    edges.append(tuple(range(1, 2 * d + 1)))
    return Hypergraph.from_edges(2 * d, edges)


def k4e_gadget(r: int) -> Hypergraph:
    """3-regular gadget with edge sizes {2, r} needing 4 colors, for even r.

    r/2 disjoint diamonds (K_4 minus the edge between its last two
    vertices) plus one size-r edge through all degree-2 vertices. For r = 2
    this degenerates to plain K_4.
    """
    if r < 2 or r % 2 == 1:
        raise HypergraphError(f"gadget needs even r >= 2, got {r}")
    if r == 2:
        return complete_graph(4)
    copies = r // 2
    edges: list[tuple[int, ...]] = []
    big_edge = []
    for c in range(copies):
        base = 4 * c
        quad = [base + 1, base + 2, base + 3, base + 4]
        edges.extend(
            (quad[i], quad[j])
            for i in range(4)
            for j in range(i + 1, 4)
            if (i, j) != (2, 3))
        big_edge.extend(quad[2:])
    edges.append(tuple(big_edge))
    return Hypergraph.from_edges(4 * copies, edges)
