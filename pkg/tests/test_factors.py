import random

import pytest

from cfhyper import (
    Hypergraph,
    HypergraphError,
    SearchBudgetExceeded,
    cf2_via_duality,
    dual,
    factor_defects,
    find_ab_factor,
    is_conflict_free,
    parity_precheck,
)
from cfhyper.constructions import build_g_tr, complete_graph, odd_cycle
from cfhyper.factors import _biconnected_blocks

from corpus import octahedron, petersen, random_uniform_hypergraph


def test_parity_precheck_k5():
    cert = parity_precheck(complete_graph(5), 1, 3)
    assert cert is not None
    assert cert.component == (1, 2, 3, 4, 5)
    assert "odd" in str(cert)


def test_parity_precheck_feasible_cases():
    assert parity_precheck(octahedron(), 1, 3) is None
    assert parity_precheck(build_g_tr(1, 7)[0], 1, 6) is None  # mixed parity
    # even component sizes pass even with both targets odd
    assert parity_precheck(complete_graph(6), 1, 3) is None


def test_parity_precheck_componentwise():
    # K4 plus a disjoint triangle: the triangle is the odd component
    edges = [(i, j) for i in range(1, 5) for j in range(i + 1, 5)]
    edges += [(5, 6), (6, 7), (5, 7)]
    g = Hypergraph.from_edges(7, edges)
    cert = parity_precheck(g, 1, 1)
    assert cert is not None and cert.component == (5, 6, 7)


def test_biconnected_blocks_bowtie():
    # two triangles sharing vertex 3
    g = Hypergraph.from_edges(5, [(1, 2), (2, 3), (1, 3), (3, 4), (4, 5), (3, 5)])
    blocks, cuts = _biconnected_blocks(g)
    assert cuts == {3}
    assert sorted(sorted(b) for b in blocks) == [[0, 1, 2], [3, 4, 5]]


def test_biconnected_blocks_bridge_and_parallel():
    # parallel pair forms a block; the bridge is its own block
    g = Hypergraph.from_edges(3, [(1, 2), (1, 2), (2, 3)])
    blocks, cuts = _biconnected_blocks(g)
    assert cuts == {2}
    assert sorted(sorted(b) for b in blocks) == [[0, 1], [2]]


def test_g17_has_no_16_factor():
    g, _ = build_g_tr(1, 7)
    assert find_ab_factor(g, 1, 6) is None


def test_g19_has_no_18_factor():
    g, _ = build_g_tr(1, 9)
    assert find_ab_factor(g, 1, 8) is None


def test_k5_has_no_13_factor_by_search():
    assert find_ab_factor(complete_graph(5), 1, 3) is None


def test_k9_parity_for_even_regularity():
    # complete graph on r+1 vertices, even r: both targets odd, odd order
    cert = parity_precheck(complete_graph(9), 1, 7)
    assert cert is not None and len(cert.component) == 9


def test_octahedron_13_factor():
    g = octahedron()
    f = find_ab_factor(g, 1, 3)
    assert f is not None
    assert factor_defects(g, f) == []


def test_petersen_12_factor():
    g = petersen()
    f = find_ab_factor(g, 1, 2)
    assert f is not None
    assert factor_defects(g, f) == []


def test_perfect_matching_as_11_factor():
    g = Hypergraph.from_edges(4, [(1, 2), (2, 3), (3, 4), (1, 4)])
    f = find_ab_factor(g, 1, 1)
    assert f is not None
    assert sorted(f.selected) in ([1, 3], [2, 4])
    assert find_ab_factor(odd_cycle(5), 1, 1) is None


def test_complement_of_16_factor():
    # in an r-regular graph the complement of a {1, r-1}-factor is one too
    g = octahedron()  # 4-regular
    f = find_ab_factor(g, 1, 3)
    complement = frozenset(range(1, g.m + 1)) - f.selected
    from cfhyper import Factor
    assert factor_defects(g, Factor(complement, 1, 3)) == []


def test_determinism():
    g = octahedron()
    assert find_ab_factor(g, 1, 3) == find_ab_factor(g, 1, 3)


def test_budget_exceeded_raises():
    g, _ = build_g_tr(1, 7)
    with pytest.raises(SearchBudgetExceeded):
        find_ab_factor(g, 1, 6, budget=5)


def test_isolated_vertex_means_none():
    g = Hypergraph.from_edges(3, [(1, 2)])
    assert find_ab_factor(g, 1, 1) is None


def test_invalid_targets():
    g = complete_graph(4)
    with pytest.raises(HypergraphError):
        find_ab_factor(g, 0, 2)
    with pytest.raises(HypergraphError):
        find_ab_factor(g, 3, 2)
    with pytest.raises(HypergraphError):
        parity_precheck(g, -1, 1)
    with pytest.raises(HypergraphError):
        find_ab_factor(Hypergraph.from_edges(3, [(1, 2, 3)]), 1, 2)


def _brute_force_exists(g, a, b) -> bool:
    from itertools import combinations

    for size in range(g.m + 1):
        for subset in combinations(range(1, g.m + 1), size):
            deg = [0] * (g.n + 1)
            for idx in subset:
                for v in g.edge(idx):
                    deg[v] += 1
            if all(d in (a, b) for d in deg[1:]):
                return True
    return False


def test_factor_against_brute_force():
    """Cross-validate the block-decomposed search against subset enumeration."""
    rng = random.Random(4242)
    for trial in range(80):
        n = rng.randint(2, 7)
        m = rng.randint(1, 9)
        edges = []
        for _ in range(m):
            u, v = rng.sample(range(1, n + 1), 2)
            edges.append((min(u, v), max(u, v)))
        g = Hypergraph.from_edges(n, edges)
        a = rng.randint(1, 2)
        b = rng.randint(a, 3)
        result = find_ab_factor(g, a, b)
        assert (result is not None) == _brute_force_exists(g, a, b), (g, a, b)
        if result is not None:
            assert factor_defects(g, result) == []


def test_factor_against_brute_force_cut_heavy():
    """Same cross-validation on graphs glued at cut vertices (deep trees)."""
    rng = random.Random(777)
    for trial in range(40):
        # chain 3-5 small blobs, consecutive blobs sharing one vertex
        edges = []
        anchor = 1
        next_free = 2
        for _ in range(rng.randint(3, 5)):
            size = rng.randint(1, 3)  # blob vertices beyond the anchor
            blob = [anchor] + list(range(next_free, next_free + size))
            next_free += size
            for _ in range(rng.randint(1, 4)):
                u, v = rng.sample(blob, 2)
                edges.append((min(u, v), max(u, v)))
            anchor = blob[-1]
        n = next_free - 1
        g = Hypergraph.from_edges(n, edges)
        a = rng.randint(1, 2)
        b = rng.randint(a, 3)
        result = find_ab_factor(g, a, b)
        assert (result is not None) == _brute_force_exists(g, a, b), (g, a, b)
        if result is not None:
            assert factor_defects(g, result) == []


def test_cf2_via_duality_octahedron():
    h = dual(octahedron())
    c = cf2_via_duality(h)
    assert c is not None
    assert c.palette <= 2
    assert is_conflict_free(h, c) == []


def test_cf2_via_duality_k5():
    assert cf2_via_duality(dual(complete_graph(5))) is None


def test_cf2_via_duality_dual_g17():
    h = dual(build_g_tr(1, 7)[0])
    assert cf2_via_duality(h) is None


def test_cf2_via_duality_validates():
    with pytest.raises(HypergraphError):
        cf2_via_duality(complete_graph(4))  # 3-regular, not 2-regular
    # 2-regular but non-uniform
    bad = Hypergraph.from_edges(3, [(1, 2), (1, 2, 3), (3,)])
    with pytest.raises(HypergraphError):
        cf2_via_duality(bad)


def test_cf2_via_duality_two_parallel_edges():
    # smallest 2-regular 2-uniform case: two parallel edges
    h = Hypergraph.from_edges(2, [(1, 2), (1, 2)])
    c = cf2_via_duality(h)
    assert c is not None and sorted(c.colors) == [1, 2]


def test_mixed_degree_factor_on_random_uniform_graphs():
    rng = random.Random(77)
    for trial in range(5):
        g = random_uniform_hypergraph(rng, 20, 2, 4, 30)
        f = find_ab_factor(g, 1, 4)
        if f is not None:
            assert factor_defects(g, f) == []
