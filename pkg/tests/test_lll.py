import random

import mpmath as mp
import pytest

from cfhyper import (
    Hypergraph,
    HypergraphError,
    LLLParams,
    color_bound,
    is_conflict_free,
    randomized_cf_coloring,
    strong_condition,
)

from corpus import random_uniform_hypergraph


def high_precision_bound(r, max_degree):
    mp.mp.dps = 50
    v = ((mp.e * r) ** (mp.mpf(2) / r)
         * (mp.e * r / 2)
         * mp.mpf(max_degree) ** (mp.mpf(2) / r))
    return int(mp.ceil(v))


def test_color_bound_frozen_values():
    # frozen from the high-precision evaluation below
    assert color_bound(8, 100) == 75
    assert color_bound(7, 2) == 27


def test_color_bound_matches_high_precision_oracle():
    for r in range(2, 12):
        for d in (2, 3, 10, 100, 1000):
            assert color_bound(r, d) == high_precision_bound(r, d)


def test_color_bound_monotone():
    for r in (3, 5, 8):
        values = [color_bound(r, d) for d in range(2, 300)]
        assert values == sorted(values)


def test_color_bound_domain():
    with pytest.raises(HypergraphError):
        color_bound(1, 5)
    with pytest.raises(HypergraphError):
        color_bound(4, 1)


def test_rainbow_palette_succeeds_immediately():
    h = Hypergraph.from_edges(6, [(1, 2, 3), (4, 5, 6), (1, 4, 6)])
    c = randomized_cf_coloring(h, LLLParams(k=6, seed=3))
    assert c is not None
    assert strong_condition(h, c) == []


def test_single_color_exhausts():
    h = Hypergraph.from_edges(4, [(1, 2, 3, 4)])
    assert randomized_cf_coloring(h, LLLParams(k=1, max_rounds=5)) is None
    # two colors can never beat the threshold of a 4-edge either
    assert randomized_cf_coloring(h, LLLParams(k=2, max_rounds=5)) is None


def test_determinism():
    rng = random.Random(5)
    h = random_uniform_hypergraph(rng, 60, 5, 4, 40)
    p = LLLParams(k=12, seed=99)
    assert randomized_cf_coloring(h, p) == randomized_cf_coloring(h, p)


def test_accepted_colorings_pass_strong_condition():
    rng = random.Random(6)
    for trial in range(10):
        h = random_uniform_hypergraph(rng, 50, 6, 5, 30)
        if h.m == 0:
            continue
        c = randomized_cf_coloring(h, LLLParams(k=10, seed=trial))
        assert c is not None
        assert c.palette <= 10
        assert strong_condition(h, c) == []
        assert is_conflict_free(h, c) == []


def test_nonuniform_rejected():
    h = Hypergraph.from_edges(3, [(1, 2), (1, 2, 3)])
    with pytest.raises(HypergraphError):
        randomized_cf_coloring(h, LLLParams(k=4))


def test_params_validated():
    with pytest.raises(HypergraphError):
        LLLParams(k=0)
    with pytest.raises(HypergraphError):
        LLLParams(k=3, max_rounds=0)
