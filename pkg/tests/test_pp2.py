import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from admkit.graph import generate
from admkit.pp2 import brute_force_pp2, exact_pp2, t2_set

from oracles import random_gnm


def test_c4_hand_example():
    # L = {0,1,3}, v = 1: one L-neighbour (0) and one 2-path 1-2-3
    g = generate("cycle", [4])
    L = {0, 1, 3}
    assert exact_pp2(g, L, 1) == 2
    assert brute_force_pp2(g, L, 1) == 2
    assert t2_set(g, L, 1) == {3}


def test_full_L_gives_degree():
    g = generate("gnm", [10, 25], seed=1)
    L = set(range(10))
    for v in range(10):
        assert exact_pp2(g, L, v) == g.degree(v)


def test_singleton_L():
    g = generate("clique", [4])
    assert exact_pp2(g, {0}, 0) == 0
    assert brute_force_pp2(g, {0}, 0) == 0


def test_isolated_vertex():
    g = generate("gnm", [5, 0], seed=0)
    assert brute_force_pp2(g, {0, 1}, 0) == 0


def test_requires_membership():
    g = generate("cycle", [4])
    with pytest.raises(ValueError):
        exact_pp2(g, {1, 2}, 0)
    with pytest.raises(ValueError):
        brute_force_pp2(g, {1, 2}, 0)


def test_degree_cap():
    g = generate("star", [20])
    with pytest.raises(ValueError):
        brute_force_pp2(g, set(range(21)), 0)


def test_exact_agrees_with_brute_force():
    rng = random.Random(20)
    for _ in range(500):
        g = random_gnm(rng, max_n=8)
        vs = list(range(g.n))
        L = set(rng.sample(vs, rng.randint(1, g.n)))
        v = rng.choice(sorted(L))
        assert exact_pp2(g, L, v) == brute_force_pp2(g, L, v)


def test_monotone_in_L():
    # pp2 can only grow when the prefix set grows
    rng = random.Random(21)
    for _ in range(500):
        g = random_gnm(rng, max_n=8)
        vs = list(range(g.n))
        Lp = set(rng.sample(vs, rng.randint(1, g.n)))
        L = {u for u in Lp if rng.random() < 0.7}
        v = rng.choice(sorted(Lp))
        L.add(v)
        assert exact_pp2(g, L, v) <= exact_pp2(g, Lp, v)


@given(st.integers(0, 10**6))
@settings(max_examples=60, deadline=None)
def test_t2_disjointness(seed):
    rng = random.Random(seed)
    g = random_gnm(rng, max_n=8)
    L = set(rng.sample(range(g.n), rng.randint(1, g.n)))
    v = rng.choice(sorted(L))
    t2 = t2_set(g, L, v)
    assert v not in t2
    assert not (t2 & g.adj_set(v))
    assert t2 <= L
