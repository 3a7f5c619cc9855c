"""Acceptance gate: one test per criterion, each printing a PASS line.

Run with `pytest tests/test_acceptance.py -s` to see the per-criterion
report. The whole module is CPU-bound but finishes in a few minutes.
"""
import os
import random
import statistics
import time
import tracemalloc
from itertools import combinations

import pytest

from admkit.engine import compute, decide, greedy_exact, verify_ordering
from admkit.graph import Graph, degeneracy, generate, load_edge_list, subdivide_once
from admkit.oracle import OracleState
from admkit.pp2 import brute_force_pp2, exact_pp2

from oracles import adm2_brute, oracle_max_matching_size, random_gnm


def report(name: str, detail: str = "") -> None:
    print(f"[PASS] {name}" + (f" ({detail})" if detail else ""))


def random_tree(rng: random.Random, n: int) -> Graph:
    return Graph(n, [(v, rng.randrange(v)) for v in range(1, n)])


def test_small_graph_correctness():
    """decide(g,p) equals the brute-force truth on every labelled graph with
    n <= 4 and on 2,000 random gnm graphs with n <= 8, for every p in [0,n]."""
    checked = 0
    for n in range(1, 5):
        pairs = list(combinations(range(n), 2))
        for mask in range(1 << len(pairs)):
            g = Graph(n, [pairs[i] for i in range(len(pairs))
                          if mask >> i & 1])
            truth = adm2_brute(g)
            for p in range(n + 1):
                assert decide(g, p).answer == (truth <= p), (g.n, list(g.edges()), p)
                checked += 1
    rng = random.Random(2024)
    for _ in range(2000):
        g = random_gnm(rng, max_n=8)
        truth = adm2_brute(g)
        for p in range(g.n + 1):
            assert decide(g, p).answer == (truth <= p), (g.n, list(g.edges()), p)
            checked += 1
    report("small-graph correctness",
           f"{checked} decide calls vs brute force, exact")


def test_oracle_agreement_mid_scale():
    """compute() matches the independent minimum-pp2 greedy on 100 random
    graphs with n <= 60 and on once-subdivided cliques up to K_8."""
    rng = random.Random(99)
    for i in range(100):
        n = rng.randint(2, 60)
        m = rng.randint(0, min(3 * n, n * (n - 1) // 2))
        g = generate("gnm", [n, m], seed=i)
        assert compute(g).value == greedy_exact(g).value
    for k in range(2, 9):
        g = subdivide_once(generate("clique", [k]))
        assert compute(g).value == greedy_exact(g).value
    report("oracle agreement at mid scale", "100 gnm + subdivided cliques")


def test_closed_family_values():
    """K_n -> n-1, C_n -> 2 (n >= 4), trees -> 1; anchored by the brute
    force at small n, asserted for larger family members."""
    for n in (2, 3, 4, 5):
        assert adm2_brute(generate("clique", [n])) == n - 1
    for n in (2, 3, 5, 10, 25, 40):
        assert compute(generate("clique", [n])).value == n - 1
    for n in (4, 5, 6, 7):
        assert adm2_brute(generate("cycle", [n])) == 2
    for n in (4, 9, 100, 733):
        assert compute(generate("cycle", [n])).value == 2
    rng = random.Random(5)
    for n in (2, 5, 7):
        assert adm2_brute(random_tree(rng, n)) == 1
    for n in (2, 30, 500):
        assert compute(random_tree(rng, n)).value == 1
    assert compute(generate("star", [200])).value == 1
    assert compute(generate("path", [200])).value == 1
    report("closed-family values", "cliques, cycles, trees")


def test_witness_certification():
    """Every TRUE decide yields a witness with verified value <= p; every
    compute yields a tight witness and decide(value-1) is FALSE."""
    rng = random.Random(314)
    decides = computes = 0
    for _ in range(150):
        g = random_gnm(rng, max_n=10)
        for p in range(g.n + 1):
            res = decide(g, p)
            if res.answer:
                assert verify_ordering(g, res.witness) <= p
                decides += 1
    for i in range(60):
        n = rng.randint(2, 30)
        g = generate("gnm", [n, rng.randint(0, min(60, n * (n - 1) // 2))],
                     seed=i)
        res = compute(g)
        assert verify_ordering(g, res.witness) == res.value
        if res.value > 0:
            assert decide(g, res.value - 1).answer is False
        computes += 1
    report("witness certification",
           f"{decides} decide witnesses, {computes} compute witnesses")


def test_invariant_suite():
    """Oracle conditions hold after every pop/update on a small-graph
    sweep; augment agrees with an independent maximum-matching solver on
    1,000 randomized oracle states."""
    rng = random.Random(77)
    steps = 0
    for _ in range(150):
        g = random_gnm(rng, max_n=7)
        p = rng.randint(0, g.n)
        state = OracleState(g, p)
        assert state.check_conditions() == []
        while True:
            v = state.pop_candidate()
            if v is None:
                break
            state.update(v)
            assert state.check_conditions() == [], (list(g.edges()), p, v)
            steps += 1

    checks = 0
    while checks < 1000:
        g = random_gnm(rng, max_n=9)
        p = rng.randint(0, 5)
        state = OracleState(g, p)
        while True:
            live = sorted(state.L_set())
            if live and rng.random() < 0.8:
                u = rng.choice(live)
                before = len(state.M[u])
                maximum = oracle_max_matching_size(state, u)
                grew = state.augment(u)
                assert grew == (before < maximum)
                if grew:
                    assert len(state.M[u]) == before + 1
                checks += 1
            v = state.pop_candidate()
            if v is None:
                break
            state.update(v)
    report("invariant suite",
           f"{steps} condition checks, {checks} augment checks")


def test_lemma_properties():
    """500 randomized trials per property, zero violations."""
    rng = random.Random(1234)
    # edge bound: m > p*n forces rejection
    trials = 0
    while trials < 500:
        g = random_gnm(rng, max_n=9)
        if g.m == 0:
            continue
        p = rng.randint(0, max(0, (g.m - 1) // g.n))
        if g.m > p * g.n:
            assert decide(g, p).answer is False
            trials += 1
    # matching characterization: exact pp2 equals brute-force enumeration
    for _ in range(500):
        g = random_gnm(rng, max_n=8)
        L = set(rng.sample(range(g.n), rng.randint(1, g.n)))
        v = rng.choice(sorted(L))
        assert exact_pp2(g, L, v) == brute_force_pp2(g, L, v)
    # pp2 monotone in the prefix set
    for _ in range(500):
        g = random_gnm(rng, max_n=8)
        Lp = set(rng.sample(range(g.n), rng.randint(1, g.n)))
        L = {u for u in Lp if rng.random() < 0.7}
        v = rng.choice(sorted(Lp))
        L.add(v)
        assert exact_pp2(g, L, v) <= exact_pp2(g, Lp, v)
    # adm2 lower-bounded by the degeneracy
    for i in range(500):
        n = rng.randint(1, 25)
        g = generate("gnm", [n, rng.randint(0, min(50, n * (n - 1) // 2))],
                     seed=i)
        assert compute(g).value >= degeneracy(g)[0]
    report("lemma property tests", "4 x 500 trials")


def _timed_decide(g: Graph, p: int) -> float:
    best = float("inf")
    for _ in range(3):
        t0 = time.perf_counter()
        res = decide(g, p)
        best = min(best, time.perf_counter() - t0)
        assert res.answer
    return best


def test_scaling_on_grids():
    """decide() wall time stays within a factor 1.7 of linear in m per grid
    doubling; tracked peak memory grows by [3.5, 4.5]x per m-quadrupling.
    Absolute timings are hardware-bound and not checked."""
    grids = {k: generate("grid", [k, k]) for k in (100, 200, 400)}
    p = compute(grids[100]).value
    assert all(decide(g, p).answer for g in grids.values())

    times = {k: _timed_decide(g, p) for k, g in grids.items()}
    for small, big in ((100, 200), (200, 400)):
        m_ratio = grids[big].m / grids[small].m
        t_ratio = times[big] / times[small]
        assert m_ratio / 1.7 <= t_ratio <= m_ratio * 1.7, (times, m_ratio)

    peaks = {}
    for k in (100, 200, 400):
        tracemalloc.start()
        g = generate("grid", [k, k])
        decide(g, p)
        peaks[k] = tracemalloc.get_traced_memory()[1]
        tracemalloc.stop()
    for small, big in ((100, 200), (200, 400)):
        ratio = peaks[big] / peaks[small]
        assert 3.5 <= ratio <= 4.5, peaks
    report("scaling on grids",
           f"times {[round(times[k], 3) for k in (100, 200, 400)]}s, "
           f"mem ratios {peaks[200] / peaks[100]:.2f}/"
           f"{peaks[400] / peaks[200]:.2f}")


@pytest.mark.skipif("ADM2_CORPUS_DIR" not in os.environ,
                    reason="real-world corpus not supplied; set "
                           "ADM2_CORPUS_DIR to a directory of edge lists")
def test_corpus_distribution():
    """Optional spot-check of the published corpus summary: adm2 min 1,
    median 16, max 1016."""
    values = []
    corpus = os.environ["ADM2_CORPUS_DIR"]
    for entry in sorted(os.listdir(corpus)):
        with open(os.path.join(corpus, entry)) as f:
            g, _ = load_edge_list(f)
        values.append(compute(g).value)
    assert min(values) == 1
    assert statistics.median(values) == 16
    assert max(values) == 1016
    report("corpus distribution", f"{len(values)} networks")
