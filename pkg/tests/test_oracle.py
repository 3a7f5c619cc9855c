import random

import pytest

from admkit.graph import Graph, generate
from admkit.oracle import OracleState, OracleStateError

from oracles import oracle_max_matching_size, random_gnm


def drain(state):
    """Run pop/update to exhaustion; returns popped vertices."""
    popped = []
    while True:
        v = state.pop_candidate()
        if v is None:
            return popped
        state.update(v)
        popped.append(v)


class TestInit:
    def test_k4_all_candidates(self):
        assert OracleState(generate("clique", [4]), 3).cand == {0, 1, 2, 3}

    def test_k4_no_candidates(self):
        assert OracleState(generate("clique", [4]), 2).cand == set()

    def test_star_leaves(self):
        assert OracleState(generate("star", [5]), 1).cand == set(range(1, 6))

    def test_fresh_state_is_healthy(self):
        for seed in range(5):
            g = generate("gnm", [8, 12], seed=seed)
            assert OracleState(g, 2).check_conditions() == []


class TestPop:
    def test_pops_smallest_endpoint(self):
        state = OracleState(generate("path", [3]), 1)
        assert state.pop_candidate() == 0

    def test_none_on_empty(self):
        state = OracleState(generate("clique", [4]), 2)
        assert state.pop_candidate() is None

    def test_double_pop_is_contract_violation(self):
        state = OracleState(generate("path", [3]), 1)
        state.pop_candidate()
        with pytest.raises(OracleStateError):
            state.pop_candidate()

    def test_update_must_match_pop(self):
        state = OracleState(generate("path", [3]), 1)
        v = state.pop_candidate()
        with pytest.raises(OracleStateError):
            state.update(v + 1)


class TestUpdate:
    def test_c4_hand_simulation(self):
        state = OracleState(generate("cycle", [4]), 2)
        assert state.cand == {0, 1, 2, 3}
        v = state.pop_candidate()
        assert v == 0
        state.update(v)
        assert state.NR[1] == {0} and state.NR[3] == {0}
        assert state.M[1].edges() == [(0, 3)]
        assert state.M[3].edges() == [(0, 1)]
        assert state.check_conditions() == []

    def test_star_center_pop(self):
        state = OracleState(generate("star", [3]), 3)
        v = state.pop_candidate()
        assert v == 0  # the center has the smallest id
        state.update(v)
        for leaf in (1, 2, 3):
            assert state.NR[leaf] == {0}
            assert len(state.M[leaf]) == 1
            (r, l) = state.M[leaf].edges()[0]
            assert r == 0 and l in {1, 2, 3} - {leaf}
        assert state.check_conditions() == []

    def test_isolated_vertex_noop(self):
        g = Graph(3, [(1, 2)])
        state = OracleState(g, 1)
        v = state.pop_candidate()
        assert v == 0 and g.degree(0) == 0
        state.update(v)
        assert state.check_conditions() == []

    def test_conditions_through_full_runs(self):
        rng = random.Random(7)
        for _ in range(60):
            g = random_gnm(rng, max_n=7)
            p = rng.randint(0, g.n)
            state = OracleState(g, p)
            assert state.check_conditions() == []
            while True:
                v = state.pop_candidate()
                if v is None:
                    break
                state.update(v)
                assert state.check_conditions() == [], (g.edges(), p, v)

    def test_cand_is_monotone(self):
        # once in Cand, a vertex leaves only by being popped
        rng = random.Random(8)
        for _ in range(40):
            g = random_gnm(rng, max_n=8)
            p = rng.randint(0, 4)
            state = OracleState(g, p)
            seen = set(state.cand)
            popped = set()
            while True:
                v = state.pop_candidate()
                if v is None:
                    break
                popped.add(v)
                state.update(v)
                assert seen - popped <= state.cand
                seen |= state.cand

    def test_cand_equals_exact_candidate_set(self):
        # empirical strengthening: containment is actually equality
        from admkit.pp2 import exact_pp2
        rng = random.Random(9)
        for _ in range(40):
            g = random_gnm(rng, max_n=7)
            p = rng.randint(0, g.n)
            state = OracleState(g, p)
            while True:
                L = state.L_set()
                exact = {u for u in L if exact_pp2(g, L, u) <= p}
                assert state.cand == exact
                v = state.pop_candidate()
                if v is None:
                    break
                state.update(v)


class TestAugment:
    def _gadget_state(self):
        # v=0 with N_R = {a=1, b=2}; matched 1-3; 2 adjacent only to 3;
        # 1 has the eligible unmatched neighbour y=4
        g = Graph(5, [(0, 1), (0, 2), (1, 3), (2, 3), (1, 4)])
        state = OracleState(g, 2)
        for r in (1, 2):
            state.in_L[r] = False
        for w in range(5):
            state.NL[w] = {u for u in g.neighbors(w) if state.in_L[u]}
            state.NR[w] = {u for u in g.neighbors(w) if not state.in_L[u]}
        state.M[0].add(1, 3)
        return state

    def test_length_3_alternation(self):
        state = self._gadget_state()
        assert oracle_max_matching_size(state, 0) == 2
        assert state.augment(0) is True
        assert sorted(state.M[0].edges()) == [(1, 4), (2, 3)]

    def test_false_when_maximum(self):
        state = self._gadget_state()
        state.augment(0)
        assert state.augment(0) is False

    def test_false_on_empty_matching(self):
        # S and T live inside V(M_v); greedy single-edge additions are
        # Update's job, not Augmenting's
        g = Graph(3, [(0, 1), (1, 2)])
        state = OracleState(g, 1)
        state.in_L[1] = False
        for w in range(3):
            state.NL[w] = {u for u in g.neighbors(w) if state.in_L[u]}
            state.NR[w] = {u for u in g.neighbors(w) if not state.in_L[u]}
        assert state.augment(0) is False

    def test_agrees_with_independent_solver(self):
        rng = random.Random(10)
        checks = 0
        while checks < 400:
            g = random_gnm(rng, max_n=8)
            p = rng.randint(0, 4)
            state = OracleState(g, p)
            while True:
                L = state.L_set()
                candidates = sorted(L)
                if candidates and rng.random() < 0.7:
                    u = rng.choice(candidates)
                    before = len(state.M[u])
                    mm = oracle_max_matching_size(state, u)
                    grew = state.augment(u)
                    assert grew == (before < mm)
                    if grew:
                        assert len(state.M[u]) == before + 1
                    checks += 1
                v = state.pop_candidate()
                if v is None:
                    break
                state.update(v)


class TestCheckConditions:
    def test_detects_corruption(self):
        state = OracleState(generate("cycle", [4]), 2)
        v = state.pop_candidate()
        state.update(v)
        # corrupt one matching edge
        state.M[1].remove(0, 3)
        state.M[1].add(0, 2)
        report = state.check_conditions()
        assert any("M[1]" in line for line in report)
