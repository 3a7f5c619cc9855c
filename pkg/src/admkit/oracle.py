"""Incremental candidate oracle for the greedy 2-admissibility ordering.

Maintains, while vertices move one by one from the active set L to the
placed set R:

  * per-vertex neighbourhood partitions N_L / N_R,
  * per-vertex local matchings M_v between N_R(v) and the two-step set
    T2_L(v) (kept maximal, upgraded towards maximum on demand),
  * the candidate set Cand of vertices currently known to have
    pp2_L <= p.

All sets are hash sets so the amortized cost per move is polynomial in p
only. Ties break towards smaller vertex ids everywhere so runs are
reproducible.
"""
from __future__ import annotations

import heapq
from typing import Optional

from .graph import Graph
from .pp2 import exact_pp2, max_bipartite_matching, t2_set


class Matching:
    """Bipartite matching with both-way partner lookup.

    `right` lives inside N_R(v), `left` inside T2_L(v); every matched pair
    is an edge of the underlying graph.
    """

    __slots__ = ("left", "right", "partner")

    def __init__(self):
        self.left: set[int] = set()
        self.right: set[int] = set()
        self.partner: dict[int, int] = {}

    def __len__(self) -> int:
        return len(self.left)

    def add(self, r: int, l: int) -> None:
        self.right.add(r)
        self.left.add(l)
        self.partner[r] = l
        self.partner[l] = r

    def remove(self, r: int, l: int) -> None:
        self.right.discard(r)
        self.left.discard(l)
        del self.partner[r]
        del self.partner[l]

    def clear(self) -> None:
        self.left.clear()
        self.right.clear()
        self.partner.clear()

    def edges(self) -> list[tuple[int, int]]:
        return [(r, self.partner[r]) for r in self.right]


class OracleStateError(RuntimeError):
    """Contract violation in the pop/update protocol."""


class OracleState:
    """State machine: init -> (pop_candidate, update)* until Cand empties."""

    def __init__(self, g: Graph, p: int):
        if p < 0:
            raise ValueError("p must be non-negative")
        self.g = g
        self.p = p
        n = g.n
        self.in_L = [True] * n
        self.NL: list[set[int]] = [set(g.neighbors(v)) for v in range(n)]
        self.NR: list[set[int]] = [set() for _ in range(n)]
        self.M: list[Matching] = [Matching() for _ in range(n)]
        self.cand: set[int] = {v for v in range(n) if g.degree(v) <= p}
        self._heap: list[int] = sorted(self.cand)
        self._pending: Optional[int] = None

    # -- candidate bookkeeping -------------------------------------------

    def _add_candidate(self, v: int) -> None:
        if v not in self.cand:
            self.cand.add(v)
            heapq.heappush(self._heap, v)

    def pop_candidate(self) -> Optional[int]:
        """Remove and return the smallest-id candidate, flipping it out of
        L; None when Cand is empty. update() must run before the next pop."""
        if self._pending is not None:
            raise OracleStateError(
                f"pop_candidate called before update({self._pending})")
        while self._heap:
            v = heapq.heappop(self._heap)
            if v in self.cand:
                self.cand.discard(v)
                self.in_L[v] = False
                self._pending = v
                return v
        return None

    # -- the update algorithm --------------------------------------------

    def update(self, v: int) -> None:
        """Restore the oracle conditions after v moved from L to R."""
        if self._pending != v:
            raise OracleStateError(
                f"update({v}) does not match pending vertex {self._pending}")
        self._pending = None
        g, NL, NR, M = self.g, self.NL, self.NR, self.M
        check: set[int] = set()

        # 1: repartition the neighbourhoods around v
        for u in g.neighbors(v):
            NL[u].discard(v)
            NR[u].add(v)

        # 2: v can now serve as the middle vertex of new 2-paths for its
        # L-neighbours; greedily keep their matchings maximal
        nl_v = sorted(NL[v])
        for u in nl_v:
            mu = M[u]
            for w in nl_v:
                if w not in mu.left and w not in NL[u] and w != u:
                    mu.add(v, w)
                    break
            check.add(u)

        # 3: vertices that used v as a matched T2 endpoint lose that edge;
        # try to re-match the freed N_R partner
        affected: set[int] = set()
        for x in self.M[v].right:
            affected.update(NL[x])
        affected.discard(v)
        for u in sorted(affected):
            mu = M[u]
            if v not in mu.left:
                continue
            z = mu.partner[v]
            mu.remove(z, v)
            for y in sorted(NL[z]):
                if y not in NL[u] and y not in mu.left and y != u:
                    mu.add(z, y)
                    break
            check.add(u)

        # 4: touched vertices whose certificate dropped to exactly p either
        # recover an edge by augmenting or become candidates
        for u in sorted(check):
            if len(M[u]) + len(NL[u]) == self.p and u not in self.cand:
                if not self.augment(u):
                    self._add_candidate(u)

        self.M[v].clear()

    # -- matching augmentation -------------------------------------------

    def augment(self, v: int) -> bool:
        """Try to grow the (maximal) matching M_v by one augmenting path.

        Builds the directed auxiliary graph on V(M_v): matching edges point
        from the N_R side to the T2 side, other graph edges point back.
        S holds matched N_R vertices with an unmatched eligible T2
        neighbour, T holds matched T2 vertices with an unmatched N_R
        neighbour; a directed S->T path yields the augmentation.
        """
        g, mv = self.g, self.M[v]
        arcs: dict[int, list[int]] = {}
        S: list[int] = []
        T: set[int] = set()
        out: dict[int, int] = {}

        left_sorted = sorted(mv.left)
        for u in sorted(self.NR[v]):
            for w in left_sorted:
                if mv.partner.get(u) == w:
                    arcs.setdefault(u, []).append(w)
                elif g.has_edge(u, w):
                    if u in mv.right:
                        arcs.setdefault(w, []).append(u)
                    elif w not in T:
                        T.add(w)
                        out[w] = u
        nl_v = self.NL[v]
        for u in sorted(mv.right):
            for w in sorted(self.NL[u]):
                if w not in mv.left and w not in nl_v and w != v:
                    S.append(u)
                    out[u] = w
                    break

        path = self._find_path(arcs, S, T)
        if path is None:
            return False
        # path alternates starting with a matching arc, so matching edges
        # sit at even offsets and non-matching ones at odd offsets
        s, t = path[0], path[-1]
        for i in range(0, len(path) - 1, 2):
            mv.remove(path[i], path[i + 1])
        for i in range(1, len(path) - 1, 2):
            w, u = path[i], path[i + 1]
            mv.add(u, w)
        mv.add(s, out[s])
        mv.add(out[t], t)
        return True

    @staticmethod
    def _find_path(arcs: dict[int, list[int]], sources: list[int],
                   targets: set[int]) -> Optional[list[int]]:
        """Deterministic DFS for a directed path from any source to any
        target; visited marks persist across sources."""
        if not sources or not targets:
            return None
        visited: set[int] = set()
        for s in sources:
            if s in visited:
                continue
            stack: list[tuple[int, Optional[int]]] = [(s, None)]
            parent: dict[int, Optional[int]] = {}
            while stack:
                node, par = stack.pop()
                if node in visited:
                    continue
                visited.add(node)
                parent[node] = par
                if node in targets:
                    path = [node]
                    while parent[path[-1]] is not None:
                        path.append(parent[path[-1]])
                    path.reverse()
                    return path
                for nxt in sorted(arcs.get(node, ()), reverse=True):
                    if nxt not in visited:
                        stack.append((nxt, node))
        return None

    # -- instrumentation ---------------------------------------------------

    def L_set(self) -> set[int]:
        return {v for v in range(self.g.n) if self.in_L[v]}

    def check_conditions(self) -> list[str]:
        """Recompute everything from scratch and report violations of the
        oracle conditions; empty list means healthy. Test instrumentation
        only, cost is O(n * pp)."""
        g, p = self.g, self.p
        L = self.L_set()
        violations: list[str] = []
        for w in range(g.n):
            nw = g.adj_set(w)
            if self.NL[w] != nw & L:
                violations.append(f"NL[{w}] inconsistent")
            if self.NR[w] != nw - L:
                violations.append(f"NR[{w}] inconsistent")
        for u in self.cand:
            if u not in L:
                violations.append(f"candidate {u} not in L")
        for w in sorted(L):
            mw = self.M[w]
            t2 = t2_set(g, L, w)
            ok = True
            if len(mw.left) != len(mw.right) or mw.left & mw.right:
                violations.append(f"M[{w}] sides malformed")
                ok = False
            for r, l in mw.edges():
                if mw.partner.get(l) != r:
                    violations.append(f"M[{w}] partner map not involutive")
                    ok = False
                if r not in self.NR[w] or l not in t2 or not g.has_edge(r, l):
                    violations.append(f"M[{w}] edge ({r},{l}) invalid")
                    ok = False
            if ok:
                for r in self.NR[w]:
                    if r in mw.right:
                        continue
                    for l in g.neighbors(r):
                        if l in t2 and l not in mw.left:
                            violations.append(
                                f"M[{w}] not maximal: addable edge ({r},{l})")
                            break
                    else:
                        continue
                    break
            if w not in self.cand and len(self.NL[w]) + len(mw) < p + 1:
                violations.append(f"non-candidate {w} below the p+1 bound")
            if w not in self.cand and exact_pp2(g, L, w) <= p:
                violations.append(f"vertex {w} with pp2 <= p missing from Cand")
        return violations

    def exact_matching_size(self, v: int) -> int:
        """Independent maximum-matching size between N_R(v) and T2_L(v)."""
        t2 = t2_set(self.g, self.L_set(), v)
        return len(max_bipartite_matching(self.NR[v], t2, self.g))
