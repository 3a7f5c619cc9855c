"""Exact 2-path-packing values, independent of the incremental oracle.

pp2_L(v) counts the largest family of length-<=2 paths from v that end in L,
avoid L internally, and are vertex-disjoint except at v. With a maximum
matching between N_R(v) and the two-step set T2_L(v) this equals
|N_L(v)| + |matching|; these routines compute that directly and also by
brute-force enumeration, so they can certify each other and the oracle.
"""
from __future__ import annotations

from typing import AbstractSet, Iterable

from .graph import Graph

BRUTE_FORCE_DEGREE_CAP = 12


def t2_set(g: Graph, L: AbstractSet[int], v: int) -> set[int]:
    """Vertices of L, not v and not adjacent to v, reachable via a 2-path
    whose middle vertex lies outside L."""
    nv = g.adj_set(v)
    out: set[int] = set()
    for x in g.neighbors(v):
        if x in L:
            continue
        for y in g.neighbors(x):
            if y != v and y in L and y not in nv:
                out.add(y)
    return out


def max_bipartite_matching(right: Iterable[int], left: AbstractSet[int],
                           g: Graph) -> dict[int, int]:
    """Maximum matching between `right` and `left` over edges of g,
    by Kuhn's augmenting-path search. Returns the right->left map."""
    match_left: dict[int, int] = {}
    match_right: dict[int, int] = {}

    def try_augment(r: int, visited: set[int]) -> bool:
        for w in g.neighbors(r):
            if w in left and w not in visited:
                visited.add(w)
                if w not in match_left or try_augment(match_left[w], visited):
                    match_left[w] = r
                    match_right[r] = w
                    return True
        return False

    for r in sorted(right):
        try_augment(r, set())
    return match_right


def exact_pp2(g: Graph, L: AbstractSet[int], v: int) -> int:
    """pp2_L(v) via |N_L(v)| plus a maximum matching between N_R(v) and
    T2_L(v). Requires v in L."""
    if v not in L:
        raise ValueError(f"vertex {v} is not in L")
    nl = sum(1 for u in g.neighbors(v) if u in L)
    nr = [u for u in g.neighbors(v) if u not in L]
    t2 = t2_set(g, L, v)
    return nl + len(max_bipartite_matching(nr, t2, g))


def brute_force_pp2(g: Graph, L: AbstractSet[int], v: int) -> int:
    """pp2_L(v) by enumerating path families directly; the testing oracle.

    Capped at deg(v) <= BRUTE_FORCE_DEGREE_CAP since the search is
    exponential in the candidate count.
    """
    if v not in L:
        raise ValueError(f"vertex {v} is not in L")
    if g.degree(v) > BRUTE_FORCE_DEGREE_CAP:
        raise ValueError(
            f"brute_force_pp2 requires deg(v) <= {BRUTE_FORCE_DEGREE_CAP}")
    candidates: list[tuple[int, ...]] = []
    for u in g.neighbors(v):
        if u in L:
            candidates.append((u,))
    for x in g.neighbors(v):
        if x in L:
            continue
        for y in g.neighbors(x):
            if y != v and y in L:
                candidates.append((x, y))

    best = 0

    def extend(i: int, used: set[int], count: int) -> None:
        nonlocal best
        if count > best:
            best = count
        if count + (len(candidates) - i) <= best:
            return
        for j in range(i, len(candidates)):
            path = candidates[j]
            if any(t in used for t in path):
                continue
            used.update(path)
            extend(j + 1, used, count + 1)
            used.difference_update(path)

    extend(0, set(), 0)
    return best
