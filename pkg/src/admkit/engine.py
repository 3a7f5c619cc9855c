"""Deciding and computing the 2-admissibility, plus independent checkers.

decide() runs the greedy ordering driven by the incremental oracle;
compute() wraps it in a binary search between the degeneracy lower bound
and a doubled upper bound. greedy_exact() and verify_ordering() share no
state with the oracle and serve as slow certified references.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .graph import Graph, Ordering, degeneracy
from .oracle import OracleState
from .pp2 import exact_pp2


@dataclass
class DecideResult:
    answer: bool
    witness: Optional[Ordering]


@dataclass
class AdmValue:
    value: int
    witness: Ordering
    probes: int = 0


def decide(g: Graph, p: int) -> DecideResult:
    """Is adm2(g) <= p? TRUE comes with a witness ordering.

    Graphs with more than p*n edges are rejected outright: some vertex
    would have more than p left-neighbours under any ordering.
    """
    if p < 0:
        raise ValueError("p must be non-negative")
    if g.m > p * g.n:
        return DecideResult(False, None)
    state = OracleState(g, p)
    popped: list[int] = []
    for _ in range(g.n):
        v = state.pop_candidate()
        if v is None:
            return DecideResult(False, None)
        state.update(v)
        popped.append(v)
    # vertices were assigned positions n, n-1, ..., 1
    popped.reverse()
    return DecideResult(True, Ordering.from_sequence(popped))


def compute(g: Graph) -> AdmValue:
    """Exact adm2 by binary search over decide().

    Lower bound: the degeneracy (a 2-path packing contains one path per
    left-neighbour, so adm2 >= adm1). Upper bound: double p until decide
    accepts.
    """
    lo, _ = degeneracy(g)
    probes = 0

    def probe(p: int) -> DecideResult:
        nonlocal probes
        probes += 1
        return decide(g, p)

    res = probe(lo)
    if res.answer:
        return AdmValue(lo, res.witness, probes)
    known_false = lo
    p = max(lo, 1)
    if p == lo:
        p = 2 * p
    while True:
        res = probe(p)
        if res.answer:
            break
        known_false = p
        p *= 2
    hi, witness = p, res.witness
    while hi - known_false > 1:
        mid = (known_false + hi) // 2
        res = probe(mid)
        if res.answer:
            hi, witness = mid, res.witness
        else:
            known_false = mid
    return AdmValue(hi, witness, probes)


def greedy_exact(g: Graph) -> AdmValue:
    """Exact adm2 by repeatedly removing the vertex of minimum pp2.

    O(n^2) pp2 evaluations; verification-scale reference for compute().
    """
    L = set(range(g.n))
    removed: list[int] = []
    value = 0
    while L:
        best_v = -1
        best = None
        for v in sorted(L):
            val = exact_pp2(g, L, v)
            if best is None or val < best:
                best, best_v = val, v
        value = max(value, best)
        removed.append(best_v)
        L.discard(best_v)
    removed.reverse()
    return AdmValue(value, Ordering.from_sequence(removed))


def verify_ordering(g: Graph, o: Ordering) -> int:
    """Max pp2 of any vertex against its prefix: the certified value of a
    witness ordering, computed without any oracle state."""
    if len(o) != g.n:
        raise ValueError("ordering does not cover all vertices")
    L = set(range(g.n))
    worst = 0
    for v in reversed(o.sequence):
        worst = max(worst, exact_pp2(g, L, v))
        L.discard(v)
    return worst


def write_ordering(stream, g: Graph, o: Ordering, value: Optional[int] = None,
                   p: Optional[int] = None) -> None:
    """One vertex label per line, leftmost first, with a witness header."""
    if value is not None or p is not None:
        parts = ["#"]
        if value is not None:
            parts.append(f"adm2={value}")
        if p is not None:
            parts.append(f"p={p}")
        stream.write(" ".join(parts) + "\n")
    for v in o.sequence:
        stream.write(g.label(v) + "\n")


def read_ordering(stream, g: Graph) -> Ordering:
    """Parse an ordering file back against g's labels."""
    by_label = {g.label(v): v for v in range(g.n)}
    seq: list[int] = []
    for raw in stream:
        line = raw.decode() if isinstance(raw, bytes) else raw
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if line not in by_label:
            raise ValueError(f"unknown vertex label {line!r}")
        seq.append(by_label[line])
    return Ordering.from_sequence(seq)
