"""Simple undirected graphs with dense integer ids, plus baseline measures.

Vertices are 0..n-1. Input files may use arbitrary string labels; the loader
remaps them to dense ids in first-appearance order and keeps the original
labels around for output.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence


class GraphFormatError(ValueError):
    """Raised on malformed edge-list input."""


class Graph:
    """Immutable simple undirected graph.

    Adjacency lists are sorted by id; a parallel tuple of sets backs O(1)
    membership tests. No self-loops, no parallel edges.
    """

    __slots__ = ("n", "m", "_adj", "_adjset", "labels")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]],
                 labels: Optional[list[str]] = None):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        adjset: list[set[int]] = [set() for _ in range(n)]
        m = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if v in adjset[u]:
                raise ValueError(f"duplicate edge ({u},{v})")
            adjset[u].add(v)
            adjset[v].add(u)
            m += 1
        if labels is not None and len(labels) != n:
            raise ValueError("label list length must equal n")
        self.n = n
        self.m = m
        self._adjset = adjset
        self._adj = [sorted(s) for s in adjset]
        self.labels = labels

    def neighbors(self, v: int) -> list[int]:
        return self._adj[v]

    def adj_set(self, v: int) -> set[int]:
        return self._adjset[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adjset[u]

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in self._adj[u]:
                if u < v:
                    yield (u, v)

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def max_degree(self) -> int:
        return max((len(a) for a in self._adj), default=0)

    def validate(self) -> None:
        """Re-check the structural invariants; raises on violation."""
        total = 0
        for u in range(self.n):
            if u in self._adjset[u]:
                raise ValueError(f"self-loop at {u}")
            if len(self._adj[u]) != len(self._adjset[u]):
                raise ValueError(f"duplicate neighbour at {u}")
            for v in self._adj[u]:
                if u not in self._adjset[v]:
                    raise ValueError(f"asymmetric edge ({u},{v})")
            total += len(self._adj[u])
        if total != 2 * self.m:
            raise ValueError("edge count does not match adjacency")

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class Ordering:
    """A permutation of the vertices; the witness object for adm2 bounds."""

    sequence: tuple[int, ...]
    position: tuple[int, ...]

    @classmethod
    def from_sequence(cls, seq: Sequence[int]) -> "Ordering":
        n = len(seq)
        pos = [-1] * n
        for i, v in enumerate(seq):
            if not (0 <= v < n) or pos[v] != -1:
                raise ValueError("sequence is not a permutation of 0..n-1")
            pos[v] = i
        return cls(tuple(seq), tuple(pos))

    def __len__(self) -> int:
        return len(self.sequence)


@dataclass
class LoadReport:
    """Diagnostics from parsing a dirty edge-list file."""

    loops_dropped: int = 0
    duplicates_dropped: int = 0


def load_edge_list(source) -> tuple[Graph, LoadReport]:
    """Parse whitespace-separated edge lines into a Graph.

    `source` is an iterable of lines (text or bytes). Lines starting with
    '#' or '%' are comments, blank lines are skipped. Labels become dense
    ids in first-appearance order. Self-loops and duplicate edges (in
    either orientation) are dropped and counted in the report.
    """
    ids: dict[str, int] = {}
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    report = LoadReport()
    labels: list[str] = []
    lineno = 0
    for raw in source:
        lineno += 1
        line = raw.decode() if isinstance(raw, bytes) else raw
        line = line.strip()
        if not line or line[0] in "#%":
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise GraphFormatError(
                f"line {lineno}: expected two vertex labels, got {len(tokens)}")
        a, b = tokens
        for t in (a, b):
            if t not in ids:
                ids[t] = len(labels)
                labels.append(t)
        u, v = ids[a], ids[b]
        if u == v:
            report.loops_dropped += 1
            continue
        key = (u, v) if u < v else (v, u)
        if key in seen:
            report.duplicates_dropped += 1
            continue
        seen.add(key)
        edges.append(key)
    if not labels:
        raise GraphFormatError("empty input: no edges found")
    return Graph(len(labels), edges, labels), report


def write_edge_list(g: Graph, stream) -> None:
    """Emit one edge per line, ordered by dense ids with u < v.

    Edge lines carry the vertex labels so load/write round-trips are
    idempotent; a '#'-prefixed label-map header records the dense ids when
    the graph carries labels.
    """
    if g.labels is not None:
        for v in range(g.n):
            stream.write(f"# label {v} {g.labels[v]}\n")
    for u, v in g.edges():
        stream.write(f"{g.label(u)} {g.label(v)}\n")


def degeneracy(g: Graph) -> tuple[int, Ordering]:
    """Minimum d admitting an ordering with every vertex having <= d
    earlier neighbours, plus such an ordering (bucket-queue peeling).
    """
    n = g.n
    if n == 0:
        return 0, Ordering.from_sequence([])
    deg = [g.degree(v) for v in range(n)]
    maxdeg = max(deg)
    # bucket sort vertices by degree
    bins = [0] * (maxdeg + 1)
    for d in deg:
        bins[d] += 1
    start = 0
    for d in range(maxdeg + 1):
        bins[d], start = start, start + bins[d]
    vert = [0] * n
    pos = [0] * n
    for v in range(n):
        pos[v] = bins[deg[v]]
        vert[pos[v]] = v
        bins[deg[v]] += 1
    for d in range(maxdeg, 0, -1):
        bins[d] = bins[d - 1]
    bins[0] = 0
    removed = [False] * n
    k = 0
    order = []
    for i in range(n):
        v = vert[i]
        k = max(k, deg[v])
        removed[v] = True
        order.append(v)
        for u in g.neighbors(v):
            if removed[u] or deg[u] <= deg[v]:
                continue
            du = deg[u]
            pu, pw = pos[u], bins[du]
            w = vert[pw]
            if u != w:
                vert[pu], vert[pw] = w, u
                pos[u], pos[w] = pw, pu
            bins[du] += 1
            deg[u] -= 1
    # peeling removes low-degree vertices first; reversing puts each
    # vertex after all but <= k of its neighbours
    order.reverse()
    return k, Ordering.from_sequence(order)


def subdivide_once(g: Graph) -> Graph:
    """Replace every edge by a length-2 path through a fresh vertex."""
    edges = []
    n = g.n
    labels: Optional[list[str]] = None
    if g.labels is not None:
        labels = list(g.labels)
    for i, (u, v) in enumerate(g.edges()):
        w = n + i
        edges.append((u, w))
        edges.append((w, v))
        if labels is not None:
            labels.append(f"{g.labels[u]}~{g.labels[v]}")
    return Graph(n + g.m, edges, labels)


def generate(family: str, params: Sequence[int], seed: int = 0) -> Graph:
    """Deterministic synthetic graph families for tests and benchmarks.

    Families: clique(n), cycle(n>=3), path(n), star(k leaves),
    grid(rows, cols) or grid(k), gnm(n, m).
    """
    if family == "clique":
        (n,) = params
        return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])
    if family == "cycle":
        (n,) = params
        if n < 3:
            raise ValueError("cycle needs n >= 3")
        return Graph(n, [(v, (v + 1) % n) for v in range(n)])
    if family == "path":
        (n,) = params
        return Graph(n, [(v, v + 1) for v in range(n - 1)])
    if family == "star":
        (k,) = params
        return Graph(k + 1, [(0, v) for v in range(1, k + 1)])
    if family == "grid":
        if len(params) == 1:
            rows = cols = params[0]
        else:
            rows, cols = params
        edges = []
        for r in range(rows):
            for c in range(cols):
                v = r * cols + c
                if c + 1 < cols:
                    edges.append((v, v + 1))
                if r + 1 < rows:
                    edges.append((v, v + cols))
        return Graph(rows * cols, edges)
    if family == "gnm":
        n, m = params
        total = n * (n - 1) // 2
        if m > total:
            raise ValueError(f"gnm: m={m} exceeds {total} possible edges")
        rng = random.Random(seed)
        idxs = rng.sample(range(total), m)
        edges = []
        for idx in idxs:
            # invert idx -> (u,v), u < v, over the lexicographic pair order
            u = 0
            remaining = idx
            row = n - 1
            while remaining >= row:
                remaining -= row
                u += 1
                row -= 1
            edges.append((u, u + 1 + remaining))
        return Graph(n, edges)
    raise ValueError(f"unknown family {family!r}")


def clustering_coefficient(g: Graph) -> float:
    """Mean over vertices of triangles(v) / C(deg(v), 2); degree < 2 counts 0."""
    if g.n == 0:
        return 0.0
    total = 0.0
    for v in range(g.n):
        d = g.degree(v)
        if d < 2:
            continue
        nv = g.adj_set(v)
        tri = 0
        for u in g.neighbors(v):
            tri += len(nv & g.adj_set(u))
        tri //= 2
        total += tri / (d * (d - 1) / 2)
    return total / g.n


@dataclass
class GraphStats:
    n: int
    m: int
    avg_degree: float
    max_degree: int
    degeneracy: int
    clustering_coefficient: float


def stats(g: Graph) -> GraphStats:
    d, _ = degeneracy(g)
    return GraphStats(
        n=g.n,
        m=g.m,
        avg_degree=2 * g.m / g.n if g.n else 0.0,
        max_degree=g.max_degree(),
        degeneracy=d,
        clustering_coefficient=clustering_coefficient(g),
    )
