"""Exact 2-admissibility of sparse graphs."""

from .engine import AdmValue, DecideResult, compute, decide, greedy_exact, verify_ordering
from .graph import (
    Graph,
    GraphFormatError,
    Ordering,
    degeneracy,
    generate,
    load_edge_list,
    stats,
    subdivide_once,
    write_edge_list,
)
from .oracle import Matching, OracleState, OracleStateError
from .pp2 import brute_force_pp2, exact_pp2

__all__ = [
    "AdmValue",
    "DecideResult",
    "Graph",
    "GraphFormatError",
    "Matching",
    "OracleState",
    "OracleStateError",
    "Ordering",
    "brute_force_pp2",
    "compute",
    "decide",
    "degeneracy",
    "exact_pp2",
    "generate",
    "greedy_exact",
    "load_edge_list",
    "stats",
    "subdivide_once",
    "verify_ordering",
    "write_edge_list",
]
