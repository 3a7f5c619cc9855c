#!/usr/bin/env python3
"""Grid-family scaling experiment: wall time and peak memory of decide()
as the edge count quadruples. Prints one row per grid size."""
import argparse
import time
import tracemalloc

from admkit.engine import compute, decide
from admkit.graph import generate


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", type=int, nargs="+",
                        default=[100, 200, 400])
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()

    p = compute(generate("grid", [args.sizes[0]] * 2)).value
    print(f"decide threshold p = {p}")
    print(f"{'side':>6} {'n':>9} {'m':>9} {'time_s':>9} {'peak_mb':>9}")
    prev = None
    for k in args.sizes:
        g = generate("grid", [k, k])
        best = min(_timed(g, p) for _ in range(args.repeats))
        tracemalloc.start()
        decide(generate("grid", [k, k]), p)
        peak = tracemalloc.get_traced_memory()[1] / 2**20
        tracemalloc.stop()
        note = ""
        if prev:
            note = f"  (time x{best / prev[0]:.2f}, mem x{peak / prev[1]:.2f})"
        print(f"{k:>6} {g.n:>9} {g.m:>9} {best:>9.3f} {peak:>9.1f}{note}")
        prev = (best, peak)


def _timed(g, p) -> float:
    t0 = time.perf_counter()
    assert decide(g, p).answer
    return time.perf_counter() - t0


if __name__ == "__main__":
    main()
