"""Command-line front end: decide / compute / verify / stats / gen / batch.

Exit codes: 0 success (decide: YES), 1 decide: NO, 2 any error.
"""
from __future__ import annotations

import argparse
import csv
import json
import multiprocessing as mp
import sys
import time
import tracemalloc
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from .engine import compute, decide, read_ordering, verify_ordering, write_ordering
from .graph import Graph, GraphFormatError, generate, load_edge_list, stats, write_edge_list

CSV_COLUMNS = ["name", "n", "m", "avg_degree", "max_degree", "degeneracy",
               "adm2", "time_ms", "peak_mem_kb", "graph_mem_kb"]


@dataclass
class RunConfig:
    timeout_s: Optional[float] = None
    threads: int = 1
    seed: int = 0
    deterministic: bool = True
    track_memory: bool = True

    def __post_init__(self):
        if self.threads < 1:
            raise ValueError("threads must be >= 1")
        # the peak-memory counter is process-global; more than one in-flight
        # solver would pollute it
        if self.track_memory:
            self.threads = 1


def _load(path: str) -> Graph:
    with open(path, "r") as f:
        g, report = load_edge_list(f)
    if report.loops_dropped or report.duplicates_dropped:
        print(f"# dropped {report.loops_dropped} loops, "
              f"{report.duplicates_dropped} duplicate edges", file=sys.stderr)
    return g


def cmd_decide(args) -> int:
    g = _load(args.path)
    res = decide(g, args.p)
    if res.answer:
        print("YES")
        if args.order_out:
            with open(args.order_out, "w") as f:
                write_ordering(f, g, res.witness, p=args.p)
        return 0
    print("NO")
    return 1


def cmd_compute(args) -> int:
    g = _load(args.path)
    t0 = time.perf_counter()
    res = compute(g)
    elapsed = time.perf_counter() - t0
    if args.json:
        print(json.dumps({"adm2": res.value, "probes": res.probes,
                          "time_s": round(elapsed, 6), "n": g.n, "m": g.m}))
    else:
        print(f"adm2 = {res.value}  ({res.probes} decide calls, "
              f"{elapsed:.3f}s, n={g.n}, m={g.m})")
    if args.order_out:
        with open(args.order_out, "w") as f:
            write_ordering(f, g, res.witness, value=res.value, p=res.value)
    return 0


def cmd_verify(args) -> int:
    g = _load(args.path)
    with open(args.order_path, "r") as f:
        ordering = read_ordering(f, g)
    value = verify_ordering(g, ordering)
    print(f"max pp2 under ordering = {value}")
    return 0


def cmd_stats(args) -> int:
    g = _load(args.path)
    s = stats(g)
    if args.json:
        print(json.dumps(s.__dict__))
    else:
        for k, v in s.__dict__.items():
            print(f"{k} = {v}")
    return 0


def cmd_gen(args) -> int:
    g = generate(args.family, args.params, seed=args.seed)
    if args.out:
        with open(args.out, "w") as f:
            write_edge_list(g, f)
    else:
        write_edge_list(g, sys.stdout)
    return 0


# -- batch mode -------------------------------------------------------------

def _solve_one(path: str, track_memory: bool, conn) -> None:
    """Child-process worker: load, measure, compute, report one row."""
    name = Path(path).stem
    try:
        if track_memory:
            tracemalloc.start()
        t_load = time.perf_counter()
        with open(path, "r") as f:
            g, _ = load_edge_list(f)
        graph_kb = tracemalloc.get_traced_memory()[1] / 1024 if track_memory else 0.0
        s = stats(g)
        t0 = time.perf_counter()
        res = compute(g)
        elapsed_ms = (time.perf_counter() - t0) * 1000
        peak_kb = tracemalloc.get_traced_memory()[1] / 1024 if track_memory else 0.0
        conn.send({
            "name": name, "n": g.n, "m": g.m,
            "avg_degree": round(s.avg_degree, 4),
            "max_degree": s.max_degree, "degeneracy": s.degeneracy,
            "adm2": res.value, "time_ms": round(elapsed_ms, 3),
            "peak_mem_kb": round(peak_kb, 2),
            "graph_mem_kb": round(graph_kb, 2),
        })
    except Exception as exc:  # per-file failures must not abort the batch
        conn.send({"name": name, "adm2": f"error: {exc}"})
    finally:
        conn.close()


def _marker_row(name: str, marker: str) -> dict:
    row = {c: "" for c in CSV_COLUMNS}
    row["name"] = name
    row["adm2"] = marker
    return row


def run_batch(directory: str, out_csv: str, config: RunConfig) -> int:
    """Process every edge-list file in a directory into a stats CSV.

    Each network runs in its own process so timeouts can be enforced and
    peak-memory tracking starts from a clean heap. Rows are flushed as they
    complete.
    """
    files = sorted(str(p) for p in Path(directory).iterdir() if p.is_file())
    csv_file = open(out_csv, "w", newline="")
    writer = csv.DictWriter(csv_file, fieldnames=CSV_COLUMNS)
    writer.writeheader()
    csv_file.flush()
    if not config.track_memory:
        print("# memory tracking disabled; memory columns report 0",
              file=sys.stderr)

    pending = list(files)
    running: list[tuple[mp.Process, object, str, Optional[float]]] = []
    try:
        while pending or running:
            while pending and len(running) < config.threads:
                path = pending.pop(0)
                parent_conn, child_conn = mp.Pipe(duplex=False)
                proc = mp.Process(target=_solve_one,
                                  args=(path, config.track_memory, child_conn))
                proc.start()
                child_conn.close()
                deadline = (time.monotonic() + config.timeout_s
                            if config.timeout_s else None)
                running.append((proc, parent_conn, Path(path).stem, deadline))
            still = []
            for proc, conn, name, deadline in running:
                if conn.poll(0.02):
                    row = conn.recv()
                    proc.join()
                    writer.writerow({c: row.get(c, "") for c in CSV_COLUMNS})
                    csv_file.flush()
                elif not proc.is_alive():
                    proc.join()
                    writer.writerow(_marker_row(name, "error: worker died"))
                    csv_file.flush()
                elif deadline is not None and time.monotonic() > deadline:
                    proc.terminate()
                    proc.join()
                    writer.writerow(_marker_row(name, "timeout"))
                    csv_file.flush()
                else:
                    still.append((proc, conn, name, deadline))
            running = still
    finally:
        for proc, _, _, _ in running:
            proc.terminate()
        csv_file.close()
    return 0


def cmd_batch(args) -> int:
    config = RunConfig(timeout_s=args.timeout, threads=args.threads,
                       track_memory=not args.no_memory)
    return run_batch(args.dir, args.out, config)


# -- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="admkit",
        description="Exact 2-admissibility: decide, compute, verify, batch.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decide", help="is adm2(G) <= p?")
    p.add_argument("path")
    p.add_argument("-p", type=int, required=True)
    p.add_argument("--order-out", default=None)
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("compute", help="exact adm2 by binary search")
    p.add_argument("path")
    p.add_argument("--order-out", default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("verify", help="certify an ordering file")
    p.add_argument("path")
    p.add_argument("order_path")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("stats", help="basic graph statistics")
    p.add_argument("path")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("gen", help="synthetic graph families")
    p.add_argument("family",
                   choices=["clique", "cycle", "path", "star", "grid", "gnm"])
    p.add_argument("params", type=int, nargs="+")
    p.add_argument("-o", "--out", default=None)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("batch", help="process a directory of edge lists")
    p.add_argument("dir")
    p.add_argument("-o", "--out", required=True)
    p.add_argument("--timeout", type=float, default=None,
                   help="per-network timeout in seconds")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--no-memory", action="store_true",
                   help="disable peak-memory tracking")
    p.set_defaults(func=cmd_batch)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (OSError, GraphFormatError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
