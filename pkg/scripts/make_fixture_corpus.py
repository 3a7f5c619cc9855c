#!/usr/bin/env python3
"""Generate the synthetic fixture networks and batch-process them into a
stats CSV, exercising the same pipeline a real corpus run would use."""
import argparse
from pathlib import Path

from admkit.cli import RunConfig, run_batch
from admkit.graph import generate, write_edge_list

FIXTURES = [
    ("k5", "clique", [5]),
    ("c6", "cycle", [6]),
    ("p10", "path", [10]),
    ("star50", "star", [50]),
    ("grid3", "grid", [3, 3]),
    ("gnm", "gnm", [30, 60]),
]


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("outdir", type=Path)
    parser.add_argument("--csv", default=None,
                        help="stats CSV path (default: <outdir>/stats.csv)")
    parser.add_argument("--seed", type=int, default=7)
    args = parser.parse_args()

    corpus = args.outdir / "networks"
    corpus.mkdir(parents=True, exist_ok=True)
    for name, family, params in FIXTURES:
        with open(corpus / f"{name}.txt", "w") as f:
            write_edge_list(generate(family, params, seed=args.seed), f)
    out_csv = args.csv or str(args.outdir / "stats.csv")
    run_batch(str(corpus), out_csv, RunConfig())
    print(f"wrote {out_csv}")


if __name__ == "__main__":
    main()
