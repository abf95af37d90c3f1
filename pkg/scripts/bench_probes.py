#!/usr/bin/env python3
"""Benchmark solver runs over generated instances and emit CSV.

Defaults sweep the partitioned solver at k = 3 over n = 6, 9, 12, 15,
where the probe counts should read 4, 8, 16, 32.  Pass --mode xkc for
the random-U solver (keep n modest: each attempt sweeps 2^(n - tn)
probes).

Usage:
    python scripts/bench_probes.py
    python scripts/bench_probes.py --mode xkc --n 6,9,12 --reps 5
"""

import argparse
import sys

from detcover.cli import main as cli_main


def run() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--mode", choices=["kdm", "xkc"], default="kdm")
    ap.add_argument("--k", type=int, default=3)
    ap.add_argument("--n", default="6,9,12,15")
    ap.add_argument("--reps", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--threads", type=int, default=1)
    ap.add_argument("--out", default="-")
    args = ap.parse_args()
    return cli_main(["bench", "--mode", args.mode, "--k", str(args.k),
                     "--n", args.n, "--reps", str(args.reps),
                     "--seed", str(args.seed), "--threads", str(args.threads),
                     "--out", args.out])


if __name__ == "__main__":
    sys.exit(run())
