#!/usr/bin/env python3
"""Print the optimized exponent table for k = 3..8 and check it against
the stored reference rows.

Usage: python scripts/reproduce_params.py [--k 3..12] [--format json]
"""

import argparse
import sys

from detcover.cli import main as cli_main


def run() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--k", default="3..8")
    ap.add_argument("--format", choices=["text", "json"], default="text")
    ap.add_argument("--no-check", action="store_true",
                    help="skip the reference comparison")
    args = ap.parse_args()
    argv = ["params", "--k", args.k, "--format", args.format]
    if not args.no_check:
        argv.append("--check")
    return cli_main(argv)


if __name__ == "__main__":
    sys.exit(run())
