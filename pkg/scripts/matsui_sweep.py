#!/usr/bin/env python3
"""Replay the special-vertex adjacency criterion across an instance family.

Every generated matrix has exactly three ones per row; the sweep checks
that the two distinguished vertices are adjacent exactly when the
partition system is infeasible.
"""

import argparse
import sys

from polyadj.generators import infeasible_four_by_four
from polyadj.sweeps import matsui_instance_family, run_matsui_sweep


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument(
        "--widths",
        type=int,
        nargs="+",
        default=[3, 4, 5],
        help="column counts to generate (default: 3 4 5)",
    )
    ap.add_argument(
        "--rows",
        type=int,
        nargs="+",
        default=[1, 2, 3, 4],
        help="row counts to generate (default: 1 2 3 4)",
    )
    ap.add_argument("--max-dim", type=int, default=24)
    args = ap.parse_args()

    matrices = matsui_instance_family(tuple(args.widths), tuple(args.rows))
    matrices.append(infeasible_four_by_four())
    print(f"checking {len(matrices)} instances", file=sys.stderr)
    result = run_matsui_sweep(
        matrices,
        max_dim=args.max_dim,
        progress=lambda msg: print(msg, file=sys.stderr, end="\r"),
    )
    print(file=sys.stderr)
    print(f"instances: {result.instances}")
    print(f"empty partition system: {result.part_empty_instances}")
    print(f"failures: {len(result.failures)}")
    for a in result.failures:
        print(f"  rows={a.rows}")
    return 0 if result.all_hold else 1


if __name__ == "__main__":
    sys.exit(main())
