#!/usr/bin/env python3
"""Cross-validate the hull membership and adjacency routines.

Three independent oracles: the exhaustive Caratheodory-subset scan for
membership queries, the segment criterion for adjacency on arbitrary
random vertex sets, and the literal midpoint criterion on vertex sets
built from the polytope families, where the two rules coincide.
"""

import argparse
import sys

from polyadj.sweeps import (
    run_adjacency_crosscheck,
    run_family_midpoint_sweep,
    run_hull_crosscheck,
)


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--queries", type=int, default=1000)
    ap.add_argument("--adjacency-sets", type=int, default=100)
    ap.add_argument("--seed", type=int, default=20260819)
    args = ap.parse_args()

    tick = lambda msg: print(msg, file=sys.stderr, end="\r")

    hull = run_hull_crosscheck(args.queries, seed=args.seed, progress=tick)
    print(file=sys.stderr)
    print(
        f"membership queries: {hull.queries} "
        f"({hull.inside_answers} inside), disagreements: {hull.disagreements}"
    )

    segment = run_adjacency_crosscheck(
        args.adjacency_sets, seed=args.seed + 1, progress=tick
    )
    print(file=sys.stderr)
    print(
        f"random vertex sets vs segment rule: {segment.vertex_sets} "
        f"({segment.pairs} pairs), disagreements: {segment.disagreements}"
    )

    midpoint = run_family_midpoint_sweep(progress=tick)
    print(file=sys.stderr)
    print(
        f"family vertex sets vs midpoint rule: {midpoint.vertex_sets} "
        f"({midpoint.pairs} pairs), disagreements: {midpoint.disagreements}"
    )

    ok = hull.all_agree and segment.all_agree and midpoint.all_agree
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
