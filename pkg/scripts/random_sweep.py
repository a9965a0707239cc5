#!/usr/bin/env python3
"""Randomized cross-validation of the enumerator against the brute-force
oracle.

Generates small random temporal graphs across a range of edge densities and
checks, for every window width, plex parameter, and heuristic-flag
combination, that the enumerator's output matches exhaustive ground truth.
Connected mode is compared against the size-filtered oracle set.
"""

import argparse
import random
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from tkplex.graph import TemporalGraph
from tkplex.instrumentation import InvariantMonitor, InvariantViolation
from tkplex.oracle import enumerate_all_maximal
from tkplex.search import SearchConfig, collect_maximal_plexes

DENSITIES = [0.05, 0.1, 0.2, 0.3, 0.45, 0.6]


def random_graph(rng: random.Random, n: int, omega: int, density: float) -> TemporalGraph:
    edges = {
        (t, u, v)
        for t in range(1, omega + 1)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < density
    }
    edges.add((omega, 0, 1))
    return TemporalGraph(tuple("abcdefgh"[:n]), tuple(sorted(edges)), omega)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--graphs", type=int, default=200)
    parser.add_argument("--seed", type=int, default=20240817)
    parser.add_argument("--max-vertices", type=int, default=6)
    parser.add_argument("--max-lifetime", type=int, default=8)
    parser.add_argument("--instrument", action="store_true",
                        help="also run the per-call invariant checks")
    args = parser.parse_args()

    rng = random.Random(args.seed)
    cases = 0
    mismatches = 0
    for i in range(args.graphs):
        graph = random_graph(
            rng,
            rng.randint(2, args.max_vertices),
            rng.randint(2, args.max_lifetime),
            DENSITIES[i % len(DENSITIES)],
        )
        for delta in (0, 1, 2):
            if graph.lifetime - delta < 1:
                continue
            for k in (1, 2, 3):
                truth = enumerate_all_maximal(graph, delta, k).as_set()
                for pivoting in (False, True):
                    for connectedness in (False, True):
                        cases += 1
                        config = SearchConfig(
                            delta=delta, k=k,
                            pivoting=pivoting, connectedness=connectedness,
                        )
                        monitor = (
                            InvariantMonitor(graph, delta, k)
                            if args.instrument else None
                        )
                        try:
                            records, _ = collect_maximal_plexes(
                                graph, config, monitor=monitor
                            )
                        except InvariantViolation as exc:
                            mismatches += 1
                            print(f"invariant violation: {exc}")
                            continue
                        expected = (
                            {r for r in truth if len(r.vertices) >= 2 * k + 1}
                            if connectedness else truth
                        )
                        if set(records) != expected:
                            mismatches += 1
                            print(
                                f"mismatch: graph {i} delta={delta} k={k} "
                                f"pivoting={pivoting} connected={connectedness}"
                            )
    print(f"{cases} cases checked, {mismatches} mismatches")
    return 1 if mismatches else 0


if __name__ == "__main__":
    sys.exit(main())
