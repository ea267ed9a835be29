#!/usr/bin/env python3
"""Scan circulant graphs for base points with constant sphere sizes but no (S2).

Every circulant is vertex-transitive, so (S1) holds at vertex 0; the scan
reports the inverse-closed generating sets where (S2) fails, together with
whether the convolution table is still a hypergroup.
"""

import argparse
import itertools
import json
import logging
import sys

from hyperwalk.coordinator import ProductivityCoordinator
from hyperwalk.exceptions import InvalidCayleySpecError
from hyperwalk.generators import cayley
from hyperwalk.types import CayleySpec, PointedGraph

_LOGGER = logging.getLogger("search_s1s2_corpus")


def inverse_closed_sets(n: int, max_size: int):
    """Yield inverse-closed generating sets of Z/nZ up to max_size elements."""
    classes = sorted({min(s, n - s) for s in range(1, n)})
    for size in range(1, len(classes) + 1):
        for chosen in itertools.combinations(classes, size):
            generators = sorted({g for s in chosen for g in (s, n - s)})
            if len(generators) <= max_size:
                yield tuple(generators)


def scan(min_order: int, max_order: int, max_degree: int) -> list[dict]:
    """Return the circulants whose base point satisfies (S1) but not (S2)."""
    found = []
    for n in range(min_order, max_order + 1):
        for generators in inverse_closed_sets(n, max_degree):
            try:
                graph = cayley(CayleySpec(generators, group_order=n))
            except InvalidCayleySpecError:
                continue
            coordinator = ProductivityCoordinator(PointedGraph(graph))
            report = coordinator.symmetry
            if not report.s1 or report.s2:
                continue
            verdict = coordinator.decide()
            witness = report.s2.witness
            found.append(
                {
                    "group_order": n,
                    "generators": list(generators),
                    "sphere_sizes": list(coordinator.profile.sphere_sizes),
                    "productive": verdict.productive,
                    "s2_witness": witness.to_payload() if witness else None,
                }
            )
            _LOGGER.info(
                "Z/%dZ on %s: (S2) fails, productive=%s",
                n,
                generators,
                verdict.productive,
            )
    return found


def main():
    """Run the scan and print the matches as JSON."""
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--min-order", type=int, default=4)
    parser.add_argument("--max-order", type=int, default=12)
    parser.add_argument("--max-degree", type=int, default=6)
    args = parser.parse_args()

    logging.basicConfig(level=logging.INFO, format="%(message)s", stream=sys.stderr)
    found = scan(args.min_order, args.max_order, args.max_degree)
    print(json.dumps(found, indent=2))
    print(f"{len(found)} circulant(s) with (S1) but not (S2)", file=sys.stderr)


if __name__ == "__main__":
    main()
