"""Print how the chain fixture's interval count doubles per level.

Each nested level multiplies the number of base-distance intervals by
two while the minimal-type description stays a single interval, which
is the whole point of keeping forward types around.
"""

import argparse
import time

from caylink import fixtures
from caylink.graphs import construction_plan
from caylink.qim import default_witness, qim


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-depth", type=int, default=10)
    ap.add_argument("--eps", type=float, default=1e-5)
    args = ap.parse_args()

    print("depth  vertices  pieces  full_s   minimal_s")
    for k in range(2, args.max_depth + 1):
        link = fixtures.nested_quad_chain(k, eps=args.eps)
        plan = construction_plan(link.graph, fixtures.BASE_PAIR)

        t0 = time.perf_counter()
        pieces = qim(link, plan, mode="full")
        t_full = time.perf_counter() - t0

        witness = default_witness(link, plan)
        t0 = time.perf_counter()
        minimal = qim(link, plan, mode="minimal", witness=witness)
        t_min = time.perf_counter() - t0

        n = len(link.graph.vertices)
        print(
            "%5d %9d %7d %8.4f %10.5f   (minimal: %d interval)"
            % (k, n, len(pieces), t_full, t_min, len(minimal))
        )


if __name__ == "__main__":
    main()
