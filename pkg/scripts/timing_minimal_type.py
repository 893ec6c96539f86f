"""Measure minimal-type interval computation against chain size.

Samples random generic chains, times the witness-driven computation,
and fits a log-log slope so the growth exponent is visible at a glance.
"""

import argparse
import math
import time

import numpy as np

from caylink import fixtures
from caylink.graphs import construction_plan
from caylink.qim import qim


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=20260814)
    ap.add_argument("--repeats", type=int, default=5)
    args = ap.parse_args()

    rng = np.random.default_rng(args.seed)
    rows = []
    print("vertices  best_s")
    for quads in (2, 4, 6, 10, 16, 22, 30, 38, 47):
        link, witness = fixtures.random_chain_with_witness(rng, quads)
        plan = construction_plan(link.graph, fixtures.BASE_PAIR)
        best = math.inf
        for _ in range(args.repeats):
            t0 = time.perf_counter()
            result = qim(link, plan, mode="minimal", witness=witness)
            best = min(best, time.perf_counter() - t0)
        assert len(result) <= 1
        n = len(link.graph.vertices)
        rows.append((n, best))
        print("%8d %9.5f" % (n, best))

    pts = [(math.log(n), math.log(t)) for n, t in rows if n >= 9]
    slope = float(np.polyfit([x for x, _ in pts], [y for _, y in pts], 1)[0])
    print("fitted growth exponent: %.2f" % slope)


if __name__ == "__main__":
    main()
