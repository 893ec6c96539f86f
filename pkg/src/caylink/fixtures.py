"""Linkage families used by experiments and tests.

The nested chain stacks quadrilaterals so that each level's coupling curve
doubles the number of distance intervals of the base non-edge: the new
sides are chosen so the short diagonal extreme of every level sits just
above the reach of the lower branch of the previous level's oval, and the
long extreme just inside the upper one.  Levels therefore keep both their
extreme values strictly interior and the interval count multiplies by two
per level.
"""

import math

from .graphs import Graph, edge_key
from .intervals import quad_curve
from .realization import Linkage, Realization
from .tolerances import DEFAULT


def chain_graph(quads: int) -> Graph:
    """quads quadrilaterals, consecutive ones sharing two sides."""
    if quads < 1:
        raise ValueError("need at least one quadrilateral")
    edges = [(1, 2), (2, 3), (3, 4), (1, 4)]
    for j in range(2, quads + 1):
        edges.append((j, j + 3))
        edges.append((j + 2, j + 3))
    return Graph.from_edges(edges)


BASE_PAIR = (1, 3)

DEFAULT_FIRST_QUAD = (8.0, 8.1, 7.9, 1.0)


def nested_quad_chain(quads: int, eps: float = 1e-5, first=DEFAULT_FIRST_QUAD) -> Linkage:
    """Chain whose distance set for the base non-edge has 2^(quads-1) pieces.

    first = (l(4,3), l(3,2), l(2,1), l(1,4)) of the initial quadrilateral.
    """
    s43, s32, s21, s14 = first
    lengths = {(3, 4): float(s43), (2, 3): float(s32), (1, 2): float(s21), (1, 4): float(s14)}
    for j in range(2, quads + 1):
        sides = (
            lengths[edge_key(j + 1, j + 2)],
            lengths[edge_key(j, j + 1)],
            lengths[edge_key(j - 1, j)],
            lengths[edge_key(j - 1, j + 2)],
        )
        curve = quad_curve(sides)
        corners = curve.corners()
        reach_hi = curve.e1_range[1]
        turn_hi = max(corners["top"][0], corners["bottom"][0])
        # the margin must stay well below the turn-to-reach gap, which
        # shrinks geometrically with the level; tighten it when the fixed
        # value would close the band
        gap = reach_hi - turn_hi
        level_eps = min(eps, 0.25 * gap / (reach_hi + turn_hi))
        long_side = 0.5 * ((1.0 - level_eps) * reach_hi + (1.0 + level_eps) * turn_hi)
        short_side = 0.5 * ((1.0 - level_eps) * reach_hi - (1.0 + level_eps) * turn_hi)
        if short_side <= 0.0:
            raise ValueError(
                "level %d collapsed (reach %.6g vs turn %.6g); the gap is "
                "below float resolution" % (j, reach_hi, turn_hi)
            )
        lengths[edge_key(j, j + 3)] = short_side
        lengths[edge_key(j + 2, j + 3)] = long_side
    return Linkage(chain_graph(quads), lengths)


def random_chain(rng, quads: int, spread: float = 4.0, margin: float = 0.08) -> Linkage:
    link, _ = random_chain_with_witness(rng, quads, spread, margin)
    return link


def random_chain_with_witness(rng, quads: int, spread: float = 4.0, margin: float = 0.08):
    """Random chain linkage built around a sampled witness placement.

    Lengths are read off random joint positions, so the witness itself is a
    valid configuration and the linkage is never empty.  Vertices are placed
    one quadrilateral at a time with rejection, which keeps sampling roughly
    linear in the chain depth.  Returns the linkage together with the
    witness realization.
    """
    cycles = [(1, 2, 3, 4)] + [(j, j + 1, j + 2, j + 3) for j in range(2, quads + 1)]
    g = chain_graph(quads)
    for _ in range(40):
        pts = {}
        if not _place_cycle(rng, pts, cycles[0], cycles[0], spread, margin):
            continue
        if all(
            _place_cycle(rng, pts, cyc, cyc[-1:], spread, margin)
            for cyc in cycles[1:]
        ):
            lengths = {e: math.dist(pts[e[0]], pts[e[1]]) for e in g.edges}
            witness = Realization(pts, BASE_PAIR, math.dist(pts[1], pts[3]))
            return Linkage(g, lengths), witness
    raise RuntimeError("could not sample a generic chain")


def _place_cycle(rng, pts, cycle, fresh, spread, margin):
    for _ in range(400):
        for v in fresh:
            x, y = rng.uniform(-spread, spread, size=2)
            pts[v] = (float(x), float(y))
        if _cycle_is_generic(pts, cycle, margin):
            return True
    return False


def _cycle_is_generic(pts, cycle, margin):
    # every triangle of the quadrilateral comfortably non-flat, no short bars
    a, b, c, d = cycle
    for (p, q, r) in ((a, b, c), (b, c, d), (c, d, a), (d, a, b)):
        (x1, y1), (x2, y2), (x3, y3) = pts[p], pts[q], pts[r]
        area2 = abs((x2 - x1) * (y3 - y1) - (y2 - y1) * (x3 - x1))
        l1 = math.dist(pts[p], pts[q])
        l2 = math.dist(pts[p], pts[r])
        if l1 < margin or l2 < margin or area2 < 2.0 * margin * l1 * l2:
            return False
    return True
