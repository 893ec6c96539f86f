"""Placing linkages in the plane along a construction order.

A linkage pairs the structure graph with one positive length per edge.
Rigid sub-parts (non-trivial clusters) are realized once in a local chart
and then dropped onto their two anchor joints by a proper rotation, so a
cluster keeps its handedness; mirrored interiors of a rigid part are a
separate design that this library does not model.

Step placement: with the step base u, w at distance R3 and bar reaches R1
(from u) and R2 (from w), the apex sits at local coordinates

    x = (R1^2 + R3^2 - R2^2) / (2 R3),   y = sign * sqrt(R1^2 - x^2)

in the frame with u at the origin and w on the positive x axis.  Triangle
slack below -tol.triangle * perimeter raises; smaller deficits clamp y to
zero so extreme (flat) placements stay representable.
"""

import dataclasses
import itertools
import math

from .errors import DegenerateBase, TriangleViolation
from .graphs import (
    ConstructionPlan,
    ExtremeGraphSpec,
    Graph,
    construction_plan,
    edge_key,
    extreme_graph,
    extreme_graphs,
)
from .tolerances import DEFAULT, Tolerances


class Linkage:
    def __init__(self, graph: Graph, lengths, tol: Tolerances = DEFAULT):
        norm = {}
        for (u, v), val in lengths.items():
            norm[edge_key(u, v)] = float(val)
        if set(norm) != set(graph.edges):
            missing = set(graph.edges) - set(norm)
            extra = set(norm) - set(graph.edges)
            raise ValueError(
                "lengths do not match edges (missing %r, extra %r)" % (missing, extra)
            )
        if norm and min(norm.values()) <= 0.0:
            raise ValueError("edge lengths must be positive")
        self.graph = graph
        self.lengths = norm
        self.tol = tol
        self._charts = {}

    @property
    def scale(self):
        return max(self.lengths.values()) if self.lengths else 1.0

    def length(self, u, v):
        return self.lengths[edge_key(u, v)]

    def with_edge(self, u, v, value):
        key = edge_key(u, v)
        return Linkage(self.graph.with_edge(u, v), {**self.lengths, key: value}, self.tol)

    def restricted(self, graph: Graph):
        return Linkage(graph, {e: self.lengths[e] for e in graph.edges}, self.tol)

    def chart(self, cluster):
        """Local rigid coordinates of a cluster, built once and cached."""
        key = cluster.key()
        got = self._charts.get(key)
        if got is None:
            got = self._build_chart(cluster)
            self._charts[key] = got
        return got

    def _build_chart(self, cluster):
        if cluster.trivial:
            (u, v) = next(iter(cluster.edges))
            return {u: (0.0, 0.0), v: (self.length(u, v), 0.0)}
        base = min(cluster.edges)
        body = Graph(cluster.vertices, cluster.edges - {base})
        plan = construction_plan(body, base)
        real = realize(self, plan, self.length(*base), (1,) * len(plan.steps))
        return dict(real.positions)

    def virtual_length(self, cluster, a, b):
        ch = self.chart(cluster)
        (xa, ya), (xb, yb) = ch[a], ch[b]
        return math.hypot(xb - xa, yb - ya)

    def chart_angle(self, cluster, origin, toward):
        ch = self.chart(cluster)
        (xo, yo), (xt, yt) = ch[origin], ch[toward]
        return math.atan2(yt - yo, xt - xo)


@dataclasses.dataclass(frozen=True)
class Realization:
    positions: dict
    base: tuple
    base_length: float

    def pos(self, v):
        return self.positions[v]

    def distance(self, a, b):
        (xa, ya), (xb, yb) = self.positions[a], self.positions[b]
        return math.hypot(xb - xa, yb - ya)


def local_orientation(pu, pw, pv, tol: Tolerances = DEFAULT):
    """Side of pv relative to the ray pu -> pw: +1 left, -1 right, 0 flat."""
    ax, ay = pw[0] - pu[0], pw[1] - pu[1]
    bx, by = pv[0] - pu[0], pv[1] - pu[1]
    cross = ax * by - ay * bx
    gate = tol.orientation * math.hypot(ax, ay) * math.hypot(bx, by)
    if abs(cross) <= gate:
        return 0
    return 1 if cross > 0.0 else -1


def place_apex(pu, pw, r_u, r_w, sign, tol: Tolerances, step=0, vertex=None):
    dx, dy = pw[0] - pu[0], pw[1] - pu[1]
    r3 = math.hypot(dx, dy)
    scale = max(r_u, r_w, r3)
    if r3 <= tol.length * scale:
        raise DegenerateBase(
            "step %d: base joints coincide (width %.3g)" % (step, r3)
        )
    perim = r_u + r_w + r3
    deficit = min(r_u + r_w - r3, r_u + r3 - r_w, r_w + r3 - r_u)
    if deficit < -tol.triangle * perim:
        raise TriangleViolation(step, vertex, r3, r_u, r_w)
    x = (r_u * r_u + r3 * r3 - r_w * r_w) / (2.0 * r3)
    y = sign * math.sqrt(max(r_u * r_u - x * x, 0.0))
    ex, ey = dx / r3, dy / r3
    return (pu[0] + x * ex - y * ey, pu[1] + x * ey + y * ex)


def _drop_cluster(linkage, cluster, a1, a2, pos):
    chart = linkage.chart(cluster)
    c1, c2 = chart[a1], chart[a2]
    g1, g2 = pos[a1], pos[a2]
    spin = math.atan2(g2[1] - g1[1], g2[0] - g1[0]) - math.atan2(
        c2[1] - c1[1], c2[0] - c1[0]
    )
    cs, sn = math.cos(spin), math.sin(spin)
    for v, (x, y) in chart.items():
        if v in pos:
            continue
        rx, ry = x - c1[0], y - c1[1]
        pos[v] = (g1[0] + cs * rx - sn * ry, g1[1] + sn * rx + cs * ry)


def realize(
    linkage: Linkage,
    plan: ConstructionPlan,
    base_length,
    sigma=None,
    tol: Tolerances = None,
) -> Realization:
    tol = tol or linkage.tol
    if sigma is None:
        sigma = (1,) * len(plan.steps)
    if len(sigma) != len(plan.steps):
        raise ValueError(
            "sign vector has %d entries for %d steps" % (len(sigma), len(plan.steps))
        )
    scale = max(linkage.scale, abs(base_length))
    if base_length <= tol.length * scale:
        raise DegenerateBase("base length %.3g is not positive" % base_length)
    a, b = plan.base
    pos = {a: (0.0, 0.0), b: (float(base_length), 0.0)}
    for step in plan.steps:
        u, w = step.base
        r_u = linkage.virtual_length(step.cluster_a, u, step.vertex)
        r_w = linkage.virtual_length(step.cluster_b, w, step.vertex)
        pos[step.vertex] = place_apex(
            pos[u], pos[w], r_u, r_w, sigma[step.index - 1], tol, step.index, step.vertex
        )
        for cl, anchor in ((step.cluster_a, u), (step.cluster_b, w)):
            if not cl.trivial:
                _drop_cluster(linkage, cl, anchor, step.vertex, pos)
    return Realization(pos, plan.base, float(base_length))


# ---------------------------------------------------------------------------
# Orientation types


def forward_type_of(real: Realization, plan: ConstructionPlan, tol: Tolerances = DEFAULT):
    out = []
    for step in plan.steps:
        u, w = step.base
        out.append(local_orientation(real.pos(u), real.pos(w), real.pos(step.vertex), tol))
    return tuple(out)


def reverse_type_of(real: Realization, spec: ExtremeGraphSpec, tol: Tolerances = DEFAULT):
    """Signs of the rebuild of an extreme graph, read off a realization."""
    return forward_type_of(real, spec.reverse_plan(), tol)


@dataclasses.dataclass(frozen=True)
class MinimalType:
    forward: tuple
    reverse: tuple

    def matches_forward(self, sigma):
        return all(t == 0 or t == s for t, s in zip(self.forward, sigma))


def minimal_type_of(
    real: Realization, plan: ConstructionPlan, tol: Tolerances = DEFAULT
) -> MinimalType:
    forward = forward_type_of(real, plan, tol)
    reverse = tuple(reverse_type_of(real, spec, tol) for spec in extreme_graphs(plan))
    return MinimalType(forward, reverse)


# ---------------------------------------------------------------------------
# Extreme (flat-step) configurations


def step_radii(linkage: Linkage, plan: ConstructionPlan, k):
    step = plan.steps[k - 1]
    u, w = step.base
    r_u = linkage.virtual_length(step.cluster_a, u, step.vertex)
    r_w = linkage.virtual_length(step.cluster_b, w, step.vertex)
    return r_u, r_w


@dataclasses.dataclass(frozen=True)
class ExtremeCandidate:
    step: int
    end: str
    value: float        # extreme length of the step's base pair
    lf: float           # base non-edge length in that configuration
    prefix_type: tuple  # forward signs of steps before the flat one
    realization: Realization


def realize_extreme_linkage(
    linkage: Linkage, plan: ConstructionPlan, k, tol: Tolerances = None
):
    """All placements of the k-th extreme graph, at both extreme lengths.

    The step bars are replaced by one edge at its shortest and longest
    reach; every sign assignment of the rebuilt graph is tried and the
    surviving configurations are reported with the base non-edge length
    they pin down.
    """
    tol = tol or linkage.tol
    spec = extreme_graph(plan, k)
    r_u, r_w = step_radii(linkage, plan, k)
    e = spec.extreme_edge
    rp = spec.reverse_plan()
    out = []
    for end, value in (("min", abs(r_u - r_w)), ("max", r_u + r_w)):
        if value <= tol.length * max(r_u, r_w):
            continue
        lengths = {ed: linkage.lengths[ed] for ed in spec.graph.edges if ed != e}
        lengths[e] = value
        sub = Linkage(spec.graph, lengths, tol)
        for bits in itertools.product((1, -1), repeat=len(rp.steps)):
            try:
                real = realize(sub, rp, value, bits, tol)
            except (TriangleViolation, DegenerateBase):
                continue
            lf = real.distance(*plan.base)
            prefix = tuple(
                local_orientation(
                    real.pos(st.base[0]), real.pos(st.base[1]), real.pos(st.vertex), tol
                )
                for st in plan.steps[: k - 1]
            )
            out.append(ExtremeCandidate(k, end, value, lf, prefix, real))
    return out


def genericity_report(linkage: Linkage, plan: ConstructionPlan, base_length, sigma, tol=None):
    """Realize and report how close the configuration is to degeneracy."""
    tol = tol or linkage.tol
    real = realize(linkage, plan, base_length, sigma, tol)
    tri_margin = math.inf
    orient_margin = math.inf
    for step in plan.steps:
        u, w = step.base
        r_u = linkage.virtual_length(step.cluster_a, u, step.vertex)
        r_w = linkage.virtual_length(step.cluster_b, w, step.vertex)
        r3 = real.distance(u, w)
        perim = r_u + r_w + r3
        deficit = min(r_u + r_w - r3, r_u + r3 - r_w, r_w + r3 - r_u)
        tri_margin = min(tri_margin, deficit / perim)
        (ux, uy), (wx, wy) = real.pos(u), real.pos(w)
        (vx, vy) = real.pos(step.vertex)
        cross = (wx - ux) * (vy - uy) - (wy - uy) * (vx - ux)
        denom = math.hypot(wx - ux, wy - uy) * math.hypot(vx - ux, vy - uy)
        if denom > 0:
            orient_margin = min(orient_margin, abs(cross) / denom)
    return {
        "triangle_margin": tri_margin,
        "orientation_margin": orient_margin,
        "realization": real,
    }
