"""Base-pair interval propagation along a one-path construction.

Consecutive base pairs of a construction are geometrically coupled in one
of three ways: both are diagonals of a loop of four rigid pieces hinged in
a cycle, both hang off the same hinged pair of pieces, or one of them does
while the other is a diagonal reachable through an intermediate pair.  The
free pair's admissible lengths are computed by seeding the last pair with
its triangle bounds and mapping backward through one coupling per hop.

Mapping a set through a two-branch coupling can double the number of
intervals, so the full-type mode grows exponentially in the step count by
design and is capped by a budget.  Restricting every hop to the arc (or
hinge opening sign) carried by a witness realization keeps the image a
single interval, which is the minimal-type mode.

Clusters are charted with a fixed handedness throughout the package, so
the angle offset between two pairs hanging off the same hinge is a single
constant measured from the charts; only the hinge's opening sign is free.
"""

import dataclasses
import math

from .errors import BudgetExceeded, FourCycleNotFound, NotOnePath, Unrealizable
from .graphs import (
    ConstructionPlan,
    PathDecomposition,
    cluster_decomposition,
    last_level_and_paths,
)
from .intervals import Interval, IntervalSet, QuadCurve, transfer_piece
from .realization import (
    Linkage,
    Realization,
    realize_extreme_linkage,
    step_radii,
)
from .spaces import try_realize
from .tolerances import Tolerances

DEFAULT_MAX_INTERVALS = 2 ** 20


def _signed_angle(origin, first, second):
    """Angle from ray origin->first to ray origin->second, in (-pi, pi]."""
    a1 = math.atan2(first[1] - origin[1], first[0] - origin[0])
    a2 = math.atan2(second[1] - origin[1], second[0] - origin[0])
    d = a2 - a1
    return math.atan2(math.sin(d), math.cos(d))


def _wrap(angle):
    return math.atan2(math.sin(angle), math.cos(angle))


# ---------------------------------------------------------------------------
# Hop kinds


@dataclasses.dataclass(frozen=True)
class DiagonalHop:
    """Both pairs are diagonals of a cycle of four rigid pieces.

    corners = (a, c, b, d) in cyclic order around the loop, so cur = (a, b)
    plays the curve's first diagonal and nxt = (c, d) the second.
    """

    cur: tuple
    nxt: tuple
    corners: tuple
    curve: QuadCurve
    arcs: tuple = None

    def pieces(self, lo, hi):
        return self.curve.arc_images(lo, hi, arcs=self.arcs)

    def map(self, source: IntervalSet) -> IntervalSet:
        return self.curve.map_to_e1(source, arcs=self.arcs)


@dataclasses.dataclass(frozen=True)
class HingeHop:
    """Both pairs span the same two rigid pieces sharing one joint.

    The distance of either pair fixes the hinge opening up to sign; the
    two pairs' openings differ by the constant offset delta.  combos lists
    the (sign, delta) relations to union over.
    """

    cur: tuple
    nxt: tuple
    hinge: object
    legs_cur: tuple
    legs_nxt: tuple
    combos: tuple

    def pieces(self, lo, hi):
        out = []
        for sign, delta in self.combos:
            pair = transfer_piece(
                self.legs_nxt[0],
                self.legs_nxt[1],
                self.legs_cur[0],
                self.legs_cur[1],
                lo,
                hi,
                delta=delta,
                sign=sign,
            )
            if pair is not None:
                out.append(pair)
        return out

    def map(self, source: IntervalSet) -> IntervalSet:
        out = []
        for span in source:
            out.extend(self.pieces(span.lo, span.hi))
        return IntervalSet.from_pairs(out)


@dataclasses.dataclass(frozen=True)
class ChordalHop:
    """One pair reaches the other through an intermediate pair."""

    cur: tuple
    nxt: tuple
    first: object
    second: object

    def pieces(self, lo, hi):
        out = []
        for mlo, mhi in self.first.pieces(lo, hi):
            out.extend(self.second.pieces(mlo, mhi))
        return out

    def map(self, source: IntervalSet) -> IntervalSet:
        out = []
        for span in source:
            out.extend(self.pieces(span.lo, span.hi))
        return IntervalSet.from_pairs(out)


# ---------------------------------------------------------------------------
# Structure searches over the cluster decomposition


def _sorted_clusters(clusters):
    return sorted(clusters, key=lambda cl: cl.key())


def _containing(clusters, *vs):
    need = set(vs)
    return [cl for cl in clusters if need <= cl.vertices]


def _find_diagonal(linkage, clusters, cur, nxt, witness, tol):
    """Four pieces hinged in a cycle with cur and nxt as the diagonals."""
    for a, b in (cur, cur[::-1]):
        for c, d in (nxt, nxt[::-1]):
            if len({a, b, c, d}) != 4:
                continue
            for c1 in _containing(clusters, a, c):
                for c2 in _containing(clusters, c, b):
                    if c1.vertices & c2.vertices != {c}:
                        continue
                    for c3 in _containing(clusters, b, d):
                        if c2.vertices & c3.vertices != {b}:
                            continue
                        for c4 in _containing(clusters, d, a):
                            if c3.vertices & c4.vertices != {d}:
                                continue
                            if c4.vertices & c1.vertices != {a}:
                                continue
                            keys = {cl.key() for cl in (c1, c2, c3, c4)}
                            if len(keys) != 4:
                                continue
                            sides = (
                                linkage.virtual_length(c1, a, c),
                                linkage.virtual_length(c2, c, b),
                                linkage.virtual_length(c3, b, d),
                                linkage.virtual_length(c4, d, a),
                            )
                            curve = QuadCurve(sides, tol)
                            arcs = None
                            if witness is not None:
                                e1w = witness.distance(a, b)
                                e2w = witness.distance(c, d)
                                branch = curve.branch_of(e1w, e2w)
                                arcs = (curve.arc_of(e1w, branch).label,)
                            return DiagonalHop(cur, nxt, (a, c, b, d), curve, arcs)
    return None


def _hinged_pair(clusters, pair):
    """Cluster pairs sharing one joint with pair split across them."""
    out = []
    for i, ca in enumerate(clusters):
        for cb in clusters[i + 1:]:
            shared = ca.vertices & cb.vertices
            if len(shared) != 1:
                continue
            h = next(iter(shared))
            if h in pair:
                continue
            for x, y in (pair, pair[::-1]):
                if x in ca.vertices and y in cb.vertices:
                    out.append((ca, cb, h, x, y))
    return out


def _find_hinge(linkage, clusters, cur, nxt, witness, tol):
    """Both pairs span the same hinged cluster pair."""
    for ca, cb, h, p, q in _hinged_pair(clusters, cur):
        for x, y in (nxt, nxt[::-1]):
            if x not in ca.vertices or y not in cb.vertices:
                continue
            if x == h or y == h:
                continue
            legs_cur = (
                linkage.virtual_length(ca, h, p),
                linkage.virtual_length(cb, h, q),
            )
            legs_nxt = (
                linkage.virtual_length(ca, h, x),
                linkage.virtual_length(cb, h, y),
            )
            delta = _wrap(
                (linkage.chart_angle(cb, h, q) - linkage.chart_angle(cb, h, y))
                - (linkage.chart_angle(ca, h, p) - linkage.chart_angle(ca, h, x))
            )
            if witness is not None:
                th_nxt = _signed_angle(witness.pos(h), witness.pos(x), witness.pos(y))
                sign = 1 if th_nxt >= 0.0 else -1
                combos = ((sign, delta),)
            else:
                combos = ((1, delta), (-1, delta))
            return HingeHop(cur, nxt, h, legs_cur, legs_nxt, combos)
    return None


def _find_chordal(linkage, clusters, cur, nxt, witness, tol):
    """One pair spans a hinged cluster pair, the other is a diagonal
    reachable through an intermediate pair inside the same two pieces."""
    for chordal, diagonal, nxt_is_chordal in ((nxt, cur, True), (cur, nxt, False)):
        for ca, cb, h, x, y in _hinged_pair(clusters, chordal):
            for p in sorted(ca.vertices - {h}):
                for q in sorted(cb.vertices - {h}):
                    mid = (p, q)
                    if set(mid) & set(diagonal):
                        continue
                    if nxt_is_chordal:
                        inner = _find_hinge(
                            linkage, clusters, mid, chordal, witness, tol
                        )
                        outer = _find_diagonal(
                            linkage, clusters, diagonal, mid, witness, tol
                        )
                        if inner is None or outer is None:
                            continue
                        return ChordalHop(cur, nxt, inner, outer)
                    inner = _find_diagonal(
                        linkage, clusters, mid, diagonal, witness, tol
                    )
                    outer = _find_hinge(
                        linkage, clusters, chordal, mid, witness, tol
                    )
                    if inner is None or outer is None:
                        continue
                    return ChordalHop(cur, nxt, inner, outer)
    return None


def build_hop(linkage, clusters, cur, nxt, witness=None, tol=None):
    """Coupling between two consecutive base pairs, best structure first."""
    tol = tol or linkage.tol
    hop = _find_diagonal(linkage, clusters, cur, nxt, witness, tol)
    if hop is None:
        hop = _find_hinge(linkage, clusters, cur, nxt, witness, tol)
    if hop is None:
        hop = _find_chordal(linkage, clusters, cur, nxt, witness, tol)
    if hop is None:
        raise FourCycleNotFound(
            "no cluster four-cycle or shared hinge couples %r to %r" % (cur, nxt)
        )
    return hop


# ---------------------------------------------------------------------------
# Chain walk


def _pair_bounds(linkage, plan, tol):
    """Triangle bounds on every base pair, intersected over its steps."""
    bounds = {}
    for k in range(1, len(plan.steps) + 1):
        r_u, r_w = step_radii(linkage, plan, k)
        lo, hi = abs(r_u - r_w), r_u + r_w
        pair = plan.steps[k - 1].base
        if pair in bounds:
            lo, hi = max(lo, bounds[pair][0]), min(hi, bounds[pair][1])
        bounds[pair] = (lo, hi)
    return bounds


def qim(
    linkage: Linkage,
    plan: ConstructionPlan,
    mode="full",
    witness: Realization = None,
    tol: Tolerances = None,
    max_intervals=DEFAULT_MAX_INTERVALS,
) -> IntervalSet:
    """Admissible lengths of the free pair by backward interval mapping.

    mode "full" returns the whole space; "minimal" restricts every hop to
    the branch carried by the witness realization, so the result is at
    most one interval.  The plan must construct a single path over the
    free pair.

    Full mode keeps the pieces produced through distinct branches as
    separate spans instead of normalizing.  The doubling drives gaps
    toward zero geometrically, so deep chains have genuinely disjoint
    pieces whose endpoints collide in floating point; merging them would
    silently erase the structure the count is reporting.
    """
    tol = tol or linkage.tol
    if mode not in ("full", "minimal"):
        raise ValueError("mode must be 'full' or 'minimal', got %r" % (mode,))
    if mode == "minimal" and witness is None:
        raise ValueError("minimal mode needs a witness realization")
    decomp = last_level_and_paths(plan.graph, plan.base, plan)
    if not decomp.one_path:
        raise NotOnePath(
            "construction closes %d paths over the free pair"
            % len(decomp.paths)
        )
    chain = plan.distinct_base_pair_chain()
    clusters = _sorted_clusters(cluster_decomposition(plan.graph))
    bounds = _pair_bounds(linkage, plan, tol)
    look = witness if mode == "minimal" else None

    lo, hi = bounds[chain[-1]]
    if hi < lo:
        return IntervalSet.empty()
    pieces = [(lo, hi)]
    for i in reversed(range(len(chain) - 1)):
        hop = build_hop(linkage, clusters, chain[i], chain[i + 1], look, tol)
        mapped = []
        for plo, phi in pieces:
            mapped.extend(hop.pieces(plo, phi))
        if chain[i] in bounds:
            blo, bhi = bounds[chain[i]]
            if bhi < blo:
                return IntervalSet.empty()
            mapped = [
                (max(plo, blo), min(phi, bhi))
                for plo, phi in mapped
                if min(phi, bhi) >= max(plo, blo)
            ]
        pieces = mapped
        if len(pieces) > max_intervals:
            raise BudgetExceeded(
                "%d pieces after mapping to %r" % (len(pieces), chain[i])
            )
        if not pieces:
            return IntervalSet.empty()
    pieces.sort()
    if mode == "minimal":
        return IntervalSet.from_pairs(pieces)
    return IntervalSet(tuple(Interval(plo, phi) for plo, phi in pieces))


def qim_multipath(
    linkage: Linkage,
    decomposition,
    witness: Realization,
    tol: Tolerances = None,
) -> IntervalSet:
    """Intersection of the per-path spaces under one witness realization.

    Accepts a PathDecomposition or a ConstructionPlan to decompose.  Each
    path contributes at most one interval; the result is their
    intersection, possibly empty.
    """
    tol = tol or linkage.tol
    if isinstance(decomposition, ConstructionPlan):
        decomposition = last_level_and_paths(
            decomposition.graph, decomposition.base, decomposition
        )
    if not isinstance(decomposition, PathDecomposition):
        raise TypeError(
            "expected PathDecomposition or ConstructionPlan, got %r"
            % type(decomposition).__name__
        )
    out = None
    for _, sub in decomposition.paths:
        piece = qim(linkage, sub, mode="minimal", witness=witness, tol=tol)
        out = piece if out is None else out.intersect(piece)
        if out is not None and not out:
            return out
    return out if out is not None else IntervalSet.empty()


def default_witness(linkage: Linkage, plan: ConstructionPlan, tol=None):
    """Some realization of the whole linkage, found near an extreme one.

    The last step's extreme configurations pin down base lengths that sit
    on the boundary of the space; nudging inward from one of them lands in
    the interior.  The flat step is given both signs since either can be
    the realizable side.
    """
    tol = tol or linkage.tol
    scale = max(linkage.scale, 1.0)
    last = len(plan.steps)
    for cand in realize_extreme_linkage(linkage, plan, last, tol):
        prefix = tuple(s if s != 0 else 1 for s in cand.prefix_type)
        for tail in (1, -1):
            sigma = prefix + (tail,)
            for off in (0.0, 1e-9, -1e-9, 1e-7, -1e-7, 1e-5, -1e-5, 1e-3, -1e-3):
                real = try_realize(linkage, plan, cand.lf + off * scale, sigma, tol)
                if real is not None:
                    return real
    raise Unrealizable("no realization near any extreme configuration")
