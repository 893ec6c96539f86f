"""Closed interval sets and the diagonal coupling curve of a quadrilateral.

The coupling curve relates the two diagonals of a four-sided linkage.  With
x, y the squared diagonal lengths, planarity of the four joints makes the
bordered distance determinant vanish, giving a polynomial F(x, y) of degree
at most two in each variable.  For fixed x that is a quadratic in y whose two
roots are the convex and the folded placement of the far joint; the real
locus over the feasible range is a single smooth oval for generic side
lengths.  Everything here works on squared lengths internally and converts
at the edges.
"""

import dataclasses
import math

import numpy as np

from .errors import DomainError, Unrealizable
from .tolerances import DEFAULT, Tolerances


@dataclasses.dataclass(frozen=True)
class Interval:
    lo: float
    hi: float

    def __post_init__(self):
        if self.hi < self.lo:
            raise ValueError("interval [%r, %r] reversed" % (self.lo, self.hi))

    @property
    def length(self):
        return self.hi - self.lo

    @property
    def midpoint(self):
        return 0.5 * (self.lo + self.hi)

    def contains(self, x, slack=0.0):
        return self.lo - slack <= x <= self.hi + slack


@dataclasses.dataclass(frozen=True)
class IntervalSet:
    spans: tuple = ()

    @staticmethod
    def from_pairs(pairs):
        items = sorted((float(lo), float(hi)) for lo, hi in pairs if hi >= lo)
        merged = []
        for lo, hi in items:
            if merged and lo <= merged[-1][1]:
                merged[-1][1] = max(merged[-1][1], hi)
            else:
                merged.append([lo, hi])
        return IntervalSet(tuple(Interval(lo, hi) for lo, hi in merged))

    @staticmethod
    def whole(lo, hi):
        return IntervalSet.from_pairs([(lo, hi)])

    @staticmethod
    def point(x):
        return IntervalSet.from_pairs([(x, x)])

    @staticmethod
    def empty():
        return IntervalSet(())

    def __bool__(self):
        return bool(self.spans)

    def __iter__(self):
        return iter(self.spans)

    def __len__(self):
        return len(self.spans)

    @property
    def measure(self):
        return sum(s.length for s in self.spans)

    def contains(self, x, slack=0.0):
        return any(s.contains(x, slack) for s in self.spans)

    def endpoints(self):
        out = []
        for s in self.spans:
            out.append(s.lo)
            out.append(s.hi)
        return out

    def union(self, other):
        return IntervalSet.from_pairs(
            [(s.lo, s.hi) for s in self.spans] + [(s.lo, s.hi) for s in other.spans]
        )

    def intersect(self, other):
        out = []
        for a in self.spans:
            for b in other.spans:
                lo = max(a.lo, b.lo)
                hi = min(a.hi, b.hi)
                if lo <= hi:
                    out.append((lo, hi))
        return IntervalSet.from_pairs(out)

    def subtract_open(self, lo, hi):
        """Remove the open interval (lo, hi); shared endpoints survive."""
        out = []
        for s in self.spans:
            if lo >= s.hi or hi <= s.lo or lo >= hi:
                out.append((s.lo, s.hi))
                continue
            if lo >= s.lo:
                out.append((s.lo, lo))
            if hi <= s.hi:
                out.append((hi, s.hi))
        return IntervalSet.from_pairs(out)

    def clip(self, lo, hi):
        return self.intersect(IntervalSet.whole(lo, hi))


# ---------------------------------------------------------------------------
# Scalar helpers


def quadratic_roots(a, b, c, clamp=0.0):
    """Real roots of a t^2 + b t + c, ascending.

    A slightly negative discriminant (relative size up to ``clamp``) is
    treated as a double root, which is how tangency points come out of
    floating point.
    """
    scale = max(abs(a), abs(b), abs(c))
    if scale == 0.0:
        return []
    if abs(a) <= 1e-14 * scale:
        if abs(b) <= 1e-14 * scale:
            return []
        return [-c / b]
    disc = b * b - 4.0 * a * c
    mag = max(b * b, abs(4.0 * a * c))
    if disc < 0.0:
        if mag > 0.0 and -disc <= clamp * mag:
            disc = 0.0
        else:
            return []
    root = math.sqrt(disc)
    if root == 0.0:
        return [-b / (2.0 * a)]
    q = -0.5 * (b + math.copysign(root, b if b != 0.0 else 1.0))
    if q == 0.0:
        return sorted([0.0, -b / a])
    return sorted([q / a, c / q])


def cos_over(lo, hi):
    """Exact range of cos on [lo, hi]."""
    if hi - lo >= 2.0 * math.pi:
        return (-1.0, 1.0)
    vals = [math.cos(lo), math.cos(hi)]
    k = math.ceil(lo / math.pi)
    while k * math.pi <= hi:
        vals.append(1.0 if k % 2 == 0 else -1.0)
        k += 1
    return (min(vals), max(vals))


def hinge_lengths(r1, r2, angles: IntervalSet) -> IntervalSet:
    """Distances between two points at radii r1, r2 as their angle varies."""
    out = []
    for span in angles:
        clo, chi = cos_over(span.lo, span.hi)
        d2_lo = r1 * r1 + r2 * r2 - 2.0 * r1 * r2 * chi
        d2_hi = r1 * r1 + r2 * r2 - 2.0 * r1 * r2 * clo
        out.append((math.sqrt(max(d2_lo, 0.0)), math.sqrt(max(d2_hi, 0.0))))
    return IntervalSet.from_pairs(out)


def hinge_angles(r1, r2, lengths: IntervalSet) -> IntervalSet:
    """Inverse of hinge_lengths: opening angles in [0, pi], clipped."""
    out = []
    for span in lengths:
        angles = []
        for val in (span.lo, span.hi):
            c = (r1 * r1 + r2 * r2 - val * val) / (2.0 * r1 * r2)
            angles.append(math.acos(min(1.0, max(-1.0, c))))
        out.append((min(angles), max(angles)))
    return IntervalSet.from_pairs(out)


# ---------------------------------------------------------------------------
# Coupling curve


def distance_determinant(d12, d13, d14, d23, d24, d34):
    """Bordered determinant of squared distances; zero iff the four points
    fit in the plane."""
    m = np.array(
        [
            [0.0, 1.0, 1.0, 1.0, 1.0],
            [1.0, 0.0, d12, d13, d14],
            [1.0, d12, 0.0, d23, d24],
            [1.0, d13, d23, 0.0, d34],
            [1.0, d14, d24, d34, 0.0],
        ]
    )
    return float(np.linalg.det(m))


def _quad_through(ts, fs):
    """Coefficients (c0, c1, c2) of the parabola through three points."""
    t0, t1, t2 = ts
    f0, f1, f2 = fs
    d01 = (f1 - f0) / (t1 - t0)
    d12 = (f2 - f1) / (t2 - t1)
    c2 = (d12 - d01) / (t2 - t0)
    c1 = d01 - c2 * (t0 + t1)
    c0 = f0 - t0 * (c1 + c2 * t0)
    return (c0, c1, c2)


@dataclasses.dataclass(frozen=True)
class Arc:
    """One monotone quarter of the coupling oval.

    branch +1 is the far placement (the two off-diagonal joints on opposite
    sides), -1 the folded one.  half -1 covers first-diagonal values left of
    the curve's top or bottom point, +1 right of it.
    """

    branch: int
    half: int
    e1_lo: float
    e1_hi: float
    e2_lo: float
    e2_hi: float
    increasing: bool

    @property
    def label(self):
        return (self.branch, self.half)


class QuadCurve:
    """Coupling between the diagonals (P1P3, P2P4) of a four-sided loop.

    sides = (|P1P2|, |P2P3|, |P3P4|, |P4P1|).
    """

    def __init__(self, sides, tol: Tolerances = DEFAULT):
        s1, s2, s3, s4 = (float(s) for s in sides)
        if min(s1, s2, s3, s4) <= 0.0:
            raise ValueError("sides must be positive, got %r" % (sides,))
        self.sides = (s1, s2, s3, s4)
        self.tol = tol
        e1_lo = max(abs(s1 - s2), abs(s3 - s4))
        e1_hi = min(s1 + s2, s3 + s4)
        e2_lo = max(abs(s2 - s3), abs(s1 - s4))
        e2_hi = min(s2 + s3, s1 + s4)
        slack = tol.length * (s1 + s2 + s3 + s4)
        if e1_lo > e1_hi + slack or e2_lo > e2_hi + slack:
            raise Unrealizable(
                "four-sided loop with sides %r cannot close" % (sides,)
            )
        self.e1_range = (e1_lo, min(e1_hi, max(e1_lo, e1_hi)))
        self.e2_range = (e2_lo, min(e2_hi, max(e2_lo, e2_hi)))
        self.coeffs = self._fit()
        self._swapped = None

    # -- polynomial plumbing

    def _grid_axis(self, rng):
        lo, hi = rng[0] ** 2, rng[1] ** 2
        if hi - lo < 1e-9 * max(1.0, hi):
            pad = max(1.0, abs(hi)) * 1e-3
            lo, hi = lo - pad, hi + pad
        return (lo, 0.5 * (lo + hi), hi)

    def _fit(self):
        s1, s2, s3, s4 = self.sides
        d12, d23, d34, d14 = s1 * s1, s2 * s2, s3 * s3, s4 * s4
        xs = self._grid_axis(self.e1_range)
        ys = self._grid_axis(self.e2_range)
        in_y = []
        for x in xs:
            fs = [distance_determinant(d12, x, d14, d23, y, d34) for y in ys]
            in_y.append(_quad_through(ys, fs))
        coeffs = np.zeros((3, 3))
        for j in range(3):
            cj = _quad_through(xs, [in_y[i][j] for i in range(3)])
            for i in range(3):
                coeffs[i, j] = cj[i]
        return coeffs

    def value(self, x, y):
        c = self.coeffs
        return float(
            (c[0, 0] + y * (c[0, 1] + y * c[0, 2]))
            + x * (c[1, 0] + y * (c[1, 1] + y * c[1, 2]))
            + x * x * (c[2, 0] + y * (c[2, 1] + y * c[2, 2]))
        )

    def y_quadratic(self, x):
        c = self.coeffs
        return (
            c[0, 2] + x * (c[1, 2] + x * c[2, 2]),
            c[0, 1] + x * (c[1, 1] + x * c[2, 1]),
            c[0, 0] + x * (c[1, 0] + x * c[2, 0]),
        )

    def x_quadratic(self, y):
        c = self.coeffs
        return (
            c[2, 0] + y * (c[2, 1] + y * c[2, 2]),
            c[1, 0] + y * (c[1, 1] + y * c[1, 2]),
            c[0, 0] + y * (c[0, 1] + y * c[0, 2]),
        )

    # -- pointwise evaluation

    def _clamp(self):
        return 1e4 * self.tol.length

    def e2_at(self, e1):
        """Both second-diagonal values at a first-diagonal length, ascending."""
        a, b, c = self.y_quadratic(e1 * e1)
        ys = [y for y in quadratic_roots(a, b, c, clamp=self._clamp()) if y > -1e-12]
        return [math.sqrt(max(y, 0.0)) for y in ys]

    def e1_at(self, e2):
        a, b, c = self.x_quadratic(e2 * e2)
        xs = [x for x in quadratic_roots(a, b, c, clamp=self._clamp()) if x > -1e-12]
        return [math.sqrt(max(x, 0.0)) for x in xs]

    def branch_midline(self, e1):
        """Squared-e2 level where the two branches would meet at this e1."""
        a, b, _ = self.y_quadratic(e1 * e1)
        if a == 0.0:
            return None
        return -b / (2.0 * a)

    def branch_of(self, e1, e2):
        mid = self.branch_midline(e1)
        if mid is None:
            return 1
        return 1 if e2 * e2 >= mid else -1

    # -- corners and arcs

    def corners(self):
        """Leftmost, rightmost, top and bottom points of the oval."""
        e1_lo, e1_hi = self.e1_range
        e2_lo, e2_hi = self.e2_range

        def meet_e2(e1):
            a, b, _ = self.y_quadratic(e1 * e1)
            if a == 0.0:
                ys = self.e2_at(e1)
                return ys[0] if ys else 0.0
            return math.sqrt(max(-b / (2.0 * a), 0.0))

        def meet_e1(e2):
            a, b, _ = self.x_quadratic(e2 * e2)
            if a == 0.0:
                xs = self.e1_at(e2)
                return xs[0] if xs else 0.0
            return math.sqrt(max(-b / (2.0 * a), 0.0))

        return {
            "left": (e1_lo, meet_e2(e1_lo)),
            "right": (e1_hi, meet_e2(e1_hi)),
            "top": (meet_e1(e2_hi), e2_hi),
            "bottom": (meet_e1(e2_lo), e2_lo),
        }

    def arcs(self):
        c = self.corners()
        (x_l, y_l), (x_r, y_r) = c["left"], c["right"]
        (x_t, y_t), (x_b, y_b) = c["top"], c["bottom"]
        out = [
            Arc(1, -1, x_l, x_t, min(y_l, y_t), max(y_l, y_t), y_t >= y_l),
            Arc(1, 1, x_t, x_r, min(y_t, y_r), max(y_t, y_r), y_r >= y_t),
            Arc(-1, -1, x_l, x_b, min(y_b, y_l), max(y_b, y_l), y_b >= y_l),
            Arc(-1, 1, x_b, x_r, min(y_b, y_r), max(y_b, y_r), y_r >= y_b),
        ]
        return [a for a in out if a.e1_hi >= a.e1_lo]

    def arc_of(self, e1, branch):
        """The monotone arc a realized point with this branch bit sits on."""
        c = self.corners()
        split = c["top"][0] if branch == 1 else c["bottom"][0]
        half = -1 if e1 <= split else 1
        for arc in self.arcs():
            if arc.label == (branch, half):
                return arc
        raise KeyError((branch, half))

    # -- interval mapping

    def _arc_e1_of_e2(self, arc, e2):
        at_lo = arc.e2_lo if arc.increasing else arc.e2_hi
        at_hi = arc.e2_hi if arc.increasing else arc.e2_lo
        snap = 1e-9 * (1.0 + abs(e2))
        # exact arc ends first: root splitting at tangency would otherwise
        # open phantom gaps between adjacent arc images
        if abs(e2 - at_lo) <= snap:
            return arc.e1_lo
        if abs(e2 - at_hi) <= snap:
            return arc.e1_hi
        xs = self.e1_at(e2)
        if not xs:
            return arc.e1_lo if abs(e2 - at_lo) <= abs(e2 - at_hi) else arc.e1_hi
        # the horizontal line hits both branches; keep roots on this arc's
        # branch, then the one inside (or nearest to) the arc's e1 window
        same_branch = [x for x in xs if self.branch_of(x, e2) == arc.branch]
        best = min(same_branch or xs, key=lambda x: self._arc_violation(arc, x))
        return min(max(best, arc.e1_lo), arc.e1_hi)

    @staticmethod
    def _arc_violation(arc, x):
        if x < arc.e1_lo:
            return arc.e1_lo - x
        if x > arc.e1_hi:
            return x - arc.e1_hi
        return 0.0

    def swapped(self):
        """The same loop read with the diagonals exchanged.

        Rotating the side labels by one corner turns e2 into the swapped
        curve's e1 and vice versa.  A point on the arc labeled (branch, half)
        here sits on the arc labeled (half, branch) of the swapped curve:
        each label bit records which side of one diagonal's line the other
        diagonal's endpoints fall on, and exchanging the diagonals exchanges
        the two bits.
        """
        if self._swapped is None:
            s1, s2, s3, s4 = self.sides
            other = QuadCurve((s2, s3, s4, s1), self.tol)
            other._swapped = self
            self._swapped = other
        return self._swapped

    def arc_images(self, lo, hi, arcs=None):
        """Per-arc first-diagonal images of one second-diagonal interval.

        One (lo, hi) pair per arc the interval reaches, never merged: a
        source piece crossing two branches reports two pieces even when
        their numeric endpoints touch.
        """
        chosen = self.arcs()
        if arcs is not None:
            allowed = {tuple(lbl) for lbl in arcs}
            chosen = [a for a in chosen if a.label in allowed]
        out = []
        for arc in chosen:
            slo, shi = max(lo, arc.e2_lo), min(hi, arc.e2_hi)
            if shi < slo:
                continue
            a = self._arc_e1_of_e2(arc, slo)
            b = self._arc_e1_of_e2(arc, shi)
            out.append((min(a, b), max(a, b)))
        return out

    def map_to_e1(self, source: IntervalSet, arcs=None) -> IntervalSet:
        """First-diagonal values reachable while the second stays in source.

        arcs restricts the search to the given labels; None means the whole
        oval.
        """
        out = []
        for span in source:
            out.extend(self.arc_images(span.lo, span.hi, arcs))
        return IntervalSet.from_pairs(out)


def quad_curve(sides, tol: Tolerances = DEFAULT) -> QuadCurve:
    return QuadCurve(sides, tol)


# ---------------------------------------------------------------------------
# Mapping primitives between coupled distance pairs


def _arc_labels(arcs):
    """Normalize an arc restriction to a set of labels, or None for all."""
    if arcs is None or arcs == "any":
        return None
    if isinstance(arcs, Arc):
        return {arcs.label}
    if (
        isinstance(arcs, tuple)
        and len(arcs) == 2
        and all(isinstance(v, int) for v in arcs)
    ):
        return {arcs}
    return {a.label if isinstance(a, Arc) else tuple(a) for a in arcs}


def solve_other_diagonal(curve: QuadCurve, e1, arc=None):
    """Second-diagonal lengths compatible with a first-diagonal length.

    Returns 0, 1 or 2 values, ascending.  arc restricts to the labeled
    monotone segments; None (or "any") accepts the whole oval.
    """
    labels = _arc_labels(arc)
    snap = 1e-9 * (1.0 + abs(e1))
    out = []
    for e2 in curve.e2_at(e1):
        if e2 <= snap:
            # zero-length diagonal: two joints coincide, not a usable pair
            continue
        if labels is not None:
            label = curve.arc_of(e1, curve.branch_of(e1, e2)).label
            if label not in labels:
                continue
        if out and abs(e2 - out[-1]) <= snap:
            continue
        out.append(e2)
    return out


def map_intervals_diagonal(curve: QuadCurve, source: IntervalSet, arcs=None):
    """Second-diagonal values reachable while the first stays in source.

    The inverse direction of QuadCurve.map_to_e1; arc labels are given in
    this curve's convention and translated for the swapped curve.
    """
    labels = _arc_labels(arcs)
    flipped = None if labels is None else [(h, b) for (b, h) in labels]
    return curve.swapped().map_to_e1(source, arcs=flipped)


def law_of_cosines_transfer(leg_a1, leg_a2, leg_b1, leg_b2, d, delta=0.0):
    """Carry a distance across a hinge with rigid legs on both sides.

    d spans the legs (leg_a1, leg_a2); the returned length spans
    (leg_b1, leg_b2), whose opening angle differs from the first by the
    fixed offset delta.
    """
    lo, hi = abs(leg_a1 - leg_a2), leg_a1 + leg_a2
    slack = 1e-12 * max(1.0, hi)
    if d < lo - slack or d > hi + slack:
        raise DomainError(
            "length %r outside [%r, %r] spanned by legs (%r, %r)"
            % (d, lo, hi, leg_a1, leg_a2)
        )
    c = (leg_a1 * leg_a1 + leg_a2 * leg_a2 - d * d) / (2.0 * leg_a1 * leg_a2)
    theta = math.acos(min(1.0, max(-1.0, c)))
    d2 = (
        leg_b1 * leg_b1
        + leg_b2 * leg_b2
        - 2.0 * leg_b1 * leg_b2 * math.cos(theta + delta)
    )
    return math.sqrt(max(d2, 0.0))


def transfer_piece(leg_a1, leg_a2, leg_b1, leg_b2, lo, hi, delta=0.0, sign=1):
    """Hinge transfer of one interval; None when outside the legs' reach.

    The opening angle on the target side is sign * theta + delta.
    """
    lo = max(lo, abs(leg_a1 - leg_a2))
    hi = min(hi, leg_a1 + leg_a2)
    if hi < lo:
        return None
    angles = []
    for val in (lo, hi):
        c = (leg_a1 * leg_a1 + leg_a2 * leg_a2 - val * val) / (2.0 * leg_a1 * leg_a2)
        angles.append(sign * math.acos(min(1.0, max(-1.0, c))) + delta)
    clo, chi = cos_over(min(angles), max(angles))
    d2_lo = leg_b1 * leg_b1 + leg_b2 * leg_b2 - 2.0 * leg_b1 * leg_b2 * chi
    d2_hi = leg_b1 * leg_b1 + leg_b2 * leg_b2 - 2.0 * leg_b1 * leg_b2 * clo
    return (math.sqrt(max(d2_lo, 0.0)), math.sqrt(max(d2_hi, 0.0)))


def transfer_intervals(
    leg_a1, leg_a2, leg_b1, leg_b2, source: IntervalSet, delta=0.0, sign=1
):
    """Interval-set version of the hinge transfer.

    Values of source outside what the first leg pair spans are clipped
    away; the result is normalized.
    """
    out = []
    for span in source:
        pair = transfer_piece(
            leg_a1, leg_a2, leg_b1, leg_b2, span.lo, span.hi, delta, sign
        )
        if pair is not None:
            out.append(pair)
    return IntervalSet.from_pairs(out)


@dataclasses.dataclass(frozen=True)
class TransferParams:
    """Hinge legs and angle offset for a chordal mapping step."""

    leg_a1: float
    leg_a2: float
    leg_b1: float
    leg_b2: float
    delta: float = 0.0
    sign: int = 1


def map_intervals_chordal(
    curve: QuadCurve, params: TransferParams, source: IntervalSet, arcs=None
):
    """Hinge transfer onto one diagonal, then across the coupling curve."""
    mid = transfer_intervals(
        params.leg_a1,
        params.leg_a2,
        params.leg_b1,
        params.leg_b2,
        source,
        delta=params.delta,
        sign=params.sign,
    )
    return map_intervals_diagonal(curve, mid, arcs=arcs)


def intersect(a: IntervalSet, b: IntervalSet) -> IntervalSet:
    return a.intersect(b)
