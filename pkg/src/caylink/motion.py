"""Continuous motion between configurations of a one-dof linkage.

A continuous motion sweeps the base length across one oriented interval.
At an interval endpoint exactly one step goes flat; crossing it negates
that step's orientation and the motion continues in the adjacent oriented
interval.  Paths are walks over (type, interval) nodes glued at shared
endpoints, so a start configuration has at most two ways out and at most
two simple paths to any target.

Endpoint values are matched with a relative snap of 1e-9: endpoints
produced by the shared candidate table agree bit for bit across types,
refined ones agree to the bisection width, and genuinely distinct
extremes of well-separated fixtures sit far above this.
"""

import dataclasses
import itertools

from .errors import AmbiguousEndpoint, BudgetExceeded, TypeMismatch
from .intervals import Interval
from .realization import forward_type_of, minimal_type_of, realize
from .tolerances import DEFAULT


@dataclasses.dataclass(frozen=True)
class Leg:
    sigma: tuple
    interval: Interval
    direction: str  # "up" or "down"


@dataclasses.dataclass(frozen=True)
class MotionPath:
    legs: tuple
    transitions: tuple  # (base length, flipped step index) per leg change
    lf_start: float
    lf_target: float
    case: str  # "same-interval" or "cross-interval"


def flip_at_endpoint(sigma, k):
    """The forward type with entry k negated, counting steps from 1."""
    sigma = tuple(sigma)
    if not 1 <= k <= len(sigma):
        raise ValueError("step %d outside 1..%d" % (k, len(sigma)))
    return tuple(-s if i == k - 1 else s for i, s in enumerate(sigma))


def _close(a, b):
    return abs(a - b) <= 1e-9 * max(1.0, abs(a), abs(b))


def _endpoint_info(oriented, value):
    info = oriented.endpoints.get(value)
    if info is not None:
        return info
    best = None
    for v, i in oriented.endpoints.items():
        if _close(v, value) and (best is None or abs(v - value) < abs(best[0] - value)):
            best = (v, i)
    return best[1] if best else None


def _interval_at(oriented, lf):
    if oriented is None:
        return None
    for span in oriented.intervals:
        if span.lo - 1e-9 * max(1.0, abs(span.lo)) <= lf <= span.hi + 1e-9 * max(
            1.0, abs(span.hi)
        ):
            return span
    return None


def adjacent_interval(space, sigma, interval, endpoint):
    """Oriented interval on the far side of one endpoint, or None.

    The flat step at the endpoint is read off the endpoint record; its
    entry is flipped and the unique interval of the flipped type sharing
    the endpoint value is returned.
    """
    sigma = tuple(sigma)
    oriented = space.by_sigma.get(sigma)
    if oriented is None:
        return None
    value = interval.hi if endpoint == "hi" else interval.lo
    info = _endpoint_info(oriented, value)
    if info is None or info.kind != "candidate":
        return None
    zeros = info.zeros
    if len(zeros) > 1:
        raise AmbiguousEndpoint(
            "%d orientation entries vanish at %.12g" % (len(zeros), value)
        )
    if not zeros:
        return None
    tau = flip_at_endpoint(sigma, zeros[0] + 1)
    other = space.by_sigma.get(tau)
    if other is None:
        return None
    hits = [sp for sp in other.intervals if _close(sp.lo, value) or _close(sp.hi, value)]
    if not hits:
        return None
    hits.sort(key=lambda sp: min(abs(sp.lo - value), abs(sp.hi - value)))
    return tau, hits[0]


def _node_key(sigma, interval):
    return sigma, (interval.lo, interval.hi)


def _walk(space, start_node, leave, target_node, lf_start, lf_target):
    sigma, interval = start_node
    legs = [Leg(sigma, interval, "up" if leave == "hi" else "down")]
    transitions = []
    visited = {_node_key(*start_node)}
    exit_end = leave
    budget = 2 + 2 * sum(len(sp.intervals) for sp in space.by_sigma.values())
    for _ in range(budget):
        nxt = adjacent_interval(space, sigma, interval, exit_end)
        if nxt is None:
            return None
        value = interval.hi if exit_end == "hi" else interval.lo
        tau, piece = nxt
        flipped = next(
            i + 1 for i, (a, b) in enumerate(zip(sigma, tau)) if a != b
        )
        transitions.append((value, flipped))
        if _close(piece.lo, piece.hi):
            # isolated point: traversable only as a terminus
            direction, exit_end = "up", None
        elif _close(piece.lo, value):
            direction, exit_end = "up", "hi"
        elif _close(piece.hi, value):
            direction, exit_end = "down", "lo"
        else:
            return None
        legs.append(Leg(tau, piece, direction))
        if tau == target_node[0] and _close(piece.lo, target_node[1].lo) and _close(
            piece.hi, target_node[1].hi
        ):
            return MotionPath(
                tuple(legs), tuple(transitions), lf_start, lf_target, "cross-interval"
            )
        key = _node_key(tau, piece)
        if key in visited or exit_end is None:
            return None
        visited.add(key)
        sigma, interval = tau, piece
    return None


def _paths_between_nodes(space, start_node, lf_start, target_node, lf_target):
    if start_node[0] == target_node[0] and _close(
        start_node[1].lo, target_node[1].lo
    ) and _close(start_node[1].hi, target_node[1].hi):
        direction = "up" if lf_target >= lf_start else "down"
        leg = Leg(start_node[0], start_node[1], direction)
        return [MotionPath((leg,), (), lf_start, lf_target, "same-interval")]
    out = []
    for leave in ("hi", "lo"):
        path = _walk(space, start_node, leave, target_node, lf_start, lf_target)
        if path is not None:
            out.append(path)
    return out


def _resolve_node(space, real, tol=None):
    """The (type, interval) node a realization lives on, or None."""
    sigma = forward_type_of(real, space.plan, tol or DEFAULT)
    lf = real.base_length
    if all(s != 0 for s in sigma):
        span = _interval_at(space.by_sigma.get(sigma), lf)
        return (sigma, span) if span is not None else None
    # a flat step at the start belongs to both closed neighbours; take the
    # first resolved type whose set contains the length
    zero_at = [i for i, s in enumerate(sigma) if s == 0]
    for bits in itertools.product((1, -1), repeat=len(zero_at)):
        cand = list(sigma)
        for i, b in zip(zero_at, bits):
            cand[i] = b
        span = _interval_at(space.by_sigma.get(tuple(cand)), lf)
        if span is not None:
            return tuple(cand), span
    return None


def find_paths(space, start_real, target_real, tol=None):
    """At most two simple motion paths between two realizations."""
    if space.plan is None:
        raise ValueError("space carries no construction plan")
    start = _resolve_node(space, start_real, tol)
    target = _resolve_node(space, target_real, tol)
    if start is None or target is None:
        return []
    return _paths_between_nodes(
        space, start, start_real.base_length, target, target_real.base_length
    )


def path_same_minimal_type(space, start_real, target_real, tol=None):
    """The unique in-place motion when both realizations share all signs."""
    if space.plan is None:
        raise ValueError("space carries no construction plan")
    plan = space.plan
    a = minimal_type_of(start_real, plan, tol or DEFAULT)
    b = minimal_type_of(target_real, plan, tol or DEFAULT)
    if a.forward != b.forward:
        raise TypeMismatch("forward types differ: %r vs %r" % (a.forward, b.forward))
    if a.reverse != b.reverse:
        raise TypeMismatch("reverse types differ: %r vs %r" % (a.reverse, b.reverse))
    node = _resolve_node(space, start_real, tol)
    if node is None:
        raise TypeMismatch("start configuration is outside the computed space")
    sigma, span = node
    lf_s, lf_t = start_real.base_length, target_real.base_length
    if not span.lo - 1e-9 <= lf_t <= span.hi + 1e-9:
        raise TypeMismatch(
            "target length %.12g escapes the shared interval [%.12g, %.12g]"
            % (lf_t, span.lo, span.hi)
        )
    direction = "up" if lf_t >= lf_s else "down"
    return MotionPath(
        (Leg(sigma, span, direction),), (), lf_s, lf_t, "same-interval"
    )


def paths_between_cayley_configs(space, lf_start, lf_target, max_pairs=2**16):
    """All distinct motion paths between two base lengths, any types."""
    starts = []
    targets = []
    for sigma in sorted(space.by_sigma):
        oriented = space.by_sigma[sigma]
        s = _interval_at(oriented, lf_start)
        if s is not None:
            starts.append((sigma, s))
        t = _interval_at(oriented, lf_target)
        if t is not None:
            targets.append((sigma, t))
    if len(starts) * len(targets) > max_pairs:
        raise BudgetExceeded(
            "%d candidate type pairings; raise max_pairs to force the search"
            % (len(starts) * len(targets))
        )
    out = []
    seen = set()
    for start in starts:
        for target in targets:
            for path in _paths_between_nodes(
                space, start, lf_start, target, lf_target
            ):
                key = tuple(
                    (
                        leg.sigma,
                        round(leg.interval.lo, 12),
                        round(leg.interval.hi, 12),
                        leg.direction,
                    )
                    for leg in path.legs
                )
                if key not in seen:
                    seen.add(key)
                    out.append(path)
    return out


def sample_motion(linkage, plan, path, n):
    """Realized frames along a path, n per leg, duplicates collapsed."""
    if n < 1:
        raise ValueError("need at least one sample per leg")
    tol = linkage.tol
    margin = max(tol.length * linkage.scale, 1e-12)
    stops = []
    last = len(path.legs) - 1
    for idx, leg in enumerate(path.legs):
        lo, hi = leg.interval.lo, leg.interval.hi
        enter = path.lf_start if idx == 0 else (lo if leg.direction == "up" else hi)
        leave = path.lf_target if idx == last else (hi if leg.direction == "up" else lo)
        for j in range(n):
            t = j / (n - 1) if n > 1 else 0.0
            lf = enter + (leave - enter) * t
            if hi - lo > 2 * margin:
                lf = min(max(lf, lo + margin), hi - margin)
            else:
                lf = 0.5 * (lo + hi)
            if not stops or abs(stops[-1][0] - lf) > 1e-15 or stops[-1][1] != leg.sigma:
                stops.append((lf, leg.sigma))
    frames = []
    for lf, sigma in stops:
        frames.append(realize(linkage, plan, lf, sigma, tol))
    return frames
