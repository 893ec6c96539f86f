"""Distance sets of the base non-edge, one orientation class at a time.

For a fixed sign vector the reachable base lengths form finitely many
closed intervals whose endpoints are lengths of flat (extreme) step
configurations.  The algorithm therefore collects every extreme
configuration length compatible with the sign vector, probes each one
and the open gaps between consecutive ones, and assembles maximal runs
of realizable gaps into closed intervals.  A candidate can fail its own
probe yet still carry an endpoint: near a flat configuration the base
length enters the step triangle under a square root, so rounding error
in the candidate value is amplified into a spurious deficit.  Such
endpoints are re-located by bisecting against an adjacent realizable
midpoint instead of being dropped.  Outward and no-candidate scans are
kept as a safety net so a missing candidate degrades to a slower search
instead of a wrong answer.
"""

import dataclasses
import itertools

from .errors import BudgetExceeded, DegenerateBase, NotSupported, TriangleViolation
from .intervals import IntervalSet
from .realization import (
    Linkage,
    forward_type_of,
    realize,
    realize_extreme_linkage,
)
from .tolerances import Tolerances


def try_realize(linkage, plan, base_length, sigma, tol=None):
    try:
        return realize(linkage, plan, base_length, sigma, tol)
    except (TriangleViolation, DegenerateBase):
        return None


def candidate_table(linkage: Linkage, plan, tol: Tolerances = None):
    """Extreme configurations of every step, shared by all sign vectors."""
    tol = tol or linkage.tol
    out = []
    for k in range(1, len(plan.steps) + 1):
        out.extend(realize_extreme_linkage(linkage, plan, k, tol))
    return out


def _prefix_ok(prefix, sigma):
    return all(p == 0 or p == s for p, s in zip(prefix, sigma))


@dataclasses.dataclass(frozen=True)
class EndpointInfo:
    value: float
    kind: str           # "candidate" or "searched"
    steps: tuple        # flat step indices that produce this endpoint
    ends: tuple         # matching extreme ends ("min"/"max"), aligned with steps
    type: tuple         # forward type at the endpoint (zeros at flat steps)

    @property
    def zeros(self):
        return tuple(i for i, t in enumerate(self.type) if t == 0)


@dataclasses.dataclass(frozen=True)
class OrientedCayleySpace:
    sigma: tuple
    intervals: IntervalSet
    endpoints: dict

    def endpoint_info(self, value):
        return self.endpoints.get(value)


@dataclasses.dataclass(frozen=True)
class CayleySpace:
    base: tuple
    by_sigma: dict
    plan: object = None

    def union(self) -> IntervalSet:
        out = IntervalSet.empty()
        for sp in self.by_sigma.values():
            out = out.union(sp.intervals)
        return out

    def spaces(self):
        return [self.by_sigma[s] for s in sorted(self.by_sigma)]


def _endpoint_type(linkage, plan, real, recs, tol):
    loose = dataclasses.replace(tol, orientation=max(tol.orientation, 1e-6))
    measured = list(forward_type_of(real, plan, loose))
    for rec in recs:
        measured[rec.step - 1] = 0
    return tuple(measured)


def _refine_boundary(linkage, plan, sigma, bad, good, tol, eps):
    """Bisect between a failing and a realizable length.

    Returns the realizable side of the boundary together with its
    realization, so callers can measure the endpoint type there.
    """
    real = try_realize(linkage, plan, good, sigma, tol)
    for _ in range(100):
        if abs(good - bad) <= eps:
            break
        mid = 0.5 * (bad + good)
        r = try_realize(linkage, plan, mid, sigma, tol)
        if r is None:
            bad = mid
        else:
            good, real = mid, r
    return good, real


def _search_out(linkage, plan, sigma, start, direction, tol, scale):
    """March from a realizable length to the boundary, then bisect."""
    eps = max(tol.length * scale, 1e-12)
    step = 0.25 * scale
    good = start
    for _ in range(64):
        nxt = good + direction * step
        if nxt <= eps or try_realize(linkage, plan, nxt, sigma, tol) is None:
            break
        good = nxt
    else:
        return good
    bad = max(good + direction * step, eps) if direction < 0 else good + step
    lo, hi = (bad, good) if direction < 0 else (good, bad)
    for _ in range(80):
        if hi - lo <= eps:
            break
        mid = 0.5 * (lo + hi)
        ok = try_realize(linkage, plan, mid, sigma, tol) is not None
        if direction > 0:
            lo, hi = (mid, hi) if ok else (lo, mid)
        else:
            lo, hi = (lo, mid) if ok else (mid, hi)
    return lo if direction > 0 else hi


def elr(
    linkage: Linkage,
    plan,
    sigma,
    tol: Tolerances = None,
    candidates=None,
) -> OrientedCayleySpace:
    """Distance set of the base non-edge for one sign vector."""
    tol = tol or linkage.tol
    m = len(plan.steps)
    if m == 0:
        raise NotSupported("plan has no steps; the base pair is unconstrained")
    sigma = tuple(int(s) for s in sigma)
    if len(sigma) != m or any(s not in (1, -1) for s in sigma):
        raise ValueError("sign vector must be +1/-1 entries, one per step")
    if candidates is None:
        candidates = candidate_table(linkage, plan, tol)
    scale = linkage.scale
    # dedup width: mirrored reverse realizations repeat a value bit-exactly,
    # while distinct extremes of different steps can sit ~1e-9 apart, so the
    # grouping has to stay far below the probing tolerances
    dedup = max(1e-3 * tol.length, 1e-12) * max(scale, 1.0)

    groups = []  # [representative value, records]
    for cand in sorted(candidates, key=lambda c: c.lf):
        if not _prefix_ok(cand.prefix_type, sigma):
            continue
        if groups and abs(cand.lf - groups[-1][0]) <= dedup:
            groups[-1][1].append(cand)
        else:
            groups.append([cand.lf, [cand]])

    probes = [
        (value, recs, try_realize(linkage, plan, value, sigma, tol))
        for value, recs in groups
    ]
    mids = []
    gap_ok = []
    for (a, _, _), (b, _, _) in zip(probes, probes[1:]):
        mid = 0.5 * (a + b)
        mids.append(mid)
        gap_ok.append(try_realize(linkage, plan, mid, sigma, tol) is not None)

    pieces = []
    endpoints = {}
    refine_eps = max(1e-3 * tol.length, 1e-13) * max(scale, 1.0)

    def note(value, recs, real):
        steps = tuple(sorted({r.step for r in recs}))
        ends = tuple(r.end for r in sorted(recs, key=lambda r: r.step))
        endpoints[value] = EndpointInfo(
            value, "candidate", steps, ends,
            _endpoint_type(linkage, plan, real, recs, tol),
        )

    i = 0
    n = len(probes)
    while i < n:
        j = i
        while j < n - 1 and gap_ok[j]:
            j += 1
        if i == j:
            value, recs, real = probes[i]
            if real is not None:
                pieces.append((value, value))
                note(value, recs, real)
            i = j + 1
            continue
        value, recs, real = probes[i]
        if real is None:
            value, real = _refine_boundary(
                linkage, plan, sigma, value, mids[i], tol, refine_eps
            )
        left = value
        note(left, recs, real)
        value, recs, real = probes[j]
        if real is None:
            value, real = _refine_boundary(
                linkage, plan, sigma, value, mids[j - 1], tol, refine_eps
            )
        right = value
        note(right, recs, real)
        start = left
        for k in range(i + 1, j):
            value, recs, real = probes[k]
            if real is not None:
                note(value, recs, real)
                continue
            # failing breakpoint inside a run: either rounding noise at a
            # tangency, or a genuine hole too narrow for the midpoint probes
            lo_edge, lo_real = _refine_boundary(
                linkage, plan, sigma, value, mids[k - 1], tol, refine_eps
            )
            hi_edge, hi_real = _refine_boundary(
                linkage, plan, sigma, value, mids[k], tol, refine_eps
            )
            if hi_edge - lo_edge > 4 * refine_eps:
                pieces.append((start, lo_edge))
                note(lo_edge, recs, lo_real)
                note(hi_edge, recs, hi_real)
                start = hi_edge
        pieces.append((start, right))
        i = j + 1

    eps = max(tol.length * scale, 1e-12)
    if pieces:
        lowest = min(p[0] for p in pieces)
        highest = max(p[1] for p in pieces)
        below = 0.5 * lowest
        if below > eps and try_realize(linkage, plan, below, sigma, tol) is not None:
            lo = _search_out(linkage, plan, sigma, below, -1, tol, scale)
            pieces.append((lo, lowest))
            endpoints.setdefault(lo, _searched_info(linkage, plan, lo, sigma, tol, m))
        above = highest + max(scale, 1.0)
        if try_realize(linkage, plan, above, sigma, tol) is not None:
            hi = _search_out(linkage, plan, sigma, above, 1, tol, scale)
            pieces.append((highest, hi))
            endpoints.setdefault(hi, _searched_info(linkage, plan, hi, sigma, tol, m))
    else:
        # no compatible extreme configuration: sweep for stray regions so
        # an empty answer is a verified one
        total = sum(linkage.lengths.values())
        grid = [total * (i + 0.5) / 64.0 for i in range(64)]
        seed = next(
            (g for g in grid if try_realize(linkage, plan, g, sigma, tol) is not None),
            None,
        )
        if seed is not None:
            lo = _search_out(linkage, plan, sigma, seed, -1, tol, scale)
            hi = _search_out(linkage, plan, sigma, seed, 1, tol, scale)
            pieces.append((lo, hi))
            endpoints[lo] = _searched_info(linkage, plan, lo, sigma, tol, m)
            endpoints[hi] = _searched_info(linkage, plan, hi, sigma, tol, m)

    return OrientedCayleySpace(sigma, IntervalSet.from_pairs(pieces), endpoints)


def _searched_info(linkage, plan, value, sigma, tol, m):
    real = try_realize(linkage, plan, value, sigma, tol)
    if real is None:
        return EndpointInfo(value, "searched", (), (), (0,) * m)
    loose = dataclasses.replace(tol, orientation=max(tol.orientation, 1e-6))
    return EndpointInfo(value, "searched", (), (), forward_type_of(real, plan, loose))


def _mirror(space: OrientedCayleySpace) -> OrientedCayleySpace:
    sigma = tuple(-s for s in space.sigma)
    endpoints = {}
    for val, info in space.endpoints.items():
        endpoints[val] = EndpointInfo(
            info.value,
            info.kind,
            info.steps,
            info.ends,
            tuple(-t for t in info.type),
        )
    return OrientedCayleySpace(sigma, space.intervals, endpoints)


def elr_full(
    linkage: Linkage, plan, tol: Tolerances = None, max_steps: int = 16
) -> CayleySpace:
    """Spaces for every sign vector; mirrored vectors share the work."""
    tol = tol or linkage.tol
    m = len(plan.steps)
    if m > max_steps:
        raise BudgetExceeded(
            "%d steps means %d sign vectors; raise max_steps to force it"
            % (m, 2**m)
        )
    candidates = candidate_table(linkage, plan, tol)
    # negating a sign vector reflects the whole framework only when every
    # step places a bare joint; a dropped cluster keeps its handedness, so
    # plans with nontrivial clusters need each vector computed directly
    mirrored = all(
        st.cluster_a.trivial and st.cluster_b.trivial for st in plan.steps
    )
    by_sigma = {}
    if mirrored:
        for rest in itertools.product((1, -1), repeat=m - 1):
            sigma = (1,) + rest
            space = elr(linkage, plan, sigma, tol, candidates)
            by_sigma[sigma] = space
            by_sigma[tuple(-s for s in sigma)] = _mirror(space)
    else:
        for sigma in itertools.product((1, -1), repeat=m):
            by_sigma[sigma] = elr(linkage, plan, sigma, tol, candidates)
    return CayleySpace(plan.base, by_sigma, plan)
