"""Complete Cayley vectors and curve views of the realization space.

A complete Cayley vector is a short list of non-edges, led by the base
non-edge, whose addition makes the graph globally rigid.  Measuring those
distances on a realization then pins it uniquely, so sweeping the base
length and recording the vector traces the realization space as a curve
in a low-dimensional ambient space, one branch per connected component.
"""

import dataclasses

from .errors import AmbiguousEndpoint, NotOnePath, NotSupported
from .graphs import (
    Graph,
    edge_key,
    is_globally_rigid,
    is_three_connected,
    is_two_separator,
    last_level,
    last_level_and_paths,
)
from .motion import adjacent_interval
from .realization import realize
from .spaces import elr_full


@dataclasses.dataclass(frozen=True)
class CompleteCayleyVector:
    pairs: tuple  # non-edges; pairs[0] is the base

    def __len__(self):
        return len(self.pairs)

    def augment(self, g: Graph) -> Graph:
        out = g
        for (u, v) in self.pairs:
            out = out.with_edge(u, v)
        return out


@dataclasses.dataclass(frozen=True)
class CayleyCurvePoint:
    distances: tuple
    sigma: tuple
    component: int


def minimum_ccv_1path(plan) -> CompleteCayleyVector:
    """Two distances suffice for a single chain of construction steps."""
    g = plan.graph
    f = edge_key(*plan.base)
    decomp = last_level_and_paths(g, f, plan)
    if not decomp.one_path:
        raise NotOnePath(
            "%d last-level paths; the two-entry vector needs exactly one"
            % len(decomp.paths)
        )
    if len(plan.steps) == 1:
        return CompleteCayleyVector((f,))
    v0, v0p = f
    vn = plan.steps[-1].vertex
    if not g.has_edge(v0, vn):
        second = edge_key(v0, vn)
    elif not g.has_edge(v0p, vn):
        second = edge_key(v0p, vn)
    else:
        raise NotSupported(
            "both base vertices already adjacent to the last vertex %r" % (vn,)
        )
    return CompleteCayleyVector((f, second))


def minimal_ccv_general(g: Graph, f) -> CompleteCayleyVector:
    """Iteratively add pairing edges until the graph is globally rigid.

    Ties are always broken toward the lowest vertex ids so the result is
    deterministic.
    """
    f = edge_key(*f)
    added = [f]
    plus = g.with_edge(*f)
    level = sorted(last_level(g) - set(f))
    remaining = set(level)

    def consume(pair):
        added.append(pair)
        remaining.difference_update(pair)
        return plus.with_edge(*pair)

    # stitch across the base separator first
    while is_two_separator(plus, f):
        comp_of = {}
        rest = plus.induced(plus.vertices - set(f))
        for v in sorted(rest.vertices):
            if v in comp_of:
                continue
            stack, mark = [v], {v}
            while stack:
                x = stack.pop()
                comp_of[x] = v
                for y in rest.neighbors(x):
                    if y not in mark:
                        mark.add(y)
                        stack.append(y)
        split = [
            (a, b)
            for i, a in enumerate(level)
            for b in level[i + 1:]
            if comp_of.get(a) != comp_of.get(b)
        ]
        if not split:
            raise NotSupported("base separates the graph but no last-level pair spans it")
        plus = consume(min(split))

    # pair off whatever the first phase did not touch
    while remaining and not is_globally_rigid(plus):
        if len(remaining) >= 2:
            a, b = sorted(remaining)[:2]
            plus = consume(edge_key(a, b))
            continue
        (vk,) = remaining
        v0, v0p = f
        if not g.has_edge(v0, vk):
            plus = consume(edge_key(v0, vk))
        elif not g.has_edge(v0p, vk):
            plus = consume(edge_key(v0p, vk))
        else:
            others = [v for v in level if v != vk]
            if not others:
                raise NotSupported("single last-level vertex adjacent to both base ends")
            plus = consume(edge_key(vk, others[0]))

    # tie stray separators back to the base
    guard = len(g.vertices)
    while not is_three_connected(plus) and guard > 0:
        guard -= 1
        pair = _lowest_two_separator(plus)
        if pair is None:
            break
        decomp = last_level_and_paths(g, f)
        vk = None
        for v, sub in decomp.paths:
            if set(pair) <= sub.graph.vertices and v not in set(f):
                vk = v
                break
        if vk is None:
            raise NotSupported("no last-level vertex depends on separator %r" % (pair,))
        v0, v0p = f
        if not plus.has_edge(v0, vk):
            plus = consume(edge_key(v0, vk))
        elif not plus.has_edge(v0p, vk):
            plus = consume(edge_key(v0p, vk))
        else:
            raise NotSupported("separator %r survives every allowed edge" % (pair,))
    return CompleteCayleyVector(tuple(added))


def _lowest_two_separator(g: Graph):
    vs = sorted(g.vertices)
    for i in range(len(vs)):
        for j in range(i + 1, len(vs)):
            if is_two_separator(g, (vs[i], vs[j])):
                return (vs[i], vs[j])
    return None


def cayley_distance_vector(real, ccv: CompleteCayleyVector):
    return tuple(real.distance(u, v) for (u, v) in ccv.pairs)


def sample_cayley_curve(linkage, plan, ccv, resolution, tol=None):
    """Trace the distance vector over every oriented interval.

    Component ids come from endpoint adjacency, so two intervals get the
    same id exactly when a continuous motion joins them.
    """
    if resolution < 2:
        raise ValueError("need at least two samples per interval")
    tol = tol or linkage.tol
    space = elr_full(linkage, plan, tol)
    nodes = []
    for sigma in sorted(space.by_sigma):
        for iv in space.by_sigma[sigma].intervals:
            nodes.append((sigma, iv))
    index = {
        (sigma, (iv.lo, iv.hi)): i for i, (sigma, iv) in enumerate(nodes)
    }
    parent = list(range(len(nodes)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i, (sigma, iv) in enumerate(nodes):
        for end in ("lo", "hi"):
            try:
                hop = adjacent_interval(space, sigma, iv, end)
            except AmbiguousEndpoint:
                continue
            if hop is None:
                continue
            tau, piece = hop
            j = index.get((tau, (piece.lo, piece.hi)))
            if j is not None:
                parent[find(i)] = find(j)

    component = {}
    for i in range(len(nodes)):
        component[i] = find(i)
    ids = {root: n for n, root in enumerate(sorted(set(component.values())))}

    margin = max(tol.length * linkage.scale, 1e-12)
    points = []
    for i, (sigma, iv) in enumerate(nodes):
        for j in range(resolution):
            lf = iv.lo + (iv.hi - iv.lo) * j / (resolution - 1)
            if iv.hi - iv.lo > 2 * margin:
                lf = min(max(lf, iv.lo + margin), iv.hi - margin)
            else:
                lf = iv.midpoint
            real = realize(linkage, plan, lf, sigma, tol)
            points.append(
                CayleyCurvePoint(
                    cayley_distance_vector(real, ccv), sigma, ids[component[i]]
                )
            )
    points.sort(key=lambda p: (p.component, p.sigma, p.distances))
    return points
