"""Graph structure: cluster decomposition, rigidity counting, construction plans.

Vertices are integers.  Edges are sorted 2-tuples.  A graph is "decomposable"
here when iterated three-way merging of components (each pair of the three
sharing exactly one vertex, the three shared vertices distinct) collapses it to
a single component covering the whole graph; the fixpoint components of that
merging are the graph's clusters (maximal decomposable subgraphs).
"""

import dataclasses
from typing import Optional

from .errors import NotBaseNonEdge, NotOneDof, NotSupported


def edge_key(u, v):
    if u == v:
        raise ValueError("self loop %r" % (u,))
    return (u, v) if u < v else (v, u)


@dataclasses.dataclass(frozen=True)
class Graph:
    vertices: frozenset
    edges: frozenset

    @staticmethod
    def from_edges(edges, vertices=()):
        es = frozenset(edge_key(u, v) for (u, v) in edges)
        vs = frozenset(vertices) | frozenset(v for e in es for v in e)
        return Graph(vs, es)

    def has_edge(self, u, v):
        return edge_key(u, v) in self.edges

    def with_edge(self, u, v):
        return Graph(self.vertices | {u, v}, self.edges | {edge_key(u, v)})

    def without_edge(self, u, v):
        return Graph(self.vertices, self.edges - {edge_key(u, v)})

    def neighbors(self, v):
        out = set()
        for (a, b) in self.edges:
            if a == v:
                out.add(b)
            elif b == v:
                out.add(a)
        return out

    def induced(self, keep):
        keep = frozenset(keep)
        return Graph(keep, frozenset(e for e in self.edges if e[0] in keep and e[1] in keep))

    def adjacency(self):
        adj = {v: set() for v in self.vertices}
        for (a, b) in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        return adj

    def is_connected(self):
        if not self.vertices:
            return True
        adj = self.adjacency()
        start = min(self.vertices)
        seen = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return len(seen) == len(self.vertices)


@dataclasses.dataclass(frozen=True)
class Cluster:
    vertices: frozenset
    edges: frozenset

    @property
    def trivial(self):
        return len(self.edges) == 1

    def key(self):
        return tuple(sorted(self.edges))


@dataclasses.dataclass(frozen=True)
class MergeRecord:
    parts: tuple          # three vertex-frozensets merged
    shared: tuple         # the three pairwise shared vertices
    result: frozenset


@dataclasses.dataclass(frozen=True)
class Decomposition:
    clusters: tuple
    merges: tuple
    covers: bool

    @property
    def single(self):
        return len(self.clusters) == 1 and self.covers


def _find_merge(comps, vindex):
    # comps: id -> (vertex set, edge set).  Returns (i, j, k, a, b, c) where a, b, c
    # are the pairwise shared vertices, or None.  Deterministic scan order.
    for v in sorted(vindex):
        members = sorted(vindex[v])
        for x in range(len(members)):
            i = members[x]
            vi = comps[i][0]
            for y in range(x + 1, len(members)):
                j = members[y]
                vj = comps[j][0]
                inter = vi & vj
                if len(inter) != 1 or v not in inter:
                    continue
                a = v
                cands = set()
                for u in vi:
                    if u != a:
                        cands.update(vindex.get(u, ()))
                for k in sorted(cands):
                    if k == i or k == j:
                        continue
                    vk = comps[k][0]
                    ik = vi & vk
                    if len(ik) != 1:
                        continue
                    b = next(iter(ik))
                    if b == a:
                        continue
                    jk = vj & vk
                    if len(jk) != 1:
                        continue
                    c = next(iter(jk))
                    if c == a or c == b:
                        continue
                    return (i, j, k, a, b, c)
    return None


def decompose(g: Graph) -> Decomposition:
    """Merge single-edge components three at a time until no merge applies.

    The fixpoint is independent of merge order as long as the edge set is
    independent in the rigidity sense (no over-braced subgraph); that covers
    every graph this library accepts as a linkage.  For over-braced input the
    merge still terminates but the leftover components may depend on scan
    order.
    """
    comps = {}
    vindex = {}
    for n, e in enumerate(sorted(g.edges)):
        comps[n] = ({e[0], e[1]}, {e})
        for v in e:
            vindex.setdefault(v, set()).add(n)
    merges = []
    counter = len(comps)
    while True:
        hit = _find_merge(comps, vindex)
        if hit is None:
            break
        i, j, k, a, b, c = hit
        parts = tuple(frozenset(comps[n][0]) for n in (i, j, k))
        vs = comps[i][0] | comps[j][0] | comps[k][0]
        es = comps[i][1] | comps[j][1] | comps[k][1]
        for n in (i, j, k):
            for v in comps[n][0]:
                vindex[v].discard(n)
            del comps[n]
        comps[counter] = (vs, es)
        for v in vs:
            vindex.setdefault(v, set()).add(counter)
        merges.append(MergeRecord(parts, (a, b, c), frozenset(vs)))
        counter += 1
    clusters = tuple(
        sorted(
            (Cluster(frozenset(vs), frozenset(es)) for vs, es in comps.values()),
            key=lambda c: c.key(),
        )
    )
    covers = False
    if len(clusters) == 1:
        covers = clusters[0].vertices == g.vertices and clusters[0].edges == g.edges
    return Decomposition(clusters, tuple(merges), covers)


def is_tree_decomposable(g: Graph) -> bool:
    if not g.edges:
        return False
    return decompose(g).single


def cluster_decomposition(g: Graph):
    return decompose(g).clusters


# ---------------------------------------------------------------------------
# (2,3)-pebble game


def _grab_pebble(root, other, pebbles, out):
    stack = [root]
    parent = {root: None}
    visited = {root, other}
    while stack:
        x = stack.pop()
        for y in sorted(out[x]):
            if y in visited:
                continue
            if pebbles[y] > 0:
                pebbles[y] -= 1
                pebbles[root] += 1
                chain = [y]
                cur = x
                while cur is not None:
                    chain.append(cur)
                    cur = parent[cur]
                for idx in range(len(chain) - 1):
                    child, par = chain[idx], chain[idx + 1]
                    out[par].discard(child)
                    out[child].add(par)
                return True
            visited.add(y)
            parent[y] = x
            stack.append(y)
    return False


def rigidity_rank(g: Graph) -> int:
    """Number of independent length constraints under generic 2D rigidity."""
    pebbles = {v: 2 for v in g.vertices}
    out = {v: set() for v in g.vertices}
    rank = 0
    for (u, v) in sorted(g.edges):
        while pebbles[u] + pebbles[v] < 4:
            if not _grab_pebble(u, v, pebbles, out):
                if not _grab_pebble(v, u, pebbles, out):
                    break
        if pebbles[u] + pebbles[v] >= 4:
            rank += 1
            if pebbles[u] > 0:
                pebbles[u] -= 1
                out[u].add(v)
            else:
                pebbles[v] -= 1
                out[v].add(u)
    return rank


def is_minimally_rigid(g: Graph) -> bool:
    n = len(g.vertices)
    if n <= 1:
        return True
    return len(g.edges) == 2 * n - 3 and rigidity_rank(g) == 2 * n - 3


def is_rigid(g: Graph) -> bool:
    n = len(g.vertices)
    if n <= 1:
        return True
    return g.is_connected() and rigidity_rank(g) == 2 * n - 3


# ---------------------------------------------------------------------------
# Construction plans


@dataclasses.dataclass(frozen=True)
class ConstructionStep:
    index: int            # 1-based
    vertex: int
    base: tuple           # (u, w), u < w, both already constructed
    cluster_a: Cluster    # contains u and vertex
    cluster_b: Cluster    # contains w and vertex


@dataclasses.dataclass(frozen=True)
class ConstructionPlan:
    graph: Graph
    base: tuple
    steps: tuple

    def __len__(self):
        return len(self.steps)

    def prefix_graph(self, k) -> Graph:
        """Subgraph constructed after the first k steps (base edge excluded)."""
        vs = set(self.base)
        es = set()
        for step in self.steps[:k]:
            for cl in (step.cluster_a, step.cluster_b):
                vs |= cl.vertices
                es |= cl.edges
        return Graph(frozenset(vs), frozenset(es))

    def introduced_at(self, v) -> int:
        """Step index that first constructs v; 0 for the base pair."""
        if v in self.base:
            return 0
        for step in self.steps:
            if v in step.cluster_a.vertices or v in step.cluster_b.vertices:
                return step.index
        raise KeyError(v)

    def base_pairs(self):
        return [step.base for step in self.steps]

    def distinct_base_pair_chain(self):
        """Consecutive-duplicate-free sequence of base pairs, starting at f."""
        chain = [self.base]
        for step in self.steps:
            if step.base != chain[-1]:
                chain.append(step.base)
        return chain


def construction_plan(g: Graph, f) -> ConstructionPlan:
    f = edge_key(*f)
    if f[0] not in g.vertices or f[1] not in g.vertices:
        raise NotBaseNonEdge("base pair %r not in graph" % (f,))
    if f in g.edges:
        raise NotBaseNonEdge("base pair %r is an edge" % (f,))
    n = len(g.vertices)
    if n >= 2 and rigidity_rank(g) == 2 * n - 3:
        raise NotOneDof("graph is already rigid")
    if not is_tree_decomposable(g.with_edge(*f)):
        raise NotBaseNonEdge("adding %r does not give a decomposable graph" % (f,))

    clusters = cluster_decomposition(g)
    unused = {cl.key(): cl for cl in clusters}
    by_vertex = {}
    for cl in clusters:
        for v in cl.vertices:
            by_vertex.setdefault(v, []).append(cl)
    constructed = set(f)
    steps = []
    while unused:
        best = None
        for v in sorted(g.vertices - constructed):
            owners = [cl for cl in by_vertex.get(v, ()) if cl.key() in unused]
            for ai in range(len(owners)):
                for bi in range(len(owners)):
                    if ai == bi:
                        continue
                    ca, cb = owners[ai], owners[bi]
                    ia = ca.vertices & constructed
                    ib = cb.vertices & constructed
                    if len(ia) != 1 or len(ib) != 1:
                        continue
                    u = next(iter(ia))
                    w = next(iter(ib))
                    if u >= w:
                        continue
                    cand = (v, u, w, ca.key(), cb.key())
                    if best is None or cand < best:
                        best = cand
                        best_clusters = (ca, cb)
            if best is not None:
                break
        if best is None:
            raise NotSupported("construction stalled with clusters remaining")
        v, u, w, _, _ = best
        ca, cb = best_clusters
        steps.append(ConstructionStep(len(steps) + 1, v, (u, w), ca, cb))
        constructed |= ca.vertices | cb.vertices
        del unused[ca.key()]
        del unused[cb.key()]
    if constructed != set(g.vertices):
        raise NotSupported("construction did not cover all vertices")
    return ConstructionPlan(g, f, tuple(steps))


@dataclasses.dataclass(frozen=True)
class ExtremeGraphSpec:
    step_index: int
    graph: Graph
    extreme_edge: tuple
    tree_decomposable: bool
    plan: ConstructionPlan

    def reverse_plan(self) -> ConstructionPlan:
        """Construction of this graph from its extreme edge as base."""
        cached = self.__dict__.get("_reverse_plan")
        if cached is None:
            stripped = self.graph.without_edge(*self.extreme_edge)
            cached = construction_plan(stripped, self.extreme_edge)
            self.__dict__["_reverse_plan"] = cached
        return cached


def extreme_graph(plan: ConstructionPlan, k: int) -> ExtremeGraphSpec:
    if not 1 <= k <= len(plan.steps):
        raise IndexError("step %d out of range" % k)
    step = plan.steps[k - 1]
    g = plan.prefix_graph(k - 1).with_edge(*step.base)
    return ExtremeGraphSpec(k, g, step.base, is_tree_decomposable(g), plan)


def extreme_graphs(plan: ConstructionPlan):
    return [extreme_graph(plan, k) for k in range(1, len(plan.steps) + 1)]


def has_low_cayley_complexity(g: Graph, f):
    """(ok, witness): witness is the first step whose extreme graph fails."""
    plan = construction_plan(g, f)
    for k in range(1, len(plan.steps) + 1):
        if not extreme_graph(plan, k).tree_decomposable:
            return (False, k)
    return (True, None)


# ---------------------------------------------------------------------------
# Last level, path decomposition


def last_level(g: Graph):
    """Vertices whose removal detaches exactly their own two clusters.

    A vertex qualifies when it lies in exactly two clusters and each of those
    clusters meets the remainder of the graph in a single vertex.
    """
    clusters = cluster_decomposition(g)
    by_vertex = {}
    for cl in clusters:
        for v in cl.vertices:
            by_vertex.setdefault(v, []).append(cl)
    out = set()
    for v in sorted(g.vertices):
        owners = by_vertex.get(v, [])
        if len(owners) != 2:
            continue
        if all(len(cl.vertices - {v}) == 1 for cl in owners):
            out.add(v)
    return out


@dataclasses.dataclass(frozen=True)
class PathDecomposition:
    plan: ConstructionPlan
    paths: tuple          # (last vertex, sub-plan) per last-level vertex
    one_path: bool


def last_level_and_paths(g: Graph, f, plan: Optional[ConstructionPlan] = None) -> PathDecomposition:
    f = edge_key(*f)
    if plan is None:
        plan = construction_plan(g, f)
    level = sorted(last_level(g) - set(f))
    intro = {v: plan.introduced_at(v) for v in g.vertices}
    paths = []
    for v in level:
        need = set()
        queue = [intro[v]]
        while queue:
            s = queue.pop()
            if s == 0 or s in need:
                continue
            need.add(s)
            step = plan.steps[s - 1]
            queue.append(intro[step.base[0]])
            queue.append(intro[step.base[1]])
        ordered = [plan.steps[i - 1] for i in sorted(need)]
        renumbered = tuple(
            ConstructionStep(n + 1, st.vertex, st.base, st.cluster_a, st.cluster_b)
            for n, st in enumerate(ordered)
        )
        vs = set(f)
        es = set()
        for st in renumbered:
            for cl in (st.cluster_a, st.cluster_b):
                vs |= cl.vertices
                es |= cl.edges
        sub = ConstructionPlan(Graph(frozenset(vs), frozenset(es)), f, renumbered)
        paths.append((v, sub))
    return PathDecomposition(plan, tuple(paths), len(paths) == 1)


# ---------------------------------------------------------------------------
# Connectivity and global rigidity


def is_two_separator(g: Graph, pair) -> bool:
    keep = g.vertices - set(pair)
    if len(keep) <= 1:
        return False
    return not g.induced(keep).is_connected()


def is_three_connected(g: Graph) -> bool:
    if len(g.vertices) < 4:
        return False
    if not g.is_connected():
        return False
    vs = sorted(g.vertices)
    for i in range(len(vs)):
        if not g.induced(g.vertices - {vs[i]}).is_connected():
            return False
        for j in range(i + 1, len(vs)):
            if is_two_separator(g, (vs[i], vs[j])):
                return False
    return True


def is_globally_rigid(g: Graph) -> bool:
    n = len(g.vertices)
    if n <= 3:
        return len(g.edges) == n * (n - 1) // 2
    if not is_three_connected(g):
        return False
    target = 2 * n - 3
    for e in sorted(g.edges):
        if rigidity_rank(g.without_edge(*e)) != target:
            return False
    return True
