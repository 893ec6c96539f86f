"""Linkage files and serialized result payloads.

One JSON document format carries a linkage between the CLI, the HTTP
service, and the UI.  Serialization is canonical (sorted keys, shortest
round-trip floats) so equal documents hash equally and a parse and
re-serialize round trip is byte identical.
"""

import hashlib
import json
import math
import time

from .errors import AmbiguousEndpoint, LinkageError, ParseError
from .graphs import (
    Graph,
    cluster_decomposition,
    construction_plan,
    edge_key,
    has_low_cayley_complexity,
    is_tree_decomposable,
    last_level_and_paths,
)
from .intervals import IntervalSet
from .qim import _sorted_clusters, build_hop, qim
from .realization import Linkage, forward_type_of
from .spaces import candidate_table, elr_full

SCHEMA_VERSION = 1

_SIGN_CHARS = {1: "+", -1: "-", 0: "0"}
_CHAR_SIGNS = {"+": 1, "-": -1, "0": 0}


def type_to_string(sigma):
    return "".join(_SIGN_CHARS[s] for s in sigma)


def type_from_string(text):
    try:
        return tuple(_CHAR_SIGNS[c] for c in text)
    except KeyError:
        raise ParseError(
            "realization type must use only '+', '-' and '0'",
            {"value": text},
        )


def canonical_json(payload) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def document_hash(payload) -> str:
    return hashlib.sha256(canonical_json(payload).encode()).hexdigest()[:16]


def parse_linkage(source):
    """Build a Linkage and its base pair from a document dict or string."""
    if isinstance(source, (str, bytes)):
        try:
            doc = json.loads(source)
        except json.JSONDecodeError as exc:
            raise ParseError("invalid JSON: %s" % exc, {"position": exc.pos})
    else:
        doc = source
    if not isinstance(doc, dict):
        raise ParseError("document must be a JSON object", {})
    version = doc.get("schemaVersion")
    if version != SCHEMA_VERSION:
        raise ParseError(
            "unsupported schemaVersion %r" % (version,), {"expected": SCHEMA_VERSION}
        )
    raw_vertices = doc.get("vertices")
    if not isinstance(raw_vertices, list) or not raw_vertices:
        raise ParseError("vertices must be a non-empty list", {"field": "vertices"})
    ids = []
    labels = {}
    for entry in raw_vertices:
        if not isinstance(entry, dict) or "id" not in entry:
            raise ParseError("vertex entries need an id", {"entry": entry})
        vid = entry["id"]
        if not isinstance(vid, int):
            raise ParseError("vertex ids must be integers", {"id": vid})
        if vid in ids:
            raise ParseError("duplicate vertex id", {"id": vid})
        ids.append(vid)
        if "label" in entry:
            labels[vid] = str(entry["label"])
    raw_edges = doc.get("edges")
    if not isinstance(raw_edges, list) or not raw_edges:
        raise ParseError("edges must be a non-empty list", {"field": "edges"})
    lengths = {}
    for entry in raw_edges:
        if not isinstance(entry, dict) or "ends" not in entry or "length" not in entry:
            raise ParseError("edge entries need ends and length", {"entry": entry})
        ends = entry["ends"]
        if (
            not isinstance(ends, list)
            or len(ends) != 2
            or ends[0] not in ids
            or ends[1] not in ids
            or ends[0] == ends[1]
        ):
            raise ParseError("edge ends must be two distinct vertex ids", {"ends": ends})
        key = edge_key(*ends)
        if key in lengths:
            raise ParseError("duplicate edge", {"ends": list(key)})
        length = entry["length"]
        if not isinstance(length, (int, float)) or not length > 0 or length != length:
            raise ParseError(
                "edge length must be a positive number",
                {"ends": list(key), "length": length},
            )
        lengths[key] = float(length)
    base = doc.get("baseNonEdge")
    if (
        not isinstance(base, list)
        or len(base) != 2
        or base[0] not in ids
        or base[1] not in ids
        or base[0] == base[1]
    ):
        raise ParseError("baseNonEdge must name two distinct vertices", {"value": base})
    base = edge_key(*base)
    if base in lengths:
        raise ParseError("baseNonEdge is an edge", {"value": list(base)})
    graph = Graph.from_edges(lengths.keys(), vertices=ids)
    linkage = Linkage(graph, lengths)
    return linkage, base, labels


def linkage_document(linkage, base, labels=None):
    base = edge_key(*base)
    doc = {
        "schemaVersion": SCHEMA_VERSION,
        "vertices": [
            {"id": v, **({"label": labels[v]} if labels and v in labels else {})}
            for v in sorted(linkage.graph.vertices)
        ],
        "edges": [
            {"ends": list(e), "length": linkage.lengths[e]}
            for e in sorted(linkage.graph.edges)
        ],
        "baseNonEdge": list(base),
    }
    return doc


# ---------------------------------------------------------------------------
# Result payloads


def check_report(linkage, base):
    g = linkage.graph
    plus = g.with_edge(*base)
    report = {
        "treeDecomposable": is_tree_decomposable(plus),
        "lowCayleyComplexity": False,
        "failingStep": None,
        "onePath": None,
        "lastLevel": [],
        "steps": [],
    }
    if not report["treeDecomposable"]:
        return report
    ok, witness = has_low_cayley_complexity(g, base)
    report["lowCayleyComplexity"] = ok
    report["failingStep"] = witness
    plan = construction_plan(g, base)
    report["steps"] = [
        {"index": st.index, "vertex": st.vertex, "base": list(st.base)}
        for st in plan.steps
    ]
    decomp = last_level_and_paths(g, base, plan)
    report["onePath"] = decomp.one_path
    report["lastLevel"] = [v for v, _ in decomp.paths]
    return report


def _interval_pairs(intervals):
    return [[iv.lo, iv.hi] for iv in intervals]


def _endpoint_entries(oriented):
    out = []
    for value in sorted(oriented.endpoints):
        info = oriented.endpoints[value]
        out.append(
            {
                "value": value,
                "kind": info.kind,
                "steps": list(info.steps),
                "ends": list(info.ends),
                "type": type_to_string(info.type),
            }
        )
    return out


def _adjacency_entries(space, sigma, oriented):
    """Where a motion continues past each interval end, if anywhere.

    The UI flips orientation at an endpoint by reading this field, so
    the landing interval is always the server's verdict, never a client
    side guess.
    """
    from .motion import adjacent_interval

    out = []
    for iv in oriented.intervals:
        entry = {}
        for end in ("lo", "hi"):
            try:
                hop = adjacent_interval(space, sigma, iv, end)
            except AmbiguousEndpoint:
                entry[end] = "ambiguous"
            else:
                if hop is None:
                    entry[end] = None
                else:
                    entry[end] = {
                        "sigma": type_to_string(hop[0]),
                        "interval": [hop[1].lo, hop[1].hi],
                    }
        out.append(entry)
    return out


def space_report(linkage, plan, algo="elr", tol=None):
    """Per-type intervals, union, timing and search diagnostics."""
    tol = tol or linkage.tol
    pieces = None
    if algo == "qim":
        started = time.perf_counter()
        union = qim(linkage, plan, mode="full", tol=tol)
        elapsed = time.perf_counter() - started
        pieces = [[iv.lo, iv.hi] for iv in union]
        merged = IntervalSet.from_pairs((iv.lo, iv.hi) for iv in union)
        union_pairs = _interval_pairs(merged)
        space = elr_full(linkage, plan, tol)
    elif algo == "elr":
        started = time.perf_counter()
        space = elr_full(linkage, plan, tol)
        elapsed = time.perf_counter() - started
        union_pairs = _interval_pairs(space.union())
    else:
        raise ValueError("algo must be 'elr' or 'qim', got %r" % (algo,))
    types = []
    matched = set()
    for sigma in sorted(space.by_sigma):
        oriented = space.by_sigma[sigma]
        types.append(
            {
                "sigma": type_to_string(sigma),
                "intervals": _interval_pairs(oriented.intervals),
                "endpoints": _endpoint_entries(oriented),
                "adjacency": _adjacency_entries(space, sigma, oriented),
            }
        )
        matched.update(round(v, 9) for v in oriented.endpoints)
    dead_ends = sorted(
        {
            round(cand.lf, 9)
            for cand in candidate_table(linkage, plan, tol)
            if round(cand.lf, 9) not in matched
        }
    )
    report = {
        "schemaVersion": SCHEMA_VERSION,
        "algorithm": algo,
        "base": list(plan.base),
        "types": types,
        "union": union_pairs,
        "timingSeconds": elapsed,
        "diagnostics": {"deadEndCandidates": dead_ends, "fourCycles": _four_cycles(linkage, plan, tol)},
    }
    if pieces is not None:
        report["pieces"] = pieces
    return report


def _four_cycles(linkage, plan, tol):
    decomp = last_level_and_paths(plan.graph, plan.base, plan)
    if not decomp.one_path:
        return []
    chain = plan.distinct_base_pair_chain()
    clusters = _sorted_clusters(cluster_decomposition(plan.graph))
    out = []
    for cur, nxt in zip(chain, chain[1:]):
        try:
            hop = build_hop(linkage, clusters, cur, nxt, tol=tol)
            kind = type(hop).__name__
        except LinkageError as exc:
            kind = type(exc).__name__
        out.append({"from": list(cur), "to": list(nxt), "kind": kind})
    return out


def realization_payload(real, plan, tol=None):
    sigma = forward_type_of(real, plan) if tol is None else forward_type_of(real, plan, tol)
    return {
        "baseLength": real.base_length,
        "forwardType": type_to_string(sigma),
        "positions": {str(v): list(real.pos(v)) for v in sorted(real.positions)},
    }


def continuity_bound(frames):
    """Largest vertex displacement between consecutive frame payloads.

    Reported next to served animation frames so a player can verify it
    received them complete and in order: any dropped or shuffled frame
    shows up as a step exceeding the bound.
    """
    worst = 0.0
    for a, b in zip(frames, frames[1:]):
        for v, (xa, ya) in a["positions"].items():
            xb, yb = b["positions"][v]
            worst = max(worst, math.hypot(xb - xa, yb - ya))
    return worst


def path_payload(path):
    return {
        "case": path.case,
        "lfStart": path.lf_start,
        "lfTarget": path.lf_target,
        "legs": [
            {
                "sigma": type_to_string(leg.sigma),
                "interval": [leg.interval.lo, leg.interval.hi],
                "direction": leg.direction,
            }
            for leg in path.legs
        ],
        "transitions": [
            {"lf": value, "flippedStep": step} for value, step in path.transitions
        ],
    }


def curve_payload(points, ccv):
    return {
        "schemaVersion": SCHEMA_VERSION,
        "nonEdges": [list(pair) for pair in ccv.pairs],
        "points": [
            {
                "distances": list(p.distances),
                "sigma": type_to_string(p.sigma),
                "component": p.component,
            }
            for p in points
        ],
    }


def curve_csv(points, ccv):
    header = [
        "d_%d_%d" % pair for pair in ccv.pairs
    ] + ["sigma", "component"]
    lines = [",".join(header)]
    for p in points:
        row = [repr(d) for d in p.distances]
        row.append(type_to_string(p.sigma))
        row.append(str(p.component))
        lines.append(",".join(row))
    return "\n".join(lines) + "\n"
