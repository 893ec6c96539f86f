"""Command line front end.

Subcommands mirror the HTTP service one to one so scripted runs and the
UI see identical numbers.  Exit codes: 0 success, 2 domain error
(unrealizable linkage, unsupported structure), 3 unreadable or invalid
input file.
"""

import argparse
import json
import sys

from . import fixtures
from .curves import minimal_ccv_general, minimum_ccv_1path, sample_cayley_curve
from .documents import (
    canonical_json,
    check_report,
    curve_csv,
    curve_payload,
    linkage_document,
    parse_linkage,
    path_payload,
    continuity_bound,
    realization_payload,
    space_report,
    type_from_string,
    type_to_string,
)
from .errors import DomainError, LinkageError, NotOnePath, ParseError
from .graphs import construction_plan
from .motion import find_paths, paths_between_cayley_configs, sample_motion
from .qim import qim
from .realization import genericity_report, realize
from .spaces import elr_full

GENERICITY_WARN = 1e-6


def _load(path):
    try:
        with open(path, "rb") as handle:
            raw = handle.read()
    except OSError as exc:
        raise ParseError("cannot read %s: %s" % (path, exc.strerror or exc))
    return parse_linkage(raw)


def _emit(text, out):
    if out:
        with open(out, "w") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")


def _fmt_interval(pair):
    return "[%r, %r]" % (pair[0], pair[1])


def _fmt_intervals(pairs):
    if not pairs:
        return "(empty)"
    if len(pairs) > 12:
        head = " ".join(_fmt_interval(p) for p in pairs[:3])
        tail = " ".join(_fmt_interval(p) for p in pairs[-3:])
        return "%s ... %s (%d intervals)" % (head, tail, len(pairs))
    return " ".join(_fmt_interval(p) for p in pairs)


def _yes(flag):
    return "yes" if flag else "no"


def _parse_state(text, flag):
    head, sep, tail = text.partition(":")
    try:
        lf = float(head)
    except ValueError:
        raise ParseError("%s wants LF or LF:TYPE, got %r" % (flag, text))
    if not sep:
        return lf, None
    return lf, type_from_string(tail)


# ---------------------------------------------------------------------------
# check


def cmd_check(args):
    linkage, base, _ = _load(args.file)
    report = check_report(linkage, base)
    if args.json:
        _emit(canonical_json(report), None)
        return 0
    print("tree-decomposable: %s" % _yes(report["treeDecomposable"]))
    if not report["treeDecomposable"]:
        return 0
    verdict = _yes(report["lowCayleyComplexity"])
    if report["failingStep"] is not None:
        verdict += ", failing step %d" % report["failingStep"]
    print("low Cayley complexity: %s; 1-path: %s" % (verdict, _yes(report["onePath"])))
    print("last level: %s" % ", ".join(str(v) for v in report["lastLevel"]))
    for step in report["steps"]:
        print(
            "step %d: vertex %d on pair (%d, %d)"
            % (step["index"], step["vertex"], step["base"][0], step["base"][1])
        )
    if report["lowCayleyComplexity"]:
        plan = construction_plan(linkage.graph, base)
        for line in _genericity_warnings(linkage, plan):
            print("warning: %s" % line)
    return 0


def _genericity_warnings(linkage, plan):
    """Degeneracy checks on the computed space.

    Boundary configurations are degenerate for every linkage, so margins
    are probed at union interval midpoints; a warning means no interior
    point clears the bar either.  Endpoints whose type carries two or
    more zeros are flagged separately: motion flips there are ambiguous.
    """
    space = elr_full(linkage, plan)
    best = {"triangle_margin": 0.0, "orientation_margin": 0.0}
    for iv in space.union():
        for sigma in sorted(space.by_sigma):
            if not space.by_sigma[sigma].intervals.contains(iv.midpoint):
                continue
            margins = genericity_report(linkage, plan, iv.midpoint, sigma)
            for key in best:
                best[key] = max(best[key], margins[key])
            break
    lines = []
    for key, value in best.items():
        if value < GENERICITY_WARN:
            lines.append("%s %.3g even at the most interior probe" % (key.replace("_", " "), value))
    multiple = {
        round(value, 9)
        for sigma in space.by_sigma
        for value, info in space.by_sigma[sigma].endpoints.items()
        if len(info.zeros) >= 2
    }
    if multiple:
        lines.append(
            "%d endpoint(s) are multiple extremes (ambiguous flips): %s"
            % (len(multiple), ", ".join("%r" % v for v in sorted(multiple)))
        )
    return lines


# ---------------------------------------------------------------------------
# space


def _space_csv(report):
    lines = ["sigma,lo,hi"]
    for lo, hi in report["union"]:
        lines.append("union,%r,%r" % (lo, hi))
    for entry in report["types"]:
        for lo, hi in entry["intervals"]:
            lines.append("%s,%r,%r" % (entry["sigma"], lo, hi))
    return "\n".join(lines) + "\n"


def _print_space(report, all_types):
    print("algorithm: %s" % report["algorithm"])
    print("union: %s" % _fmt_intervals(report["union"]))
    if "pieces" in report:
        print("pieces: %d" % len(report["pieces"]))
    shown = 0
    for entry in report["types"]:
        if entry["intervals"] or all_types:
            print("type %s: %s" % (entry["sigma"], _fmt_intervals(entry["intervals"])))
            shown += 1
    dead = report["diagnostics"]["deadEndCandidates"]
    if dead:
        print("dead-end candidates: %s" % ", ".join("%r" % v for v in dead))
    print("timing: %.4f s" % report["timingSeconds"])
    return shown


def _filter_sigma(report, sigma_text):
    keep = [t for t in report["types"] if t["sigma"] == sigma_text]
    if not keep:
        raise DomainError("no step type %s in this space" % sigma_text)
    report = dict(report)
    report["types"] = keep
    return report


def cmd_space(args):
    linkage, base, _ = _load(args.file)
    plan = construction_plan(linkage.graph, base)
    if args.minimal_type:
        lf, sigma = _parse_state(args.minimal_type, "--minimal-type")
        if sigma is None:
            raise ParseError("--minimal-type wants LF:TYPE with an explicit type")
        witness = realize(linkage, plan, lf, sigma=sigma)
        result = qim(linkage, plan, mode="minimal", witness=witness)
        pairs = [[iv.lo, iv.hi] for iv in result]
        if args.json:
            payload = {
                "algorithm": "qim-minimal",
                "witness": {"lf": lf, "sigma": type_to_string(sigma)},
                "intervals": pairs,
            }
            _emit(canonical_json(payload), args.out)
        else:
            print("minimal type of (%r, %s): %s" % (lf, type_to_string(sigma), _fmt_intervals(pairs)))
        return 0
    if args.compare:
        return _compare_space(linkage, plan)
    report = space_report(linkage, plan, algo=args.algo)
    if args.sigma:
        report = _filter_sigma(report, args.sigma)
    if args.json:
        _emit(canonical_json(report), args.out)
    elif args.csv:
        _emit(_space_csv(report), args.out)
    else:
        _print_space(report, args.all_types)
    return 0


def _compare_space(linkage, plan):
    left = space_report(linkage, plan, algo="elr")
    right = space_report(linkage, plan, algo="qim")
    a, b = left["union"], right["union"]
    print("elr union: %s" % _fmt_intervals(a))
    print("qim union: %s" % _fmt_intervals(b))
    if len(a) != len(b):
        print("MISMATCH: %d vs %d union intervals" % (len(a), len(b)))
        return 0
    scale = max(abs(x) for pair in a for x in pair) or 1.0
    worst = 0.0
    for (alo, ahi), (blo, bhi) in zip(a, b):
        worst = max(worst, abs(alo - blo) / scale, abs(ahi - bhi) / scale)
    print("max relative endpoint deviation: %.3g" % worst)
    return 0


# ---------------------------------------------------------------------------
# motion


def _leg_text(leg):
    return "%s %s %s" % (
        type_to_string(leg.sigma),
        _fmt_interval((leg.interval.lo, leg.interval.hi)),
        leg.direction,
    )


def _print_paths(paths):
    if not paths:
        print("no path")
        return
    print("paths: %d" % len(paths))
    for i, path in enumerate(paths, start=1):
        print("path %d [%s]: %s" % (i, path.case, "; ".join(_leg_text(l) for l in path.legs)))
        for value, step in path.transitions:
            print("  flip step %d at %r" % (step, value))


def cmd_motion(args):
    if args.animate < 0:
        raise ParseError("--animate must be non-negative")
    linkage, base, _ = _load(args.file)
    plan = construction_plan(linkage.graph, base)
    space = elr_full(linkage, plan)
    lf_a, sig_a = _parse_state(getattr(args, "from"), "--from")
    lf_b, sig_b = _parse_state(args.to, "--to")
    if (sig_a is None) != (sig_b is None):
        raise DomainError("--from and --to must both carry a type, or neither")
    if sig_a is None:
        paths = paths_between_cayley_configs(space, lf_a, lf_b)
    else:
        start = realize(linkage, plan, lf_a, sigma=sig_a)
        target = realize(linkage, plan, lf_b, sigma=sig_b)
        paths = find_paths(space, start, target)
    frames = None
    if args.animate and paths:
        sampled = sample_motion(linkage, plan, paths[0], args.animate)
        frames = [realization_payload(r, plan) for r in sampled]
    if args.json:
        payload = {"paths": [path_payload(p) for p in paths]}
        if frames is not None and not args.animate_out:
            payload["frames"] = frames
            payload["continuityBound"] = continuity_bound(frames)
        _emit(canonical_json(payload), args.out)
    else:
        _print_paths(paths)
    if frames is not None and (args.animate_out or not args.json):
        doc = {
            "schemaVersion": 1,
            "frames": frames,
            "continuityBound": continuity_bound(frames),
        }
        _emit(canonical_json(doc), args.animate_out)
    return 0


# ---------------------------------------------------------------------------
# curve


def _choose_ccv(plan):
    try:
        return minimum_ccv_1path(plan)
    except NotOnePath:
        return minimal_ccv_general(plan.graph, plan.base)


def cmd_curve(args):
    if args.resolution < 2:
        raise ParseError("--resolution must be at least 2")
    linkage, base, _ = _load(args.file)
    plan = construction_plan(linkage.graph, base)
    ccv = _choose_ccv(plan)
    points = sample_cayley_curve(linkage, plan, ccv, args.resolution)
    if args.json:
        _emit(canonical_json(curve_payload(points, ccv)), args.out)
    else:
        _emit(curve_csv(points, ccv), args.out)
    return 0


# ---------------------------------------------------------------------------
# fixture


def cmd_fixture(args):
    if args.k < 1:
        raise ParseError("--k must be at least 1")
    if args.eps < 0:
        raise ParseError("--eps must be non-negative")
    if args.eps == 0:
        print("warning: eps=0 makes consecutive extremes touch", file=sys.stderr)
    linkage = fixtures.nested_quad_chain(args.k, eps=args.eps)
    doc = linkage_document(linkage, fixtures.BASE_PAIR)
    _emit(canonical_json(doc), args.out)
    return 0


# ---------------------------------------------------------------------------
# serve


def cmd_serve(args):
    from .server import serve

    serve(port=args.port, assets=args.assets)
    return 0


# ---------------------------------------------------------------------------
# wiring


def build_parser():
    parser = argparse.ArgumentParser(
        prog="caylink",
        description="Cayley configuration spaces of 1-dof tree-decomposable linkages",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="structure and genericity report")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("space", help="compute the Cayley configuration space")
    p.add_argument("file")
    p.add_argument("--algo", choices=("elr", "qim"), default="elr")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--sigma", help="restrict output to one step type; use =, e.g. --sigma=-+-")
    group.add_argument(
        "--minimal-type",
        help="LF:TYPE witness; reports the single interval of its minimal type",
    )
    group.add_argument("--compare", action="store_true", help="diff elr against qim")
    p.add_argument("--all-types", action="store_true", help="include empty types")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--csv", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_space)

    p = sub.add_parser("motion", help="paths of continuous motion between configurations")
    p.add_argument("file")
    p.add_argument("--from", required=True, help="LF or LF:TYPE")
    p.add_argument("--to", required=True, help="LF or LF:TYPE")
    p.add_argument("--animate", type=int, default=0, help="samples per leg")
    p.add_argument("--animate-out", help="frame file (default stdout)")
    p.add_argument("--json", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_motion)

    p = sub.add_parser("curve", help="sample the complete Cayley distance vector curve")
    p.add_argument("file")
    p.add_argument("--resolution", type=int, default=64, help="samples per interval")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--csv", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_curve)

    p = sub.add_parser("fixture", help="generate a built-in linkage document")
    p.add_argument("--family", choices=("nested-quads",), default="nested-quads")
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--eps", type=float, default=1e-5)
    p.add_argument("--out")
    p.set_defaults(func=cmd_fixture)

    p = sub.add_parser("serve", help="run the HTTP JSON service")
    p.add_argument("--port", type=int, default=8420)
    p.add_argument("--assets", help="directory of static UI files")
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print("parse error: %s" % exc, file=sys.stderr)
        if exc.context:
            print("  context: %s" % json.dumps(exc.context, sort_keys=True), file=sys.stderr)
        return 3
    except LinkageError as exc:
        print("%s: %s" % (type(exc).__name__, exc), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
