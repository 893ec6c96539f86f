"""Walk the two-level chain between realizations and describe the paths.

Shows the three situations the path finder distinguishes: a motion that
stays inside one oriented interval, one that has to bounce off an
interval endpoint to flip a step, and a pair of configurations with no
connecting motion at all.
"""

import json

from caylink import fixtures
from caylink.documents import path_payload
from caylink.graphs import construction_plan
from caylink.motion import find_paths, sample_motion
from caylink.realization import realize
from caylink.spaces import elr_full


def describe(space, link, plan, lf_a, sig_a, lf_b, sig_b):
    start = realize(link, plan, lf_a, sig_a)
    target = realize(link, plan, lf_b, sig_b)
    paths = find_paths(space, start, target)
    label = "%.3g:%s -> %.3g:%s" % (
        lf_a,
        "".join("+" if s > 0 else "-" for s in sig_a),
        lf_b,
        "".join("+" if s > 0 else "-" for s in sig_b),
    )
    if not paths:
        print("%s  no path" % label)
        return None
    for path in paths:
        legs = "; ".join(
            "%s [%.4f, %.4f] %s"
            % (
                "".join("+" if s > 0 else "-" for s in leg.sigma),
                leg.interval.lo,
                leg.interval.hi,
                leg.direction,
            )
            for leg in path.legs
        )
        print("%s  [%s]  %s" % (label, path.case, legs))
        for value, step in path.transitions:
            print("    flip step %d at %.6f" % (step, value))
    return paths[0]


def main():
    link = fixtures.nested_quad_chain(2)
    plan = construction_plan(link.graph, fixtures.BASE_PAIR)
    space = elr_full(link, plan)

    describe(space, link, plan, 7.2, (-1, 1, -1), 7.45, (-1, 1, -1))
    path = describe(space, link, plan, 7.2, (-1, 1, -1), 7.3, (-1, 1, 1))
    describe(space, link, plan, 7.2, (-1, 1, -1), 8.0, (-1, 1, -1))

    frames = sample_motion(link, plan, path, 12)
    print("sampled %d frames along the bounce path" % len(frames))
    print(json.dumps(path_payload(path))[:120] + "...")


if __name__ == "__main__":
    main()
