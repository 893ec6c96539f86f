import { describe, expect, it } from "vitest";

import { ViewState } from "../src/state.js";
import type { Frame, SpaceReport } from "../src/types.js";
import { motionResponse, spaceReport } from "./fixtures.js";

function freshState(): ViewState {
  const state = new ViewState();
  state.setSpace(spaceReport);
  return state;
}

function insideSomeInterval(state: ViewState): boolean {
  return state.current !== null && state.intervalOf(state.current) !== null;
}

describe("Cayley parameter invariants", () => {
  it("starts inside a server-reported interval", () => {
    const state = freshState();
    expect(state.current).not.toBeNull();
    expect(insideSomeInterval(state)).toBe(true);
  });

  it("snaps gap and out-of-range values onto the nearest interval", () => {
    const state = freshState();
    state.current = state.snap(7.2, "-+-");

    state.setLf(7.5); // inside the gap between the two intervals
    expect(insideSomeInterval(state)).toBe(true);
    const entry = spaceReport.types.find((t) => t.sigma === "-+-")!;
    const endpoints = entry.intervals.flat();
    const nearest = endpoints.reduce((a, b) =>
      Math.abs(b - 7.5) < Math.abs(a - 7.5) ? b : a,
    );
    expect(state.current!.lf).toBe(nearest);

    state.setLf(-100);
    expect(state.current!.lf).toBe(entry.intervals[0][0]);
    state.setLf(1e6);
    expect(state.current!.lf).toBe(entry.intervals[1][1]);
  });
});

describe("endpoint flips", () => {
  it("lands in the server-declared adjacent interval (hi end)", () => {
    const state = freshState();
    state.current = state.snap(7.2, "-+-");
    const at = state.intervalOf(state.current!)!;
    const declared = spaceReport.types.find((t) => t.sigma === "-+-")!
      .adjacency[at.index].hi;
    expect(declared).not.toBeNull();
    expect(declared).not.toBe("ambiguous");

    state.setLf(at.interval[1]);
    const flip = state.flipAtEndpoint("hi");
    expect(flip).not.toBeNull();
    expect(flip!.target).toBe(declared);
    expect(state.current!.sigma).toBe((declared as { sigma: string }).sigma);
    const landed = (declared as { interval: [number, number] }).interval;
    expect(state.current!.lf).toBeGreaterThanOrEqual(landed[0] - 1e-9);
    expect(state.current!.lf).toBeLessThanOrEqual(landed[1] + 1e-9);
  });

  it("round trips back through the same endpoint", () => {
    const state = freshState();
    state.current = state.snap(8.0, "-+-");
    const before = { ...state.current! };
    const out = state.flipAtEndpoint("lo")!;
    expect(out.config.sigma).not.toBe(before.sigma);
    const back = state.flipAtEndpoint("lo")!;
    expect(back.config.sigma).toBe(before.sigma);
    expect(insideSomeInterval(state)).toBe(true);
  });

  it("offers no affordance where the server declared none", () => {
    const synthetic: SpaceReport = {
      ...spaceReport,
      types: [
        {
          sigma: "+",
          intervals: [[1, 2]],
          endpoints: [],
          adjacency: [{ lo: null, hi: "ambiguous" }],
        },
      ],
      union: [[1, 2]],
    };
    const state = new ViewState();
    state.setSpace(synthetic);
    expect(state.current).not.toBeNull();
    expect(state.canFlip("lo")).toBe(false);
    expect(state.canFlip("hi")).toBe(false);
    const before = state.current!.lf;
    expect(state.flipAtEndpoint("lo")).toBeNull();
    expect(state.flipAtEndpoint("hi")).toBeNull();
    expect(state.current!.lf).toBe(before);
  });
});

describe("motion bookkeeping", () => {
  it("clamps the playhead to the served frame range", () => {
    const state = freshState();
    state.setMotion(motionResponse);
    const frames = state.frames!;
    state.setPlayhead(999);
    expect(state.playhead).toBe(frames.length - 1);
    state.setPlayhead(-5);
    expect(state.playhead).toBe(0);
    expect(state.frameAtPlayhead()).toBe(frames[0]);
  });

  it("accepts served frames under their continuity bound", () => {
    const state = freshState();
    state.setMotion(motionResponse);
    expect(state.framesContinuous()).toBe(true);
  });

  it("rejects a frame sequence that jumps beyond the bound", () => {
    const state = freshState();
    const first = motionResponse.frames![0];
    const teleported: Frame = {
      ...first,
      positions: Object.fromEntries(
        Object.entries(first.positions).map(([v, [x, y]]) => [v, [x + 10, y]]),
      ) as Frame["positions"],
    };
    state.setMotion({
      paths: motionResponse.paths,
      frames: [first, teleported],
      continuityBound: motionResponse.continuityBound,
    });
    expect(state.framesContinuous()).toBe(false);
  });
});

describe("stale response discipline", () => {
  it("ignores realizations that arrive out of order", () => {
    const state = freshState();
    const older = state.beginRealize();
    const newer = state.beginRealize();
    const fresh: Frame = { baseLength: 7.3, forwardType: "-++", positions: {} };
    const stale: Frame = { baseLength: 7.1, forwardType: "-+-", positions: {} };
    expect(state.applyRealization(newer, fresh)).toBe(true);
    expect(state.applyRealization(older, stale)).toBe(false);
    expect(state.lastGoodFrame).toBe(fresh);
    expect(state.applyRealizationError(older, "late failure")).toBe(false);
    expect(state.realizationError).toBeNull();
  });
});
