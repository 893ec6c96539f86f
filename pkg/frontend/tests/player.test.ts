import { afterEach, describe, expect, it, vi } from "vitest";

import { MotionPlayer, transitionIndices } from "../src/motionPlayer.js";
import { ViewState } from "../src/state.js";
import type { Frame } from "../src/types.js";
import { motionResponse, spaceReport } from "./fixtures.js";

function playerWithMotion(): {
  state: ViewState;
  player: MotionPlayer;
  emitted: Frame[];
} {
  const state = new ViewState();
  state.setSpace(spaceReport);
  state.setMotion(motionResponse);
  const emitted: Frame[] = [];
  const player = new MotionPlayer(state, (frame) => emitted.push(frame));
  return { state, player, emitted };
}

afterEach(() => {
  vi.useRealTimers();
});

describe("frame provenance", () => {
  it("emits only frame objects that came from the motion response", () => {
    const { player, emitted } = playerWithMotion();
    const served = motionResponse.frames!;
    for (let i = 0; i < served.length; i++) player.scrub(i);
    while (player.step() !== null) {
      // drain the remaining steps
    }
    expect(emitted.length).toBeGreaterThan(0);
    for (const frame of emitted) {
      expect(served.includes(frame)).toBe(true);
    }
  });

  it("emits every served frame exactly once over a full playback", () => {
    vi.useFakeTimers();
    const { player, emitted } = playerWithMotion();
    player.play();
    vi.advanceTimersByTime(player.frameDelayMs * motionResponse.frames!.length * 2);
    expect(emitted).toEqual(motionResponse.frames);
    expect(player.status).toBe("ready"); // auto-paused at the end
  });

  it("refuses to play frames that violate the continuity bound", () => {
    const { state, player } = playerWithMotion();
    const first = motionResponse.frames![0];
    const far: Frame = {
      ...first,
      positions: Object.fromEntries(
        Object.entries(first.positions).map(([v, [x, y]]) => [v, [x, y + 99]]),
      ) as Frame["positions"],
    };
    state.setMotion({ ...motionResponse, frames: [first, far] });
    expect(() => player.play()).toThrow(/continuity/);
  });
});

describe("transition markers and status", () => {
  it("marks the leg boundary of a two-leg path", () => {
    const { player } = playerWithMotion();
    const path = motionResponse.paths[0];
    const count = motionResponse.frames!.length;
    expect(path.legs.length).toBe(2);
    expect(transitionIndices(path, count)).toEqual([count / 2]);
    expect(player.markers).toEqual([count / 2]);
    for (const index of player.markers) {
      expect(index).toBeGreaterThan(0);
      expect(index).toBeLessThan(count);
    }
  });

  it("reports the path case and the path selection", () => {
    const { state, player } = playerWithMotion();
    expect(player.caseLabel).toBe("cross-interval");
    expect(state.paths.length).toBe(2);
    state.selectPath(1);
    expect(state.playhead).toBe(0);
    expect(player.caseLabel).toBe(motionResponse.paths[1].case);
  });

  it("distinguishes no-path results from a missing query", () => {
    const state = new ViewState();
    state.setSpace(spaceReport);
    const player = new MotionPlayer(state, () => undefined);
    expect(player.status).toBe("idle");
    state.setMotion({ paths: [] });
    expect(player.status).toBe("no-path");
    expect(player.caseLabel).toBe("no path");
    expect(player.step()).toBeNull();
    state.setMotion(motionResponse);
    expect(player.status).toBe("ready");
  });

  it("keeps the scrub position within the served range", () => {
    const { state, player } = playerWithMotion();
    player.scrub(10_000);
    expect(state.playhead).toBe(motionResponse.frames!.length - 1);
    player.scrub(-3);
    expect(state.playhead).toBe(0);
  });
});
