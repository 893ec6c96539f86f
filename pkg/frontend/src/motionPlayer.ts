// Animation playback over served frames.  The player owns a playhead
// and a clock; it never invents frames, it only steps through the
// array the motion response carried and reports where the type flips
// happen so the UI can mark them.

import type { Frame, PathPayload } from "./types.js";
import type { ViewState } from "./state.js";

export type PlayerStatus = "idle" | "no-path" | "ready" | "playing";

// frame index right after each leg boundary, where the flipped step
// takes over; legs are sampled with an equal frame count each
export function transitionIndices(
  path: PathPayload,
  frameCount: number,
): number[] {
  if (path.legs.length < 2 || frameCount === 0) return [];
  const perLeg = frameCount / path.legs.length;
  const out: number[] = [];
  for (let leg = 1; leg < path.legs.length; leg++) {
    out.push(Math.min(Math.round(leg * perLeg), frameCount - 1));
  }
  return out;
}

export class MotionPlayer {
  private readonly state: ViewState;
  private readonly emit: (frame: Frame) => void;
  private timer: ReturnType<typeof setInterval> | null = null;
  frameDelayMs = 90;

  constructor(state: ViewState, emit: (frame: Frame) => void) {
    this.state = state;
    this.emit = emit;
  }

  get status(): PlayerStatus {
    if (this.state.motionResult === null) return "idle";
    if (this.state.paths.length === 0) return "no-path";
    return this.timer === null ? "ready" : "playing";
  }

  get caseLabel(): string {
    return this.state.activePath?.case ?? "no path";
  }

  get markers(): number[] {
    const path = this.state.activePath;
    const frames = this.state.frames;
    if (!path || !frames) return [];
    return transitionIndices(path, frames.length);
  }

  scrub(index: number): Frame | null {
    this.state.setPlayhead(index);
    const frame = this.state.frameAtPlayhead();
    if (frame) this.emit(frame);
    return frame;
  }

  step(): Frame | null {
    const frames = this.state.frames;
    if (!frames || frames.length === 0) return null;
    if (this.state.playhead >= frames.length - 1) {
      this.pause();
      return null;
    }
    return this.scrub(this.state.playhead + 1);
  }

  play(): void {
    if (this.timer !== null || !this.state.frames?.length) return;
    if (!this.state.framesContinuous()) {
      throw new Error("served frames violate their continuity bound");
    }
    this.scrub(this.state.playhead);
    this.timer = setInterval(() => this.step(), this.frameDelayMs);
  }

  pause(): void {
    if (this.timer !== null) {
      clearInterval(this.timer);
      this.timer = null;
    }
  }
}
