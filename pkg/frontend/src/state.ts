// View state machine.  Every coordinate and interval it hands out came
// from a server response; the only client-side arithmetic is snapping
// the Cayley parameter into server-reported intervals and bookkeeping
// around the animation playhead.

import type {
  AdjacentRef,
  CheckReport,
  Frame,
  LinkageDocument,
  MotionResponse,
  Pair,
  PathPayload,
  SpaceReport,
  TypeEntry,
} from "./types.js";

export interface CayleyConfig {
  lf: number;
  sigma: string;
}

export interface FlipResult {
  target: AdjacentRef;
  config: CayleyConfig;
}

function insideWithSlack(interval: Pair, lf: number, slack: number): boolean {
  return lf >= interval[0] - slack && lf <= interval[1] + slack;
}

export class ViewState {
  documentHash: string | null = null;
  document: LinkageDocument | null = null;
  check: CheckReport | null = null;
  space: SpaceReport | null = null;
  current: CayleyConfig | null = null;
  startConfig: CayleyConfig | null = null;
  targetConfig: CayleyConfig | null = null;
  motionResult: MotionResponse | null = null;
  activePathIndex = 0;
  playhead = 0;
  curveAxes: [number, number] = [0, 0];
  lastGoodFrame: Frame | null = null;
  realizationError: string | null = null;

  private realizeSeq = 0;
  private appliedSeq = 0;

  setDocument(doc: LinkageDocument, hash: string, check: CheckReport): void {
    this.documentHash = hash;
    this.document = doc;
    this.check = check;
    this.space = null;
    this.current = null;
    this.startConfig = null;
    this.targetConfig = null;
    this.clearMotion();
    this.lastGoodFrame = null;
    this.realizationError = null;
  }

  setSpace(report: SpaceReport): void {
    this.space = report;
    if (this.current && this.typeEntry(this.current.sigma)) {
      this.current = this.snap(this.current.lf, this.current.sigma);
      return;
    }
    const first = report.types.find((t) => t.intervals.length > 0);
    if (!first) {
      this.current = null;
      return;
    }
    const [lo, hi] = first.intervals[0];
    this.current = { lf: (lo + hi) / 2, sigma: first.sigma };
  }

  typeEntry(sigma: string): TypeEntry | null {
    return this.space?.types.find((t) => t.sigma === sigma) ?? null;
  }

  // nearest point of the sigma's reported intervals: inside an interval
  // it is the value itself, in a gap or beyond the ends it is the
  // closest endpoint, so the invariant "current lies inside a reported
  // interval" survives any slider value
  snap(lf: number, sigma: string): CayleyConfig {
    const entry = this.typeEntry(sigma);
    if (!entry || entry.intervals.length === 0) {
      throw new Error(`type ${sigma} has no reported intervals`);
    }
    let best = lf;
    let bestDist = Infinity;
    for (const [lo, hi] of entry.intervals) {
      const clamped = Math.min(Math.max(lf, lo), hi);
      const dist = Math.abs(clamped - lf);
      if (dist < bestDist) {
        best = clamped;
        bestDist = dist;
      }
    }
    return { lf: best, sigma };
  }

  setLf(lf: number): void {
    if (!this.current) return;
    this.current = this.snap(lf, this.current.sigma);
  }

  intervalOf(config: CayleyConfig): { interval: Pair; index: number } | null {
    const entry = this.typeEntry(config.sigma);
    if (!entry) return null;
    const slack = 1e-9 * (1 + Math.abs(config.lf));
    for (let i = 0; i < entry.intervals.length; i++) {
      if (insideWithSlack(entry.intervals[i], config.lf, slack)) {
        return { interval: entry.intervals[i], index: i };
      }
    }
    return null;
  }

  adjacencyAt(
    config: CayleyConfig,
    end: "lo" | "hi",
  ): AdjacentRef | null | "ambiguous" {
    const entry = this.typeEntry(config.sigma);
    const at = this.intervalOf(config);
    if (!entry || !at) return null;
    return entry.adjacency[at.index]?.[end] ?? null;
  }

  canFlip(end: "lo" | "hi"): boolean {
    if (!this.current) return false;
    const adj = this.adjacencyAt(this.current, end);
    return adj !== null && adj !== "ambiguous";
  }

  // move to the interval endpoint and cross over into the interval the
  // server declared adjacent there; the shared endpoint value lands
  // inside the target interval by construction, snap keeps it there
  flipAtEndpoint(end: "lo" | "hi"): FlipResult | null {
    if (!this.current) return null;
    const at = this.intervalOf(this.current);
    const adj = this.adjacencyAt(this.current, end);
    if (!at || adj === null || adj === "ambiguous") return null;
    const value = end === "hi" ? at.interval[1] : at.interval[0];
    const landed = this.snap(value, adj.sigma);
    if (!insideWithSlack(adj.interval, landed.lf, 1e-9 * (1 + Math.abs(value)))) {
      throw new Error("flip landed outside the declared adjacent interval");
    }
    this.current = landed;
    return { target: adj, config: landed };
  }

  markStart(): void {
    if (this.current) this.startConfig = { ...this.current };
  }

  markTarget(): void {
    if (this.current) this.targetConfig = { ...this.current };
  }

  clearMotion(): void {
    this.motionResult = null;
    this.activePathIndex = 0;
    this.playhead = 0;
  }

  setMotion(response: MotionResponse): void {
    this.motionResult = response;
    this.activePathIndex = 0;
    this.playhead = 0;
  }

  get paths(): PathPayload[] {
    return this.motionResult?.paths ?? [];
  }

  get frames(): Frame[] | null {
    return this.motionResult?.frames ?? null;
  }

  get continuityBound(): number | null {
    return this.motionResult?.continuityBound ?? null;
  }

  get activePath(): PathPayload | null {
    return this.paths[this.activePathIndex] ?? null;
  }

  selectPath(index: number): void {
    if (index >= 0 && index < this.paths.length) {
      this.activePathIndex = index;
      this.playhead = 0;
    }
  }

  setPlayhead(index: number): void {
    const last = (this.frames?.length ?? 1) - 1;
    this.playhead = Math.min(Math.max(index, 0), Math.max(last, 0));
  }

  frameAtPlayhead(): Frame | null {
    return this.frames?.[this.playhead] ?? null;
  }

  // served frames must respect the continuity bound the server computed
  // for them; a violation means frames were dropped or reordered
  framesContinuous(): boolean {
    if (!this.frames || this.frames.length < 2) return true;
    if (this.continuityBound === null) return false;
    const limit = this.continuityBound * (1 + 1e-9) + 1e-12;
    for (let i = 1; i < this.frames.length; i++) {
      const a = this.frames[i - 1].positions;
      const b = this.frames[i].positions;
      for (const v of Object.keys(a)) {
        const dx = b[v][0] - a[v][0];
        const dy = b[v][1] - a[v][1];
        if (Math.hypot(dx, dy) > limit) return false;
      }
    }
    return true;
  }

  // realization responses can arrive out of order; only the newest
  // request may update the drawing
  beginRealize(): number {
    return ++this.realizeSeq;
  }

  applyRealization(token: number, frame: Frame): boolean {
    if (token < this.appliedSeq) return false;
    this.appliedSeq = token;
    this.lastGoodFrame = frame;
    this.realizationError = null;
    return true;
  }

  applyRealizationError(token: number, message: string): boolean {
    if (token < this.appliedSeq) return false;
    this.appliedSeq = token;
    this.realizationError = message;
    return true;
  }
}
