// Payload shapes of the HTTP JSON service.  The client treats every
// field as data to display or echo back; it never derives geometry.

export type Pair = [number, number];

export interface LinkageDocument {
  schemaVersion: number;
  vertices: number[];
  edges: { ends: Pair; length: number }[];
  baseNonEdge: Pair;
  labels?: Record<string, string>;
}

export interface ConstructionStepInfo {
  index: number;
  vertex: number;
  base: Pair;
}

export interface CheckReport {
  treeDecomposable: boolean;
  lowCayleyComplexity: boolean;
  failingStep: number | null;
  onePath: boolean;
  lastLevel: number[];
  steps: ConstructionStepInfo[];
}

export interface UploadResponse {
  hash: string;
  check: CheckReport;
}

export interface AdjacentRef {
  sigma: string;
  interval: Pair;
}

// one entry per interval end; null means space boundary, "ambiguous"
// means the server refuses to pick among coinciding extremes
export type AdjacencyEntry = {
  lo: AdjacentRef | null | "ambiguous";
  hi: AdjacentRef | null | "ambiguous";
};

export interface EndpointRecord {
  value: number;
  kind: string;
  type: string;
  steps: number[];
  ends: string[];
}

export interface TypeEntry {
  sigma: string;
  intervals: Pair[];
  endpoints: EndpointRecord[];
  adjacency: AdjacencyEntry[];
}

export interface SpaceReport {
  schemaVersion: number;
  algorithm: string;
  base: Pair;
  types: TypeEntry[];
  union: Pair[];
  pieces?: Pair[];
  timingSeconds: number;
  diagnostics: {
    deadEndCandidates: number[];
    fourCycles: { from: Pair; to: Pair; kind: string }[];
  };
}

export interface Frame {
  baseLength: number;
  forwardType: string;
  positions: Record<string, Pair>;
}

export interface PathLeg {
  sigma: string;
  interval: Pair;
  direction: string;
}

export interface PathPayload {
  case: string;
  lfStart: number;
  lfTarget: number;
  legs: PathLeg[];
  transitions: { lf: number; flippedStep: number }[];
}

export interface MotionResponse {
  paths: PathPayload[];
  frames?: Frame[];
  continuityBound?: number;
}

export interface CurvePoint {
  distances: number[];
  sigma: string;
  component: number;
}

export interface CurvePayload {
  schemaVersion: number;
  nonEdges: Pair[];
  points: CurvePoint[];
}

export interface ApiErrorPayload {
  error: string;
  message: string;
  context?: unknown;
}
