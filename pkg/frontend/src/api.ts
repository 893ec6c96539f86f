// Fetch wrapper for the linkage service.  De-duplicates identical
// in-flight requests by their URL plus body so rapid UI interactions
// reuse one round trip instead of stacking repeats.

import type {
  CurvePayload,
  LinkageDocument,
  MotionResponse,
  SpaceReport,
  UploadResponse,
  Frame,
  ApiErrorPayload,
} from "./types.js";

export class ApiError extends Error {
  readonly status: number;
  readonly payload: ApiErrorPayload;

  constructor(status: number, payload: ApiErrorPayload) {
    super(payload.message || payload.error || `HTTP ${status}`);
    this.status = status;
    this.payload = payload;
  }
}

type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class ApiClient {
  private readonly baseUrl: string;
  private readonly fetchFn: FetchLike;
  private readonly inflight = new Map<string, Promise<unknown>>();

  constructor(baseUrl = "", fetchFn?: FetchLike) {
    this.baseUrl = baseUrl.replace(/\/$/, "");
    this.fetchFn = fetchFn ?? ((url, init) => fetch(url, init));
  }

  private dedup<T>(key: string, run: () => Promise<T>): Promise<T> {
    const pending = this.inflight.get(key);
    if (pending) return pending as Promise<T>;
    const job = run().finally(() => this.inflight.delete(key));
    this.inflight.set(key, job);
    return job;
  }

  private async send<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await this.fetchFn(this.baseUrl + path, init);
    const body = (await response.json()) as T | ApiErrorPayload;
    if (!response.ok) {
      throw new ApiError(response.status, body as ApiErrorPayload);
    }
    return body as T;
  }

  // value formatting matters: String() yields the shortest decimal that
  // round-trips, which the service parses back to the identical float
  private query(params: Record<string, string | number>): string {
    const search = new URLSearchParams();
    for (const [name, value] of Object.entries(params)) {
      search.set(name, typeof value === "number" ? String(value) : value);
    }
    return "?" + search.toString();
  }

  upload(doc: LinkageDocument): Promise<UploadResponse> {
    const body = JSON.stringify(doc);
    return this.dedup("POST /linkage " + body, () =>
      this.send("/linkage", { method: "POST", body }),
    );
  }

  space(doc: string, algo: "elr" | "qim" = "elr"): Promise<SpaceReport> {
    const q = this.query({ doc, algo });
    return this.dedup("GET /space" + q, () => this.send("/space" + q));
  }

  realize(doc: string, lf: number, sigma: string): Promise<Frame> {
    const q = this.query({ doc, lf, sigma });
    return this.dedup("GET /realize" + q, () => this.send("/realize" + q));
  }

  motion(
    doc: string,
    from: { lf: number; sigma?: string },
    to: { lf: number; sigma?: string },
    animate = 0,
  ): Promise<MotionResponse> {
    const body = JSON.stringify({ doc, from, to, animate });
    return this.dedup("POST /motion " + body, () =>
      this.send("/motion", { method: "POST", body }),
    );
  }

  curve(doc: string, resolution = 64): Promise<CurvePayload> {
    const q = this.query({ doc, resolution });
    return this.dedup("GET /curve" + q, () => this.send("/curve" + q));
  }
}
