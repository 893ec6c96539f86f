// Interval bar: the union track on top, one track per nonempty type
// below it.  Dragging moves the Cayley parameter and snaps it into the
// hovered interval; circles at interval ends are flip handles wired to
// the server-declared adjacency (absent entry, no handle).

import type { Pair, SpaceReport } from "./types.js";
import type { ViewState } from "./state.js";

const SVG_NS = "http://www.w3.org/2000/svg";

export interface TrackSegment {
  sigma: string | null; // null for the union track
  intervalIndex: number;
  x0: number;
  x1: number;
  y: number;
  interval: Pair;
}

export interface BarLayout {
  min: number;
  max: number;
  width: number;
  rowHeight: number;
  segments: TrackSegment[];
  toX(lf: number): number;
  toLf(x: number): number;
}

export function barLayout(
  report: SpaceReport,
  width: number,
  rowHeight = 22,
): BarLayout {
  const spans = report.union;
  const min = spans[0][0];
  const max = spans[spans.length - 1][1];
  const pad = 0.04 * (max - min || 1);
  const lo = min - pad;
  const hi = max + pad;
  const toX = (lf: number) => ((lf - lo) / (hi - lo)) * width;
  const toLf = (x: number) => lo + (x / width) * (hi - lo);

  const segments: TrackSegment[] = [];
  spans.forEach((interval, i) => {
    segments.push({
      sigma: null,
      intervalIndex: i,
      x0: toX(interval[0]),
      x1: toX(interval[1]),
      y: 0,
      interval,
    });
  });
  let row = 1;
  for (const entry of report.types) {
    if (entry.intervals.length === 0) continue;
    entry.intervals.forEach((interval, i) => {
      segments.push({
        sigma: entry.sigma,
        intervalIndex: i,
        x0: toX(interval[0]),
        x1: toX(interval[1]),
        y: row * rowHeight,
        interval,
      });
    });
    row += 1;
  }
  return { min, max, width, rowHeight, segments, toX, toLf };
}

export interface BarHandlers {
  onDrag(lf: number, sigma: string): void;
  onFlip(end: "lo" | "hi"): void;
}

export function renderIntervalBar(
  svg: SVGSVGElement,
  state: ViewState,
  handlers: BarHandlers,
): void {
  const report = state.space;
  if (!report) return;
  const width = Number(svg.getAttribute("width") ?? 640);
  const layout = barLayout(report, width);
  svg.replaceChildren();
  svg.setAttribute(
    "height",
    String((layout.segments[layout.segments.length - 1].y ?? 0) + 40),
  );

  for (const seg of layout.segments) {
    const line = document.createElementNS(SVG_NS, "line");
    line.setAttribute("x1", String(seg.x0));
    line.setAttribute("x2", String(seg.x1));
    line.setAttribute("y1", String(seg.y + 12));
    line.setAttribute("y2", String(seg.y + 12));
    line.setAttribute(
      "class",
      seg.sigma === null ? "track union" : "track type",
    );
    if (seg.sigma !== null) {
      line.addEventListener("pointerdown", (event) => {
        const x = (event as PointerEvent).offsetX;
        handlers.onDrag(layout.toLf(x), seg.sigma as string);
      });
    }
    svg.appendChild(line);

    if (seg.sigma === null) continue;
    const entry = state.typeEntry(seg.sigma);
    const ends: ("lo" | "hi")[] = ["lo", "hi"];
    for (const end of ends) {
      const adj = entry?.adjacency[seg.intervalIndex]?.[end] ?? null;
      if (adj === null || adj === "ambiguous") continue; // no affordance
      const handle = document.createElementNS(SVG_NS, "circle");
      handle.setAttribute("cx", String(end === "lo" ? seg.x0 : seg.x1));
      handle.setAttribute("cy", String(seg.y + 12));
      handle.setAttribute("r", "4");
      handle.setAttribute("class", "flip-handle");
      handle.addEventListener("pointerdown", (event) => {
        event.stopPropagation();
        handlers.onDrag(
          end === "lo" ? seg.interval[0] : seg.interval[1],
          seg.sigma as string,
        );
        handlers.onFlip(end);
      });
      svg.appendChild(handle);
    }

    const label = document.createElementNS(SVG_NS, "text");
    label.setAttribute("x", "2");
    label.setAttribute("y", String(seg.y + 8));
    label.setAttribute("class", "sigma-label");
    label.textContent = seg.sigma;
    svg.appendChild(label);
  }

  if (state.current) {
    const cursorRow = layout.segments.find(
      (s) => s.sigma === state.current?.sigma,
    );
    const marker = document.createElementNS(SVG_NS, "line");
    const x = layout.toX(state.current.lf);
    marker.setAttribute("x1", String(x));
    marker.setAttribute("x2", String(x));
    marker.setAttribute("y1", "0");
    marker.setAttribute("y2", String((cursorRow?.y ?? 0) + 24));
    marker.setAttribute("class", "cursor");
    svg.appendChild(marker);
  }
}
