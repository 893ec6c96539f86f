// Scatter plot of the curve projection onto two chosen distance axes,
// colored by connected component, with the current configuration
// tracked as a larger marker.

import type { CurvePayload, CurvePoint, Pair } from "./types.js";

const SVG_NS = "http://www.w3.org/2000/svg";

const PALETTE = [
  "#4269d0",
  "#efb118",
  "#ff725c",
  "#6cc5b0",
  "#3ca951",
  "#ff8ab7",
  "#a463f2",
  "#97bbf5",
];

export function componentColor(component: number): string {
  return PALETTE[component % PALETTE.length];
}

export function axisSelectorEnabled(curve: CurvePayload): boolean {
  return curve.nonEdges.length > 1;
}

export interface CurveLayout {
  place(point: CurvePoint): Pair;
}

export function curveLayout(
  curve: CurvePayload,
  axes: [number, number],
  width: number,
  height: number,
  margin = 20,
): CurveLayout {
  const [ax, ay] = axes;
  const xs = curve.points.map((p) => p.distances[ax]);
  const ys = curve.points.map((p) => p.distances[ay]);
  const minX = Math.min(...xs);
  const maxX = Math.max(...xs);
  const minY = Math.min(...ys);
  const maxY = Math.max(...ys);
  const sx = (width - 2 * margin) / Math.max(maxX - minX, 1e-9);
  const sy = (height - 2 * margin) / Math.max(maxY - minY, 1e-9);
  return {
    place: (p) => [
      margin + (p.distances[ax] - minX) * sx,
      height - margin - (p.distances[ay] - minY) * sy,
    ],
  };
}

// nearest sample of the current type by base distance; the base
// non-edge is always the first projection axis the service reports
export function nearestPointIndex(
  curve: CurvePayload,
  sigma: string,
  lf: number,
): number | null {
  let best: number | null = null;
  let bestDist = Infinity;
  curve.points.forEach((p, i) => {
    if (p.sigma !== sigma) return;
    const d = Math.abs(p.distances[0] - lf);
    if (d < bestDist) {
      bestDist = d;
      best = i;
    }
  });
  return best;
}

export function renderCurvePanel(
  svg: SVGSVGElement,
  curve: CurvePayload,
  axes: [number, number],
  current: { sigma: string; lf: number } | null,
): void {
  const width = Number(svg.getAttribute("width") ?? 360);
  const height = Number(svg.getAttribute("height") ?? 300);
  const layout = curveLayout(curve, axes, width, height);
  svg.replaceChildren();

  for (const point of curve.points) {
    const [cx, cy] = layout.place(point);
    const dot = document.createElementNS(SVG_NS, "circle");
    dot.setAttribute("cx", String(cx));
    dot.setAttribute("cy", String(cy));
    dot.setAttribute("r", "2.5");
    dot.setAttribute("fill", componentColor(point.component));
    dot.setAttribute("class", "curve-point");
    svg.appendChild(dot);
  }

  if (current) {
    const index = nearestPointIndex(curve, current.sigma, current.lf);
    if (index !== null) {
      const [cx, cy] = layout.place(curve.points[index]);
      const marker = document.createElementNS(SVG_NS, "circle");
      marker.setAttribute("cx", String(cx));
      marker.setAttribute("cy", String(cy));
      marker.setAttribute("r", "6");
      marker.setAttribute("class", "curve-current");
      svg.appendChild(marker);
    }
  }
}
