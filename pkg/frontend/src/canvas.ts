// Realization drawing.  Vertices and bars come straight out of a
// served frame plus the uploaded document's edge list; the base
// non-edge is dashed; vertices of steps whose orientation sign is zero
// get a highlight ring (a collinear extreme).

import type { CheckReport, Frame, LinkageDocument, Pair } from "./types.js";

const SVG_NS = "http://www.w3.org/2000/svg";

export interface CanvasTransform {
  toScreen(p: Pair): Pair;
}

export function fitTransform(
  frame: Frame,
  width: number,
  height: number,
  margin = 24,
): CanvasTransform {
  const pts = Object.values(frame.positions);
  const xs = pts.map((p) => p[0]);
  const ys = pts.map((p) => p[1]);
  const minX = Math.min(...xs);
  const maxX = Math.max(...xs);
  const minY = Math.min(...ys);
  const maxY = Math.max(...ys);
  const scale = Math.min(
    (width - 2 * margin) / Math.max(maxX - minX, 1e-9),
    (height - 2 * margin) / Math.max(maxY - minY, 1e-9),
  );
  return {
    toScreen: ([x, y]) => [
      margin + (x - minX) * scale,
      height - margin - (y - minY) * scale,
    ],
  };
}

export function zeroStepVertices(frame: Frame, check: CheckReport): number[] {
  const out: number[] = [];
  for (let i = 0; i < frame.forwardType.length; i++) {
    if (frame.forwardType[i] === "0") {
      const step = check.steps[i];
      if (step) out.push(step.vertex);
    }
  }
  return out;
}

export function renderRealization(
  svg: SVGSVGElement,
  doc: LinkageDocument,
  check: CheckReport,
  frame: Frame,
  errorBadge: string | null,
): void {
  const width = Number(svg.getAttribute("width") ?? 420);
  const height = Number(svg.getAttribute("height") ?? 360);
  const view = fitTransform(frame, width, height);
  svg.replaceChildren();

  const drawSegment = (a: Pair, b: Pair, cls: string) => {
    const [x1, y1] = view.toScreen(a);
    const [x2, y2] = view.toScreen(b);
    const line = document.createElementNS(SVG_NS, "line");
    line.setAttribute("x1", String(x1));
    line.setAttribute("y1", String(y1));
    line.setAttribute("x2", String(x2));
    line.setAttribute("y2", String(y2));
    line.setAttribute("class", cls);
    svg.appendChild(line);
  };

  for (const edge of doc.edges) {
    const [u, v] = edge.ends;
    drawSegment(frame.positions[String(u)], frame.positions[String(v)], "bar");
  }
  const [bu, bv] = doc.baseNonEdge;
  drawSegment(
    frame.positions[String(bu)],
    frame.positions[String(bv)],
    "base-non-edge",
  );

  const highlighted = new Set(zeroStepVertices(frame, check));
  for (const [name, p] of Object.entries(frame.positions)) {
    const [cx, cy] = view.toScreen(p);
    const dot = document.createElementNS(SVG_NS, "circle");
    dot.setAttribute("cx", String(cx));
    dot.setAttribute("cy", String(cy));
    dot.setAttribute("r", highlighted.has(Number(name)) ? "7" : "4");
    dot.setAttribute(
      "class",
      highlighted.has(Number(name)) ? "joint zero-step" : "joint",
    );
    svg.appendChild(dot);
    const tag = document.createElementNS(SVG_NS, "text");
    tag.setAttribute("x", String(cx + 6));
    tag.setAttribute("y", String(cy - 6));
    tag.setAttribute("class", "joint-label");
    tag.textContent = name;
    svg.appendChild(tag);
  }

  if (errorBadge) {
    const badge = document.createElementNS(SVG_NS, "text");
    badge.setAttribute("x", "8");
    badge.setAttribute("y", "16");
    badge.setAttribute("class", "error-badge");
    badge.textContent = errorBadge;
    svg.appendChild(badge);
  }
}
