import { describe, expect, it } from "vitest";

import { barLayout } from "../src/intervalBar.js";
import {
  axisSelectorEnabled,
  componentColor,
  curveLayout,
  nearestPointIndex,
} from "../src/curvePanel.js";
import { curvePayload, spaceReport } from "./fixtures.js";

describe("interval bar layout", () => {
  it("places the union track and one row per nonempty type", () => {
    const layout = barLayout(spaceReport, 640);
    const unionSegs = layout.segments.filter((s) => s.sigma === null);
    expect(unionSegs.length).toBe(spaceReport.union.length);
    const rows = new Set(
      layout.segments.filter((s) => s.sigma !== null).map((s) => s.y),
    );
    const nonempty = spaceReport.types.filter((t) => t.intervals.length > 0);
    expect(rows.size).toBe(nonempty.length);
  });

  it("maps between pixels and parameter values consistently", () => {
    const layout = barLayout(spaceReport, 640);
    for (const lf of [layout.min, (layout.min + layout.max) / 2, layout.max]) {
      expect(layout.toLf(layout.toX(lf))).toBeCloseTo(lf, 9);
    }
    expect(layout.toX(layout.min)).toBeGreaterThan(0);
    expect(layout.toX(layout.max)).toBeLessThan(640);
  });
});

describe("curve panel helpers", () => {
  it("enables the axis choice only with several projection axes", () => {
    expect(axisSelectorEnabled(curvePayload)).toBe(true);
    expect(
      axisSelectorEnabled({ ...curvePayload, nonEdges: [[1, 3]] }),
    ).toBe(false);
  });

  it("colors components consistently", () => {
    const components = new Set(curvePayload.points.map((p) => p.component));
    expect(components.size).toBeGreaterThan(1);
    for (const c of components) {
      expect(componentColor(c)).toBe(componentColor(c));
      expect(componentColor(c)).toMatch(/^#/);
    }
  });

  it("tracks the current configuration to a same-type sample", () => {
    const sample = curvePayload.points[0];
    const index = nearestPointIndex(
      curvePayload,
      sample.sigma,
      sample.distances[0],
    );
    expect(index).not.toBeNull();
    expect(curvePayload.points[index!].sigma).toBe(sample.sigma);
    expect(curvePayload.points[index!].distances[0]).toBeCloseTo(
      sample.distances[0],
      9,
    );
    expect(nearestPointIndex(curvePayload, "0000", 7.2)).toBeNull();
  });

  it("keeps every sample inside the panel", () => {
    const layout = curveLayout(curvePayload, [0, 1], 360, 300);
    for (const point of curvePayload.points) {
      const [x, y] = layout.place(point);
      expect(x).toBeGreaterThanOrEqual(0);
      expect(x).toBeLessThanOrEqual(360);
      expect(y).toBeGreaterThanOrEqual(0);
      expect(y).toBeLessThanOrEqual(300);
    }
  });
});
