import { describe, expect, it } from "vitest";

import type { EdgeItem } from "../src/api.js";
import {
  buildChartModel,
  CHARS_PER_PAGE,
  DEFAULT_VIEWPORT,
  renderChartSvg,
  tooltipText,
} from "../src/chart.js";
import { GAP_BLUE } from "../src/colors.js";

function edge(overrides: Partial<EdgeItem> = {}): EdgeItem {
  return {
    edge_id: 1,
    other_doc_id: "x0001",
    other_year: 1760,
    other_author: "Frost, Ella",
    other_title: "Collected Works",
    primary_start: 900,
    primary_end: 1100,
    other_start: 0,
    other_end: 200,
    align_length: 200,
    positives_percent: 85,
    page: 1,
    year_gap: 10,
    ...overrides,
  };
}

describe("buildChartModel", () => {
  it("produces one dot per edge", () => {
    const edges = [1740, 1750, 1760, 1760].map((y, i) =>
      edge({ edge_id: i + 1, other_year: y, primary_start: i * 500, primary_end: i * 500 + 100 }),
    );
    const model = buildChartModel(edges, 3600);
    expect(model.dots).toHaveLength(4);
  });

  it("anchors x by year and y by span midpoint", () => {
    const edges = [
      edge({ edge_id: 1, other_year: 1700, primary_start: 0, primary_end: 0 }),
      edge({ edge_id: 2, other_year: 1800, primary_start: 3600, primary_end: 3600 }),
    ];
    const vp = DEFAULT_VIEWPORT;
    const model = buildChartModel(edges, 3600, vp);
    const [a, b] = model.dots.map((d) => d.anchor);
    expect(a.x).toBe(vp.marginLeft);
    expect(b.x).toBe(vp.width - vp.marginRight);
    expect(a.y).toBe(vp.marginTop);
    expect(b.y).toBe(vp.height - vp.marginBottom);
  });

  it("labels the y axis in pages using the flat page estimate", () => {
    const model = buildChartModel([edge()], 4 * CHARS_PER_PAGE);
    const labels = model.yTicks.map((t) => t.label);
    expect(labels[0]).toBe("p. 1");
    expect(labels).toContain("p. 2");
    // ticks are page boundaries, so they are ordered down the axis
    const px = model.yTicks.map((t) => t.px);
    expect([...px].sort((a, b) => a - b)).toEqual(px);
  });

  it("widens a degenerate single-year domain", () => {
    const model = buildChartModel([edge({ other_year: 1750 })], 2000);
    expect(model.xTicks.length).toBeGreaterThan(0);
    const dot = model.dots[0];
    expect(Number.isFinite(dot.x)).toBe(true);
  });

  it("copes with an empty edge list", () => {
    const model = buildChartModel([], 2000);
    expect(model.dots).toEqual([]);
  });
});

describe("renderChartSvg", () => {
  it("renders one circle per dot with its gap color and tooltip", () => {
    const edges = [
      edge({ edge_id: 1, year_gap: 0 }),
      edge({ edge_id: 2, year_gap: 60, primary_start: 2000, primary_end: 2200 }),
    ];
    const svg = renderChartSvg(buildChartModel(edges, 3600));
    expect(svg.match(/<circle /g)).toHaveLength(2);
    expect(svg).toContain(`fill="${GAP_BLUE}"`);
    expect(svg).toContain('data-edge-id="1"');
    expect(svg).toContain('data-edge-id="2"');
    expect(svg).toContain("<title>");
  });

  it("marks the selected edge", () => {
    const svg = renderChartSvg(buildChartModel([edge({ edge_id: 9 })], 2000), 9);
    expect(svg).toContain('class="dot selected"');
  });

  it("escapes markup in titles", () => {
    const svg = renderChartSvg(
      buildChartModel([edge({ other_title: "<b>&co" })], 2000),
    );
    expect(svg).not.toContain("<b>&co");
    expect(svg).toContain("&lt;b&gt;&amp;co");
  });
});

describe("tooltipText", () => {
  it("shows year, author, title, and page", () => {
    const tip = tooltipText(edge({ page: 3 }));
    expect(tip).toBe("1760 Frost, Ella, Collected Works (p. 3)");
  });

  it("falls back when the author is empty", () => {
    expect(tooltipText(edge({ other_author: "" }))).toContain("(no author)");
  });
});
