/**
 * End-to-end acceptance gate for the web client. One [acceptance] line
 * per criterion so the verdicts read off the run log:
 *
 *   1. beeswarm layout: zero overlapping pairs at 5,000 dots, and two
 *      dots sharing an anchor end up at least one diameter apart;
 *   2. year-gap color scale endpoints: gap 0 is the blue endpoint, gaps
 *      50 and 80 the identical red endpoint;
 *   3. chart dots, table rows, and the API's own answer agree for every
 *      direction and year-filter combination on the fixture served by
 *      the real HTTP API.
 */

import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { fetchDocument, fetchEdges, setApiBase, type Direction } from "../src/api.js";
import { layoutSwarm, overlappingPairs } from "../src/beeswarm.js";
import { buildChartModel, renderChartSvg } from "../src/chart.js";
import { GAP_BLUE, GAP_RED, gapColor } from "../src/colors.js";
import { buildTableRows, renderTableHtml } from "../src/table.js";
import { startFixtureServer, type RunningServer } from "./helpers/server.js";

function verdict(name: string, ok: boolean, detail: string): void {
  console.log(`[acceptance] ${name}: ${ok ? "PASS" : "FAIL"} (${detail})`);
  expect(ok, `${name}: ${detail}`).toBe(true);
}

describe("beeswarm layout", () => {
  it("places 5000 dots with zero overlapping pairs", () => {
    // deterministic congested cloud: many repeated anchors, tight range
    let s = 12345 >>> 0;
    const rand = () => {
      s = (s * 1664525 + 1013904223) >>> 0;
      return s / 2 ** 32;
    };
    const radius = 4.5;
    const items = Array.from({ length: 5000 }, (_, i) => ({
      i,
      x: 60 + Math.floor(rand() * 120) * 6,
      y: 14 + Math.floor(rand() * 80) * 6,
    }));
    const dots = layoutSwarm(items, (d) => ({ x: d.x, y: d.y }), radius);
    const bad = overlappingPairs(dots, radius);
    verdict(
      "beeswarm-5000",
      bad.length === 0,
      `overlapping pairs: ${bad.length} of ${dots.length} dots`,
    );
  });

  it("separates identical anchors by at least one diameter", () => {
    const radius = 4.5;
    const dots = layoutSwarm([0, 1], () => ({ x: 200, y: 150 }), radius);
    const d = Math.hypot(dots[0].x - dots[1].x, dots[0].y - dots[1].y);
    verdict(
      "beeswarm-identical-anchors",
      d >= 2 * radius,
      `center distance ${d.toFixed(3)}px vs diameter ${2 * radius}px`,
    );
  });
});

describe("color scale endpoints", () => {
  it("maps gap 0 to blue and gaps 50/80 to the same red", () => {
    const atZero = gapColor(0);
    const at50 = gapColor(50);
    const at80 = gapColor(80);
    const ok = atZero === GAP_BLUE && at50 === GAP_RED && at50 === at80;
    verdict(
      "color-endpoints",
      ok,
      `gap0=${atZero} gap50=${at50} gap80=${at80}`,
    );
  });
});

describe("chart/table/count consistency", () => {
  let server: RunningServer;

  beforeAll(async () => {
    server = await startFixtureServer();
    setApiBase(server.baseUrl);
  });

  afterAll(() => {
    server?.stop();
    setApiBase("");
  });

  const yearFilters: { label: string; from: number | null; to: number | null }[] = [
    { label: "all years", from: null, to: null },
    { label: "from 1740", from: 1740, to: null },
    { label: "to 1755", from: null, to: 1755 },
    { label: "1745-1765", from: 1745, to: 1765 },
    { label: "empty range", from: 1900, to: null },
  ];

  it("dot count = row count = API count for every combination", async () => {
    const doc = await fetchDocument("h0001");
    let combos = 0;
    let failures: string[] = [];

    for (const direction of ["in", "out"] as Direction[]) {
      for (const f of yearFilters) {
        const edges = await fetchEdges("h0001", {
          direction,
          yearFrom: f.from,
          yearTo: f.to,
        });
        const apiCount = edges.length;

        const model = buildChartModel(edges, doc.text_length);
        const svg = renderChartSvg(model);
        const dotCount = model.dots.length;
        const circleCount = (svg.match(/<circle /g) ?? []).length;

        const rows = buildTableRows(edges);
        const html = renderTableHtml(rows, null);
        const rowCount = (html.match(/<tr data-edge-id/g) ?? []).length;

        combos++;
        if (
          dotCount !== apiCount ||
          circleCount !== apiCount ||
          rowCount !== apiCount
        ) {
          failures.push(
            `${direction}/${f.label}: api=${apiCount} dots=${dotCount} circles=${circleCount} rows=${rowCount}`,
          );
        }
      }
    }

    // the unfiltered views must also agree with the document's counts
    const unfilteredIn = await fetchEdges("h0001", { direction: "in" });
    const unfilteredOut = await fetchEdges("h0001", { direction: "out" });
    if (unfilteredIn.length !== doc.in_count) {
      failures.push(`in_count ${doc.in_count} != ${unfilteredIn.length}`);
    }
    if (unfilteredOut.length !== doc.out_count) {
      failures.push(`out_count ${doc.out_count} != ${unfilteredOut.length}`);
    }

    verdict(
      "chart-table-count-consistency",
      failures.length === 0,
      failures.length === 0
        ? `${combos} direction/filter combinations agree, in=${doc.in_count} out=${doc.out_count}`
        : failures.join("; "),
    );
  });
});
