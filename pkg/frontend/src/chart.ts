/**
 * Beeswarm chart of a document's reuse edges.
 *
 * X is the other document's publication year; Y is where the reused span
 * sits in the primary document, labeled in pages. Dot color encodes the
 * year gap. The model is plain data and the renderer emits an SVG
 * string, so both are testable without a browser.
 */

import type { EdgeItem } from "./api.js";
import { layoutSwarm, type PlacedDot } from "./beeswarm.js";
import { gapColor } from "./colors.js";
import { attr, esc } from "./html.js";

// flat page estimate used for axis labels when no page map is available;
// matches the server's fallback
export const CHARS_PER_PAGE = 1800;

export const DOT_RADIUS = 4.5;

export interface ChartViewport {
  width: number;
  height: number;
  marginLeft: number;
  marginRight: number;
  marginTop: number;
  marginBottom: number;
}

export const DEFAULT_VIEWPORT: ChartViewport = {
  width: 840,
  height: 520,
  marginLeft: 64,
  marginRight: 18,
  marginTop: 14,
  marginBottom: 40,
};

export interface Tick {
  px: number;
  label: string;
}

export interface ChartModel {
  dots: PlacedDot<EdgeItem>[];
  xTicks: Tick[];
  yTicks: Tick[];
  viewport: ChartViewport;
  radius: number;
}

/** Evenly spaced "nice" steps: 1/2/5 times a power of ten. */
function niceStep(span: number, target: number): number {
  const rough = span / Math.max(target, 1);
  const pow = Math.pow(10, Math.floor(Math.log10(Math.max(rough, 1e-9))));
  for (const m of [1, 2, 5, 10]) {
    if (pow * m >= rough) return pow * m;
  }
  return pow * 10;
}

function linear(domainLo: number, domainHi: number, rangeLo: number, rangeHi: number) {
  const d = domainHi - domainLo || 1;
  return (v: number) => rangeLo + ((v - domainLo) / d) * (rangeHi - rangeLo);
}

export function buildChartModel(
  edges: readonly EdgeItem[],
  textLength: number,
  viewport: ChartViewport = DEFAULT_VIEWPORT,
  radius: number = DOT_RADIUS,
): ChartModel {
  const vp = viewport;
  const left = vp.marginLeft;
  const right = vp.width - vp.marginRight;
  const top = vp.marginTop;
  const bottom = vp.height - vp.marginBottom;

  let yearLo = Infinity;
  let yearHi = -Infinity;
  for (const e of edges) {
    if (e.other_year < yearLo) yearLo = e.other_year;
    if (e.other_year > yearHi) yearHi = e.other_year;
  }
  if (edges.length === 0) {
    yearLo = 0;
    yearHi = 1;
  } else if (yearLo === yearHi) {
    yearLo -= 1;
    yearHi += 1;
  }

  const xScale = linear(yearLo, yearHi, left, right);
  const yScale = linear(0, Math.max(textLength, 1), top, bottom);

  const dots = layoutSwarm(
    edges,
    (e) => ({
      x: xScale(e.other_year),
      y: yScale((e.primary_start + e.primary_end) / 2),
    }),
    radius,
  );

  const xTicks: Tick[] = [];
  const xStep = niceStep(yearHi - yearLo, 6);
  for (let y = Math.ceil(yearLo / xStep) * xStep; y <= yearHi; y += xStep) {
    xTicks.push({ px: xScale(y), label: String(y) });
  }

  // y ticks sit on page boundaries so the axis reads in pages
  const pages = Math.max(1, Math.ceil(textLength / CHARS_PER_PAGE));
  const pageStep = niceStep(pages, 8);
  const yTicks: Tick[] = [];
  for (let p = 1; p <= pages; p += pageStep) {
    yTicks.push({ px: yScale((p - 1) * CHARS_PER_PAGE), label: `p. ${p}` });
  }

  return { dots, xTicks, yTicks, viewport: vp, radius };
}

export function tooltipText(e: EdgeItem): string {
  const author = e.other_author || "(no author)";
  return `${e.other_year} ${author}, ${e.other_title} (p. ${e.page})`;
}

export function renderChartSvg(
  model: ChartModel,
  selectedEdgeId: number | null = null,
): string {
  const { viewport: vp, radius } = model;
  const left = vp.marginLeft;
  const right = vp.width - vp.marginRight;
  const top = vp.marginTop;
  const bottom = vp.height - vp.marginBottom;

  const parts: string[] = [];
  parts.push(
    `<svg class="beeswarm" viewBox="0 0 ${vp.width} ${vp.height}" ` +
      `width="${vp.width}" height="${vp.height}" role="img">`,
  );

  parts.push(`<g class="axis">`);
  parts.push(
    `<line x1="${left}" y1="${bottom}" x2="${right}" y2="${bottom}"/>`,
    `<line x1="${left}" y1="${top}" x2="${left}" y2="${bottom}"/>`,
  );
  for (const t of model.xTicks) {
    parts.push(
      `<line x1="${t.px}" y1="${bottom}" x2="${t.px}" y2="${bottom + 5}"/>`,
      `<text x="${t.px}" y="${bottom + 18}" text-anchor="middle">${esc(t.label)}</text>`,
    );
  }
  for (const t of model.yTicks) {
    parts.push(
      `<line x1="${left - 5}" y1="${t.px}" x2="${left}" y2="${t.px}"/>`,
      `<text x="${left - 8}" y="${t.px + 4}" text-anchor="end">${esc(t.label)}</text>`,
    );
  }
  parts.push(`</g>`);

  parts.push(`<g class="dots">`);
  for (const dot of model.dots) {
    const e = dot.datum;
    const cls = e.edge_id === selectedEdgeId ? "dot selected" : "dot";
    parts.push(
      `<circle class="${cls}" ${attr("data-edge-id", e.edge_id)} ` +
        `cx="${dot.x.toFixed(2)}" cy="${dot.y.toFixed(2)}" r="${radius}" ` +
        `fill="${gapColor(e.year_gap)}">` +
        `<title>${esc(tooltipText(e))}</title></circle>`,
    );
  }
  parts.push(`</g></svg>`);
  return parts.join("");
}
