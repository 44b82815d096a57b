/**
 * Two-pane context viewer for one edge: the primary document's excerpt
 * on the left, the connected document's on the right, with the reused
 * span highlighted in both. When the API supplies token boxes (page-map
 * corpora) a facsimile strip positions the highlighted tokens at their
 * coordinates on the page; the flowed excerpt is always shown.
 */

import type { ContextSide, EdgeContext } from "./api.js";
import { esc } from "./html.js";

export interface FlowedText {
  pre: string;
  hi: string;
  post: string;
}

export interface FacsimileToken {
  x: number; // percent of strip width
  y: number;
  w: number;
  h: number;
}

export interface PaneModel {
  docId: string;
  caption: string;
  pageLabel: string;
  flowed: FlowedText;
  facsimile: FacsimileToken[] | null;
  externalUrl: string | null;
}

function clamp(v: number, lo: number, hi: number): number {
  return Math.min(Math.max(v, lo), hi);
}

export function buildPaneModel(side: ContextSide): PaneModel {
  const text = side.excerpt;
  // defensive clip: a highlight can touch the excerpt boundary exactly
  const hiStart = clamp(side.highlight_start, 0, text.length);
  const hiEnd = clamp(side.highlight_end, hiStart, text.length);

  let facsimile: FacsimileToken[] | null = null;
  if (side.boxes && side.boxes.length > 0) {
    // normalize box coordinates onto a percent grid so the strip scales
    // with the pane; keep only the first page of a multi-page highlight
    const page = side.boxes[0].page;
    const boxes = side.boxes.filter((b) => b.page === page);
    let maxX = 0;
    let maxY = 0;
    for (const b of boxes) {
      maxX = Math.max(maxX, b.x + b.w);
      maxY = Math.max(maxY, b.y + b.h);
    }
    facsimile = boxes.map((b) => ({
      x: (b.x / maxX) * 100,
      y: (b.y / maxY) * 100,
      w: (b.w / maxX) * 100,
      h: (b.h / maxY) * 100,
    }));
  }

  const author = side.author || "(no author)";
  return {
    docId: side.doc_id,
    caption: `${author}, ${side.title} (${side.year})`,
    pageLabel: `p. ${side.page}`,
    flowed: {
      pre: text.slice(0, hiStart),
      hi: text.slice(hiStart, hiEnd),
      post: text.slice(hiEnd),
    },
    facsimile,
    externalUrl: side.external_url,
  };
}

function renderPaneHtml(pane: PaneModel, label: string): string {
  const parts: string[] = [];
  parts.push(`<section class="context-pane">`);
  parts.push(
    `<header><span class="pane-label">${esc(label)}</span> ` +
      `<strong>${esc(pane.caption)}</strong> ` +
      `<span class="page-label">${esc(pane.pageLabel)}</span>` +
      (pane.externalUrl
        ? ` <a class="facsimile-link" href="${esc(pane.externalUrl)}" target="_blank" rel="noopener">source</a>`
        : "") +
      `</header>`,
  );
  if (pane.facsimile) {
    const tokens = pane.facsimile
      .map(
        (t) =>
          `<i style="left:${t.x.toFixed(2)}%;top:${t.y.toFixed(2)}%;` +
          `width:${t.w.toFixed(2)}%;height:${t.h.toFixed(2)}%"></i>`,
      )
      .join("");
    parts.push(`<div class="facsimile">${tokens}</div>`);
  }
  parts.push(
    `<p class="excerpt">${esc(pane.flowed.pre)}<mark>${esc(pane.flowed.hi)}</mark>${esc(pane.flowed.post)}</p>`,
  );
  parts.push(`</section>`);
  return parts.join("");
}

export function renderContextHtml(ctx: EdgeContext): string {
  const primary = buildPaneModel(ctx.primary);
  const other = buildPaneModel(ctx.other);
  const meta =
    `<div class="context-meta">aligned ${ctx.align_length} chars, ` +
    `${ctx.positives_percent.toFixed(1)}% matching, year gap ${ctx.year_gap}</div>`;
  return (
    `<div class="context" data-edge-id="${ctx.edge_id}">` +
    meta +
    `<div class="context-panes">` +
    renderPaneHtml(primary, "primary") +
    renderPaneHtml(other, "connected") +
    `</div></div>`
  );
}

export function renderContextNotFound(edgeId: number): string {
  return `<div class="context"><p class="empty">Edge ${edgeId} not found.</p></div>`;
}
