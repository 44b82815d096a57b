/**
 * Sortable edge table, the tabular twin of the chart. Rows carry the
 * same edge ids, so clicking a row selects the edge exactly like
 * clicking its dot.
 */

import type { EdgeItem } from "./api.js";
import { attr, esc } from "./html.js";
import { sortIndicator, type SortState } from "./sorting.js";

export interface TableRow {
  edgeId: number;
  year: number;
  author: string;
  title: string;
  page: number;
}

export function buildTableRows(edges: readonly EdgeItem[]): TableRow[] {
  return edges.map((e) => ({
    edgeId: e.edge_id,
    year: e.other_year,
    author: e.other_author,
    title: e.other_title,
    page: e.page,
  }));
}

export const EDGE_COLUMNS: { key: keyof TableRow & string; header: string }[] = [
  { key: "year", header: "Year" },
  { key: "author", header: "Author" },
  { key: "title", header: "Title" },
  { key: "page", header: "Page" },
];

export function renderTableHtml(
  rows: readonly TableRow[],
  sort: SortState | null,
  selectedEdgeId: number | null = null,
): string {
  const head = EDGE_COLUMNS.map(
    (c) =>
      `<th ${attr("data-col", c.key)} class="sortable">` +
      `${esc(c.header)}${sortIndicator(sort, c.key)}</th>`,
  ).join("");

  const body = rows
    .map((r) => {
      const cls = r.edgeId === selectedEdgeId ? ' class="selected"' : "";
      return (
        `<tr${cls} ${attr("data-edge-id", r.edgeId)}>` +
        `<td>${r.year}</td>` +
        `<td>${esc(r.author) || "&mdash;"}</td>` +
        `<td>${esc(r.title)}</td>` +
        `<td>${r.page}</td></tr>`
      );
    })
    .join("");

  if (rows.length === 0) {
    return `<table class="edges"><thead><tr>${head}</tr></thead></table>` +
      `<p class="empty">No edges in this view.</p>`;
  }
  return `<table class="edges"><thead><tr>${head}</tr></thead><tbody>${body}</tbody></table>`;
}
