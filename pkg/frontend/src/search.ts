/**
 * Catalogue search page: a query box and a sortable results table.
 * Clicking a Doc ID navigates to that document's reuse view.
 */

import type { SearchHit } from "./api.js";
import { attr, esc } from "./html.js";
import { sortIndicator, type SortState } from "./sorting.js";

export const SEARCH_COLUMNS: { key: keyof SearchHit & string; header: string }[] = [
  { key: "doc_id", header: "Doc ID" },
  { key: "year", header: "Year" },
  { key: "author", header: "Author" },
  { key: "title", header: "Title" },
];

export function renderSearchResultsHtml(
  hits: readonly SearchHit[],
  sort: SortState | null,
): string {
  if (hits.length === 0) {
    return `<p class="empty">No results.</p>`;
  }
  const head = SEARCH_COLUMNS.map(
    (c) =>
      `<th ${attr("data-col", c.key)} class="sortable">` +
      `${esc(c.header)}${sortIndicator(sort, c.key)}</th>`,
  ).join("");
  const body = hits
    .map(
      (h) =>
        `<tr><td><a href="#/doc/${encodeURIComponent(h.doc_id)}" ` +
        `${attr("data-doc-id", h.doc_id)}>${esc(h.doc_id)}</a></td>` +
        `<td>${h.year}</td><td>${esc(h.author)}</td><td>${esc(h.title)}</td></tr>`,
    )
    .join("");
  return `<table class="results"><thead><tr>${head}</tr></thead><tbody>${body}</tbody></table>`;
}

export function renderErrorBanner(message: string): string {
  return (
    `<div class="error-banner" role="alert">` +
    `<span>${esc(message)}</span>` +
    `<button type="button" data-action="retry">Retry</button></div>`
  );
}
