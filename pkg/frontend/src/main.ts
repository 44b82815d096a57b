/**
 * Application shell: hash router, data fetching, and event wiring.
 * Rendering itself lives in the html-string modules; this file owns the
 * DOM, the current ViewState, and request cancellation.
 */

import {
  ApiError,
  fetchContext,
  fetchDocument,
  fetchEdges,
  searchCatalogue,
  type DocumentInfo,
  type EdgeItem,
  type SearchHit,
} from "./api.js";
import { buildChartModel, renderChartSvg } from "./chart.js";
import { legendStops } from "./colors.js";
import { renderContextHtml, renderContextNotFound } from "./context.js";
import { esc } from "./html.js";
import { renderErrorBanner, renderSearchResultsHtml, SEARCH_COLUMNS } from "./search.js";
import { sortBy, toggleSort, type SortState } from "./sorting.js";
import { buildTableRows, renderTableHtml, EDGE_COLUMNS, type TableRow } from "./table.js";
import { defaultState, parseHash, toHash, type ViewState } from "./state.js";

const app = document.getElementById("app") as HTMLElement;

let state: ViewState = defaultState();
let inflight: AbortController | null = null;

// current page's data, kept so column clicks re-sort without refetching
let searchHits: SearchHit[] = [];
let searchSort: SortState | null = null;
let edgeRows: TableRow[] = [];
let edgeSort: SortState | null = null;
let edges: EdgeItem[] = [];
let docInfo: DocumentInfo | null = null;

function navigate(next: ViewState): void {
  const hash = toHash(next);
  if (hash === location.hash) {
    route(); // e.g. retry button on an unchanged URL
  } else {
    location.hash = hash; // triggers route() via hashchange
  }
}

function cancelInflight(): AbortController {
  if (inflight) inflight.abort();
  inflight = new AbortController();
  return inflight;
}

// ---------------------------------------------------------------------------
// search page

async function showSearch(): Promise<void> {
  const ctl = cancelInflight();
  const q = state.query;
  app.innerHTML =
    `<div class="search-page">` +
    `<form id="search-form"><input id="search-box" type="search" ` +
    `placeholder="author or title" value="${esc(q)}" autofocus>` +
    `<button type="submit">Search</button></form>` +
    `<div id="search-results">${q ? "<p class='empty'>Searching...</p>" : ""}</div></div>`;

  if (!q) return;
  try {
    searchHits = await searchCatalogue(q, ctl.signal);
    searchSort = null;
    renderSearchResults();
  } catch (err) {
    if ((err as Error).name === "AbortError") return;
    const box = document.getElementById("search-results")!;
    box.innerHTML = renderErrorBanner(describe(err));
  }
}

function renderSearchResults(): void {
  const box = document.getElementById("search-results");
  if (box) box.innerHTML = renderSearchResultsHtml(searchHits, searchSort);
}

// ---------------------------------------------------------------------------
// document page

async function showDoc(): Promise<void> {
  const ctl = cancelInflight();
  app.innerHTML = `<p class="empty">Loading ${esc(state.docId)}...</p>`;
  try {
    [docInfo, edges] = await Promise.all([
      fetchDocument(state.docId, ctl.signal),
      fetchEdges(
        state.docId,
        {
          direction: state.direction,
          yearFrom: state.yearFrom,
          yearTo: state.yearTo,
        },
        ctl.signal,
      ),
    ]);
  } catch (err) {
    if ((err as Error).name === "AbortError") return;
    app.innerHTML = renderErrorBanner(describe(err));
    return;
  }
  edgeRows = buildTableRows(edges);
  edgeSort = null;
  renderDocShell();
  renderEdgeView();
  if (state.edgeId != null) void loadContext(state.edgeId, ctl.signal);
}

function renderDocShell(): void {
  const d = docInfo!;
  const dirBtn = (dir: "in" | "out", count: number) =>
    `<button type="button" class="dir${state.direction === dir ? " active" : ""}" ` +
    `data-direction="${dir}">${dir.toUpperCase()} (${count})</button>`;

  const legend = legendStops()
    .map(
      (s) =>
        `<span class="legend-stop"><i style="background:${s.color}"></i>${s.gap}</span>`,
    )
    .join("");

  app.innerHTML =
    `<div class="doc-page">` +
    `<header class="doc-head">` +
    `<h2>${esc(d.author || "(no author)")}, ${esc(d.title)} (${d.year})</h2>` +
    `<div class="doc-sub">${esc(d.doc_id)} &middot; ${esc(d.collection)} &middot; ${d.text_length} chars</div>` +
    `</header>` +
    `<div class="controls">` +
    dirBtn("in", d.in_count) +
    dirBtn("out", d.out_count) +
    `<label>years <input id="year-from" type="number" placeholder="from" ` +
    `value="${state.yearFrom ?? ""}"> &ndash; <input id="year-to" type="number" ` +
    `placeholder="to" value="${state.yearTo ?? ""}"></label>` +
    `<span class="hint">Enter applies</span>` +
    `<span class="legend">gap ${legend}+</span>` +
    `<span class="tabs">` +
    `<button type="button" class="tab${state.tab === "chart" ? " active" : ""}" data-tab="chart">Chart</button>` +
    `<button type="button" class="tab${state.tab === "table" ? " active" : ""}" data-tab="table">Table</button>` +
    `</span></div>` +
    `<div id="edge-view"></div>` +
    `<div id="context-view"></div>`;
}

function renderEdgeView(): void {
  const view = document.getElementById("edge-view");
  if (!view || !docInfo) return;
  if (state.tab === "chart") {
    const model = buildChartModel(edges, docInfo.text_length);
    view.innerHTML =
      renderChartSvg(model, state.edgeId) +
      `<div class="count-line">${edges.length} edges shown</div>`;
  } else {
    view.innerHTML = renderTableHtml(edgeRows, edgeSort, state.edgeId);
  }
}

async function loadContext(edgeId: number, signal: AbortSignal): Promise<void> {
  const view = document.getElementById("context-view");
  if (!view) return;
  view.innerHTML = `<p class="empty">Loading context...</p>`;
  try {
    const ctx = await fetchContext(edgeId, state.docId, undefined, signal);
    view.innerHTML = renderContextHtml(ctx);
    view.scrollIntoView({ block: "nearest" });
  } catch (err) {
    if ((err as Error).name === "AbortError") return;
    if (err instanceof ApiError && err.status === 404) {
      view.innerHTML = renderContextNotFound(edgeId);
    } else {
      view.innerHTML = renderErrorBanner(describe(err));
    }
  }
}

// ---------------------------------------------------------------------------
// events

function describe(err: unknown): string {
  if (err instanceof ApiError && err.status > 0) {
    return `API error ${err.status}: ${err.message}`;
  }
  return err instanceof Error ? err.message : String(err);
}

function onClick(ev: Event): void {
  const target = ev.target as HTMLElement;

  const retry = target.closest("[data-action=retry]");
  if (retry) {
    route();
    return;
  }

  const dir = target.closest<HTMLElement>("button[data-direction]");
  if (dir) {
    const direction = dir.dataset.direction as "in" | "out";
    navigate({ ...state, direction, edgeId: null });
    return;
  }

  const tab = target.closest<HTMLElement>("button[data-tab]");
  if (tab) {
    navigate({ ...state, tab: tab.dataset.tab as "chart" | "table" });
    return;
  }

  const th = target.closest<HTMLElement>("th.sortable");
  if (th) {
    onSortClick(th.dataset.col!);
    return;
  }

  const edgeEl = target.closest<HTMLElement>("[data-edge-id]");
  if (edgeEl && edgeEl.dataset.edgeId && !edgeEl.classList.contains("context")) {
    navigate({ ...state, edgeId: Number(edgeEl.dataset.edgeId) });
  }
}

function onSortClick(col: string): void {
  if (state.view === "search") {
    searchSort = toggleSort(searchSort, col);
    const key = SEARCH_COLUMNS.find((c) => c.key === col);
    if (!key) return;
    // stable sort over the current order: previous ordering carries over
    searchHits = sortBy(searchHits, (h) => h[key.key] as string | number, searchSort.order);
    renderSearchResults();
  } else {
    edgeSort = toggleSort(edgeSort, col);
    const key = EDGE_COLUMNS.find((c) => c.key === col);
    if (!key) return;
    edgeRows = sortBy(edgeRows, (r) => r[key.key], edgeSort.order);
    renderEdgeView();
  }
}

function onKeydown(ev: KeyboardEvent): void {
  if (ev.key !== "Enter") return;
  const target = ev.target as HTMLElement;
  if (target.id === "year-from" || target.id === "year-to") {
    ev.preventDefault();
    const from = (document.getElementById("year-from") as HTMLInputElement).value;
    const to = (document.getElementById("year-to") as HTMLInputElement).value;
    navigate({
      ...state,
      yearFrom: from ? Number(from) : null,
      yearTo: to ? Number(to) : null,
      edgeId: null,
    });
  }
}

function onSubmit(ev: Event): void {
  const form = ev.target as HTMLElement;
  if (form.id === "search-form") {
    ev.preventDefault();
    const box = document.getElementById("search-box") as HTMLInputElement;
    navigate({ ...defaultState(), query: box.value.trim() });
  }
}

function route(): void {
  state = parseHash(location.hash);
  if (state.view === "search") void showSearch();
  else void showDoc();
}

app.addEventListener("click", onClick);
app.addEventListener("keydown", onKeydown);
app.addEventListener("submit", onSubmit);
window.addEventListener("hashchange", route);
route();
