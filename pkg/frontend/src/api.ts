/**
 * Typed client for the reuse API.
 *
 * All calls go through getJson, which raises ApiError with the server's
 * own message (the API always answers errors as {"error": "..."}).
 * Every function takes an optional AbortSignal so a view can cancel its
 * in-flight requests when the user navigates away.
 */

export interface SearchHit {
  doc_id: string;
  year: number;
  author: string;
  title: string;
  score: number;
}

export interface DocumentInfo {
  doc_id: string;
  year: number;
  author: string;
  title: string;
  collection: string;
  in_count: number;
  out_count: number;
  text_length: number;
  has_page_map: boolean;
}

export interface EdgeItem {
  edge_id: number;
  other_doc_id: string;
  other_year: number;
  other_author: string;
  other_title: string;
  primary_start: number;
  primary_end: number;
  other_start: number;
  other_end: number;
  align_length: number;
  positives_percent: number;
  page: number;
  year_gap: number;
}

export interface HighlightBox {
  page: number;
  x: number;
  y: number;
  w: number;
  h: number;
}

export interface ContextSide {
  doc_id: string;
  year: number;
  author: string;
  title: string;
  collection: string;
  page: number;
  span_start: number;
  span_end: number;
  excerpt: string;
  excerpt_start: number;
  highlight_start: number;
  highlight_end: number;
  boxes: HighlightBox[] | null;
  external_url: string | null;
}

export interface EdgeContext {
  edge_id: number;
  align_length: number;
  positives_percent: number;
  year_gap: number;
  primary: ContextSide;
  other: ContextSide;
}

export type Direction = "in" | "out";

export interface EdgeQueryOptions {
  direction: Direction;
  yearFrom?: number | null;
  yearTo?: number | null;
  excludeSameAuthor?: boolean;
}

export class ApiError extends Error {
  constructor(
    readonly status: number,
    message: string,
  ) {
    super(message);
    this.name = "ApiError";
  }
}

// Same-origin by default; tests point this at a spawned server.
let apiBase = "";

export function setApiBase(base: string): void {
  apiBase = base.replace(/\/$/, "");
}

async function getJson<T>(path: string, signal?: AbortSignal): Promise<T> {
  let resp: Response;
  try {
    resp = await fetch(apiBase + path, { signal });
  } catch (err) {
    if (err instanceof DOMException && err.name === "AbortError") throw err;
    throw new ApiError(0, "network error: " + String(err));
  }
  const body = await resp.json().catch(() => null);
  if (!resp.ok) {
    const msg =
      body && typeof body.error === "string" ? body.error : resp.statusText;
    throw new ApiError(resp.status, msg);
  }
  return body as T;
}

export function searchCatalogue(
  query: string,
  signal?: AbortSignal,
): Promise<SearchHit[]> {
  const q = new URLSearchParams({ q: query });
  return getJson(`/api/search?${q}`, signal);
}

export function fetchDocument(
  docId: string,
  signal?: AbortSignal,
): Promise<DocumentInfo> {
  return getJson(`/api/documents/${encodeURIComponent(docId)}`, signal);
}

export function fetchEdges(
  docId: string,
  opts: EdgeQueryOptions,
  signal?: AbortSignal,
): Promise<EdgeItem[]> {
  const q = new URLSearchParams({ direction: opts.direction });
  if (opts.yearFrom != null) q.set("from", String(opts.yearFrom));
  if (opts.yearTo != null) q.set("to", String(opts.yearTo));
  if (opts.excludeSameAuthor === false) q.set("exclude_same_author", "false");
  return getJson(
    `/api/documents/${encodeURIComponent(docId)}/edges?${q}`,
    signal,
  );
}

export function fetchContext(
  edgeId: number,
  primaryDocId: string,
  radius?: number,
  signal?: AbortSignal,
): Promise<EdgeContext> {
  const q = new URLSearchParams({ primary: primaryDocId });
  if (radius != null) q.set("radius", String(radius));
  return getJson(`/api/edges/${edgeId}/context?${q}`, signal);
}
