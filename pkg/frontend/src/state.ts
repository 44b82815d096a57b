/**
 * View state, serialized entirely into the URL hash so every view is a
 * deep link. Two routes:
 *
 *   #/search?q=hume
 *   #/doc/<docId>?direction=in&from=1700&to=1760&edge=12&tab=table
 *
 * Defaults (direction=out, tab=chart) are omitted when serializing, so
 * hashes stay short and parse(to(s)) is canonical.
 */

export type Direction = "in" | "out";
export type Tab = "chart" | "table";

export interface ViewState {
  view: "search" | "doc";
  query: string;
  docId: string;
  direction: Direction;
  yearFrom: number | null;
  yearTo: number | null;
  edgeId: number | null;
  tab: Tab;
}

export function defaultState(): ViewState {
  return {
    view: "search",
    query: "",
    docId: "",
    direction: "out",
    yearFrom: null,
    yearTo: null,
    edgeId: null,
    tab: "chart",
  };
}

function intOrNull(v: string | null): number | null {
  if (v == null || v === "") return null;
  const n = Number(v);
  return Number.isInteger(n) ? n : null;
}

export function parseHash(hash: string): ViewState {
  const s = defaultState();
  const raw = hash.replace(/^#/, "");
  if (!raw || raw === "/" || raw === "/search") return s;

  const qIdx = raw.indexOf("?");
  const path = qIdx === -1 ? raw : raw.slice(0, qIdx);
  const params = new URLSearchParams(qIdx === -1 ? "" : raw.slice(qIdx + 1));

  if (path === "/search") {
    s.query = params.get("q") ?? "";
    return s;
  }
  const m = path.match(/^\/doc\/([^/]+)$/);
  if (!m) return s; // unknown path falls back to the search page
  s.view = "doc";
  s.docId = decodeURIComponent(m[1]);
  if (params.get("direction") === "in") s.direction = "in";
  s.yearFrom = intOrNull(params.get("from"));
  s.yearTo = intOrNull(params.get("to"));
  s.edgeId = intOrNull(params.get("edge"));
  if (params.get("tab") === "table") s.tab = "table";
  return s;
}

export function toHash(s: ViewState): string {
  if (s.view === "search") {
    return s.query ? `#/search?q=${encodeURIComponent(s.query)}` : "#/search";
  }
  const params = new URLSearchParams();
  if (s.direction !== "out") params.set("direction", s.direction);
  if (s.yearFrom != null) params.set("from", String(s.yearFrom));
  if (s.yearTo != null) params.set("to", String(s.yearTo));
  if (s.edgeId != null) params.set("edge", String(s.edgeId));
  if (s.tab !== "chart") params.set("tab", s.tab);
  const tail = params.toString();
  return `#/doc/${encodeURIComponent(s.docId)}` + (tail ? `?${tail}` : "");
}
