import { afterEach, describe, expect, it, vi } from "vitest";

import {
  ApiError,
  fetchContext,
  fetchEdges,
  searchCatalogue,
  setApiBase,
} from "../src/api.js";

function jsonResponse(body: unknown, status = 200): Response {
  return new Response(JSON.stringify(body), {
    status,
    headers: { "content-type": "application/json" },
  });
}

afterEach(() => {
  vi.restoreAllMocks();
  setApiBase("");
});

describe("request building", () => {
  it("encodes the search query", async () => {
    const spy = vi
      .spyOn(globalThis, "fetch")
      .mockResolvedValue(jsonResponse([]));
    setApiBase("http://api.test");
    await searchCatalogue("david hume");
    expect(spy).toHaveBeenCalledWith(
      "http://api.test/api/search?q=david+hume",
      expect.anything(),
    );
  });

  it("passes direction, year bounds, and the author toggle", async () => {
    const spy = vi
      .spyOn(globalThis, "fetch")
      .mockResolvedValue(jsonResponse([]));
    await fetchEdges("d 1", {
      direction: "in",
      yearFrom: 1700,
      yearTo: 1750,
      excludeSameAuthor: false,
    });
    const url = spy.mock.calls[0][0] as string;
    expect(url).toContain("/api/documents/d%201/edges?");
    expect(url).toContain("direction=in");
    expect(url).toContain("from=1700");
    expect(url).toContain("to=1750");
    expect(url).toContain("exclude_same_author=false");
  });

  it("omits optional params left at their defaults", async () => {
    const spy = vi
      .spyOn(globalThis, "fetch")
      .mockResolvedValue(jsonResponse([]));
    await fetchEdges("d1", { direction: "out" });
    const url = spy.mock.calls[0][0] as string;
    expect(url).not.toContain("from=");
    expect(url).not.toContain("exclude_same_author");
  });

  it("addresses context by edge id and primary side", async () => {
    const spy = vi
      .spyOn(globalThis, "fetch")
      .mockResolvedValue(jsonResponse({}));
    await fetchContext(7, "d1", 250);
    expect(spy.mock.calls[0][0]).toBe(
      "/api/edges/7/context?primary=d1&radius=250",
    );
  });

  it("forwards the abort signal", async () => {
    const spy = vi
      .spyOn(globalThis, "fetch")
      .mockResolvedValue(jsonResponse([]));
    const ctl = new AbortController();
    await searchCatalogue("x", ctl.signal);
    expect(spy.mock.calls[0][1]).toEqual({ signal: ctl.signal });
  });
});

describe("error handling", () => {
  it("surfaces the server's error message and status", async () => {
    vi.spyOn(globalThis, "fetch").mockResolvedValue(
      jsonResponse({ error: "unknown document: nope" }, 404),
    );
    const err = await searchCatalogue("x").catch((e) => e);
    expect(err).toBeInstanceOf(ApiError);
    expect(err.status).toBe(404);
    expect(err.message).toBe("unknown document: nope");
  });

  it("wraps network failures in ApiError with status 0", async () => {
    vi.spyOn(globalThis, "fetch").mockRejectedValue(new TypeError("refused"));
    const err = await searchCatalogue("x").catch((e) => e);
    expect(err).toBeInstanceOf(ApiError);
    expect(err.status).toBe(0);
  });

  it("lets aborts propagate untouched for cancellation handling", async () => {
    vi.spyOn(globalThis, "fetch").mockRejectedValue(
      new DOMException("aborted", "AbortError"),
    );
    const err = await searchCatalogue("x").catch((e) => e);
    expect(err.name).toBe("AbortError");
    expect(err).not.toBeInstanceOf(ApiError);
  });
});
