"""HTTP layer: catalogue search, document views, edge queries, context.

All endpoints live under /api and speak snake_case JSON; failures return
{"error": "..."} with a 4xx status.  Query parameters are parsed by hand so
a malformed year yields a 400 rather than framework-shaped validation noise.
An optional static directory (the built frontend) is mounted at /.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from pathlib import Path

from fastapi import FastAPI, Query, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles
from starlette.exceptions import HTTPException as StarletteHTTPException

from .corpus import Corpus, Document
from .edgestore import EdgeQuery, EdgeStore
from .metasearch import SearchIndex
from .offsets import page_for_offset

logger = logging.getLogger(__name__)

DEFAULT_RADIUS = 600


@dataclass
class ApiConfig:
    external_url_template: str | None = None
    cors_origins: list[str] = field(default_factory=lambda: ["*"])
    static_dir: str | None = None


def _error(status: int, message: str) -> JSONResponse:
    return JSONResponse({"error": message}, status_code=status)


def _parse_int(raw: str | None, name: str) -> int | None:
    if raw is None or raw == "":
        return None
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"malformed {name}: {raw!r}")


def _parse_bool(raw: str | None, name: str, default: bool) -> bool:
    if raw is None or raw == "":
        return default
    lowered = raw.lower()
    if lowered in ("true", "1", "yes"):
        return True
    if lowered in ("false", "0", "no"):
        return False
    raise ValueError(f"malformed {name}: {raw!r}")


def _side_context(
    doc: Document,
    start: int,
    end: int,
    radius: int,
    template: str | None,
) -> dict:
    meta = doc.meta
    page = page_for_offset(doc.page_map, start)
    if doc.page_map is not None:
        excerpt_start, excerpt_end = doc.page_map.page_char_range(page)
        excerpt_end = min(excerpt_end, len(doc.raw_text))
        boxes = [
            {
                "page": page_no,
                "x": token.x,
                "y": token.y,
                "w": token.w,
                "h": token.h,
            }
            for page_no, token in doc.page_map.highlight_regions(start, end)
        ]
    else:
        excerpt_start = max(0, start - radius)
        excerpt_end = min(len(doc.raw_text), end + radius)
        boxes = None
    side = {
        "doc_id": meta.doc_id,
        "year": meta.year,
        "author": meta.author,
        "title": meta.title,
        "collection": meta.collection,
        "page": page,
        "span_start": start,
        "span_end": end,
        "excerpt_start": excerpt_start,
        "excerpt": doc.raw_text[excerpt_start:excerpt_end],
        "highlight_start": max(start, excerpt_start) - excerpt_start,
        "highlight_end": max(min(end, excerpt_end) - excerpt_start, 0),
        "boxes": boxes,
    }
    if template:
        side["external_url"] = template.format(doc_id=meta.doc_id, page=page)
    return side


def create_app(
    corpus: Corpus, store: EdgeStore, config: ApiConfig | None = None
) -> FastAPI:
    config = config or ApiConfig()
    app = FastAPI(title="reusekit", docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=config.cors_origins,
        allow_methods=["*"],
        allow_headers=["*"],
    )
    search_index = SearchIndex(corpus)

    @app.exception_handler(StarletteHTTPException)
    async def http_error(request: Request, exc: StarletteHTTPException):
        return _error(exc.status_code, str(exc.detail))

    @app.exception_handler(RequestValidationError)
    async def validation_error(request: Request, exc: RequestValidationError):
        return _error(400, "malformed request")

    @app.get("/api/health")
    def health():
        return {"status": "ok", "corpus_size": len(corpus), "edge_count": len(store)}

    @app.get("/api/search")
    def search_endpoint(q: str | None = Query(default=None)):
        if q is None:
            return _error(400, "missing query parameter q")
        return [
            {
                "doc_id": r.doc_id,
                "year": r.year,
                "author": r.author,
                "title": r.title,
                "score": r.score,
            }
            for r in search_index.search(q)
        ]

    @app.get("/api/documents/{doc_id}")
    def document(doc_id: str):
        doc = corpus.get(doc_id)
        if doc is None:
            return _error(404, f"unknown document: {doc_id}")
        n_in, n_out = store.counts(doc_id)
        meta = doc.meta
        return {
            "doc_id": meta.doc_id,
            "year": meta.year,
            "author": meta.author,
            "title": meta.title,
            "collection": meta.collection,
            "in_count": n_in,
            "out_count": n_out,
            "text_length": len(doc.raw_text),
            "has_page_map": doc.page_map is not None,
        }

    @app.get("/api/documents/{doc_id}/edges")
    def document_edges(
        doc_id: str,
        direction: str = Query(default="out"),
        year_from: str | None = Query(default=None, alias="from"),
        year_to: str | None = Query(default=None, alias="to"),
        exclude_same_author: str | None = Query(default=None),
    ):
        if doc_id not in corpus:
            return _error(404, f"unknown document: {doc_id}")
        if direction not in ("in", "out"):
            return _error(400, f"direction must be in or out: {direction!r}")
        try:
            query = EdgeQuery(
                doc_id=doc_id,
                direction=direction,
                year_from=_parse_int(year_from, "from"),
                year_to=_parse_int(year_to, "to"),
                exclude_same_author=_parse_bool(
                    exclude_same_author, "exclude_same_author", True
                ),
            )
        except ValueError as exc:
            return _error(400, str(exc))
        return [
            {
                "edge_id": h.edge_id,
                "other_doc_id": h.other_id,
                "other_year": h.other_year,
                "other_author": h.other_author,
                "other_title": h.other_title,
                "primary_start": h.primary_start,
                "primary_end": h.primary_end,
                "other_start": h.other_start,
                "other_end": h.other_end,
                "align_length": h.align_length,
                "positives_percent": h.positives_percent,
                "page": h.page,
                "year_gap": h.year_gap,
            }
            for h in store.query(query)
        ]

    @app.get("/api/edges/{edge_id}/context")
    def edge_context(
        edge_id: int,
        primary: str | None = Query(default=None),
        radius: str | None = Query(default=None),
    ):
        edge = store.get(edge_id)
        if edge is None:
            return _error(404, f"unknown edge: {edge_id}")
        if primary is None:
            return _error(400, "missing query parameter primary")
        if primary not in (edge.t1_id, edge.t2_id):
            return _error(400, f"document {primary!r} is not a side of edge {edge_id}")
        try:
            radius_val = _parse_int(radius, "radius")
        except ValueError as exc:
            return _error(400, str(exc))
        radius_val = DEFAULT_RADIUS if radius_val is None else radius_val
        if radius_val < 0:
            return _error(400, f"radius must be non-negative: {radius_val}")

        other_id = edge.other_id(primary)
        p_start, p_end = edge.side(primary)
        o_start, o_end = edge.side(other_id)
        primary_doc = corpus.documents[primary]
        other_doc = corpus.documents[other_id]
        return {
            "edge_id": edge.edge_id,
            "align_length": edge.align_length,
            "positives_percent": edge.positives_percent,
            "year_gap": abs(primary_doc.meta.year - other_doc.meta.year),
            "primary": _side_context(
                primary_doc, p_start, p_end, radius_val, config.external_url_template
            ),
            "other": _side_context(
                other_doc, o_start, o_end, radius_val, config.external_url_template
            ),
        }

    if config.static_dir:
        static_path = Path(config.static_dir)
        if static_path.is_dir():
            app.mount("/", StaticFiles(directory=static_path, html=True), name="static")
        else:
            logger.warning("static dir %s missing; serving API only", static_path)

    return app
