"""In-memory edge store with per-document indexing and directional queries.

Loads an edge TSV against a corpus, assigns stable edge ids by file order,
and answers "what flows into / out of this document" queries: direction is
defined by publication year relative to the queried document, with optional
year-range filtering and same-author exclusion.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from pathlib import Path

from .corpus import Corpus
from .edges import Edge, iter_edge_rows
from .errors import EdgeFileError
from .offsets import page_for_offset

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EdgeQuery:
    doc_id: str
    direction: str = "out"  # "out", "in", or "both"
    year_from: int | None = None
    year_to: int | None = None
    exclude_same_author: bool = True

    def __post_init__(self):
        if self.direction not in ("out", "in", "both"):
            raise ValueError(f"direction must be out, in, or both: {self.direction!r}")


@dataclass(frozen=True, slots=True)
class EnrichedEdge:
    """An edge reoriented so the queried document is the primary side."""

    edge_id: int
    primary_id: str
    primary_start: int
    primary_end: int
    other_id: str
    other_start: int
    other_end: int
    other_year: int
    other_author: str
    other_title: str
    align_length: int
    positives_percent: float
    page: int
    year_gap: int


@dataclass
class EdgeStore:
    corpus: Corpus
    edges: list[Edge] = field(default_factory=list)
    by_doc: dict[str, list[int]] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.edges)

    def get(self, edge_id: int) -> Edge | None:
        if 1 <= edge_id <= len(self.edges):
            return self.edges[edge_id - 1]
        return None

    def query(self, q: EdgeQuery) -> list[EnrichedEdge]:
        """Edges touching q.doc_id, reoriented, filtered, and sorted.

        Direction compares the other document's year to the queried one:
        "out" keeps other.year >= primary.year, "in" keeps <=, so equal-year
        edges show up in both.  Year bounds apply inclusively to the other
        document.  Same-author exclusion uses exact string equality and never
        drops edges when either author field is empty.
        """
        primary_doc = self.corpus.get(q.doc_id)
        if primary_doc is None:
            raise KeyError(q.doc_id)
        primary_year = primary_doc.meta.year
        primary_author = primary_doc.meta.author

        results = []
        for idx in self.by_doc.get(q.doc_id, ()):
            edge = self.edges[idx]
            if edge.t1_id == q.doc_id:
                p_start, p_end = edge.t1_start, edge.t1_end
                other_id, o_start, o_end = edge.t2_id, edge.t2_start, edge.t2_end
            else:
                p_start, p_end = edge.t2_start, edge.t2_end
                other_id, o_start, o_end = edge.t1_id, edge.t1_start, edge.t1_end
            other_meta = self.corpus.documents[other_id].meta

            if q.direction == "out":
                if other_meta.year < primary_year:
                    continue
            elif q.direction == "in":
                if other_meta.year > primary_year:
                    continue
            if q.year_from is not None and other_meta.year < q.year_from:
                continue
            if q.year_to is not None and other_meta.year > q.year_to:
                continue
            if (
                q.exclude_same_author
                and primary_author
                and other_meta.author == primary_author
            ):
                continue

            results.append(
                EnrichedEdge(
                    edge_id=edge.edge_id,
                    primary_id=q.doc_id,
                    primary_start=p_start,
                    primary_end=p_end,
                    other_id=other_id,
                    other_start=o_start,
                    other_end=o_end,
                    other_year=other_meta.year,
                    other_author=other_meta.author,
                    other_title=other_meta.title,
                    align_length=edge.align_length,
                    positives_percent=edge.positives_percent,
                    page=page_for_offset(primary_doc.page_map, p_start),
                    year_gap=abs(other_meta.year - primary_year),
                )
            )
        results.sort(
            key=lambda e: (e.other_year, e.other_id, e.primary_start, e.edge_id)
        )
        return results

    def counts(self, doc_id: str) -> tuple[int, int]:
        """(in_count, out_count) with default filters: no year bounds,
        same-author exclusion on.  Always equal to the query result sizes."""
        primary_doc = self.corpus.get(doc_id)
        if primary_doc is None:
            raise KeyError(doc_id)
        primary_year = primary_doc.meta.year
        primary_author = primary_doc.meta.author
        n_in = n_out = 0
        for idx in self.by_doc.get(doc_id, ()):
            edge = self.edges[idx]
            other_id = edge.other_id(doc_id)
            other_meta = self.corpus.documents[other_id].meta
            if (
                primary_author
                and other_meta.author == primary_author
            ):
                continue
            if other_meta.year >= primary_year:
                n_out += 1
            if other_meta.year <= primary_year:
                n_in += 1
        return n_in, n_out


def from_edges(edges: list[Edge], corpus: Corpus) -> EdgeStore:
    """Build a store from in-memory edges; ids are assigned positionally
    (1-based) unless every edge already carries one."""
    store = EdgeStore(corpus=corpus)
    for i, edge in enumerate(edges):
        if edge.edge_id is None:
            edge = edge.with_id(i + 1)
        if edge.t1_id not in corpus or edge.t2_id not in corpus:
            missing = edge.t1_id if edge.t1_id not in corpus else edge.t2_id
            raise EdgeFileError(f"edge {edge.edge_id}: unknown doc_id {missing!r}")
        store.edges.append(edge)
        idx = len(store.edges) - 1
        store.by_doc.setdefault(edge.t1_id, []).append(idx)
        store.by_doc.setdefault(edge.t2_id, []).append(idx)
    return store


def load(path: str | Path, corpus: Corpus) -> EdgeStore:
    """Read an edge file and index it; edge ids follow file order from 1."""
    path = Path(path)
    store = EdgeStore(corpus=corpus)
    for lineno, edge in iter_edge_rows(path):
        for doc_id in (edge.t1_id, edge.t2_id):
            if doc_id not in corpus:
                raise EdgeFileError(f"{path}:{lineno}: unknown doc_id {doc_id!r}")
        idx = len(store.edges)
        store.edges.append(edge.with_id(idx + 1))
        store.by_doc.setdefault(edge.t1_id, []).append(idx)
        store.by_doc.setdefault(edge.t2_id, []).append(idx)
    logger.info("loaded %d edges from %s", len(store.edges), path)
    return store
