"""Corpus loading and validation.

A corpus directory holds metadata.tsv plus one UTF-8 text file per document
under texts/, with optional per-document annotation insertion tables under
annotations/ and token page maps under pagemaps/.  Ingestion validates
everything up front so later stages can trust offsets blindly.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterator

from .errors import CorpusError
from .offsets import OffsetShiftTable, PageMap, PageToken

logger = logging.getLogger(__name__)

METADATA_HEADER = ["doc_id", "year", "author", "title", "collection"]
ANNOTATION_HEADER = ["raw_position", "inserted_length"]
PAGEMAP_HEADER = ["char_start", "char_end", "page", "x", "y", "w", "h"]

YEAR_MIN = 1000
YEAR_MAX = 2100


@dataclass(frozen=True)
class DocMetadata:
    doc_id: str
    year: int
    author: str  # empty string when unknown
    title: str
    collection: str


@dataclass
class Document:
    meta: DocMetadata
    raw_text: str
    shift_table: OffsetShiftTable | None = None
    page_map: PageMap | None = None

    @property
    def doc_id(self) -> str:
        return self.meta.doc_id


@dataclass
class Corpus:
    """Immutable after ingestion; safe to share across threads."""

    documents: dict[str, Document] = field(default_factory=dict)

    def get(self, doc_id: str) -> Document | None:
        return self.documents.get(doc_id)

    def __len__(self) -> int:
        return len(self.documents)

    def __contains__(self, doc_id: str) -> bool:
        return doc_id in self.documents

    def __iter__(self) -> Iterator[Document]:
        # Sorted for deterministic traversal regardless of ingest order.
        for doc_id in sorted(self.documents):
            yield self.documents[doc_id]


# ---------------------------------------------------------------------------
# TSV helpers
# ---------------------------------------------------------------------------

def _read_tsv(path: Path, header: list[str]) -> Iterator[tuple[int, list[str]]]:
    """Yield (line_number, fields) rows after checking the header line.

    No quoting or escaping: fields must not contain tabs, so a plain split
    is exact.  Blank lines are skipped.
    """
    try:
        lines = path.read_text(encoding="utf-8").splitlines()
    except UnicodeDecodeError as exc:
        raise CorpusError(f"{path}: not valid UTF-8: {exc}") from None
    if not lines:
        raise CorpusError(f"{path}: empty file, expected header")
    if lines[0].split("\t") != header:
        raise CorpusError(
            f"{path}:1: bad header {lines[0]!r}, expected {chr(9).join(header)!r}"
        )
    for lineno, line in enumerate(lines[1:], start=2):
        if not line:
            continue
        fields = line.split("\t")
        if len(fields) != len(header):
            raise CorpusError(
                f"{path}:{lineno}: expected {len(header)} fields, got {len(fields)}"
            )
        yield lineno, fields


def _int_field(path: Path, lineno: int, name: str, value: str) -> int:
    try:
        return int(value)
    except ValueError:
        raise CorpusError(f"{path}:{lineno}: {name} must be an integer, got {value!r}") from None


# ---------------------------------------------------------------------------
# Ingestion
# ---------------------------------------------------------------------------

def _load_metadata(path: Path) -> list[DocMetadata]:
    rows: list[DocMetadata] = []
    seen: set[str] = set()
    for lineno, fields in _read_tsv(path, METADATA_HEADER):
        doc_id, year_s, author, title, collection = fields
        if not doc_id:
            raise CorpusError(f"{path}:{lineno}: empty doc_id")
        if doc_id in seen:
            raise CorpusError(f"{path}:{lineno}: duplicate doc_id {doc_id!r}")
        seen.add(doc_id)
        year = _int_field(path, lineno, "year", year_s)
        if not YEAR_MIN <= year <= YEAR_MAX:
            raise CorpusError(
                f"{path}:{lineno}: year {year} outside [{YEAR_MIN}, {YEAR_MAX}]"
            )
        rows.append(DocMetadata(doc_id, year, author, title, collection))
    return rows


def _load_shift_table(path: Path, raw_length: int) -> OffsetShiftTable:
    insertions: list[tuple[int, int]] = []
    for lineno, fields in _read_tsv(path, ANNOTATION_HEADER):
        pos = _int_field(path, lineno, "raw_position", fields[0])
        length = _int_field(path, lineno, "inserted_length", fields[1])
        insertions.append((pos, length))
    try:
        return OffsetShiftTable(insertions, raw_length)
    except ValueError as exc:
        raise CorpusError(f"{path}: {exc}") from None


def _load_page_map(path: Path, raw_length: int) -> PageMap:
    tokens: list[PageToken] = []
    for lineno, fields in _read_tsv(path, PAGEMAP_HEADER):
        values = [
            _int_field(path, lineno, name, value)
            for name, value in zip(PAGEMAP_HEADER, fields)
        ]
        tok = PageToken(*values)
        if tok.char_start < 0 or tok.char_end > raw_length:
            raise CorpusError(
                f"{path}:{lineno}: token span [{tok.char_start}, {tok.char_end})"
                f" outside text of length {raw_length}"
            )
        tokens.append(tok)
    try:
        return PageMap(tokens)
    except ValueError as exc:
        raise CorpusError(f"{path}: {exc}") from None


def ingest_corpus(root_path: str | Path) -> Corpus:
    """Load a corpus directory into memory.

    Metadata rows whose text file is absent are dropped with a warning; all
    other irregularities (malformed rows, duplicate ids, bad encodings,
    offsets outside the text) raise CorpusError.
    """
    root = Path(root_path)
    meta_path = root / "metadata.tsv"
    if not meta_path.is_file():
        raise CorpusError(f"{meta_path}: missing metadata file")

    documents: dict[str, Document] = {}
    for meta in _load_metadata(meta_path):
        text_path = root / "texts" / f"{meta.doc_id}.txt"
        if not text_path.is_file():
            logger.warning("dropping %s: no text file at %s", meta.doc_id, text_path)
            continue
        try:
            raw_text = text_path.read_text(encoding="utf-8")
        except UnicodeDecodeError as exc:
            raise CorpusError(f"{text_path}: not valid UTF-8: {exc}") from None
        if not raw_text:
            raise CorpusError(f"{text_path}: empty text")

        doc = Document(meta=meta, raw_text=raw_text)
        ann_path = root / "annotations" / f"{meta.doc_id}.tsv"
        if ann_path.is_file():
            doc.shift_table = _load_shift_table(ann_path, len(raw_text))
        pm_path = root / "pagemaps" / f"{meta.doc_id}.tsv"
        if pm_path.is_file():
            doc.page_map = _load_page_map(pm_path, len(raw_text))
        documents[meta.doc_id] = doc

    logger.info("ingested %d documents from %s", len(documents), root)
    return Corpus(documents=documents)
