"""Reuse edges and their TSV representation.

An edge records one local alignment between spans of two documents.  All
offsets are half-open raw-text character offsets.  Files carry one header
line and one row per edge; positives_percent is printed with 2 decimals.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from pathlib import Path
from typing import Iterable, Iterator

from .errors import EdgeFileError

EDGE_HEADER = [
    "t1_id",
    "t1_start",
    "t1_end",
    "t2_id",
    "t2_start",
    "t2_end",
    "align_length",
    "positives_percent",
]


@dataclass(frozen=True, slots=True)
class Edge:
    t1_id: str
    t1_start: int
    t1_end: int
    t2_id: str
    t2_start: int
    t2_end: int
    align_length: int
    positives_percent: float
    edge_id: int | None = None  # assigned when loaded into a store

    def __post_init__(self):
        if self.t1_id == self.t2_id:
            raise ValueError(f"self-edge on {self.t1_id!r}")
        if self.t1_id > self.t2_id:
            raise ValueError("edge not in canonical orientation (t1_id < t2_id)")
        if not (self.t1_start < self.t1_end and self.t2_start < self.t2_end):
            raise ValueError("edge spans must be non-empty")
        if self.t1_start < 0 or self.t2_start < 0:
            raise ValueError("edge offsets must be non-negative")
        if self.align_length < 0:
            raise ValueError("align_length must be >= 0")
        if not 0.0 <= self.positives_percent <= 100.0:
            raise ValueError(f"positives_percent {self.positives_percent} outside [0, 100]")

    def side(self, doc_id: str) -> tuple[int, int]:
        """Span of this edge in the given document."""
        if doc_id == self.t1_id:
            return self.t1_start, self.t1_end
        if doc_id == self.t2_id:
            return self.t2_start, self.t2_end
        raise KeyError(doc_id)

    def other_id(self, doc_id: str) -> str:
        if doc_id == self.t1_id:
            return self.t2_id
        if doc_id == self.t2_id:
            return self.t1_id
        raise KeyError(doc_id)

    def with_id(self, edge_id: int) -> Edge:
        return replace(self, edge_id=edge_id)


def make_edge(
    doc_a: str,
    a_start: int,
    a_end: int,
    doc_b: str,
    b_start: int,
    b_end: int,
    align_length: int,
    positives_percent: float,
) -> Edge:
    """Build an Edge in canonical orientation regardless of argument order."""
    if doc_a > doc_b:
        doc_a, doc_b = doc_b, doc_a
        a_start, b_start = b_start, a_start
        a_end, b_end = b_end, a_end
    return Edge(doc_a, a_start, a_end, doc_b, b_start, b_end, align_length, positives_percent)


# ---------------------------------------------------------------------------
# TSV I/O
# ---------------------------------------------------------------------------

def format_edge_row(edge: Edge) -> str:
    return "\t".join(
        [
            edge.t1_id,
            str(edge.t1_start),
            str(edge.t1_end),
            edge.t2_id,
            str(edge.t2_start),
            str(edge.t2_end),
            str(edge.align_length),
            f"{edge.positives_percent:.2f}",
        ]
    )


def write_edges(edges: Iterable[Edge], path: str | Path) -> int:
    """Write edges as TSV, returning the row count."""
    count = 0
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\t".join(EDGE_HEADER) + "\n")
        for edge in edges:
            fh.write(format_edge_row(edge) + "\n")
            count += 1
    return count


def read_edges(path: str | Path) -> list[Edge]:
    """Parse an edge TSV file.

    Rows stored with sides swapped are normalized to canonical orientation;
    a row connecting a document to itself is malformed.
    """
    return [edge for _, edge in iter_edge_rows(path)]


def iter_edge_rows(path: str | Path) -> Iterator[tuple[int, Edge]]:
    """Like read_edges but yields (line_number, edge) pairs."""
    path = Path(path)
    try:
        lines = path.read_text(encoding="utf-8").splitlines()
    except OSError as exc:
        raise EdgeFileError(f"{path}: {exc}") from None
    if not lines:
        raise EdgeFileError(f"{path}: empty file, expected header")
    if lines[0].split("\t") != EDGE_HEADER:
        raise EdgeFileError(f"{path}:1: bad header {lines[0]!r}")

    for lineno, line in enumerate(lines[1:], start=2):
        if not line:
            continue
        fields = line.split("\t")
        if len(fields) != len(EDGE_HEADER):
            raise EdgeFileError(
                f"{path}:{lineno}: expected {len(EDGE_HEADER)} fields, got {len(fields)}"
            )
        try:
            t1_id = fields[0]
            t1_start, t1_end = int(fields[1]), int(fields[2])
            t2_id = fields[3]
            t2_start, t2_end = int(fields[4]), int(fields[5])
            align_length = int(fields[6])
            positives = float(fields[7])
        except ValueError as exc:
            raise EdgeFileError(f"{path}:{lineno}: {exc}") from None
        try:
            edge = make_edge(
                t1_id, t1_start, t1_end, t2_id, t2_start, t2_end, align_length, positives
            )
        except ValueError as exc:
            raise EdgeFileError(f"{path}:{lineno}: {exc}") from None
        yield lineno, edge
