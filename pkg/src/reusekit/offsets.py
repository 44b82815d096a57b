"""Offset translation between raw text, annotated text, and scanned pages.

Edges are expressed in raw-text character offsets.  Some corpora carry an
annotated variant of each text (extra inserted headings), and a token-level
page map locating each word on a scanned page.  This module translates
between those coordinate systems.

All offsets count Unicode scalar values, never bytes.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass

# Synthetic pagination used when a document has no page map: page labels are
# still needed (chart axes, context captions), so fall back to fixed-size
# pages of this many raw characters.
FALLBACK_PAGE_CHARS = 1800


class OffsetShiftTable:
    """Insertion records translating raw offsets to annotated-text offsets.

    The annotated text equals the raw text with extra runs inserted; each
    record is (raw_position, inserted_length).  Deletions and reorderings are
    not representable and are rejected at construction.
    """

    def __init__(self, insertions: list[tuple[int, int]], raw_length: int):
        prev = -1
        for pos, length in insertions:
            if length <= 0:
                raise ValueError(f"inserted_length must be positive, got {length}")
            if pos < 0 or pos > raw_length:
                raise ValueError(
                    f"insertion position {pos} outside [0, {raw_length}]"
                )
            if pos <= prev:
                raise ValueError("insertion positions must be strictly increasing")
            prev = pos
        self.insertions = list(insertions)
        self.raw_length = raw_length
        self._positions = [p for p, _ in insertions]
        # _cum[i] = total inserted length strictly before insertion i
        self._cum = [0]
        for _, length in insertions:
            self._cum.append(self._cum[-1] + length)

    @property
    def annotated_length(self) -> int:
        return self.raw_length + self._cum[-1]

    def raw_to_annotated(self, raw_off: int) -> int:
        """Shift a raw offset to its annotated-text offset.

        An offset equal to an insertion position lands after that insertion.
        """
        if raw_off < 0 or raw_off > self.raw_length:
            raise ValueError(f"raw offset {raw_off} outside [0, {self.raw_length}]")
        idx = bisect_right(self._positions, raw_off)
        return raw_off + self._cum[idx]

    def annotated_to_raw(self, ann_off: int) -> int:
        """Invert raw_to_annotated; offsets inside an inserted run clamp to it.

        Annotated offsets that fall within inserted material have no raw
        counterpart, so they map to the insertion's raw position.
        """
        if ann_off < 0 or ann_off > self.annotated_length:
            raise ValueError(
                f"annotated offset {ann_off} outside [0, {self.annotated_length}]"
            )
        if not self.insertions:
            return ann_off
        # Annotated start of insertion i is position_i + inserted-before_i.
        starts = [p + self._cum[i] for i, (p, _) in enumerate(self.insertions)]
        idx = bisect_right(starts, ann_off) - 1
        if idx < 0:
            return ann_off
        pos, length = self.insertions[idx]
        if ann_off < starts[idx] + length:
            return pos
        return ann_off - self._cum[idx + 1]


@dataclass(frozen=True)
class PageToken:
    """One word's location: raw char span, page number, and pixel box."""

    char_start: int
    char_end: int
    page: int
    x: int
    y: int
    w: int
    h: int


class PageMap:
    """Token-level mapping from raw character offsets to pages and boxes."""

    def __init__(self, tokens: list[PageToken]):
        prev_end = 0
        prev_page = 1
        for tok in tokens:
            if tok.char_start < prev_end:
                raise ValueError("page map tokens must be sorted and disjoint")
            if tok.char_end <= tok.char_start:
                raise ValueError("page map token span must be non-empty")
            if tok.page < prev_page:
                raise ValueError("page numbers must be non-decreasing")
            prev_end = tok.char_end
            prev_page = tok.page
        self.tokens = list(tokens)
        self._starts = [t.char_start for t in tokens]

    @property
    def max_offset(self) -> int:
        return self.tokens[-1].char_end if self.tokens else 0

    def offset_to_page(self, raw_off: int) -> int:
        """Page of the token containing raw_off, or of the nearest one before.

        Offsets before the first token resolve to the first token's page, so
        the function is total over non-negative offsets.
        """
        if not self.tokens:
            raise ValueError("page map is empty")
        idx = bisect_right(self._starts, raw_off) - 1
        if idx < 0:
            return self.tokens[0].page
        return self.tokens[idx].page

    def highlight_regions(self, start: int, end: int) -> list[tuple[int, PageToken]]:
        """Boxes of all tokens overlapping [start, end), in document order.

        Tokens are returned individually (no box merging), each paired with
        its page number.  Document order groups equal pages together because
        pages are non-decreasing.
        """
        if start >= end:
            raise ValueError("highlight span must be non-empty")
        idx = max(bisect_right(self._starts, start) - 1, 0)
        out: list[tuple[int, PageToken]] = []
        for tok in self.tokens[idx:]:
            if tok.char_start >= end:
                break
            if tok.char_end > start:
                out.append((tok.page, tok))
        return out

    def page_char_range(self, page: int) -> tuple[int, int]:
        """Raw char range [start, end) covered by a page's tokens."""
        spans = [t for t in self.tokens if t.page == page]
        if not spans:
            raise ValueError(f"page {page} has no tokens")
        return spans[0].char_start, spans[-1].char_end


def page_for_offset(page_map: PageMap | None, raw_off: int) -> int:
    """Resolve an offset to a page, synthesizing pagination without a map."""
    if page_map is not None and page_map.tokens:
        return page_map.offset_to_page(raw_off)
    return 1 + raw_off // FALLBACK_PAGE_CHARS
