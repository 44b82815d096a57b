"""Catalogue search over author and title metadata.

Matching is deliberately forgiving about period spelling: besides exact
token equality a query term can hit as a prefix (3+ chars) or at one
Damerau-Levenshtein edit (both sides 5+ chars), so "essais" still finds
"Essays".  Results are scored by how many distinct terms matched.
"""

from __future__ import annotations

import re
from bisect import bisect_left
from dataclasses import dataclass
from operator import attrgetter

MAX_RESULTS = 100
MIN_PREFIX_LEN = 3
MIN_FUZZY_LEN = 5

_TOKEN_RE = re.compile(r"[^\W_]+", re.UNICODE)

SORT_COLUMNS = ("doc_id", "year", "author", "title", "score")


@dataclass(frozen=True)
class SearchResult:
    doc_id: str
    year: int
    author: str
    title: str
    score: int


def tokenize(text: str) -> list[str]:
    return _TOKEN_RE.findall(text.lower())


def within_one_edit(a: str, b: str) -> bool:
    """Damerau-Levenshtein distance <= 1 without building the full matrix."""
    if a == b:
        return True
    la, lb = len(a), len(b)
    if abs(la - lb) > 1:
        return False
    if la == lb:
        diffs = [i for i in range(la) if a[i] != b[i]]
        if len(diffs) == 1:
            return True
        if len(diffs) == 2:
            i, j = diffs
            return j == i + 1 and a[i] == b[j] and a[j] == b[i]
        return False
    if la > lb:
        a, b, la, lb = b, a, lb, la
    i = 0
    while i < la and a[i] == b[i]:
        i += 1
    return a[i:] == b[i + 1 :]


def term_matches(term: str, token: str) -> bool:
    if term == token:
        return True
    if len(term) >= MIN_PREFIX_LEN and token.startswith(term):
        return True
    if len(term) >= MIN_FUZZY_LEN and len(token) >= MIN_FUZZY_LEN:
        return within_one_edit(term, token)
    return False


@dataclass(frozen=True)
class _Entry:
    doc_id: str
    year: int
    author: str
    title: str


class SearchIndex:
    """Inverted token index over the catalogue; build once, query many times.

    Equality and prefix matches resolve by bisecting a sorted vocabulary;
    fuzzy matches scan only the vocabulary buckets whose token length is
    within one of the term's.  Scoring is identical to checking
    term_matches() against every token of every entry, just faster.
    """

    def __init__(self, corpus):
        self.entries: list[_Entry] = []
        postings: dict[str, list[int]] = {}
        for doc in corpus:
            meta = doc.meta
            idx = len(self.entries)
            self.entries.append(_Entry(meta.doc_id, meta.year, meta.author, meta.title))
            for token in set(tokenize(meta.author + " " + meta.title)):
                postings.setdefault(token, []).append(idx)
        self.postings = postings
        self.vocab = sorted(postings)
        self.vocab_by_len: dict[int, list[str]] = {}
        for token in self.vocab:
            self.vocab_by_len.setdefault(len(token), []).append(token)

    def _tokens_for_term(self, term: str) -> set[str]:
        matched: set[str] = set()
        if term in self.postings:
            matched.add(term)
        if len(term) >= MIN_PREFIX_LEN:
            lo = bisect_left(self.vocab, term)
            hi = bisect_left(self.vocab, term + chr(0x10FFFF))
            matched.update(self.vocab[lo:hi])
        if len(term) >= MIN_FUZZY_LEN:
            for length in (len(term) - 1, len(term), len(term) + 1):
                if length < MIN_FUZZY_LEN:
                    continue
                for token in self.vocab_by_len.get(length, ()):
                    if token not in matched and within_one_edit(term, token):
                        matched.add(token)
        return matched

    def search(self, query: str) -> list[SearchResult]:
        terms = list(dict.fromkeys(query.lower().split()))
        if not terms:
            return []
        scores: dict[int, int] = {}
        for term in terms:
            docs: set[int] = set()
            for token in self._tokens_for_term(term):
                docs.update(self.postings[token])
            for idx in docs:
                scores[idx] = scores.get(idx, 0) + 1
        scored = [
            SearchResult(e.doc_id, e.year, e.author, e.title, score)
            for idx, score in scores.items()
            for e in (self.entries[idx],)
        ]
        scored.sort(key=lambda r: (-r.score, r.year, r.doc_id))
        return scored[:MAX_RESULTS]


def search(corpus, query: str, index: SearchIndex | None = None) -> list[SearchResult]:
    """Rank catalogue entries by distinct query terms matched.

    Ties break by year ascending, then doc_id; at most 100 results.
    An empty or whitespace-only query returns nothing.
    """
    if index is None:
        index = SearchIndex(corpus)
    return index.search(query)


def resort(
    results: list[SearchResult],
    column: str,
    order: str = "asc",
    previous_sort: str | None = None,
) -> list[SearchResult]:
    """Stable re-sort of existing results by one column.

    Stability means rows equal in the new column keep their previous relative
    order, so successive sorts compose the way spreadsheet users expect.
    previous_sort is informational only; the carryover comes from stability,
    not from re-reading the old column.
    """
    if column not in SORT_COLUMNS:
        raise ValueError(f"unknown sort column: {column!r}")
    if order not in ("asc", "desc"):
        raise ValueError(f"order must be asc or desc: {order!r}")
    if previous_sort is not None and previous_sort not in SORT_COLUMNS:
        raise ValueError(f"unknown sort column: {previous_sort!r}")
    return sorted(results, key=attrgetter(column), reverse=order == "desc")
