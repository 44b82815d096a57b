"""Independent brute-force oracles used by the test suite.

Nothing in here may import from the detector's alignment internals: these
implementations exist to cross-check them.  The local-alignment oracle is a
full (unbanded) dynamic program over the entire DP matrix, computed on
anti-diagonals with numpy so that 300x300 problems stay fast enough to run
hundreds of times.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

MATCH = 2
MISMATCH = -2
GAP = -3


@dataclass
class OracleAlignment:
    score: int
    columns: int
    matches: int
    q_start: int
    q_end: int
    t_start: int
    t_end: int

    @property
    def positives_percent(self) -> float:
        return 100.0 * self.matches / self.columns


def best_local_alignment(a: str, b: str) -> OracleAlignment | None:
    """Best-scoring local alignment of a vs b under +2/-2/-3 scoring.

    Full Smith-Waterman with linear gap costs and traceback.  Ties are broken
    deterministically: the first maximal cell in row-major order wins, and
    traceback prefers diagonal over up over left moves.
    """
    n, m = len(a), len(b)
    if n == 0 or m == 0:
        return None

    aa = np.frombuffer(a.encode("utf-32-le"), dtype=np.uint32)
    bb = np.frombuffer(b.encode("utf-32-le"), dtype=np.uint32)

    h = np.zeros((n + 1, m + 1), dtype=np.int32)
    # 0 = local start, 1 = diag, 2 = up (consumes a), 3 = left (consumes b)
    moves = np.zeros((n + 1, m + 1), dtype=np.uint8)

    for s in range(2, n + m + 1):
        lo = max(1, s - m)
        hi = min(n, s - 1)
        if lo > hi:
            continue
        i = np.arange(lo, hi + 1)
        j = s - i
        diag = h[i - 1, j - 1] + np.where(aa[i - 1] == bb[j - 1], MATCH, MISMATCH)
        up = h[i - 1, j] + GAP
        left = h[i, j - 1] + GAP
        best = np.maximum(np.maximum(diag, up), left)
        mv = np.where(
            best <= 0,
            0,
            np.where(diag == best, 1, np.where(up == best, 2, 3)),
        ).astype(np.uint8)
        h[i, j] = np.maximum(best, 0)
        moves[i, j] = mv

    flat = int(np.argmax(h))
    bi, bj = divmod(flat, m + 1)
    if h[bi, bj] <= 0:
        return None

    i, j = bi, bj
    columns = 0
    matches = 0
    while moves[i, j] != 0:
        mv = moves[i, j]
        columns += 1
        if mv == 1:
            if a[i - 1] == b[j - 1]:
                matches += 1
            i -= 1
            j -= 1
        elif mv == 2:
            i -= 1
        else:
            j -= 1
    return OracleAlignment(
        score=int(h[bi, bj]),
        columns=columns,
        matches=matches,
        q_start=i,
        q_end=bi,
        t_start=j,
        t_end=bj,
    )


# Minimum score any alignment passing (min_columns, min_positives) can have:
# with c columns and m identical, score = 2m - 2(sub) or -3(gap) per bad
# column; worst case 2*ceil(0.7*120) - 3*(120 - 84) = 168 - 108 = 60... but
# mismatches cost -2, so the true floor is 2*84 - 3*36 = 60.
_SCORE_FLOOR = 60


def all_local_alignments(
    a: str,
    b: str,
    min_columns: int = 120,
    min_positives: float = 70.0,
    max_rounds: int = 8,
) -> list[OracleAlignment]:
    """All threshold-passing local alignments, found by iterated masking.

    Finds the best alignment, masks its target-side span with a sentinel that
    matches nothing, and repeats until the best remaining score drops below
    the floor any passing alignment must reach.
    """
    found: list[OracleAlignment] = []
    masked = list(b)
    for _ in range(max_rounds):
        aln = best_local_alignment(a, "".join(masked))
        if aln is None or aln.score < _SCORE_FLOOR:
            break
        if aln.columns >= min_columns and aln.positives_percent >= min_positives:
            found.append(aln)
        for p in range(aln.t_start, aln.t_end):
            masked[p] = "\x00"
    return found


def span_iou(a_start: int, a_end: int, b_start: int, b_end: int) -> float:
    """Intersection-over-union of two half-open integer spans."""
    inter = min(a_end, b_end) - max(a_start, b_start)
    if inter <= 0:
        return 0.0
    union = max(a_end, b_end) - min(a_start, b_start)
    return inter / union


# ---------------------------------------------------------------------------
# edge query oracles
# ---------------------------------------------------------------------------

def edge_query_ids_python(edges, years, authors, q):
    """Reference directional edge query: full scan, no indexing.

    years/authors are plain dicts keyed by doc_id; returns sorted edge ids.
    """
    out = []
    primary_year = years[q.doc_id]
    primary_author = authors[q.doc_id]
    for e in edges:
        if q.doc_id == e.t1_id:
            other = e.t2_id
        elif q.doc_id == e.t2_id:
            other = e.t1_id
        else:
            continue
        other_year = years[other]
        if q.direction == "out" and other_year < primary_year:
            continue
        if q.direction == "in" and other_year > primary_year:
            continue
        if q.year_from is not None and other_year < q.year_from:
            continue
        if q.year_to is not None and other_year > q.year_to:
            continue
        if q.exclude_same_author and primary_author and authors[other] == primary_author:
            continue
        out.append(e.edge_id)
    return sorted(out)


class EdgeQueryOracle:
    """Vectorized full-scan edge query for million-edge comparisons."""

    def __init__(self, edges, years, authors):
        doc_ids = sorted(years)
        self.doc_index = {d: i for i, d in enumerate(doc_ids)}
        self.years = np.array([years[d] for d in doc_ids], dtype=np.int32)
        author_codes: dict[str, int] = {}
        codes = []
        for d in doc_ids:
            a = authors[d]
            # empty author gets a sentinel that never equals anything
            codes.append(-1 if a == "" else author_codes.setdefault(a, len(author_codes)))
        self.author_ids = np.array(codes, dtype=np.int32)
        n = len(edges)
        self.t1 = np.fromiter((self.doc_index[e.t1_id] for e in edges), np.int32, count=n)
        self.t2 = np.fromiter((self.doc_index[e.t2_id] for e in edges), np.int32, count=n)
        self.ids = np.fromiter((e.edge_id for e in edges), np.int64, count=n)

    def query_ids(self, q):
        d = self.doc_index[q.doc_id]
        touch = (self.t1 == d) | (self.t2 == d)
        other = np.where(self.t1 == d, self.t2, self.t1)
        other_year = self.years[other]
        primary_year = int(self.years[d])
        mask = touch
        if q.direction == "out":
            mask = mask & (other_year >= primary_year)
        elif q.direction == "in":
            mask = mask & (other_year <= primary_year)
        if q.year_from is not None:
            mask = mask & (other_year >= q.year_from)
        if q.year_to is not None:
            mask = mask & (other_year <= q.year_to)
        if q.exclude_same_author:
            primary_author = int(self.author_ids[d])
            if primary_author != -1:
                mask = mask & (self.author_ids[other] != primary_author)
        return sorted(self.ids[mask].tolist())
