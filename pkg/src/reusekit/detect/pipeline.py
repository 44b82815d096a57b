"""Pair and corpus-level detection drivers.

detect_pair fixes roles deterministically (query = smaller doc_id), finds
shared-k-gram seeds, extends them greedily in diagonal order while skipping
seeds already covered by an accepted alignment, and emits canonical Edges.

Seeds for a pair are found by intersecting precomputed per-document gram
code tables (numpy) rather than re-walking one text per pair; the resulting
seed set is identical to kmers.find_seeds and a test asserts so.
"""

from __future__ import annotations

import logging
from itertools import combinations

import numpy as np

from ..corpus import Corpus, Document
from ..edges import Edge, make_edge
from .extend import RawAlignment, extend_seed
from .kmers import SeedHit
from .normalize import NormalizedText, normalize
from .params import AlignParams

logger = logging.getLogger(__name__)

# FNV-64 prime; gram codes are rolling polynomial hashes mod 2**64.  A
# colliding pair of unequal grams is filtered by direct string comparison
# when seeds are materialized, so collisions cost time, never correctness.
_CODE_BASE = np.uint64(1099511628211)


class PreparedDoc:
    """Per-document state reused across every pair the document appears in."""

    __slots__ = ("doc", "norm", "uniq_codes", "group_offsets", "group_positions")

    def __init__(self, doc: Document, params: AlignParams):
        self.doc = doc
        self.norm = normalize(doc.raw_text)
        codes = _gram_codes(self.norm.chars, params.k)
        if codes.size:
            positions = np.arange(codes.size, dtype=np.int32)
            keep = codes != _blank_code(params.k)
            codes, positions = codes[keep], positions[keep]
            order = np.argsort(codes, kind="stable")
            codes, positions = codes[order], positions[order]
            self.uniq_codes, starts = np.unique(codes, return_index=True)
            self.group_offsets = np.append(starts, codes.size)
            self.group_positions = positions
        else:
            self.uniq_codes = np.empty(0, dtype=np.uint64)
            self.group_offsets = np.zeros(1, dtype=np.int64)
            self.group_positions = np.empty(0, dtype=np.int32)


def _gram_codes(chars: str, k: int) -> np.ndarray:
    n = len(chars)
    if n < k:
        return np.empty(0, dtype=np.uint64)
    arr = np.frombuffer(chars.encode("utf-32-le"), dtype=np.uint32).astype(np.uint64)
    codes = np.zeros(n - k + 1, dtype=np.uint64)
    for d in range(k):
        codes = codes * _CODE_BASE + arr[d : d + n - k + 1]
    return codes


def _blank_code(k: int) -> np.uint64:
    code = 0
    for _ in range(k):
        code = (code * int(_CODE_BASE) + ord(" ")) % (1 << 64)
    return np.uint64(code)


def _shared_seeds(qp: PreparedDoc, tp: PreparedDoc, params: AlignParams) -> list[tuple[int, int, int]]:
    """(diagonal, q_pos, t_pos) tuples for all shared k-grams, sorted."""
    if not qp.uniq_codes.size or not tp.uniq_codes.size:
        return []
    idx = np.searchsorted(qp.uniq_codes, tp.uniq_codes)
    idx_c = np.minimum(idx, qp.uniq_codes.size - 1)
    mask = qp.uniq_codes[idx_c] == tp.uniq_codes
    q_groups = idx_c[mask]
    t_groups = np.nonzero(mask)[0]

    k = params.k
    qchars, tchars = qp.norm.chars, tp.norm.chars
    seeds: list[tuple[int, int, int]] = []
    for gq, gt in zip(q_groups.tolist(), t_groups.tolist()):
        t_lo = tp.group_offsets[gt]
        t_hi = tp.group_offsets[gt + 1]
        if t_hi - t_lo > params.max_gram_hits:
            continue  # repeat-masked boilerplate gram
        t_positions = tp.group_positions[t_lo:t_hi].tolist()
        q_lo = qp.group_offsets[gq]
        q_hi = qp.group_offsets[gq + 1]
        for q_pos in qp.group_positions[q_lo:q_hi].tolist():
            gram = qchars[q_pos : q_pos + k]
            for t_pos in t_positions:
                if tchars[t_pos : t_pos + k] == gram:
                    seeds.append((t_pos - q_pos, q_pos, t_pos))
    seeds.sort()
    return seeds


def _dedupe(alignments: list[RawAlignment]) -> list[RawAlignment]:
    """Drop alignments overlapping a higher-scoring one >= 90% on both docs.

    Overlap is measured against the shorter span on each document.
    """
    ordered = sorted(alignments, key=lambda al: (-al.score, al.q_start, al.t_start, al.q_end))
    kept: list[RawAlignment] = []
    for al in ordered:
        q_len = al.q_end - al.q_start
        t_len = al.t_end - al.t_start
        dup = False
        for other in kept:
            oq = min(al.q_end, other.q_end) - max(al.q_start, other.q_start)
            if oq <= 0:
                continue
            ot = min(al.t_end, other.t_end) - max(al.t_start, other.t_start)
            if ot <= 0:
                continue
            mq = min(q_len, other.q_end - other.q_start)
            mt = min(t_len, other.t_end - other.t_start)
            if oq >= 0.9 * mq and ot >= 0.9 * mt:
                dup = True
                break
        if not dup:
            kept.append(al)
    return kept


def _prepare(doc: Document, params: AlignParams, cache: dict[str, PreparedDoc] | None) -> PreparedDoc:
    if cache is None:
        return PreparedDoc(doc, params)
    prep = cache.get(doc.doc_id)
    if prep is None:
        prep = cache[doc.doc_id] = PreparedDoc(doc, params)
    return prep


def detect_pair(
    a: Document,
    b: Document,
    params: AlignParams = AlignParams(),
    cache: dict[str, PreparedDoc] | None = None,
) -> list[Edge]:
    """All reuse edges between two documents, canonical and deterministic.

    Symmetric by construction: roles are fixed by doc_id order, so argument
    order never changes the result.
    """
    if a.doc_id == b.doc_id:
        raise ValueError(f"cannot detect a document against itself: {a.doc_id!r}")
    if a.doc_id > b.doc_id:
        a, b = b, a
    qp = _prepare(a, params, cache)
    tp = _prepare(b, params, cache)

    k = params.k
    accepted: list[RawAlignment] = []
    for _diag, q_pos, t_pos in _shared_seeds(qp, tp, params):
        covered = False
        for al in accepted:
            if (
                al.q_start <= q_pos
                and q_pos + k <= al.q_end
                and al.t_start <= t_pos
                and t_pos + k <= al.t_end
            ):
                covered = True
                break
        if covered:
            continue
        al = extend_seed(qp.norm, tp.norm, SeedHit(q_pos, t_pos, k), params)
        if al is not None:
            accepted.append(al)

    edges = []
    for al in _dedupe(accepted):
        q_start, q_end = qp.norm.raw_span(al.q_start, al.q_end)
        t_start, t_end = tp.norm.raw_span(al.t_start, al.t_end)
        edges.append(
            make_edge(
                a.doc_id, q_start, q_end, b.doc_id, t_start, t_end,
                al.align_length, al.positives_percent,
            )
        )
    edges.sort(key=lambda e: (e.t1_start, e.t1_end, e.t2_start, e.t2_end))
    return edges


# ---------------------------------------------------------------------------
# corpus-level driver
# ---------------------------------------------------------------------------

_WORKER_STATE: dict = {}


def _init_worker(corpus: Corpus, params: AlignParams) -> None:
    _WORKER_STATE["corpus"] = corpus
    _WORKER_STATE["params"] = params
    _WORKER_STATE["cache"] = {}


def _detect_chunk(pairs: list[tuple[str, str]]) -> list[Edge]:
    corpus: Corpus = _WORKER_STATE["corpus"]
    params: AlignParams = _WORKER_STATE["params"]
    cache: dict[str, PreparedDoc] = _WORKER_STATE["cache"]
    out: list[Edge] = []
    for id_a, id_b in pairs:
        out.extend(detect_pair(corpus.documents[id_a], corpus.documents[id_b], params, cache))
    return out


def detect_corpus(corpus: Corpus, params: AlignParams = AlignParams(), threads: int = 1) -> list[Edge]:
    """Run detect_pair over every unordered document pair.

    Returns the canonically sorted edge list; the set is independent of
    thread count and scheduling.
    """
    doc_ids = sorted(corpus.documents)
    pairs = list(combinations(doc_ids, 2))
    edges: list[Edge] = []

    if threads > 1 and len(pairs) > 1:
        from concurrent.futures import ProcessPoolExecutor

        # Interleave pairs so expensive documents spread across chunks.
        chunks: list[list[tuple[str, str]]] = [[] for _ in range(threads * 4)]
        for i, pair in enumerate(pairs):
            chunks[i % len(chunks)].append(pair)
        chunks = [c for c in chunks if c]
        with ProcessPoolExecutor(
            max_workers=threads, initializer=_init_worker, initargs=(corpus, params)
        ) as pool:
            for chunk_edges in pool.map(_detect_chunk, chunks):
                edges.extend(chunk_edges)
    else:
        cache: dict[str, PreparedDoc] = {}
        done = 0
        for id_a, id_b in pairs:
            edges.extend(detect_pair(corpus.documents[id_a], corpus.documents[id_b], params, cache))
            done += 1
            if done % 1000 == 0:
                logger.info("detect: %d/%d pairs, %d edges", done, len(pairs), len(edges))

    edges.sort(key=lambda e: (e.t1_id, e.t2_id, e.t1_start, e.t1_end, e.t2_start))
    logger.info("detect: %d document pairs -> %d edges", len(pairs), len(edges))
    return edges
