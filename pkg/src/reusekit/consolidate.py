"""Edge post-processing: defragmentation, passage building, star clusters.

OCR noise breaks one logical reuse into several nearby edge fragments;
defragment() merges them back.  build_passages() then unifies overlapping
spans per document into passages, and first_source() collapses each
connected group of passages into a star rooted at the earliest instance,
so a passage quoted by n documents costs n - 1 links instead of n(n-1)/2.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from pathlib import Path

from .edges import Edge, make_edge

logger = logging.getLogger(__name__)

DEFAULT_GAP_LIMIT = 180
DEFAULT_DIAG_LIMIT = 80
DEFAULT_NEG_GAP = 50
DEFAULT_OVERLAP_FRAC = 0.5


@dataclass
class Passage:
    passage_id: int
    doc_id: str
    start: int
    end: int
    member_edge_ids: list[int]


@dataclass
class Cluster:
    cluster_id: int
    source: Passage
    sinks: list[Passage]


# ---------------------------------------------------------------------------
# defragmentation
# ---------------------------------------------------------------------------

def _gap(a_start: int, a_end: int, b_start: int, b_end: int) -> int:
    """Separation of two spans; negative when they overlap."""
    return max(a_start, b_start) - min(a_end, b_end)


def _mergeable(a: Edge, b: Edge, gap_limit: int, diag_limit: int, neg_gap: int) -> bool:
    g1 = _gap(a.t1_start, a.t1_end, b.t1_start, b.t1_end)
    if not -neg_gap <= g1 <= gap_limit:
        return False
    g2 = _gap(a.t2_start, a.t2_end, b.t2_start, b.t2_end)
    if not -neg_gap <= g2 <= gap_limit:
        return False
    diag_a = a.t2_start - a.t1_start
    diag_b = b.t2_start - b.t1_start
    return abs(diag_a - diag_b) <= diag_limit


def _merge(a: Edge, b: Edge) -> Edge:
    total = a.align_length + b.align_length
    positives = (
        a.positives_percent * a.align_length + b.positives_percent * b.align_length
    ) / total
    return Edge(
        a.t1_id,
        min(a.t1_start, b.t1_start),
        max(a.t1_end, b.t1_end),
        a.t2_id,
        min(a.t2_start, b.t2_start),
        max(a.t2_end, b.t2_end),
        total,
        positives,
    )


def defragment(
    edges: list[Edge],
    gap_limit: int = DEFAULT_GAP_LIMIT,
    diag_limit: int = DEFAULT_DIAG_LIMIT,
    neg_gap: int = DEFAULT_NEG_GAP,
) -> list[Edge]:
    """Merge nearby same-direction fragments per document pair to a fixed point.

    Two edges merge when both per-document gaps lie in [-neg_gap, gap_limit]
    and their diagonals differ by at most diag_limit.  The merged edge takes
    the span hulls, the summed align_length, and the length-weighted mean
    positives_percent.  Edges of different document pairs never interact.
    """
    by_pair: dict[tuple[str, str], list[Edge]] = {}
    for edge in edges:
        by_pair.setdefault((edge.t1_id, edge.t2_id), []).append(edge)

    out: list[Edge] = []
    for pair in sorted(by_pair):
        group = sorted(
            by_pair[pair], key=lambda e: (e.t1_start, e.t1_end, e.t2_start, e.t2_end)
        )
        merged = True
        while merged:
            merged = False
            for i in range(len(group)):
                for j in range(i + 1, len(group)):
                    if _mergeable(group[i], group[j], gap_limit, diag_limit, neg_gap):
                        combined = _merge(group[i], group[j])
                        del group[j]
                        del group[i]
                        group.append(combined)
                        group.sort(key=lambda e: (e.t1_start, e.t1_end, e.t2_start, e.t2_end))
                        merged = True
                        break
                if merged:
                    break
        out.extend(group)
    out.sort(key=lambda e: (e.t1_id, e.t2_id, e.t1_start, e.t1_end, e.t2_start))
    return out


# ---------------------------------------------------------------------------
# passages (union-find over edge sides)
# ---------------------------------------------------------------------------

class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def build_passages(
    edges: list[Edge], overlap_frac: float = DEFAULT_OVERLAP_FRAC
) -> tuple[list[Passage], set[tuple[int, int]]]:
    """Unify edge sides into per-document passages; report linked passage pairs.

    Sides in one document whose spans overlap by at least overlap_frac of the
    shorter span merge into one Passage spanning their hull.  The returned
    relation holds unordered passage-id pairs connected by at least one edge.
    Edges without an edge_id get positional ids (1-based input order).
    """
    sides: list[tuple[str, int, int, int]] = []  # (doc, start, end, edge_id)
    for i, edge in enumerate(edges):
        edge_id = edge.edge_id if edge.edge_id is not None else i + 1
        sides.append((edge.t1_id, edge.t1_start, edge.t1_end, edge_id))
        sides.append((edge.t2_id, edge.t2_start, edge.t2_end, edge_id))

    order = sorted(range(len(sides)), key=lambda s: sides[s])
    uf = _UnionFind(len(sides))
    by_doc: dict[str, list[int]] = {}
    for idx in order:
        by_doc.setdefault(sides[idx][0], []).append(idx)
    for doc_sides in by_doc.values():
        # sorted by start; a later side can only overlap while start < max end
        for i, si in enumerate(doc_sides):
            _, s_start, s_end, _ = sides[si]
            for sj in doc_sides[i + 1 :]:
                _, t_start, t_end, _ = sides[sj]
                if t_start >= s_end:
                    break
                overlap = min(s_end, t_end) - t_start
                if overlap >= overlap_frac * min(s_end - s_start, t_end - t_start):
                    uf.union(si, sj)

    groups: dict[int, list[int]] = {}
    for idx in range(len(sides)):
        groups.setdefault(uf.find(idx), []).append(idx)

    ordered_groups = sorted(
        groups.values(),
        key=lambda g: (
            sides[g[0]][0],
            min(sides[i][1] for i in g),
            min(sides[i][2] for i in g),
        ),
    )
    passages: list[Passage] = []
    side_to_passage: dict[int, int] = {}
    for pid, group in enumerate(ordered_groups, start=1):
        doc_id = sides[group[0]][0]
        start = min(sides[i][1] for i in group)
        end = max(sides[i][2] for i in group)
        members = sorted({sides[i][3] for i in group})
        passages.append(Passage(pid, doc_id, start, end, members))
        for i in group:
            side_to_passage[i] = pid

    relation: set[tuple[int, int]] = set()
    for i in range(0, len(sides), 2):
        p1 = side_to_passage[i]
        p2 = side_to_passage[i + 1]
        relation.add((min(p1, p2), max(p1, p2)))
    return passages, relation


# ---------------------------------------------------------------------------
# first-source star clusters
# ---------------------------------------------------------------------------

def first_source(
    passages: list[Passage],
    relation: set[tuple[int, int]],
    years: dict[str, int],
) -> list[Cluster]:
    """Collapse each connected passage group into a star around the earliest
    instance (minimum year, ties by doc_id then start).  Singleton components
    are dropped."""
    missing = {p.doc_id for p in passages if p.doc_id not in years}
    if missing:
        raise KeyError(f"no year metadata for docs: {sorted(missing)}")

    index = {p.passage_id: i for i, p in enumerate(passages)}
    uf = _UnionFind(len(passages))
    for a, b in relation:
        uf.union(index[a], index[b])

    components: dict[int, list[Passage]] = {}
    for p in passages:
        components.setdefault(uf.find(index[p.passage_id]), []).append(p)

    def source_key(p: Passage):
        return (years[p.doc_id], p.doc_id, p.start)

    clusters: list[Cluster] = []
    for group in components.values():
        if len(group) < 2:
            continue
        group = sorted(group, key=source_key)
        clusters.append(Cluster(0, group[0], group[1:]))
    clusters.sort(key=lambda c: source_key(c.source))
    for cid, cluster in enumerate(clusters, start=1):
        cluster.cluster_id = cid
    return clusters


# ---------------------------------------------------------------------------
# TSV output
# ---------------------------------------------------------------------------

def write_passages(passages: list[Passage], path: str | Path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("passage_id\tdoc_id\tstart\tend\n")
        for p in passages:
            fh.write(f"{p.passage_id}\t{p.doc_id}\t{p.start}\t{p.end}\n")


def write_clusters(clusters: list[Cluster], path: str | Path) -> None:
    """One row per star edge: cluster_id, source passage, sink passage."""
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("cluster_id\tsource_passage_id\tsink_passage_id\n")
        for c in clusters:
            for sink in c.sinks:
                fh.write(f"{c.cluster_id}\t{c.source.passage_id}\t{sink.passage_id}\n")
