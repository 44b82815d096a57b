"""K-mer indexing and seed finding over normalized text."""

from __future__ import annotations

from dataclasses import dataclass

from .normalize import NormalizedText


@dataclass(frozen=True)
class SeedHit:
    """An exact shared k-gram: normalized start offsets in query and target."""

    q_pos: int
    t_pos: int
    k: int

    @property
    def diagonal(self) -> int:
        return self.t_pos - self.q_pos


class KmerIndex:
    """Maps each k-gram of a normalized text to its sorted start positions.

    Grams consisting entirely of spaces are skipped; grams merely containing
    a space are indexed (cross-word seeds matter for reuse detection).
    """

    def __init__(self, k: int, grams: dict[str, list[int]]):
        self.k = k
        self.grams = grams

    def __len__(self) -> int:
        return len(self.grams)

    def positions(self, gram: str) -> list[int]:
        return self.grams.get(gram, [])


def build_kmer_index(text: NormalizedText, k: int) -> KmerIndex:
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    grams: dict[str, list[int]] = {}
    chars = text.chars
    blank = " " * k
    for pos in range(len(chars) - k + 1):
        gram = chars[pos : pos + k]
        if gram == blank:
            continue
        bucket = grams.get(gram)
        if bucket is None:
            grams[gram] = [pos]
        else:
            bucket.append(pos)
    return KmerIndex(k, grams)


def find_seeds(
    query: NormalizedText,
    target_index: KmerIndex,
    k: int,
    query_index: KmerIndex | None = None,
    max_gram_hits: int = 1000,
) -> list[SeedHit]:
    """All shared-k-gram positions, sorted by diagonal then query offset.

    Grams hitting more than max_gram_hits target positions are treated as
    repeats (boilerplate) and skipped.  Passing the query's own index lets
    the scan intersect the two gram dictionaries instead of re-walking the
    query text; the result is identical.
    """
    if target_index.k != k:
        raise ValueError(f"index built with k={target_index.k}, asked for k={k}")
    hits: list[SeedHit] = []
    if query_index is not None:
        if query_index.k != k:
            raise ValueError(f"query index built with k={query_index.k}")
        for gram in query_index.grams.keys() & target_index.grams.keys():
            t_positions = target_index.grams[gram]
            if len(t_positions) > max_gram_hits:
                continue
            for q_pos in query_index.grams[gram]:
                for t_pos in t_positions:
                    hits.append(SeedHit(q_pos, t_pos, k))
    else:
        chars = query.chars
        blank = " " * k
        for q_pos in range(len(chars) - k + 1):
            gram = chars[q_pos : q_pos + k]
            if gram == blank:
                continue
            t_positions = target_index.grams.get(gram)
            if not t_positions or len(t_positions) > max_gram_hits:
                continue
            for t_pos in t_positions:
                hits.append(SeedHit(q_pos, t_pos, k))
    hits.sort(key=lambda h: (h.diagonal, h.q_pos))
    return hits
