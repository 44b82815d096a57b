import random

import pytest

from reusekit.detect import build_kmer_index, find_seeds, normalize
from reusekit.detect.pipeline import PreparedDoc, _shared_seeds
from reusekit.detect.params import AlignParams
from reusekit.corpus import Document, DocMetadata
from reusekit.synthbench import corrupt

ALPHA = "abcdefghijklmnopqrstuvwxyz"


def rand_text(rng, n, alphabet=ALPHA + "    "):
    return "".join(rng.choice(alphabet) for _ in range(n))


def test_small_index_positions():
    idx = build_kmer_index(normalize("abcabc"), 3)
    assert idx.grams == {"abc": [0, 3], "bca": [1], "cab": [2]}
    assert idx.positions("zzz") == []


def test_text_of_length_k_single_entry():
    idx = build_kmer_index(normalize("abcd"), 4)
    assert idx.grams == {"abcd": [0]}


def test_short_text_empty_index():
    assert len(build_kmer_index(normalize("abc"), 10)) == 0


def test_all_space_grams_skipped():
    # normalized text never doubles spaces, so only k=1 can produce one
    idx = build_kmer_index(normalize("a b"), 1)
    assert " " not in idx.grams
    assert idx.grams == {"a": [0], "b": [2]}


def test_position_count_matches_window_count():
    rng = random.Random(5)
    nt = normalize(rand_text(rng, 1000))
    k = 10
    idx = build_kmer_index(nt, k)
    total = sum(len(v) for v in idx.grams.values())
    assert total == len(nt.chars) - k + 1


def test_identity_seed():
    nt = normalize("abcdefghij")
    idx = build_kmer_index(nt, 10)
    hits = find_seeds(nt, idx, 10)
    assert [(h.q_pos, h.t_pos) for h in hits] == [(0, 0)]


def test_disjoint_alphabets_no_seeds():
    q = normalize("aaaa bbbb aaaa bbbb")
    t = normalize("cccc dddd cccc dddd")
    assert find_seeds(q, build_kmer_index(t, 10), 10) == []


def test_seeds_sorted_by_diagonal_then_qpos():
    rng = random.Random(9)
    shared = rand_text(rng, 60)
    q = normalize(rand_text(rng, 40) + shared + rand_text(rng, 40))
    t = normalize(rand_text(rng, 70) + shared + rand_text(rng, 20))
    hits = find_seeds(q, build_kmer_index(t, 10), 10)
    assert hits
    keys = [(h.diagonal, h.q_pos) for h in hits]
    assert keys == sorted(keys)
    assert len(set((h.q_pos, h.t_pos) for h in hits)) == len(hits)


def test_k_mismatch_rejected():
    nt = normalize("abcdefghijk")
    idx = build_kmer_index(nt, 10)
    with pytest.raises(ValueError, match="k="):
        find_seeds(nt, idx, 8)


def test_repeat_masking_skips_frequent_grams():
    q = normalize("abcdefghij")
    boiler = normalize(" ".join(["abcdefghij"] * 30))
    idx = build_kmer_index(boiler, 10)
    assert find_seeds(q, idx, 10, max_gram_hits=10) == []
    assert len(find_seeds(q, idx, 10, max_gram_hits=1000)) == 30


def test_query_index_path_equivalent():
    rng = random.Random(21)
    shared = rand_text(rng, 80)
    q = normalize(rand_text(rng, 100) + shared + rand_text(rng, 50))
    t = normalize(rand_text(rng, 30) + corrupt(shared, 0.05, rng) + rand_text(rng, 90))
    t_idx = build_kmer_index(t, 10)
    q_idx = build_kmer_index(q, 10)
    direct = find_seeds(q, t_idx, 10)
    via_index = find_seeds(q, t_idx, 10, query_index=q_idx)
    assert direct == via_index


def _doc(doc_id, text, year=1700):
    return Document(DocMetadata(doc_id, year, "A", "T", "c"), text)


def test_vectorized_pair_scan_matches_find_seeds():
    """The corpus pipeline's gram-code intersection must produce exactly the
    seed set of the reference dict implementation."""
    rng = random.Random(33)
    params = AlignParams()
    for trial in range(20):
        shared = rand_text(rng, rng.randint(30, 150))
        a_text = rand_text(rng, rng.randint(0, 200)) + shared + rand_text(rng, rng.randint(0, 200))
        b_text = rand_text(rng, rng.randint(0, 100)) + corrupt(shared, 0.08, rng) + rand_text(rng, rng.randint(0, 100))
        pa = PreparedDoc(_doc("a", a_text), params)
        pb = PreparedDoc(_doc("b", b_text), params)
        fast = _shared_seeds(pa, pb, params)
        ref = find_seeds(pa.norm, build_kmer_index(pb.norm, params.k), params.k,
                         max_gram_hits=params.max_gram_hits)
        assert fast == [(h.diagonal, h.q_pos, h.t_pos) for h in ref], f"trial {trial}"


def test_planted_passage_seed_probability():
    """A 300-char passage at 5% noise should yield at least one in-passage
    seed in nearly every noise draw (Monte-Carlo over 1000 draws)."""
    rng = random.Random(4242)
    k = 10
    passage = rand_text(rng, 300)
    q = normalize(rand_text(rng, 50) + passage + rand_text(rng, 50))
    q_lo, q_hi = 50, 50 + 300  # raw offsets approximate normalized ones here
    successes = 0
    for _ in range(1000):
        t = normalize(rand_text(rng, 30) + corrupt(passage, 0.05, rng) + rand_text(rng, 30))
        idx = build_kmer_index(t, k)
        hits = find_seeds(q, idx, k)
        if any(q_lo <= h.q_pos and h.q_pos + k <= q_hi for h in hits):
            successes += 1
    assert successes >= 998
