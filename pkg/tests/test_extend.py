"""Extension DP tests, cross-checked against the exhaustive oracle."""

import random

import pytest

from oracle import best_local_alignment
from reusekit.detect import AlignParams, extend_seed, normalize
from reusekit.detect.kmers import SeedHit

ALPHA = "abcdefghijklmnopqrstuvwxyz"


def rand_text(rng, n):
    return "".join(rng.choice(ALPHA + "    ") for _ in range(n))


def test_identical_200_char_strings():
    rng = random.Random(1)
    s = rand_text(rng, 200)
    nt = normalize(s)
    n = len(nt.chars)
    al = extend_seed(nt, nt, SeedHit(0, 0, 10), AlignParams())
    assert al is not None
    assert (al.q_start, al.q_end, al.t_start, al.t_end) == (0, n, 0, n)
    assert al.align_length == n
    assert al.positives_percent == 100.0


def test_identical_100_char_strings_rejected():
    rng = random.Random(2)
    nt = normalize("".join(rng.choice(ALPHA) for _ in range(100)))
    assert extend_seed(nt, nt, SeedHit(0, 0, 10), AlignParams()) is None


def test_500_char_passage_with_10_substitutions_matches_oracle():
    rng = random.Random(3)
    passage = "".join(rng.choice(ALPHA) for _ in range(500))
    # scatter substitutions away from the ends so the optimum keeps full span
    positions = sorted(rng.sample(range(20, 480), 10))
    corrupted = list(passage)
    for p in positions:
        corrupted[p] = "0" if corrupted[p] != "0" else "1"
    q = normalize(passage)
    t = normalize("".join(corrupted))
    seed_pos = 250
    while any(abs(seed_pos + d - p) < 1 for d in range(10) for p in positions):
        seed_pos += 1
    al = extend_seed(q, t, SeedHit(seed_pos, seed_pos, 10), AlignParams())
    assert al is not None
    assert al.matches >= 480
    oracle = best_local_alignment(q.chars, t.chars)
    assert al.score == oracle.score
    assert al.align_length == oracle.columns
    assert al.matches == oracle.matches
    assert (al.q_start, al.q_end) == (oracle.q_start, oracle.q_end)
    assert (al.t_start, al.t_end) == (oracle.t_start, oracle.t_end)
    assert abs(al.q_start - 0) <= 5 and abs(al.q_end - 500) <= 5


def test_small_gap_is_crossed():
    """An 8-char insertion costs 24 < xdrop, so extension bridges it."""
    rng = random.Random(4)
    left = "".join(rng.choice(ALPHA) for _ in range(200))
    right = "".join(rng.choice(ALPHA) for _ in range(200))
    q = normalize(left + right)
    t = normalize(left + "01234567" + right)
    al = extend_seed(q, t, SeedHit(50, 50, 10), AlignParams(seed_prefilter_score=None))
    assert al is not None
    assert al.q_end == 400 and al.t_end == 408
    assert al.align_length == 408  # 400 matched columns + 8 gap columns
    oracle = best_local_alignment(q.chars, t.chars)
    assert al.score == oracle.score and al.align_length == oracle.columns


def test_xdrop_stops_at_long_noise_burst():
    rng = random.Random(5)
    core = "".join(rng.choice(ALPHA) for _ in range(180))
    junk_q = "".join(rng.choice("012345") for _ in range(40))
    junk_t = "".join(rng.choice("6789") for _ in range(40))
    tail = "".join(rng.choice(ALPHA) for _ in range(180))
    q = normalize(core + junk_q + tail)
    t = normalize(core + junk_t + tail)
    al = extend_seed(q, t, SeedHit(0, 0, 10), AlignParams())
    assert al is not None
    # the right extension must not cross the 40-char mutual-mismatch region
    assert al.q_end <= 180 + 13
    assert al.q_start == 0


def test_low_identity_rejected():
    rng = random.Random(6)
    passage = "".join(rng.choice(ALPHA) for _ in range(300))
    noisy = "".join(c if rng.random() > 0.35 else rng.choice(ALPHA) for c in passage)
    q = normalize(passage)
    t = normalize(noisy)
    # pick a seed from an exact shared window if one exists
    seed = None
    for i in range(len(passage) - 10):
        if passage[i : i + 10] == noisy[i : i + 10]:
            seed = SeedHit(i, i, 10)
            break
    if seed is None:
        pytest.skip("no exact 10-gram survived this noise draw")
    al = extend_seed(q, t, seed, AlignParams(seed_prefilter_score=None))
    # either nothing passes, or whatever passes respects both thresholds
    if al is not None:
        assert al.align_length >= 120
        assert al.positives_percent >= 70.0


def test_prefilter_rejects_chance_seed_and_keeps_true_one():
    rng = random.Random(7)
    gram = "qrstuvwxyz"
    q = normalize(rand_text(rng, 140) + gram + rand_text(rng, 140))
    t = normalize(rand_text(rng, 90) + gram + rand_text(rng, 190))
    q_pos = q.chars.find(gram)
    t_pos = t.chars.find(gram)
    params = AlignParams()
    assert extend_seed(q, t, SeedHit(q_pos, t_pos, 10), params) is None
    # a genuine 200-char identity passes the prefilter untouched
    s = normalize(rand_text(rng, 200))
    al = extend_seed(s, s, SeedHit(0, 0, 10), params)
    assert al is not None and al.positives_percent == 100.0


def test_banded_matches_oracle_on_noisy_pairs():
    """Exact agreement (score, columns, matches, endpoints) with the full
    unbanded DP across random noisy passages."""
    from reusekit.synthbench import corrupt

    rng = random.Random(8)
    params = AlignParams(seed_prefilter_score=None)
    checked = 0
    for _ in range(25):
        passage = rand_text(rng, rng.randint(150, 300))
        q = normalize(rand_text(rng, rng.randint(0, 60)) + passage + rand_text(rng, rng.randint(0, 60)))
        t = normalize(rand_text(rng, rng.randint(0, 60)) + corrupt(passage, 0.06, rng) + rand_text(rng, rng.randint(0, 60)))
        oracle = best_local_alignment(q.chars, t.chars)
        if oracle.score <= 0:
            continue
        seed = None
        for i in range(oracle.q_start, oracle.q_end - 10):
            j = t.chars.find(q.chars[i : i + 10])
            if j >= 0:
                seed = SeedHit(i, j, 10)
                break
        if seed is None:
            continue
        al = extend_seed(q, t, seed, params)
        if al is None:
            assert oracle.columns < 120 or oracle.positives_percent < 70.0
            continue
        assert (al.score, al.align_length, al.matches) == (
            oracle.score, oracle.columns, oracle.matches,
        )
        assert (al.q_start, al.q_end, al.t_start, al.t_end) == (
            oracle.q_start, oracle.q_end, oracle.t_start, oracle.t_end,
        )
        checked += 1
    assert checked >= 15
