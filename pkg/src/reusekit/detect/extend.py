"""Banded gapped extension of seed hits with X-drop termination.

A seed is extended independently to the left and to the right along its
diagonal.  Each direction runs a small banded dynamic program (half-width
params.band around the seed diagonal) and stops once every cell in a row
has fallen more than params.xdrop below that direction's running maximum.
The result is the maximal-scoring local alignment containing the seed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .kmers import SeedHit
from .normalize import NormalizedText
from .params import AlignParams

_NEG = -(1 << 30)


@dataclass(frozen=True)
class RawAlignment:
    """An accepted alignment in normalized coordinates (half-open spans)."""

    q_start: int
    q_end: int
    t_start: int
    t_end: int
    score: int
    align_length: int  # total columns: matches + mismatches + gaps
    matches: int  # identical columns

    @property
    def positives_percent(self) -> float:
        return 100.0 * self.matches / self.align_length


class _DirExt(NamedTuple):
    score: int
    q_used: int
    t_used: int
    cols: int
    matches: int


_ZERO_EXT = _DirExt(0, 0, 0, 0, 0)


def _extend_directional(qs: str, ts: str, params: AlignParams) -> _DirExt:
    """Best banded extension into qs x ts starting at their shared origin.

    Cell (i, j) means i query and j target characters consumed; only cells
    with |j - i| <= band are computed.  Returns the best cell ever seen;
    the origin itself (nothing consumed, score 0) is always a candidate.
    """
    nq, nt = len(qs), len(ts)
    if nq == 0 or nt == 0:
        # with no material on one side, any move is a leading gap: pure loss
        return _ZERO_EXT
    band = params.band
    width = 2 * band + 1
    gap = params.gap
    match = params.match
    mismatch = params.mismatch
    xdrop = params.xdrop

    score = [_NEG] * width
    cols = [0] * width
    matches = [0] * width

    best = 0
    best_state = _ZERO_EXT

    # row 0: leading gaps consuming only target characters (j = b - band)
    score[band] = 0
    for b in range(band + 1, width):
        j = b - band
        if j > nt:
            break
        s = j * gap
        if s < -xdrop:
            break
        score[b] = s
        cols[b] = j

    for i in range(1, nq + 1):
        prev_score = score
        prev_cols = cols
        prev_matches = matches
        score = [_NEG] * width
        cols = [0] * width
        matches = [0] * width
        qc = qs[i - 1]
        lo = band - i
        if lo < 0:
            lo = 0
        hi = nt - i + band
        if hi > width - 1:
            hi = width - 1
        if hi < lo:
            break
        alive = False
        floor = best - xdrop
        for b in range(lo, hi + 1):
            j = i + b - band
            cand = _NEG
            ccols = 0
            cmatch = 0
            if j >= 1:
                ds = prev_score[b]
                if ds > _NEG:
                    if qc == ts[j - 1]:
                        cand = ds + match
                        cmatch = prev_matches[b] + 1
                    else:
                        cand = ds + mismatch
                        cmatch = prev_matches[b]
                    ccols = prev_cols[b] + 1
            if b + 1 < width:
                us = prev_score[b + 1]
                if us > _NEG and us + gap > cand:
                    cand = us + gap
                    ccols = prev_cols[b + 1] + 1
                    cmatch = prev_matches[b + 1]
            if b >= 1:
                ls = score[b - 1]
                if ls > _NEG and ls + gap > cand:
                    cand = ls + gap
                    ccols = cols[b - 1] + 1
                    cmatch = matches[b - 1]
            if cand < floor:
                continue
            score[b] = cand
            cols[b] = ccols
            matches[b] = cmatch
            alive = True
            if cand > best:
                best = cand
                best_state = _DirExt(cand, i, j, ccols, cmatch)
                floor = cand - xdrop
        if not alive:
            break
    return best_state


def _ungapped_reach(qs: str, ts: str, q_from: int, t_from: int, step: int, params: AlignParams) -> int:
    """Best running score of a gapless walk from (q_from, t_from).

    step +1 walks right, -1 walks left.  Stops on the X-drop rule or after a
    64-char window; used only as a cheap seed prefilter.
    """
    match, mismatch, xdrop = params.match, params.mismatch, params.xdrop
    best = 0
    s = 0
    qi, ti = q_from, t_from
    nq, nt = len(qs), len(ts)
    for _ in range(64):
        if not (0 <= qi < nq and 0 <= ti < nt):
            break
        s += match if qs[qi] == ts[ti] else mismatch
        if s > best:
            best = s
        elif s < best - xdrop:
            break
        qi += step
        ti += step
    return best


def extend_seed(
    query: NormalizedText, target: NormalizedText, seed: SeedHit, params: AlignParams
) -> RawAlignment | None:
    """Extend one seed; None when the result fails the acceptance thresholds.

    Thresholds: align_length >= params.min_len columns and identity
    >= params.min_positives percent.
    """
    q0, t0, k = seed.q_pos, seed.t_pos, seed.k
    qchars, tchars = query.chars, target.chars

    if params.seed_prefilter_score is not None:
        seed_score = k * params.match
        reach = seed_score
        reach += _ungapped_reach(qchars, tchars, q0 + k, t0 + k, 1, params)
        if reach < params.seed_prefilter_score:
            reach += _ungapped_reach(qchars, tchars, q0 - 1, t0 - 1, -1, params)
            if reach < params.seed_prefilter_score:
                return None

    right = _extend_directional(qchars[q0 + k :], tchars[t0 + k :], params)
    left = _extend_directional(
        qchars[q0 - 1 :: -1] if q0 else "", tchars[t0 - 1 :: -1] if t0 else "", params
    )

    align_length = k + left.cols + right.cols
    if align_length < params.min_len:
        return None
    n_matches = k + left.matches + right.matches
    if 100.0 * n_matches / align_length < params.min_positives:
        return None
    return RawAlignment(
        q_start=q0 - left.q_used,
        q_end=q0 + k + right.q_used,
        t_start=t0 - left.t_used,
        t_end=t0 + k + right.t_used,
        score=k * params.match + left.score + right.score,
        align_length=align_length,
        matches=n_matches,
    )
