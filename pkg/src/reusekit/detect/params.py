"""Tunable alignment parameters with the pipeline defaults."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class AlignParams:
    """Knobs for seeding and banded extension.

    Defaults are tuned so passages of 150+ characters survive 5 to 10
    percent character noise.  seed_prefilter_score is a cheap ungapped
    two-way extension threshold that discards chance seed hits before the
    banded DP runs; None disables the prefilter.
    """

    k: int = 10
    match: int = 2
    mismatch: int = -2
    gap: int = -3
    band: int = 16
    xdrop: int = 25
    min_len: int = 120
    min_positives: float = 70.0
    max_gram_hits: int = 1000
    seed_prefilter_score: int | None = 40

    def __post_init__(self):
        if self.k < 4:
            raise ValueError(f"k must be >= 4, got {self.k}")
        if self.match <= 0 or self.mismatch >= 0 or self.gap >= 0:
            raise ValueError("match must be positive; mismatch and gap negative")
        if self.band < 1:
            raise ValueError("band half-width must be >= 1")
        if self.xdrop <= 0:
            raise ValueError("xdrop must be positive")
        if self.min_len < 1:
            raise ValueError("min_len must be >= 1")
        if not 0.0 <= self.min_positives <= 100.0:
            raise ValueError("min_positives must be within [0, 100]")
        if self.max_gram_hits < 1:
            raise ValueError("max_gram_hits must be >= 1")
