"""Reuse detection: normalization, k-mer seeding, banded extension, pairing."""

from .normalize import NormalizedText, normalize
from .params import AlignParams
from .kmers import KmerIndex, SeedHit, build_kmer_index, find_seeds
from .extend import RawAlignment, extend_seed
from .pipeline import detect_corpus, detect_pair

__all__ = [
    "AlignParams",
    "KmerIndex",
    "NormalizedText",
    "RawAlignment",
    "SeedHit",
    "build_kmer_index",
    "detect_corpus",
    "detect_pair",
    "extend_seed",
    "find_seeds",
    "normalize",
]
