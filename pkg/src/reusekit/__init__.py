"""Text-reuse detection, consolidation, and exploration for noisy OCR corpora.

The pipeline: ingest a corpus directory, detect shared passages between
document pairs (k-mer seeding + banded gapped extension), defragment and
cluster the resulting edges, and serve the whole thing over HTTP for
interactive exploration.
"""

__version__ = "0.1.0"

from .corpus import Corpus, DocMetadata, Document, ingest_corpus
from .edges import Edge

__all__ = [
    "Corpus",
    "DocMetadata",
    "Document",
    "Edge",
    "ingest_corpus",
    "__version__",
]
