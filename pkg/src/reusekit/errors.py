"""Exception types shared across the package."""


class ReuseKitError(Exception):
    """Base class for all errors raised by this package."""


class CorpusError(ReuseKitError):
    """Corpus directory is malformed (bad TSV row, duplicate id, bad text)."""


class EdgeFileError(ReuseKitError):
    """An edge TSV file could not be parsed or references unknown documents."""


class GenerationError(ReuseKitError):
    """Synthetic corpus generation failed (e.g. plants cannot be placed)."""
