"""Text normalization for OCR-noise-resilient matching.

Raw text is folded to a small alphabet before seeding and alignment:
lowercase, long s folded to round s, and every maximal run of
non-alphanumeric characters collapsed to a single space.  Each normalized
position remembers the raw offset it came from so alignment spans can be
mapped back onto the original text.
"""

from __future__ import annotations

from array import array
from dataclasses import dataclass

# Long s is already lowercase, so .lower() alone would leave it alone.
_FOLD = {"ſ": "s"}


@dataclass(frozen=True)
class NormalizedText:
    """Normalized characters plus a map back to raw offsets.

    to_raw[i] is the raw offset of the character that produced chars[i]; a
    collapsed space maps to the first raw character of its run.  Leading and
    trailing separator runs produce no output at all.  Stored as a compact
    int array: corpora hold hundreds of these maps at once.
    """

    chars: str
    to_raw: array

    def __len__(self) -> int:
        return len(self.chars)

    def raw_span(self, start: int, end: int) -> tuple[int, int]:
        """Translate a half-open normalized span to a half-open raw span."""
        if not 0 <= start < end <= len(self.chars):
            raise ValueError(f"bad normalized span [{start}, {end})")
        return self.to_raw[start], self.to_raw[end - 1] + 1


def normalize(raw_text: str) -> NormalizedText:
    out_chars: list[str] = []
    to_raw: list[int] = []
    pending_sep = -1  # raw index of the current separator run, -1 when none
    for i, c in enumerate(raw_text):
        folded = _FOLD.get(c) or c.lower()
        # lower() can expand one char to several; all inherit raw offset i
        for ch in folded:
            if ch.isalnum():
                if pending_sep >= 0 and out_chars:
                    out_chars.append(" ")
                    to_raw.append(pending_sep)
                pending_sep = -1
                out_chars.append(ch)
                to_raw.append(i)
            elif pending_sep < 0:
                pending_sep = i
    return NormalizedText(chars="".join(out_chars), to_raw=array("i", to_raw))
