"""Shared fixture helpers for building corpus directories on disk."""

from __future__ import annotations

from pathlib import Path

META_HEADER = "doc_id\tyear\tauthor\ttitle\tcollection"


def build_corpus_dir(
    root: Path,
    rows: list[tuple],
    texts: dict[str, str],
    annotations: dict[str, list[tuple[int, int]]] | None = None,
    pagemaps: dict[str, list[tuple]] | None = None,
) -> Path:
    """Write a corpus tree. rows are (doc_id, year, author, title, collection)."""
    root.mkdir(parents=True, exist_ok=True)
    lines = [META_HEADER]
    for row in rows:
        lines.append("\t".join(str(v) for v in row))
    (root / "metadata.tsv").write_text("\n".join(lines) + "\n", encoding="utf-8")

    (root / "texts").mkdir(exist_ok=True)
    for doc_id, text in texts.items():
        (root / "texts" / f"{doc_id}.txt").write_text(text, encoding="utf-8")

    if annotations:
        (root / "annotations").mkdir(exist_ok=True)
        for doc_id, ins in annotations.items():
            lines = ["raw_position\tinserted_length"]
            lines += [f"{p}\t{n}" for p, n in ins]
            (root / "annotations" / f"{doc_id}.tsv").write_text(
                "\n".join(lines) + "\n", encoding="utf-8"
            )

    if pagemaps:
        (root / "pagemaps").mkdir(exist_ok=True)
        for doc_id, tokens in pagemaps.items():
            lines = ["char_start\tchar_end\tpage\tx\ty\tw\th"]
            lines += ["\t".join(str(v) for v in tok) for tok in tokens]
            (root / "pagemaps" / f"{doc_id}.tsv").write_text(
                "\n".join(lines) + "\n", encoding="utf-8"
            )
    return root
