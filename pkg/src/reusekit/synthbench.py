"""Synthetic corpus generation with planted reuse, plus a detection evaluator.

Real historical corpora are licensed, so regression testing runs against
generated ones: background text sampled from a character 3-gram model of a
bundled public-domain-style source, with passages planted into multiple
documents and corrupted by an OCR-like noise channel.  Ground truth is
written alongside (truth.tsv + manifest.json) and the evaluator scores a
detector's edges against it by span IoU.
"""

from __future__ import annotations

import hashlib
import json
import logging
import random
import re
import sys
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

from .edges import Edge
from .errors import GenerationError

logger = logging.getLogger(__name__)

YEAR_LO, YEAR_HI = 1650, 1800
PAGE_CHARS = 1800

# Invented names only; enough collisions across a corpus to exercise
# same-author exclusion.
_SURNAMES = [
    "Ashworth", "Bellamy", "Crowther", "Dunmore", "Everley", "Fairburn",
    "Garside", "Hollings", "Ingleby", "Kestrel", "Loxley", "Marwood",
    "Netherby", "Oakden", "Pemberton", "Quillfeather", "Ravenscroft",
    "Stanhope", "Thistlewood", "Underhill", "Varley", "Wexford",
]
_FORENAMES = [
    "Abel", "Barnaby", "Constance", "Dorothea", "Edmund", "Felicity",
    "Gideon", "Henrietta", "Isaac", "Jemima", "Lucas", "Margaret",
    "Nathaniel", "Octavia", "Phineas", "Rosamund",
]


def _default_source_text() -> str:
    return resources.files("reusekit.data").joinpath("seed_text.txt").read_text("utf-8")


# ---------------------------------------------------------------------------
# Generation spec
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GenSpec:
    num_docs: int
    doc_length_range: tuple[int, int]
    num_plants: int
    plant_length_range: tuple[int, int]
    noise_rate: float
    seed: int
    clique_specs: list[tuple[int, int]] = field(default_factory=list)
    source_text: str | None = None  # path; None uses the bundled text

    def __post_init__(self):
        lo, hi = self.doc_length_range
        plo, phi = self.plant_length_range
        if self.num_docs < 1:
            raise ValueError("num_docs must be >= 1")
        if not (0 < lo <= hi):
            raise ValueError(f"bad doc_length_range {self.doc_length_range}")
        if self.num_plants < 0:
            raise ValueError("num_plants must be >= 0")
        if not (0 < plo <= phi):
            raise ValueError(f"bad plant_length_range {self.plant_length_range}")
        if not 0.0 <= self.noise_rate < 1.0:
            raise ValueError("noise_rate must be in [0, 1)")
        # Worst-case insertion growth still has to fit inside the smallest doc.
        if int(phi * (1.0 + self.noise_rate)) + 1 > lo:
            raise ValueError("plants cannot fit within the smallest document")
        for size, length in self.clique_specs:
            if size < 2:
                raise ValueError("clique size must be >= 2")
            if size > self.num_docs:
                raise ValueError("clique size exceeds num_docs")
            if int(length * (1.0 + self.noise_rate)) + 1 > lo:
                raise ValueError("clique passage cannot fit within the smallest document")

    @classmethod
    def from_toml(cls, path: str | Path) -> GenSpec:
        with open(path, "rb") as fh:
            raw = tomllib.load(fh)
        try:
            return cls(
                num_docs=raw["num_docs"],
                doc_length_range=tuple(raw["doc_length_range"]),
                num_plants=raw["num_plants"],
                plant_length_range=tuple(raw["plant_length_range"]),
                noise_rate=raw["noise_rate"],
                seed=raw["seed"],
                clique_specs=[tuple(c) for c in raw.get("clique_specs", [])],
                source_text=raw.get("source_text"),
            )
        except KeyError as exc:
            raise GenerationError(f"{path}: missing spec key {exc}") from None
        except ValueError as exc:
            raise GenerationError(f"{path}: {exc}") from None


# ---------------------------------------------------------------------------
# Language model and noise channel
# ---------------------------------------------------------------------------

class TrigramModel:
    """Character 3-gram chain: 2-char context -> observed continuations."""

    def __init__(self, source: str):
        src = " ".join(source.split())
        if len(src) < 500:
            raise GenerationError("source text too short for a 3-gram model")
        table: dict[str, list[str]] = {}
        for i in range(len(src) - 2):
            table.setdefault(src[i : i + 2], []).append(src[i + 2])
        self._table = {ctx: "".join(nxt) for ctx, nxt in table.items()}
        self._contexts = list(self._table)

    def generate(self, length: int, rng: random.Random) -> str:
        if length <= 0:
            return ""
        contexts = self._contexts
        table = self._table
        out = list(contexts[rng.randrange(len(contexts))])
        while len(out) < length:
            nxt = table.get(out[-2] + out[-1])
            if not nxt:
                ctx = contexts[rng.randrange(len(contexts))]
                out.extend(ctx)
                continue
            out.append(nxt[rng.randrange(len(nxt))])
        return "".join(out[:length])


_ALPHABET = "abcdefghijklmnopqrstuvwxyz"
# OCR-style confusions: long-s misread as f, e as c; rn smudged into m.
_CONFUSION = {"s": "f", "f": "s", "e": "c", "c": "e"}


def corrupt(text: str, rate: float, rng: random.Random) -> str:
    """Noise channel: substitutions (weighted to confusions), insertions,
    deletions, firing per character at the given total rate."""
    if rate <= 0.0:
        return text
    out: list[str] = []
    i = 0
    n = len(text)
    while i < n:
        c = text[i]
        if rng.random() >= rate:
            out.append(c)
            i += 1
            continue
        op = rng.random()
        if op < 0.70:
            if c == "r" and i + 1 < n and text[i + 1] == "n" and rng.random() < 0.5:
                out.append("m")
                i += 2
                continue
            partner = _CONFUSION.get(c)
            if partner is not None and rng.random() < 0.6:
                out.append(partner)
            else:
                out.append(rng.choice(_ALPHABET))
            i += 1
        elif op < 0.85:
            out.append(c)
            out.append(rng.choice(_ALPHABET))
            i += 1
        else:
            i += 1
    return "".join(out)


# ---------------------------------------------------------------------------
# Ground truth
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Placement:
    doc_id: str
    start: int
    end: int


@dataclass
class Plant:
    plant_id: str
    text_hash: str  # sha256 of the clean (pre-noise) passage text
    placements: list[Placement]
    clique: bool = False


@dataclass
class GroundTruth:
    plants: list[Plant]
    doc_ids: set[str] | None = None  # known full corpus when available

    def pairs(self) -> list[tuple[str, Placement, Placement]]:
        """All unordered placement pairs of each plant: the recall targets."""
        out = []
        for plant in self.plants:
            ps = plant.placements
            for i in range(len(ps)):
                for j in range(i + 1, len(ps)):
                    out.append((plant.plant_id, ps[i], ps[j]))
        return out


def load_ground_truth(truth_path: str | Path) -> GroundTruth:
    """Read truth.tsv; picks up doc ids from manifest.json when adjacent."""
    truth_path = Path(truth_path)
    lines = truth_path.read_text(encoding="utf-8").splitlines()
    header = "plant_id\tdoc_id\tstart\tend"
    if not lines or lines[0] != header:
        raise GenerationError(f"{truth_path}: expected header {header!r}")
    by_plant: dict[str, list[Placement]] = {}
    for lineno, line in enumerate(lines[1:], start=2):
        if not line:
            continue
        fields = line.split("\t")
        if len(fields) != 4:
            raise GenerationError(f"{truth_path}:{lineno}: expected 4 fields")
        plant_id, doc_id, start, end = fields
        by_plant.setdefault(plant_id, []).append(Placement(doc_id, int(start), int(end)))
    plants = [Plant(pid, "", places) for pid, places in by_plant.items()]

    doc_ids = None
    manifest_path = truth_path.parent / "manifest.json"
    if manifest_path.is_file():
        manifest = json.loads(manifest_path.read_text(encoding="utf-8"))
        doc_ids = {d["doc_id"] for d in manifest["documents"]}
    return GroundTruth(plants=plants, doc_ids=doc_ids)


# ---------------------------------------------------------------------------
# Corpus generation
# ---------------------------------------------------------------------------

def _place_slot(
    rng: random.Random, doc_len: int, span_len: int, occupied: list[tuple[int, int]]
) -> int:
    """Random start for a span avoiding occupied intervals; 1000 retries."""
    if span_len > doc_len:
        raise GenerationError(f"span of {span_len} cannot fit in doc of {doc_len}")
    for _ in range(1000):
        start = rng.randrange(0, doc_len - span_len + 1)
        end = start + span_len
        if all(end <= s or start >= e for s, e in occupied):
            return start
    raise GenerationError("could not place plant without overlap after 1000 retries")


def _fabricated_page_rows(text: str) -> list[str]:
    """Token page-map rows at PAGE_CHARS chars per page with invented boxes."""
    rows = []
    per_page_idx = 0
    prev_page = 0
    for m in re.finditer(r"\S+", text):
        page = 1 + m.start() // PAGE_CHARS
        if page != prev_page:
            per_page_idx = 0
            prev_page = page
        x = 60 + (per_page_idx % 8) * 110
        y = 80 + (per_page_idx // 8) * 28
        rows.append(f"{m.start()}\t{m.end()}\t{page}\t{x}\t{y}\t100\t22")
        per_page_idx += 1
    return rows


def generate(spec: GenSpec, out_dir: str | Path) -> GroundTruth:
    """Write a corpus directory plus truth.tsv and manifest.json.

    Deterministic: a fixed spec (seed included) produces byte-identical
    output trees.
    """
    rng = random.Random(spec.seed)
    out = Path(out_dir)
    (out / "texts").mkdir(parents=True, exist_ok=True)
    (out / "pagemaps").mkdir(exist_ok=True)

    source = (
        Path(spec.source_text).read_text(encoding="utf-8")
        if spec.source_text
        else _default_source_text()
    )
    model = TrigramModel(source)

    # documents: ids, years, authors, lengths, background text
    n = spec.num_docs
    doc_ids = [f"d{i:04d}" for i in range(n)]
    years = {d: rng.randint(YEAR_LO, YEAR_HI) for d in doc_ids}
    author_pool = [
        f"{rng.choice(_SURNAMES)}, {rng.choice(_FORENAMES)}"
        for _ in range(max(2, n // 3))
    ]
    authors = {d: rng.choice(author_pool) for d in doc_ids}
    lengths = {d: rng.randint(*spec.doc_length_range) for d in doc_ids}
    titles = {}
    for d in doc_ids:
        words = model.generate(rng.randint(25, 60), rng).split()
        titles[d] = " ".join(w.capitalize() for w in words[1:-1] or ["Untitled"])

    texts = {d: list(model.generate(lengths[d], rng)) for d in doc_ids}
    occupied: dict[str, list[tuple[int, int]]] = {d: [] for d in doc_ids}

    def has_room(doc_id: str, length: int) -> bool:
        """True when some free gap fits the span with 2x headroom.

        Rejection sampling fails against fragmentation, not just fullness, so
        eligibility looks at the largest contiguous gap rather than the free
        total; the headroom keeps per-draw success probability high.
        """
        bound = 2 * (int(length * (1.0 + spec.noise_rate)) + 1)
        prev_end = 0
        for s, e in sorted(occupied[doc_id]):
            if s - prev_end >= bound:
                return True
            prev_end = max(prev_end, e)
        return lengths[doc_id] - prev_end >= bound

    def plant_into(plant_id: str, passage: str, targets: list[str], clique: bool) -> Plant:
        placements = []
        for doc_id in targets:
            noisy = corrupt(passage, spec.noise_rate, rng)
            start = _place_slot(rng, lengths[doc_id], len(noisy), occupied[doc_id])
            end = start + len(noisy)
            texts[doc_id][start:end] = noisy
            occupied[doc_id].append((start, end))
            placements.append(Placement(doc_id, start, end))
        digest = hashlib.sha256(passage.encode("utf-8")).hexdigest()
        return Plant(plant_id, digest, placements, clique)

    plants: list[Plant] = []
    for p in range(spec.num_plants):
        length = rng.randint(*spec.plant_length_range)
        passage = model.generate(length, rng)
        eligible = [d for d in doc_ids if has_room(d, length)]
        if len(eligible) < 2:
            raise GenerationError(f"no two documents can hold a plant of {length} chars")
        targets = rng.sample(eligible, 2)
        plants.append(plant_into(f"p{p:04d}", passage, targets, clique=False))

    for c, (size, length) in enumerate(spec.clique_specs):
        passage = model.generate(length, rng)
        shuffled = doc_ids[:]
        rng.shuffle(shuffled)
        targets: list[str] = []
        seen_years: set[int] = set()
        for d in shuffled:
            if years[d] in seen_years or not has_room(d, length):
                continue
            targets.append(d)
            seen_years.add(years[d])
            if len(targets) == size:
                break
        if len(targets) < size:
            raise GenerationError(
                f"cannot pick {size} distinct-year documents for clique {c}"
            )
        plants.append(plant_into(f"c{c:04d}", passage, targets, clique=True))

    # write the corpus tree
    meta_rows = ["doc_id\tyear\tauthor\ttitle\tcollection"]
    for d in doc_ids:
        meta_rows.append(f"{d}\t{years[d]}\t{authors[d]}\t{titles[d]}\tsynthetic")
        final = "".join(texts[d])
        (out / "texts" / f"{d}.txt").write_text(final, encoding="utf-8")
        page_rows = ["char_start\tchar_end\tpage\tx\ty\tw\th"] + _fabricated_page_rows(final)
        (out / "pagemaps" / f"{d}.tsv").write_text("\n".join(page_rows) + "\n", "utf-8")
    (out / "metadata.tsv").write_text("\n".join(meta_rows) + "\n", encoding="utf-8")

    truth_rows = ["plant_id\tdoc_id\tstart\tend"]
    for plant in plants:
        for pl in plant.placements:
            truth_rows.append(f"{plant.plant_id}\t{pl.doc_id}\t{pl.start}\t{pl.end}")
    (out / "truth.tsv").write_text("\n".join(truth_rows) + "\n", encoding="utf-8")

    manifest = {
        "spec": {
            "num_docs": spec.num_docs,
            "doc_length_range": list(spec.doc_length_range),
            "num_plants": spec.num_plants,
            "plant_length_range": list(spec.plant_length_range),
            "noise_rate": spec.noise_rate,
            "seed": spec.seed,
            "clique_specs": [list(c) for c in spec.clique_specs],
        },
        "documents": [
            {"doc_id": d, "year": years[d], "author": authors[d], "chars": lengths[d]}
            for d in doc_ids
        ],
        "plants": [
            {
                "plant_id": plant.plant_id,
                "sha256": plant.text_hash,
                "clique": plant.clique,
                "placements": [
                    {"doc_id": pl.doc_id, "start": pl.start, "end": pl.end}
                    for pl in plant.placements
                ],
            }
            for plant in plants
        ],
    }
    (out / "manifest.json").write_text(json.dumps(manifest, indent=2) + "\n", "utf-8")

    logger.info(
        "generated %d docs, %d plants (%d clique) into %s",
        n, len(plants), sum(p.clique for p in plants), out,
    )
    return GroundTruth(plants=plants, doc_ids=set(doc_ids))


# ---------------------------------------------------------------------------
# Evaluation
# ---------------------------------------------------------------------------

@dataclass
class EvalReport:
    recall: float
    precision: float
    recalled_pairs: int
    total_pairs: int
    true_positive_edges: int
    total_edges: int
    zero_edges: bool
    per_plant: dict[str, tuple[int, int]]  # plant_id -> (recalled, total)

    def summary(self) -> str:
        lines = [
            f"pairs recalled: {self.recalled_pairs}/{self.total_pairs}"
            f" (recall {self.recall:.4f})",
            f"true-positive edges: {self.true_positive_edges}/{self.total_edges}"
            f" (precision {self.precision:.4f})",
        ]
        if self.zero_edges:
            lines.append("note: no edges supplied; precision reported as 1.0 by convention")
        return "\n".join(lines)


def _iou(a_start: int, a_end: int, b_start: int, b_end: int) -> float:
    inter = min(a_end, b_end) - max(a_start, b_start)
    if inter <= 0:
        return 0.0
    union = max(a_end, b_end) - min(a_start, b_start)
    return inter / union


def evaluate(edges: list[Edge], truth: GroundTruth, iou_threshold: float = 0.5) -> EvalReport:
    """Score edges against planted ground truth.

    A truth pair is recalled when some edge matches both its placements with
    per-side IoU >= threshold; an edge is a true positive when it matches
    some truth pair.  Several edges may match one pair: the pair counts once
    for recall, each edge is judged separately for precision.
    """
    if truth.doc_ids is not None:
        for edge in edges:
            for doc_id in (edge.t1_id, edge.t2_id):
                if doc_id not in truth.doc_ids:
                    raise GenerationError(f"edge references unknown doc {doc_id!r}")

    pairs = truth.pairs()
    by_docs: dict[tuple[str, str], list[int]] = {}
    for idx, (_pid, a, b) in enumerate(pairs):
        key = (a.doc_id, b.doc_id) if a.doc_id < b.doc_id else (b.doc_id, a.doc_id)
        by_docs.setdefault(key, []).append(idx)

    pair_hit = [False] * len(pairs)
    tp_edges = 0
    for edge in edges:
        matched = False
        for idx in by_docs.get((edge.t1_id, edge.t2_id), []):
            _pid, a, b = pairs[idx]
            if a.doc_id != edge.t1_id:
                a, b = b, a
            if (
                _iou(edge.t1_start, edge.t1_end, a.start, a.end) >= iou_threshold
                and _iou(edge.t2_start, edge.t2_end, b.start, b.end) >= iou_threshold
            ):
                pair_hit[idx] = True
                matched = True
        if matched:
            tp_edges += 1

    per_plant: dict[str, list[int]] = {}
    for idx, (pid, _a, _b) in enumerate(pairs):
        bucket = per_plant.setdefault(pid, [0, 0])
        bucket[1] += 1
        if pair_hit[idx]:
            bucket[0] += 1

    recalled = sum(pair_hit)
    zero_edges = not edges
    return EvalReport(
        recall=recalled / len(pairs) if pairs else 1.0,
        precision=1.0 if zero_edges else tp_edges / len(edges),
        recalled_pairs=recalled,
        total_pairs=len(pairs),
        true_positive_edges=tp_edges,
        total_edges=len(edges),
        zero_edges=zero_edges,
        per_plant={pid: (hit, total) for pid, (hit, total) in per_plant.items()},
    )
