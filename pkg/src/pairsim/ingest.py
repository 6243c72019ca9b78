"""Loaders and writers for datasets, embeddings, score files and manifests.

All file formats are line-oriented UTF-8 text: diff-able fixtures and
language-portable parsing matter more than compactness at this scale.

Formats
-------
* pairs, ``qqp-tsv``: tab-separated with header
  ``id qid1 qid2 question1 question2 is_duplicate``.
* pairs, ``generic-csv``: comma-separated with header
  ``pair_id,text_a,text_b,label``.
* embeddings: ``id<TAB>v1,v2,...,vn`` per line, decimal floats,
  ``#`` comment lines skipped.
* scores: ``pair_id<TAB>score`` per line, score in [0, 1].
* run manifest: a single JSON document with sorted keys.
"""

from __future__ import annotations

import csv
import json
import math
from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import (
    DatasetReadError,
    EmbeddingFileError,
    HeaderError,
    ScoreFileError,
    UnknownFormatError,
)
from .vecsim import EmbeddingVector

__all__ = [
    "LabeledPair",
    "DatasetSummary",
    "ScoreRecord",
    "PAIR_FORMATS",
    "load_pairs",
    "load_embeddings",
    "load_scores",
    "write_embeddings",
    "write_scores",
    "write_manifest",
    "read_manifest",
]

PAIR_FORMATS = ("qqp-tsv", "generic-csv")

_QQP_HEADER = ["id", "qid1", "qid2", "question1", "question2", "is_duplicate"]
_GENERIC_HEADER = ["pair_id", "text_a", "text_b", "label"]


@dataclass(frozen=True)
class LabeledPair:
    """Two raw texts with a binary equivalence label and stable identifiers.

    ``id_a``/``id_b`` identify the individual texts and key the embedding
    lookup: the question ids for ``qqp-tsv``, ``<pair_id>:a``/``<pair_id>:b``
    for ``generic-csv``.
    """

    pair_id: str
    text_a: str
    text_b: str
    label: int
    id_a: str
    id_b: str

    def __post_init__(self) -> None:
        if self.label not in (0, 1):
            raise ValueError(f"label must be 0 or 1, got {self.label!r}")


@dataclass(frozen=True)
class DatasetSummary:
    """Post-cleaning row counts for a loaded pair dataset."""

    total: int
    positives: int
    negatives: int
    removed: int

    def __post_init__(self) -> None:
        if min(self.total, self.positives, self.negatives, self.removed) < 0:
            raise ValueError("counts must be non-negative")
        if self.positives + self.negatives != self.total:
            raise ValueError("positives + negatives must equal total")


@dataclass(frozen=True)
class ScoreRecord:
    """A similarity score in [0, 1] attached to a pair id."""

    pair_id: str
    score: float

    def __post_init__(self) -> None:
        if not 0.0 <= self.score <= 1.0:
            raise ValueError(f"score {self.score!r} outside [0, 1]")


def _read_rows(path: str, delimiter: str) -> list[list[str]]:
    try:
        with open(path, encoding="utf-8", newline="") as handle:
            return list(csv.reader(handle, delimiter=delimiter))
    except OSError as exc:
        raise DatasetReadError(f"cannot read dataset {path!r}: {exc}") from exc
    except UnicodeDecodeError as exc:
        raise DatasetReadError(f"dataset {path!r} is not valid UTF-8: {exc}") from exc


def _check_header(path: str, rows: list[list[str]], expected: list[str]) -> None:
    if not rows:
        raise HeaderError(f"{path!r} is empty; expected header {expected}")
    got = [cell.strip() for cell in rows[0]]
    if got != expected:
        raise HeaderError(f"{path!r} header mismatch: expected {expected}, got {got}")


def load_pairs(path: str, format: str = "qqp-tsv") -> tuple[list[LabeledPair], DatasetSummary]:
    """Load a labeled pair dataset, dropping and counting unusable rows.

    A row is removed (never fatal) when it has the wrong number of
    columns, an empty text on either side, or a label other than 0/1.
    The summary reflects post-cleaning counts.
    """
    if format not in PAIR_FORMATS:
        raise UnknownFormatError(f"unknown pair format {format!r}; expected one of {PAIR_FORMATS}")

    if format == "qqp-tsv":
        rows = _read_rows(path, "\t")
        _check_header(path, rows, _QQP_HEADER)
    else:
        rows = _read_rows(path, ",")
        _check_header(path, rows, _GENERIC_HEADER)

    pairs: list[LabeledPair] = []
    removed = 0
    positives = 0
    for row in rows[1:]:
        if format == "qqp-tsv":
            if len(row) != 6:
                removed += 1
                continue
            pair_id, id_a, id_b, text_a, text_b, raw_label = (cell.strip() for cell in row)
        else:
            if len(row) != 4:
                removed += 1
                continue
            pair_id, text_a, text_b, raw_label = (cell.strip() for cell in row)
            id_a, id_b = f"{pair_id}:a", f"{pair_id}:b"
        if not pair_id or not text_a or not text_b or raw_label not in ("0", "1"):
            removed += 1
            continue
        label = int(raw_label)
        positives += label
        pairs.append(LabeledPair(pair_id, text_a, text_b, label, id_a, id_b))

    summary = DatasetSummary(
        total=len(pairs),
        positives=positives,
        negatives=len(pairs) - positives,
        removed=removed,
    )
    return pairs, summary


def _data_lines(path: str) -> Iterable[tuple[int, str]]:
    try:
        with open(path, encoding="utf-8") as handle:
            for line_no, raw in enumerate(handle, start=1):
                line = raw.rstrip("\n").rstrip("\r")
                if not line.strip() or line.startswith("#"):
                    continue
                yield line_no, line
    except OSError as exc:
        raise DatasetReadError(f"cannot read {path!r}: {exc}") from exc


def load_embeddings(path: str) -> dict[str, EmbeddingVector]:
    """Load an embedding file into an id -> vector map.

    All vectors must share one dimension; duplicate ids, non-finite or
    unparseable components raise with the offending line number.  An empty
    file is a valid empty map.
    """
    vectors: dict[str, EmbeddingVector] = {}
    expected_dim: int | None = None
    for line_no, line in _data_lines(path):
        parts = line.split("\t")
        if len(parts) != 2 or not parts[0]:
            raise EmbeddingFileError(str(path), line_no, "expected id<TAB>v1,v2,...,vn")
        text_id, payload = parts
        if text_id in vectors:
            raise EmbeddingFileError(str(path), line_no, f"duplicate id {text_id!r}")
        try:
            components = [float(cell) for cell in payload.split(",")]
        except ValueError:
            raise EmbeddingFileError(str(path), line_no, "unparseable component") from None
        if any(not math.isfinite(value) for value in components):
            raise EmbeddingFileError(str(path), line_no, "non-finite component")
        if expected_dim is None:
            expected_dim = len(components)
        elif len(components) != expected_dim:
            raise EmbeddingFileError(
                str(path),
                line_no,
                f"dimension drift: got {len(components)}, expected {expected_dim}",
            )
        vectors[text_id] = EmbeddingVector(text_id, components)  # type: ignore[arg-type]
    return vectors


def load_scores(path: str) -> list[ScoreRecord]:
    """Load a score file; scores outside [0, 1] and duplicate ids are rejected."""
    records: list[ScoreRecord] = []
    seen: set[str] = set()
    for line_no, line in _data_lines(path):
        parts = line.split("\t")
        if len(parts) != 2 or not parts[0]:
            raise ScoreFileError(str(path), line_no, "expected pair_id<TAB>score")
        pair_id, payload = parts
        if pair_id in seen:
            raise ScoreFileError(str(path), line_no, f"duplicate pair id {pair_id!r}")
        try:
            score = float(payload)
        except ValueError:
            raise ScoreFileError(str(path), line_no, "unparseable score") from None
        if not math.isfinite(score) or not 0.0 <= score <= 1.0:
            raise ScoreFileError(str(path), line_no, f"score out of range [0, 1]: {payload}")
        seen.add(pair_id)
        records.append(ScoreRecord(pair_id, score))
    return records


def write_embeddings(vectors: Mapping[str, EmbeddingVector], path: str) -> None:
    """Write an embedding map in the wire format, sorted by id.

    Components are printed with ``repr`` so a parse-print-parse cycle is
    bit-exact.
    """
    with open(path, "w", encoding="utf-8") as handle:
        for text_id in sorted(vectors):
            payload = ",".join(repr(v) for v in vectors[text_id].values.tolist())
            handle.write(f"{text_id}\t{payload}\n")


def write_scores(records: Iterable[ScoreRecord], path: str) -> None:
    """Write score records in the wire format, in the given order."""
    with open(path, "w", encoding="utf-8") as handle:
        for record in records:
            handle.write(f"{record.pair_id}\t{record.score!r}\n")


def write_manifest(manifest: dict, path: str) -> None:
    """Persist a run manifest as deterministic JSON (sorted keys)."""
    with open(path, "w", encoding="utf-8") as handle:
        json.dump(manifest, handle, indent=2, sort_keys=True)
        handle.write("\n")


def read_manifest(path: str) -> dict:
    with open(path, encoding="utf-8") as handle:
        return json.load(handle)
