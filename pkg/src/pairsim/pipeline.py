"""Reproducible runs: configuration, scoring dispatch, report and manifest output.

Both the CLI and the HTTP service are thin clients of the three runners
here (:func:`run_score`, :func:`run_eval`, :func:`run_errors`).  Identical
configuration and inputs produce byte-identical output files; nothing
written depends on time, environment, or worker count.
"""

from __future__ import annotations

import os
import zlib
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import partial
from pathlib import Path

from .errors import ConfigError, MissingEmbeddingError, ScoreMismatchError
from .evaluation import (
    MetricsReport,
    Misclassification,
    RocCurve,
    ScoredLabel,
    metrics_at,
    misclassifications,
    roc_curve,
    youden_threshold,
)
from .gestalt import gestalt_ratio
from .ingest import (
    DatasetSummary,
    LabeledPair,
    PAIR_FORMATS,
    ScoreRecord,
    load_embeddings,
    load_pairs,
    load_scores,
    write_manifest,
    write_scores,
)
from .normalize import NormalizationConfig, load_lemma_table, token_sort_normalize
from .report import errors_table, metrics_csv, metrics_table_text, roc_csv
from .vecsim import angular_similarity, cosine_similarity_score

__all__ = [
    "METHODS",
    "RunConfig",
    "ScoreRunResult",
    "EvalRunResult",
    "ErrorsRunResult",
    "score_pairs",
    "run_score",
    "run_eval",
    "run_errors",
    "replay_manifest",
]

METHODS = ("string-match", "embedding-angular", "embedding-cosine", "external-scores")

SCORES_FILENAME = "scores.tsv"
METRICS_TXT_FILENAME = "metrics.txt"
METRICS_CSV_FILENAME = "metrics.csv"
ROC_FILENAME = "roc.csv"
MANIFEST_FILENAME = "manifest.json"
ERRORS_FILENAME = "errors.txt"


@dataclass(frozen=True)
class RunConfig:
    """Everything a run needs; validated on construction."""

    dataset: str
    format: str = "qqp-tsv"
    method: str = "string-match"
    embeddings: str | None = None
    scores: str | None = None
    lemma_table: str | None = None
    lowercase: bool = True
    threshold_mode: str = "youden"
    threshold_value: float | None = None
    split: float | None = None
    out: str = "out"
    threads: int | None = None

    def __post_init__(self) -> None:
        if self.format not in PAIR_FORMATS:
            raise ConfigError(f"unknown format {self.format!r}; expected one of {PAIR_FORMATS}")
        if self.method not in METHODS:
            raise ConfigError(f"unknown method {self.method!r}; expected one of {METHODS}")
        if self.method in ("embedding-angular", "embedding-cosine") and not self.embeddings:
            raise ConfigError(f"method {self.method!r} requires --embeddings")
        if self.method == "external-scores" and not self.scores:
            raise ConfigError("method 'external-scores' requires --scores")
        if self.threshold_mode not in ("youden", "fixed"):
            raise ConfigError(f"unknown threshold mode {self.threshold_mode!r}")
        if self.threshold_mode == "fixed":
            if self.threshold_value is None or not 0.0 <= self.threshold_value <= 1.0:
                raise ConfigError("fixed threshold must be a value in [0, 1]")
        if self.split is not None and not 0.0 < self.split < 1.0:
            raise ConfigError("--split must be a fraction strictly between 0 and 1")
        if self.threads is not None and self.threads < 1:
            raise ConfigError("--threads must be at least 1")


@dataclass(frozen=True)
class ScoreRunResult:
    records: list[ScoreRecord]
    summary: DatasetSummary
    score_file: Path


@dataclass(frozen=True)
class EvalRunResult:
    report: MetricsReport
    curve: RocCurve
    summary: DatasetSummary
    files: dict[str, Path] = field(default_factory=dict)


@dataclass(frozen=True)
class ErrorsRunResult:
    mistakes: list[Misclassification]
    threshold: float
    report_file: Path


def _normalization(config: RunConfig) -> NormalizationConfig:
    if config.lemma_table:
        return NormalizationConfig(
            lowercase=config.lowercase,
            lemmatizer="table",
            lemma_table=load_lemma_table(config.lemma_table),
        )
    return NormalizationConfig(lowercase=config.lowercase, lemmatizer="rule")


def _score_string_rows(
    rows: list[tuple[str, str, str]], norm: NormalizationConfig
) -> list[tuple[str, float]]:
    scored = []
    for pair_id, text_a, text_b in rows:
        canonical_a = token_sort_normalize(text_a, norm)
        canonical_b = token_sort_normalize(text_b, norm)
        score = gestalt_ratio(canonical_a.text, canonical_b.text).as_similarity()
        scored.append((pair_id, score))
    return scored


def _chunks(rows: list, count: int) -> list[list]:
    size, extra = divmod(len(rows), count)
    out = []
    start = 0
    for index in range(count):
        stop = start + size + (1 if index < extra else 0)
        if stop > start:
            out.append(rows[start:stop])
        start = stop
    return out


def _string_match_scores(pairs: list[LabeledPair], config: RunConfig) -> list[ScoreRecord]:
    norm = _normalization(config)
    rows = [(pair.pair_id, pair.text_a, pair.text_b) for pair in pairs]
    workers = config.threads if config.threads is not None else (os.cpu_count() or 1)
    if workers > 1 and len(rows) > 1:
        # Per-pair scores are independent of chunking, so worker count can
        # never change the output.
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunked = pool.map(partial(_score_string_rows, norm=norm), _chunks(rows, workers))
            scored = [item for chunk in chunked for item in chunk]
    else:
        scored = _score_string_rows(rows, norm)
    return [ScoreRecord(pair_id, score) for pair_id, score in scored]


def _embedding_scores(pairs: list[LabeledPair], config: RunConfig) -> list[ScoreRecord]:
    assert config.embeddings is not None
    vectors = load_embeddings(config.embeddings)
    scorer = angular_similarity if config.method == "embedding-angular" else cosine_similarity_score
    records = []
    for pair in pairs:
        for text_id in (pair.id_a, pair.id_b):
            if text_id not in vectors:
                raise MissingEmbeddingError(
                    f"no embedding for text id {text_id!r} (pair {pair.pair_id!r})"
                )
        similarity = scorer(vectors[pair.id_a], vectors[pair.id_b])
        records.append(ScoreRecord(pair.pair_id, similarity.value))
    return records


def _external_scores(pairs: list[LabeledPair], config: RunConfig) -> list[ScoreRecord]:
    assert config.scores is not None
    records = load_scores(config.scores)
    dataset_ids = {pair.pair_id for pair in pairs}
    record_ids = {record.pair_id for record in records}
    missing = sorted(dataset_ids - record_ids)
    if missing:
        raise ScoreMismatchError(
            f"{len(missing)} dataset pair id(s) have no score, first: {missing[0]!r}"
        )
    extra = sorted(record_ids - dataset_ids)
    if extra:
        raise ScoreMismatchError(
            f"{len(extra)} scored pair id(s) not in the dataset, first: {extra[0]!r}"
        )
    return records


def score_pairs(pairs: list[LabeledPair], config: RunConfig) -> list[ScoreRecord]:
    """Score every pair with the configured method, ordered by pair id."""
    if config.method == "string-match":
        records = _string_match_scores(pairs, config)
    elif config.method in ("embedding-angular", "embedding-cosine"):
        records = _embedding_scores(pairs, config)
    else:
        records = _external_scores(pairs, config)
    return sorted(records, key=lambda record: record.pair_id)


def _unit_hash(pair_id: str) -> float:
    return (zlib.crc32(pair_id.encode("utf-8")) & 0xFFFFFFFF) / 2.0**32


def _split_scored(
    scored: list[ScoredLabel], split: float | None
) -> tuple[list[ScoredLabel], list[ScoredLabel]]:
    """Deterministic (selection, evaluation) partition; no split means in-sample."""
    if split is None:
        return scored, scored
    tune = [item for item in scored if _unit_hash(item.pair_id) < split]
    hold = [item for item in scored if _unit_hash(item.pair_id) >= split]
    return tune, hold


def _scored_labels(pairs: list[LabeledPair], records: list[ScoreRecord]) -> list[ScoredLabel]:
    label_by_id = {pair.pair_id: pair.label for pair in pairs}
    return [ScoredLabel(r.pair_id, r.score, label_by_id[r.pair_id]) for r in records]


def _select_threshold(
    config: RunConfig, tune: list[ScoredLabel]
) -> tuple[float, float | None]:
    if config.threshold_mode == "fixed":
        assert config.threshold_value is not None
        return config.threshold_value, None
    threshold, j = youden_threshold(roc_curve(tune))
    return threshold, j


def _out_dir(config: RunConfig) -> Path:
    out = Path(config.out)
    out.mkdir(parents=True, exist_ok=True)
    return out


def run_score(config: RunConfig) -> ScoreRunResult:
    """Score the dataset and write one ``pair_id<TAB>score`` line per pair."""
    pairs, summary = load_pairs(config.dataset, config.format)
    records = score_pairs(pairs, config)
    out = _out_dir(config)
    score_file = out / SCORES_FILENAME
    write_scores(records, str(score_file))
    return ScoreRunResult(records=records, summary=summary, score_file=score_file)


def _manifest(config: RunConfig, summary: DatasetSummary, report: MetricsReport) -> dict:
    # Worker count is deliberately absent: it cannot affect any output.
    manifest = {
        "tool": {"name": "pairsim", "version": _version()},
        "dataset": {
            "path": config.dataset,
            "format": config.format,
            "summary": {
                "total": summary.total,
                "positives": summary.positives,
                "negatives": summary.negatives,
                "removed": summary.removed,
            },
        },
        "method": config.method,
        "inputs": {
            "embeddings": config.embeddings,
            "scores": config.scores,
            "lemma_table": config.lemma_table,
        },
        "normalization": (
            {
                "lowercase": config.lowercase,
                "lemmatizer": "table" if config.lemma_table else "rule",
            }
            if config.method == "string-match"
            else None
        ),
        "threshold": {
            "mode": config.threshold_mode,
            "value": report.threshold,
        },
        "split": config.split,
        "metrics": {
            "accuracy": report.accuracy,
            "sensitivity": report.sensitivity,
            "specificity": report.specificity,
            "auc": report.auc,
            "precision": report.precision,
            "f_score": report.f_score,
            "tp": report.tp,
            "fp": report.fp,
            "tn": report.tn,
            "fn": report.fn,
            "degenerate_precision": report.degenerate_precision,
        },
        "outputs": {
            "metrics_txt": METRICS_TXT_FILENAME,
            "metrics_csv": METRICS_CSV_FILENAME,
            "roc_csv": ROC_FILENAME,
            "manifest": MANIFEST_FILENAME,
        },
    }
    return manifest


def _version() -> str:
    from pairsim import __version__

    return __version__


def run_eval(config: RunConfig) -> EvalRunResult:
    """Evaluate the dataset: metrics tables, ROC points file and run manifest."""
    pairs, summary = load_pairs(config.dataset, config.format)
    records = score_pairs(pairs, config)
    scored = _scored_labels(pairs, records)
    tune, hold = _split_scored(scored, config.split)
    threshold, _ = _select_threshold(config, tune)
    report = metrics_at(hold, threshold)
    curve = roc_curve(hold)

    out = _out_dir(config)
    files = {
        "metrics_txt": out / METRICS_TXT_FILENAME,
        "metrics_csv": out / METRICS_CSV_FILENAME,
        "roc_csv": out / ROC_FILENAME,
        "manifest": out / MANIFEST_FILENAME,
    }
    files["metrics_txt"].write_text(metrics_table_text(report, config.method), encoding="utf-8")
    files["metrics_csv"].write_text(metrics_csv(report, config.method), encoding="utf-8")
    files["roc_csv"].write_text(roc_csv(curve), encoding="utf-8")
    write_manifest(_manifest(config, summary, report), str(files["manifest"]))
    return EvalRunResult(report=report, curve=curve, summary=summary, files=files)


def run_errors(config: RunConfig, limit: int) -> ErrorsRunResult:
    """Write up to ``limit`` misclassified pairs, most confident mistakes first."""
    pairs, _ = load_pairs(config.dataset, config.format)
    records = score_pairs(pairs, config)
    scored = _scored_labels(pairs, records)
    tune, hold = _split_scored(scored, config.split)
    threshold, _ = _select_threshold(config, tune)
    pair_lookup = {pair.pair_id: pair for pair in pairs}
    mistakes = misclassifications(hold, pair_lookup, threshold)

    out = _out_dir(config)
    report_file = out / ERRORS_FILENAME
    report_file.write_text(errors_table(mistakes, limit), encoding="utf-8")
    return ErrorsRunResult(mistakes=mistakes[: max(limit, 0)], threshold=threshold, report_file=report_file)


def replay_manifest(manifest: dict, out: str) -> RunConfig:
    """Rebuild the configuration a manifest records, targeting a new out dir."""
    threshold = manifest["threshold"]
    return RunConfig(
        dataset=manifest["dataset"]["path"],
        format=manifest["dataset"]["format"],
        method=manifest["method"],
        embeddings=manifest["inputs"]["embeddings"],
        scores=manifest["inputs"]["scores"],
        lemma_table=manifest["inputs"]["lemma_table"],
        lowercase=(manifest["normalization"] or {}).get("lowercase", True),
        threshold_mode=threshold["mode"],
        threshold_value=threshold["value"] if threshold["mode"] == "fixed" else None,
        split=manifest["split"],
        out=out,
    )
