"""Pydantic request/response models for the HTTP service."""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, Field


class TextPairRequest(BaseModel):
    text_a: str
    text_b: str
    normalize: bool = True
    lowercase: bool = True
    lemmatizer: Literal["identity", "rule"] = "rule"


class SimilarityResponse(BaseModel):
    score: float = Field(ge=0.0, le=1.0)
    scorer: str


class VectorPairRequest(BaseModel):
    values_a: list[float]
    values_b: list[float]
    metric: Literal["angular", "cosine"] = "angular"


class NormalizeRequest(BaseModel):
    text: str
    lowercase: bool = True
    lemmatizer: Literal["identity", "rule"] = "rule"


class NormalizeResponse(BaseModel):
    text: str
    tokens: list[str]


class RunRequest(BaseModel):
    """Mirror of the pipeline RunConfig; paths are server-local."""

    dataset: str
    format: Literal["qqp-tsv", "generic-csv"] = "qqp-tsv"
    method: Literal[
        "string-match", "embedding-angular", "embedding-cosine", "external-scores"
    ] = "string-match"
    embeddings: Optional[str] = None
    scores: Optional[str] = None
    lemma_table: Optional[str] = None
    lowercase: bool = True
    threshold: str = "youden"
    split: Optional[float] = None
    out: str = "out"
    threads: Optional[int] = None


class DatasetSummaryModel(BaseModel):
    total: int
    positives: int
    negatives: int
    removed: int


class ScoreRunResponse(BaseModel):
    summary: DatasetSummaryModel
    score_file: str


class MetricsModel(BaseModel):
    accuracy: float
    sensitivity: float
    specificity: float
    auc: float
    precision: float
    f_score: float
    threshold: float
    tp: int
    fp: int
    tn: int
    fn: int
    degenerate_precision: bool


class EvalRunResponse(BaseModel):
    summary: DatasetSummaryModel
    metrics: MetricsModel
    files: dict[str, str]


class ErrorsRunRequest(RunRequest):
    limit: int = 20


class MisclassificationModel(BaseModel):
    pair_id: str
    text_a: str
    text_b: str
    true_label: int
    predicted_label: int
    score: float


class ErrorsRunResponse(BaseModel):
    threshold: float
    mistakes: list[MisclassificationModel]
    report_file: str


class HealthResponse(BaseModel):
    status: str
    version: str
