"""FastAPI application wrapping the core pipeline.

Every endpoint is a thin adapter: pydantic models in, the same runner
functions the CLI uses underneath.  Package errors map to 400 responses
(409 for single-class data, mirroring the CLI's exit code 2).
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from ..errors import PairsimError, SingleClassError
from ..evaluation import MetricsReport
from ..gestalt import gestalt_ratio
from ..ingest import DatasetSummary
from ..normalize import NormalizationConfig, token_sort_normalize
from ..pipeline import RunConfig, run_errors, run_eval, run_score
from ..vecsim import EmbeddingVector, angular_similarity, cosine_similarity_score
from .schemas import (
    ErrorsRunRequest,
    ErrorsRunResponse,
    EvalRunResponse,
    DatasetSummaryModel,
    HealthResponse,
    MetricsModel,
    MisclassificationModel,
    NormalizeRequest,
    NormalizeResponse,
    RunRequest,
    ScoreRunResponse,
    SimilarityResponse,
    TextPairRequest,
    VectorPairRequest,
)

__all__ = ["create_app"]


def _config(request: RunRequest) -> RunConfig:
    threshold_mode = "youden"
    threshold_value = None
    if request.threshold != "youden":
        try:
            threshold_value = float(request.threshold)
        except ValueError:
            raise PairsimError(
                f"threshold must be 'youden' or a number, got {request.threshold!r}"
            ) from None
        threshold_mode = "fixed"
    return RunConfig(
        dataset=request.dataset,
        format=request.format,
        method=request.method,
        embeddings=request.embeddings,
        scores=request.scores,
        lemma_table=request.lemma_table,
        lowercase=request.lowercase,
        threshold_mode=threshold_mode,
        threshold_value=threshold_value,
        split=request.split,
        out=request.out,
        threads=request.threads,
    )


def _summary_model(summary: DatasetSummary) -> DatasetSummaryModel:
    return DatasetSummaryModel(
        total=summary.total,
        positives=summary.positives,
        negatives=summary.negatives,
        removed=summary.removed,
    )


def _metrics_model(report: MetricsReport) -> MetricsModel:
    return MetricsModel(
        accuracy=report.accuracy,
        sensitivity=report.sensitivity,
        specificity=report.specificity,
        auc=report.auc,
        precision=report.precision,
        f_score=report.f_score,
        threshold=report.threshold,
        tp=report.tp,
        fp=report.fp,
        tn=report.tn,
        fn=report.fn,
        degenerate_precision=report.degenerate_precision,
    )


def create_app() -> FastAPI:
    from pairsim import __version__

    app = FastAPI(title="pairsim", version=__version__)

    @app.exception_handler(PairsimError)
    async def _pairsim_error(request: Request, exc: PairsimError) -> JSONResponse:
        status = 409 if isinstance(exc, SingleClassError) else 400
        return JSONResponse(status_code=status, content={"detail": str(exc)})

    @app.get("/health", response_model=HealthResponse)
    async def health() -> HealthResponse:
        return HealthResponse(status="ok", version=__version__)

    @app.post("/similarity/text", response_model=SimilarityResponse)
    async def similarity_text(request: TextPairRequest) -> SimilarityResponse:
        text_a, text_b = request.text_a, request.text_b
        if request.normalize:
            config = NormalizationConfig(
                lowercase=request.lowercase, lemmatizer=request.lemmatizer
            )
            text_a = token_sort_normalize(text_a, config).text
            text_b = token_sort_normalize(text_b, config).text
        score = gestalt_ratio(text_a, text_b).as_similarity()
        return SimilarityResponse(score=score, scorer="string-match")

    @app.post("/similarity/vectors", response_model=SimilarityResponse)
    async def similarity_vectors(request: VectorPairRequest) -> SimilarityResponse:
        try:
            u = EmbeddingVector("a", request.values_a)  # type: ignore[arg-type]
            v = EmbeddingVector("b", request.values_b)  # type: ignore[arg-type]
        except ValueError as exc:
            raise PairsimError(str(exc)) from None
        scorer = angular_similarity if request.metric == "angular" else cosine_similarity_score
        similarity = scorer(u, v)
        return SimilarityResponse(score=similarity.value, scorer=similarity.scorer)

    @app.post("/normalize", response_model=NormalizeResponse)
    async def normalize(request: NormalizeRequest) -> NormalizeResponse:
        config = NormalizationConfig(lowercase=request.lowercase, lemmatizer=request.lemmatizer)
        canonical = token_sort_normalize(request.text, config)
        return NormalizeResponse(text=canonical.text, tokens=list(canonical.tokens))

    @app.post("/runs/score", response_model=ScoreRunResponse)
    async def score_run(request: RunRequest) -> ScoreRunResponse:
        result = run_score(_config(request))
        return ScoreRunResponse(
            summary=_summary_model(result.summary), score_file=str(result.score_file)
        )

    @app.post("/runs/eval", response_model=EvalRunResponse)
    async def eval_run(request: RunRequest) -> EvalRunResponse:
        result = run_eval(_config(request))
        return EvalRunResponse(
            summary=_summary_model(result.summary),
            metrics=_metrics_model(result.report),
            files={name: str(path) for name, path in result.files.items()},
        )

    @app.post("/runs/errors", response_model=ErrorsRunResponse)
    async def errors_run(request: ErrorsRunRequest) -> ErrorsRunResponse:
        result = run_errors(_config(request), request.limit)
        return ErrorsRunResponse(
            threshold=result.threshold,
            mistakes=[
                MisclassificationModel(
                    pair_id=m.pair_id,
                    text_a=m.text_a,
                    text_b=m.text_b,
                    true_label=m.true_label,
                    predicted_label=m.predicted_label,
                    score=m.score,
                )
                for m in result.mistakes
            ],
            report_file=str(result.report_file),
        )

    return app
