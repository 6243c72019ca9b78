"""pairsim: text-pair similarity scoring and ROC/Youden evaluation harness.

Scores labeled text pairs with gestalt string matching over canonicalized
text or with embedding-vector distances, selects a decision threshold by
maximizing Youden's J on the ROC curve, and emits metric tables, ROC point
files and misclassification reports.
"""

from .errors import PairsimError
from .evaluation import (
    MetricsReport,
    Misclassification,
    RocCurve,
    ScoredLabel,
    auc,
    metrics_at,
    misclassifications,
    roc_curve,
    youden_threshold,
)
from .gestalt import GestaltScore, MatchBlock, gestalt_ratio, longest_match, matching_characters
from .ingest import (
    DatasetSummary,
    LabeledPair,
    ScoreRecord,
    load_embeddings,
    load_pairs,
    load_scores,
    write_embeddings,
    write_scores,
)
from .normalize import (
    CanonicalText,
    NormalizationConfig,
    lemmatize_token,
    token_sort_normalize,
    tokenize,
)
from .pipeline import RunConfig, run_errors, run_eval, run_score, score_pairs
from .vecsim import (
    EmbeddingVector,
    SimilarityScore,
    angular_similarity,
    cosine_similarity,
    cosine_similarity_score,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "PairsimError",
    "GestaltScore",
    "MatchBlock",
    "gestalt_ratio",
    "longest_match",
    "matching_characters",
    "CanonicalText",
    "NormalizationConfig",
    "tokenize",
    "lemmatize_token",
    "token_sort_normalize",
    "EmbeddingVector",
    "SimilarityScore",
    "cosine_similarity",
    "angular_similarity",
    "cosine_similarity_score",
    "LabeledPair",
    "DatasetSummary",
    "ScoreRecord",
    "load_pairs",
    "load_embeddings",
    "load_scores",
    "write_embeddings",
    "write_scores",
    "ScoredLabel",
    "RocCurve",
    "MetricsReport",
    "Misclassification",
    "roc_curve",
    "auc",
    "youden_threshold",
    "metrics_at",
    "misclassifications",
    "RunConfig",
    "score_pairs",
    "run_score",
    "run_eval",
    "run_errors",
]
