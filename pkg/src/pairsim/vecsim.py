"""Similarity scores for pairs of embedding vectors.

Raw cosine similarity lives in [-1, 1]; both scorers reorient it onto the
uniform [0, 1] "higher = more similar" scale the evaluation layer expects:
the angular scorer via ``1 - arccos(cos)/pi``, the cosine scorer via the
affine map ``(cos + 1)/2``.  Both are monotone in cosine similarity, so
ROC-based evaluation is unaffected by the choice.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatchError, ZeroVectorError

__all__ = [
    "EmbeddingVector",
    "SimilarityScore",
    "ANGULAR_SCORER",
    "COSINE_SCORER",
    "cosine_similarity",
    "angular_similarity",
    "cosine_similarity_score",
]

ANGULAR_SCORER = "embedding-angular"
COSINE_SCORER = "embedding-cosine"


@dataclass(frozen=True, eq=False)
class EmbeddingVector:
    """A fixed-dimension finite real vector keyed by a text identifier."""

    id: str
    values: np.ndarray

    def __post_init__(self) -> None:
        values = np.asarray(self.values, dtype=np.float64)
        if values.ndim != 1 or values.size < 1:
            raise ValueError(f"embedding {self.id!r} must be a 1-D vector with dim >= 1")
        if not np.all(np.isfinite(values)):
            raise ValueError(f"embedding {self.id!r} has a non-finite component")
        object.__setattr__(self, "values", values)

    @property
    def dim(self) -> int:
        return int(self.values.size)


@dataclass(frozen=True)
class SimilarityScore:
    """A similarity in [0, 1] tagged with the scorer that produced it."""

    value: float
    scorer: str

    def __post_init__(self) -> None:
        if not 0.0 <= self.value <= 1.0:
            raise ValueError(f"similarity {self.value!r} outside [0, 1]")


def cosine_similarity(u: EmbeddingVector, v: EmbeddingVector) -> float:
    """Cosine of the angle between ``u`` and ``v``, clamped into [-1, 1].

    The clamp absorbs float rounding; dot products of parallel vectors can
    exceed the bound by ~1e-16 and arccos is undefined outside it.
    """
    if u.dim != v.dim:
        raise DimensionMismatchError(
            f"dimension mismatch: {u.id!r} has dim {u.dim}, {v.id!r} has dim {v.dim}"
        )
    norm_sq_u = float(np.dot(u.values, u.values))
    norm_sq_v = float(np.dot(v.values, v.values))
    if norm_sq_u == 0.0:
        raise ZeroVectorError(f"vector {u.id!r} has zero norm")
    if norm_sq_v == 0.0:
        raise ZeroVectorError(f"vector {v.id!r} has zero norm")
    # sqrt of the product of squared norms: for u == v the numerator and
    # denominator are then the same float, so identical vectors give
    # exactly 1.0 instead of 1 - O(eps).
    cos = float(np.dot(u.values, v.values)) / math.sqrt(norm_sq_u * norm_sq_v)
    return min(1.0, max(-1.0, cos))


def angular_similarity(u: EmbeddingVector, v: EmbeddingVector) -> SimilarityScore:
    """``1 - arccos(cos)/pi``: 1 for identical directions, 0 for antiparallel."""
    cos = cosine_similarity(u, v)
    return SimilarityScore(1.0 - float(np.arccos(cos)) / float(np.pi), ANGULAR_SCORER)


def cosine_similarity_score(u: EmbeddingVector, v: EmbeddingVector) -> SimilarityScore:
    """``(cos + 1)/2``: the affine reorientation of raw cosine similarity."""
    cos = cosine_similarity(u, v)
    return SimilarityScore((cos + 1.0) / 2.0, COSINE_SCORER)
