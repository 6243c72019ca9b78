"""ROC construction, AUC, Youden threshold selection and confusion metrics.

The decision rule everywhere is "predict positive when score >= threshold",
which makes the maximum observed score a reachable operating point.  All
rates are kept in [0, 1] internally; report emitters format percentages.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Mapping, NamedTuple, Sequence

from .errors import MissingPairError, SingleClassError
from .ingest import LabeledPair

__all__ = [
    "ScoredLabel",
    "RocPoint",
    "RocCurve",
    "MetricsReport",
    "Misclassification",
    "roc_curve",
    "auc",
    "youden_threshold",
    "metrics_at",
    "metrics_identities_hold",
    "misclassifications",
]


@dataclass(frozen=True)
class ScoredLabel:
    """A pair's similarity score joined with its ground-truth label."""

    pair_id: str
    score: float
    label: int


class RocPoint(NamedTuple):
    threshold: float
    tpr: float
    fpr: float


@dataclass(frozen=True)
class RocCurve:
    """Operating points swept over every distinct score, high to low.

    The first point is the (0, 0) sentinel at threshold +inf; the last is
    always (1, 1) because the minimum score predicts everything positive.
    """

    points: tuple[RocPoint, ...]
    positives: int
    negatives: int


@dataclass(frozen=True)
class MetricsReport:
    """The six benchmark-table metrics plus the counts that produced them.

    ``degenerate_precision`` marks the tp+fp = 0 case where precision is
    undefined and reported as 0 so batch sweeps keep running.
    """

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
    degenerate_precision: bool = False


@dataclass(frozen=True)
class Misclassification:
    """One pair the thresholded scorer got wrong."""

    pair_id: str
    text_a: str
    text_b: str
    true_label: int
    predicted_label: int
    score: float

    def __post_init__(self) -> None:
        if self.true_label == self.predicted_label:
            raise ValueError("misclassification requires true_label != predicted_label")


def _class_counts(data: Sequence[ScoredLabel]) -> tuple[int, int]:
    positives = sum(item.label for item in data)
    negatives = len(data) - positives
    if positives == 0 or negatives == 0:
        raise SingleClassError(
            f"ROC needs both classes; got {positives} positives and {negatives} negatives"
        )
    return positives, negatives


def roc_curve(data: Sequence[ScoredLabel]) -> RocCurve:
    """Build the ROC curve by sweeping a threshold over each distinct score.

    Scores are visited in descending order; ties fall into one point.
    """
    positives, negatives = _class_counts(data)
    pos_at: dict[float, int] = {}
    neg_at: dict[float, int] = {}
    for item in data:
        if item.label:
            pos_at[item.score] = pos_at.get(item.score, 0) + 1
        else:
            neg_at[item.score] = neg_at.get(item.score, 0) + 1

    points = [RocPoint(math.inf, 0.0, 0.0)]
    tp = 0
    fp = 0
    for score in sorted(set(pos_at) | set(neg_at), reverse=True):
        tp += pos_at.get(score, 0)
        fp += neg_at.get(score, 0)
        points.append(RocPoint(score, tp / positives, fp / negatives))
    return RocCurve(tuple(points), positives, negatives)


def auc(curve: RocCurve) -> float:
    """Trapezoidal area under tpr as a function of fpr."""
    area = 0.0
    for prev, cur in zip(curve.points, curve.points[1:]):
        area += (cur.fpr - prev.fpr) * (cur.tpr + prev.tpr) / 2.0
    return area


def youden_threshold(curve: RocCurve) -> tuple[float, float]:
    """Threshold maximizing J = sensitivity + specificity - 1 = tpr - fpr.

    Candidates are the distinct observed scores (the +inf sentinel is not
    an operating point).  Ties break toward the highest sensitivity, then
    the lowest threshold, so reports are deterministic.
    """
    best: RocPoint | None = None
    for point in curve.points[1:]:
        if best is None:
            best = point
            continue
        j, best_j = point.tpr - point.fpr, best.tpr - best.fpr
        if j > best_j or (
            j == best_j
            and (point.tpr > best.tpr or (point.tpr == best.tpr and point.threshold < best.threshold))
        ):
            best = point
    assert best is not None  # curve always has at least one score point
    return best.threshold, best.tpr - best.fpr


def metrics_at(data: Sequence[ScoredLabel], threshold: float) -> MetricsReport:
    """Confusion-matrix metrics of the rule "score >= threshold => positive".

    The AUC field is computed from the same data, independent of the
    threshold.  Needs at least one positive and one negative label.
    """
    curve_auc = auc(roc_curve(data))
    tp = fp = tn = fn = 0
    for item in data:
        predicted = item.score >= threshold
        if item.label == 1:
            tp += predicted
            fn += not predicted
        else:
            fp += predicted
            tn += not predicted

    degenerate = tp + fp == 0
    precision = 0.0 if degenerate else tp / (tp + fp)
    sensitivity = tp / (tp + fn)
    specificity = tn / (tn + fp)
    f_score = (
        0.0
        if precision + sensitivity == 0.0
        else 2.0 * precision * sensitivity / (precision + sensitivity)
    )
    return MetricsReport(
        accuracy=(tp + tn) / len(data),
        sensitivity=sensitivity,
        specificity=specificity,
        auc=curve_auc,
        precision=precision,
        f_score=f_score,
        threshold=threshold,
        tp=tp,
        fp=fp,
        tn=tn,
        fn=fn,
        degenerate_precision=degenerate,
    )


def metrics_identities_hold(report: MetricsReport) -> bool:
    """Whether every rate in the report recomputes exactly from its counts."""
    tp, fp, tn, fn = report.tp, report.fp, report.tn, report.fn
    precision = 0.0 if tp + fp == 0 else tp / (tp + fp)
    sensitivity = tp / (tp + fn)
    f_score = (
        0.0
        if precision + sensitivity == 0.0
        else 2.0 * precision * sensitivity / (precision + sensitivity)
    )
    return (
        report.accuracy == (tp + tn) / (tp + fp + tn + fn)
        and report.sensitivity == sensitivity
        and report.specificity == tn / (tn + fp)
        and report.precision == precision
        and report.f_score == f_score
        and report.degenerate_precision == (tp + fp == 0)
    )


def misclassifications(
    data: Iterable[ScoredLabel],
    pairs: Mapping[str, LabeledPair],
    threshold: float,
) -> list[Misclassification]:
    """All pairs whose prediction disagrees with the truth.

    Sorted most-confident-mistake first (largest |score - threshold|),
    ties by pair id.  Every scored pair id must resolve to its texts.
    """
    found: list[Misclassification] = []
    for item in data:
        predicted = int(item.score >= threshold)
        if predicted == item.label:
            continue
        pair = pairs.get(item.pair_id)
        if pair is None:
            raise MissingPairError(f"pair id {item.pair_id!r} not found in the dataset")
        found.append(
            Misclassification(
                pair_id=item.pair_id,
                text_a=pair.text_a,
                text_b=pair.text_b,
                true_label=item.label,
                predicted_label=predicted,
                score=item.score,
            )
        )
    found.sort(key=lambda m: (-abs(m.score - threshold), m.pair_id))
    return found
