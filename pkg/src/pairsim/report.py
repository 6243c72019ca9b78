"""Plain-text and CSV emitters for metric tables, ROC points and error reports.

Rates are formatted as percentages with one decimal, matching the usual
benchmark-table convention (75.0 rather than 0.75); thresholds and scores
keep full precision.
"""

from __future__ import annotations

from typing import Sequence

from .evaluation import MetricsReport, Misclassification, RocCurve

__all__ = [
    "percent",
    "metrics_table_text",
    "metrics_csv",
    "roc_csv",
    "errors_table",
]

_METRIC_COLUMNS = ("Accuracy", "Sensitivity", "Specificity", "AUC", "Precision", "F-score")


def percent(rate: float) -> str:
    """A [0, 1] rate as a one-decimal percentage string."""
    return f"{rate * 100.0:.1f}"


def _metric_cells(report: MetricsReport) -> list[str]:
    return [
        percent(report.accuracy),
        percent(report.sensitivity),
        percent(report.specificity),
        percent(report.auc),
        percent(report.precision),
        percent(report.f_score),
    ]


def metrics_table_text(report: MetricsReport, method: str) -> str:
    """One-row aligned metrics table plus the threshold and raw counts."""
    header = ["Method", *_METRIC_COLUMNS]
    row = [method, *_metric_cells(report)]
    widths = [max(len(h), len(c)) for h, c in zip(header, row)]
    lines = [
        "  ".join(cell.ljust(width) for cell, width in zip(header, widths)).rstrip(),
        "  ".join(cell.ljust(width) for cell, width in zip(row, widths)).rstrip(),
        "",
        f"threshold: {report.threshold!r}",
        f"counts: tp={report.tp} fp={report.fp} tn={report.tn} fn={report.fn}",
    ]
    if report.degenerate_precision:
        lines.append("note: no positive predictions; precision reported as 0")
    return "\n".join(lines) + "\n"


def metrics_csv(report: MetricsReport, method: str) -> str:
    header = "method,accuracy,sensitivity,specificity,auc,precision,f_score,threshold"
    row = ",".join([method, *_metric_cells(report), repr(report.threshold)])
    return f"{header}\n{row}\n"


def roc_csv(curve: RocCurve) -> str:
    """ROC points as ``fpr,tpr,threshold`` lines for external plotting."""
    lines = ["fpr,tpr,threshold"]
    for point in curve.points:
        lines.append(f"{point.fpr!r},{point.tpr!r},{point.threshold!r}")
    return "\n".join(lines) + "\n"


def errors_table(mistakes: Sequence[Misclassification], limit: int) -> str:
    """Tab-separated misclassification table, truncated to ``limit`` rows.

    Embedded tabs/newlines in the texts are flattened to spaces so the
    table stays one row per mistake.
    """
    lines = ["Qn1\tQn2\ttrue\tpred"]
    for mistake in mistakes[: max(limit, 0)]:
        text_a = " ".join(mistake.text_a.split())
        text_b = " ".join(mistake.text_b.split())
        lines.append(f"{text_a}\t{text_b}\t{mistake.true_label}\t{mistake.predicted_label}")
    return "\n".join(lines) + "\n"
