"""Independent brute-force reference implementations used by the tests.

Everything here deliberately avoids the package's code paths: block search
is an exhaustive scan over all start positions, AUC is the pairwise
ordering probability, and threshold selection enumerates candidates with
direct counting.  Slow and obvious beats fast and clever for an oracle.
"""

from __future__ import annotations

import numpy as np


def brute_longest_block(
    a: str, b: str, a_lo: int, a_hi: int, b_lo: int, b_hi: int
) -> tuple[int, int, int]:
    """Exhaustive scan over every (i, j) start; first maximal block wins."""
    best = (a_lo, b_lo, 0)
    for i in range(a_lo, a_hi):
        for j in range(b_lo, b_hi):
            n = 0
            while i + n < a_hi and j + n < b_hi and a[i + n] == b[j + n]:
                n += 1
            if n > best[2]:
                best = (i, j, n)
    return best


def brute_matching_characters(
    a: str,
    b: str,
    a_lo: int = 0,
    a_hi: int | None = None,
    b_lo: int = 0,
    b_hi: int | None = None,
) -> int:
    if a_hi is None:
        a_hi = len(a)
    if b_hi is None:
        b_hi = len(b)
    i, j, n = brute_longest_block(a, b, a_lo, a_hi, b_lo, b_hi)
    if n == 0:
        return 0
    return (
        n
        + brute_matching_characters(a, b, a_lo, i, b_lo, j)
        + brute_matching_characters(a, b, i + n, a_hi, j + n, b_hi)
    )


def brute_gestalt(a: str, b: str) -> float:
    """0-100 gestalt score with the same canonical pair ordering as the package."""
    if not a and not b:
        return 100.0
    if (len(a), a) > (len(b), b):
        a, b = b, a
    return 200.0 * brute_matching_characters(a, b) / (len(a) + len(b))


def pairwise_auc(scores: np.ndarray, labels: np.ndarray) -> float:
    """P(random positive outscores random negative), ties counted one-half."""
    pos = scores[labels == 1]
    neg = scores[labels == 0]
    wins = (pos[:, None] > neg[None, :]).sum()
    ties = (pos[:, None] == neg[None, :]).sum()
    return (wins + 0.5 * ties) / (len(pos) * len(neg))


def exhaustive_youden(scores: np.ndarray, labels: np.ndarray) -> tuple[float, float]:
    """Try every distinct score as threshold; max J, ties by max tpr then min threshold."""
    positives = int((labels == 1).sum())
    negatives = int((labels == 0).sum())
    best = None
    for threshold in np.unique(scores):
        predicted = scores >= threshold
        tpr = int((predicted & (labels == 1)).sum()) / positives
        fpr = int((predicted & (labels == 0)).sum()) / negatives
        j = tpr - fpr
        key = (j, tpr, -threshold)
        if best is None or key > best[0]:
            best = (key, (float(threshold), j))
    assert best is not None
    return best[1]


def confusion_counts(
    scores: np.ndarray, labels: np.ndarray, threshold: float
) -> tuple[int, int, int, int]:
    predicted = scores >= threshold
    tp = int((predicted & (labels == 1)).sum())
    fp = int((predicted & (labels == 0)).sum())
    tn = int((~predicted & (labels == 0)).sum())
    fn = int((~predicted & (labels == 1)).sum())
    return tp, fp, tn, fn
