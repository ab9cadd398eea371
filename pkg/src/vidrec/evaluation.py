"""Offline quality metrics from a recommendation confusion matrix.

Metrics with a zero denominator are undefined and reported as None, never
silently coerced to 0.0; formatting renders them as the word "undefined".
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class ConfusionMatrix:
    """Outcome counts: recommended-and-liked (tp), missed (fn),
    recommended-but-disliked (fp), correctly left out (tn)."""

    tp: int
    fn: int
    fp: int
    tn: int

    def __post_init__(self):
        counts = (self.tp, self.fn, self.fp, self.tn)
        if any(c < 0 for c in counts):
            raise ValueError(f"confusion counts must be non-negative: {counts}")
        if sum(counts) < 1:
            raise ValueError("confusion matrix must contain at least one outcome")

    @property
    def total(self) -> int:
        return self.tp + self.fn + self.fp + self.tn


@dataclass(frozen=True)
class EvalReport:
    precision: float | None
    recall: float | None
    f1: float | None


def build_confusion(recommended, interested, universe) -> ConfusionMatrix:
    """Count outcomes for one evaluation pass.

    recommended and interested are id sets; universe is every id that was
    eligible, and both sets must be subsets of it.
    """
    universe = set(universe)
    if not universe:
        raise ValueError("universe must not be empty")
    recommended = set(recommended)
    interested = set(interested)
    if not recommended <= universe:
        raise ValueError("recommended ids must be a subset of the universe")
    if not interested <= universe:
        raise ValueError("interested ids must be a subset of the universe")
    tp = len(recommended & interested)
    fp = len(recommended - interested)
    fn = len(interested - recommended)
    tn = len(universe) - tp - fp - fn
    return ConfusionMatrix(tp=tp, fn=fn, fp=fp, tn=tn)


def precision(cm: ConfusionMatrix) -> float | None:
    """tp / (tp + fp); None when nothing was recommended."""
    denominator = cm.tp + cm.fp
    return None if denominator == 0 else cm.tp / denominator


def recall(cm: ConfusionMatrix) -> float | None:
    """tp / (tp + fn); None when nothing was relevant."""
    denominator = cm.tp + cm.fn
    return None if denominator == 0 else cm.tp / denominator


def f1(cm: ConfusionMatrix) -> float | None:
    """Harmonic mean of precision and recall; None if either is undefined,
    0.0 if both are zero."""
    p = precision(cm)
    r = recall(cm)
    if p is None or r is None:
        return None
    if p + r == 0.0:
        return 0.0
    return 2.0 * p * r / (p + r)


def evaluate(cm: ConfusionMatrix) -> EvalReport:
    return EvalReport(precision=precision(cm), recall=recall(cm), f1=f1(cm))


def format_metric(value: float | None) -> str:
    """Five decimal places, or the word "undefined" for None."""
    return "undefined" if value is None else f"{value:.5f}"
