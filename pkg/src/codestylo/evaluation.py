"""Classification reports: per-class precision/recall/F1 and confusion.

Reports are frozen dataclasses built from pure counts, so evaluating the
same predictions twice yields equal objects and the zero-division policy
(undefined precision, recall, or F1 becomes 0.0) is applied uniformly.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .base import class_order
from .errors import DegenerateInput, LengthMismatch


@dataclass(frozen=True)
class ClassMetrics:
    label: str
    precision: float
    recall: float
    f1: float
    support: int


@dataclass(frozen=True)
class EvalReport:
    labels: tuple
    per_class: tuple[ClassMetrics, ...]
    confusion: tuple[tuple[int, ...], ...]
    accuracy: float
    weighted_f1: float
    macro_f1: float
    n_samples: int

    def class_metrics(self, label) -> ClassMetrics:
        for metrics in self.per_class:
            if metrics.label == label:
                return metrics
        raise KeyError(label)

    def to_dict(self) -> dict:
        return {
            "labels": list(self.labels),
            "accuracy": self.accuracy,
            "weighted_f1": self.weighted_f1,
            "macro_f1": self.macro_f1,
            "n_samples": self.n_samples,
            "confusion": [list(row) for row in self.confusion],
            "per_class": {
                m.label: {
                    "precision": m.precision,
                    "recall": m.recall,
                    "f1": m.f1,
                    "support": m.support,
                }
                for m in self.per_class
            },
        }


def confusion_matrix(y_pred, y_true, labels) -> np.ndarray:
    """Counts with true labels on rows and predictions on columns."""
    index_of = {label: i for i, label in enumerate(labels)}
    matrix = np.zeros((len(labels), len(labels)), dtype=np.int64)
    for predicted, actual in zip(y_pred, y_true):
        matrix[index_of[actual], index_of[predicted]] += 1
    return matrix


def evaluate(y_pred, y_true, labels=None) -> EvalReport:
    """Score predictions against truth.

    labels fixes row/column order (positive class first by default);
    every observed label must appear in it. Prediction and truth lengths
    must match, and an empty pair is degenerate rather than a report of
    zeros.
    """
    y_pred = list(y_pred)
    y_true = list(y_true)
    if len(y_pred) != len(y_true):
        raise LengthMismatch(
            f"{len(y_pred)} predictions for {len(y_true)} true labels"
        )
    if not y_true:
        raise DegenerateInput("cannot evaluate an empty test set")
    if labels is None:
        labels = class_order(y_true + y_pred)
    else:
        labels = tuple(labels)
        observed = set(y_true) | set(y_pred)
        missing = observed - set(labels)
        if missing:
            raise ValueError(
                f"labels {sorted(map(str, missing))} observed but not listed"
            )
    matrix = confusion_matrix(y_pred, y_true, labels)
    n_samples = len(y_true)
    per_class = []
    weighted_f1 = 0.0
    for i, label in enumerate(labels):
        true_positive = int(matrix[i, i])
        predicted_count = int(matrix[:, i].sum())
        support = int(matrix[i, :].sum())
        precision = true_positive / predicted_count if predicted_count else 0.0
        recall = true_positive / support if support else 0.0
        f1 = (
            2.0 * precision * recall / (precision + recall)
            if precision + recall > 0.0
            else 0.0
        )
        per_class.append(
            ClassMetrics(
                label=label,
                precision=precision,
                recall=recall,
                f1=f1,
                support=support,
            )
        )
        weighted_f1 += (support / n_samples) * f1
    accuracy = float(np.trace(matrix)) / n_samples
    macro_f1 = sum(m.f1 for m in per_class) / len(per_class)
    return EvalReport(
        labels=tuple(labels),
        per_class=tuple(per_class),
        confusion=tuple(tuple(int(v) for v in row) for row in matrix),
        accuracy=accuracy,
        weighted_f1=weighted_f1,
        macro_f1=macro_f1,
        n_samples=n_samples,
    )
