"""Boosted shallow trees over class-balanced random undersamples.

Each round draws a balanced training subset: every class contributes
min-class-count rows sampled with replacement in proportion to the
current boosting weights. The weak learner is a depth-limited tree, its
weighted error is measured on the full training set, and weights update
by the usual exponential rule. Rounds whose error reaches one half are
redrawn with a fresh stream (at most three retries) before boosting
stops; a perfect round receives the capped weight for error 1/(2n) and
ends the committee.
"""

from __future__ import annotations

import math

import numpy as np

from .base import (
    BaseClassifier,
    as_float_matrix,
    check_fit_inputs,
    encode_labels,
)
from .errors import DegenerateInput
from .randomness import seeded_rng
from .tree import grow_tree, predict_label_indices

_MAX_REDRAWS = 3


def alpha_from_error(error: float, n_samples: int | None = None) -> float:
    """Committee weight for a round with the given weighted error.

    Zero error is capped as if one half-sample of n had been wrong, which
    needs the training-set size; otherwise alpha is half the log odds of
    being right.
    """
    if error == 0.0:
        if n_samples is None:
            raise ValueError("zero error needs n_samples for the cap")
        capped = 1.0 / (2.0 * n_samples)
        return 0.5 * math.log((1.0 - capped) / capped)
    return 0.5 * math.log((1.0 - error) / error)


class RUSBoostClassifier(BaseClassifier):
    """AdaBoost over random-undersampled balanced rounds."""

    def __init__(
        self,
        n_rounds: int = 50,
        base_depth: int = 1,
        min_samples_split: int = 2,
        seed: int = 0,
    ):
        self.n_rounds = n_rounds
        self.base_depth = base_depth
        self.min_samples_split = min_samples_split
        self.seed = seed

    def fit(self, X, y) -> "RUSBoostClassifier":
        matrix, labels, classes = check_fit_inputs(X, y)
        if len(classes) != 2:
            raise DegenerateInput(
                f"boosting separates exactly two classes, got {len(classes)}"
            )
        if self.n_rounds < 1:
            raise ValueError(f"n_rounds {self.n_rounds} must be positive")
        y_idx = encode_labels(labels, classes)
        n_rows = len(y_idx)
        n_classes = len(classes)
        class_rows = [
            np.flatnonzero(y_idx == c) for c in range(n_classes)
        ]
        per_class = min(len(rows) for rows in class_rows)
        weights = np.full(n_rows, 1.0 / n_rows)
        learners: list = []
        alphas: list[float] = []
        for round_index in range(self.n_rounds):
            outcome = None
            for retry in range(1 + _MAX_REDRAWS):
                rng = seeded_rng(self.seed, round_index, retry)
                picked = []
                for rows in class_rows:
                    share = weights[rows]
                    probabilities = share / share.sum()
                    picked.append(
                        rng.choice(
                            rows, size=per_class, replace=True, p=probabilities
                        )
                    )
                sample = np.concatenate(picked)
                root = grow_tree(
                    matrix[sample],
                    y_idx[sample],
                    n_classes,
                    max_depth=self.base_depth,
                    min_samples_split=self.min_samples_split,
                )
                predicted = predict_label_indices(root, matrix)
                error = float(weights[predicted != y_idx].sum())
                if error < 0.5:
                    outcome = (root, predicted, error)
                    break
            if outcome is None:
                break
            root, predicted, error = outcome
            learners.append(root)
            if error == 0.0:
                alphas.append(alpha_from_error(0.0, n_rows))
                break
            alpha = alpha_from_error(error)
            alphas.append(alpha)
            agree = np.where(predicted == y_idx, 1.0, -1.0)
            weights = weights * np.exp(-alpha * agree)
            weights = weights / weights.sum()
        self.classes_ = classes
        self.n_features_in_ = matrix.shape[1]
        self.learners_ = learners
        self.alphas_ = alphas
        return self

    def _margins(self, matrix: np.ndarray) -> np.ndarray:
        margins = np.zeros(len(matrix), dtype=np.float64)
        for alpha, root in zip(self.alphas_, self.learners_):
            sign = np.where(
                predict_label_indices(root, matrix) == 0, 1.0, -1.0
            )
            margins += alpha * sign
        return margins

    def predict(self, X) -> np.ndarray:
        self._require_fitted()
        matrix = as_float_matrix(X, self.n_features_in_)
        margins = self._margins(matrix)
        return np.array(
            [
                self.classes_[0] if margin >= 0.0 else self.classes_[1]
                for margin in margins
            ],
            dtype=object,
        )

    def predict_score(self, X) -> np.ndarray:
        """Committee weight fraction voting positive; 0.5 when empty."""
        self._require_fitted()
        matrix = as_float_matrix(X, self.n_features_in_)
        total = float(sum(self.alphas_))
        if total == 0.0:
            return np.full(len(matrix), 0.5)
        positive = np.zeros(len(matrix), dtype=np.float64)
        for alpha, root in zip(self.alphas_, self.learners_):
            hits = predict_label_indices(root, matrix) == 0
            positive[hits] += alpha
        return positive / total
