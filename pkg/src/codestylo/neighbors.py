"""k-nearest neighbors over z-scored features with Euclidean distance."""

from __future__ import annotations

import numpy as np

from .base import (
    BaseClassifier,
    as_float_matrix,
    check_fit_inputs,
    encode_labels,
)
from .errors import BadK

_STD_FLOOR = 1e-12


class KNNClassifier(BaseClassifier):
    """Majority vote among the k nearest z-scored training rows.

    k must be odd and no larger than the training set. Distance ties
    resolve toward the lower training-row index via a stable sort, and a
    tied vote (possible only with a generalized even k) resolves toward
    the positive class.
    """

    def __init__(self, k: int = 5):
        self.k = k

    def fit(self, X, y) -> "KNNClassifier":
        matrix, labels, classes = check_fit_inputs(X, y)
        if self.k < 1 or self.k % 2 == 0 or self.k > len(matrix):
            raise BadK(
                f"k={self.k} must be odd and within 1..{len(matrix)}"
            )
        means = matrix.mean(axis=0)
        stds = np.maximum(matrix.std(axis=0), _STD_FLOOR)
        self.classes_ = classes
        self.n_features_in_ = matrix.shape[1]
        self.feature_means_ = means
        self.feature_stds_ = stds
        self.train_scaled_ = (matrix - means) / stds
        self.train_label_indices_ = encode_labels(labels, classes)
        return self

    def _neighbor_votes(self, matrix: np.ndarray) -> np.ndarray:
        scaled = (matrix - self.feature_means_) / self.feature_stds_
        votes = np.empty((len(matrix), self.k), dtype=np.intp)
        for i, row in enumerate(scaled):
            distances = np.sqrt(((self.train_scaled_ - row) ** 2).sum(axis=1))
            nearest = np.argsort(distances, kind="stable")[: self.k]
            votes[i] = self.train_label_indices_[nearest]
        return votes

    def predict(self, X) -> np.ndarray:
        self._require_fitted()
        matrix = as_float_matrix(X, self.n_features_in_)
        votes = self._neighbor_votes(matrix)
        labels = []
        for row in votes:
            counts = np.bincount(row, minlength=len(self.classes_))
            labels.append(self.classes_[int(np.argmax(counts))])
        return np.array(labels, dtype=object)

    def predict_score(self, X) -> np.ndarray:
        """Fraction of the k neighbors labeled positive, per row."""
        self._require_fitted()
        matrix = as_float_matrix(X, self.n_features_in_)
        votes = self._neighbor_votes(matrix)
        return (votes == 0).mean(axis=1)
