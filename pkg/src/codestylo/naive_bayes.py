"""Gaussian naive Bayes with frequency priors and variance smoothing."""

from __future__ import annotations

import numpy as np

from .base import (
    BaseClassifier,
    as_float_matrix,
    check_fit_inputs,
    encode_labels,
)

_VARIANCE_SMOOTHING = 1e-9


def log_sum_exp(values: np.ndarray, axis: int = -1) -> np.ndarray:
    """Numerically stable log of summed exponentials along an axis."""
    peak = np.max(values, axis=axis, keepdims=True)
    return (
        np.log(np.sum(np.exp(values - peak), axis=axis, keepdims=True)) + peak
    ).squeeze(axis)


class GaussianNBClassifier(BaseClassifier):
    """Per-class independent Gaussians over the feature columns.

    Class variances are population variances floored at 1e-9 times the
    largest pooled feature variance; a wholly constant feature matrix
    falls back to an absolute floor so posteriors stay finite.
    """

    def __init__(self):
        pass

    def fit(self, X, y) -> "GaussianNBClassifier":
        matrix, labels, classes = check_fit_inputs(X, y)
        y_idx = encode_labels(labels, classes)
        n_classes = len(classes)
        n_features = matrix.shape[1]
        means = np.empty((n_classes, n_features), dtype=np.float64)
        variances = np.empty((n_classes, n_features), dtype=np.float64)
        priors = np.empty(n_classes, dtype=np.float64)
        floor = _VARIANCE_SMOOTHING * float(matrix.var(axis=0).max())
        if floor == 0.0:
            floor = 1e-12
        for c in range(n_classes):
            rows = matrix[y_idx == c]
            means[c] = rows.mean(axis=0)
            variances[c] = np.maximum(rows.var(axis=0), floor)
            priors[c] = len(rows) / len(matrix)
        self.classes_ = classes
        self.n_features_in_ = n_features
        self.means_ = means
        self.variances_ = variances
        self.priors_ = priors
        return self

    def predict_log_posterior(self, X) -> np.ndarray:
        """Log posterior per (row, class), normalized over classes."""
        self._require_fitted()
        matrix = as_float_matrix(X, self.n_features_in_)
        joint = np.empty((len(matrix), len(self.classes_)), dtype=np.float64)
        for c in range(len(self.classes_)):
            gaussians = -0.5 * (
                np.log(2.0 * np.pi * self.variances_[c])
                + (matrix - self.means_[c]) ** 2 / self.variances_[c]
            )
            joint[:, c] = np.log(self.priors_[c]) + gaussians.sum(axis=1)
        return joint - log_sum_exp(joint, axis=1)[:, None]

    def predict_posterior(self, X) -> np.ndarray:
        """Posterior probabilities per (row, class); rows sum to one."""
        return np.exp(self.predict_log_posterior(X))

    def predict(self, X) -> np.ndarray:
        posterior = self.predict_log_posterior(X)
        indices = np.argmax(posterior, axis=1)
        return np.array([self.classes_[i] for i in indices], dtype=object)

    def predict_score(self, X) -> np.ndarray:
        """Posterior probability of the positive class, per row."""
        return self.predict_posterior(X)[:, 0]
