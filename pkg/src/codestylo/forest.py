"""Random forest of CART trees with bootstrap rows and feature subsets.

Tree t draws from its own generator seeded by (seed, t), so forests are
reproducible under any training schedule and trees never share state.
Disabling both the bootstrap and feature sampling consumes no randomness
at all and reduces a single-tree forest to the plain decision tree.
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
from .randomness import seeded_rng
from .tree import grow_tree, predict_label_indices


def resolve_candidate_features(setting, n_features: int) -> int:
    """Resolve the per-split feature budget to a concrete count."""
    if setting is None:
        return n_features
    if setting == "sqrt":
        return math.ceil(math.sqrt(n_features))
    count = int(setting)
    if not 1 <= count <= n_features:
        raise ValueError(
            f"n_candidate_features {setting!r} must be in 1..{n_features}"
        )
    return count


class RandomForestClassifier(BaseClassifier):
    """Majority-vote ensemble over bootstrap-grown trees."""

    def __init__(
        self,
        n_trees: int = 50,
        max_depth: int | None = None,
        min_samples_split: int = 2,
        n_candidate_features: "int | str | None" = "sqrt",
        bootstrap: bool = True,
        seed: int = 0,
    ):
        self.n_trees = n_trees
        self.max_depth = max_depth
        self.min_samples_split = min_samples_split
        self.n_candidate_features = n_candidate_features
        self.bootstrap = bootstrap
        self.seed = seed

    def fit(self, X, y) -> "RandomForestClassifier":
        matrix, labels, classes = check_fit_inputs(X, y)
        if self.n_trees < 1:
            raise ValueError(f"n_trees {self.n_trees} must be positive")
        y_idx = encode_labels(labels, classes)
        n_rows, n_features = matrix.shape
        budget = resolve_candidate_features(
            self.n_candidate_features, n_features
        )
        samples_all = budget >= n_features
        trees = []
        importances = []
        for t in range(self.n_trees):
            rng = seeded_rng(self.seed, t)
            if self.bootstrap:
                rows = rng.integers(0, n_rows, size=n_rows)
            else:
                rows = np.arange(n_rows, dtype=np.intp)
            sink = np.zeros(n_features, dtype=np.float64)
            root = grow_tree(
                matrix[rows],
                y_idx[rows],
                len(classes),
                max_depth=self.max_depth,
                min_samples_split=self.min_samples_split,
                feature_rng=None if samples_all else rng,
                n_candidate_features=None if samples_all else budget,
                importance_sink=sink,
            )
            trees.append(root)
            importances.append(sink)
        self.classes_ = classes
        self.n_features_in_ = n_features
        self.trees_ = trees
        self.tree_importances_ = importances
        return self

    def _vote_matrix(self, matrix: np.ndarray) -> np.ndarray:
        votes = np.empty((len(self.trees_), len(matrix)), dtype=np.intp)
        for t, root in enumerate(self.trees_):
            votes[t] = predict_label_indices(root, matrix)
        return votes

    def predict(self, X) -> np.ndarray:
        self._require_fitted()
        matrix = as_float_matrix(X, self.n_features_in_)
        votes = self._vote_matrix(matrix)
        labels = []
        for column in votes.T:
            counts = np.bincount(column, minlength=len(self.classes_))
            labels.append(self.classes_[int(np.argmax(counts))])
        return np.array(labels, dtype=object)

    def predict_score(self, X) -> np.ndarray:
        """Fraction of trees voting for the positive class, per row."""
        self._require_fitted()
        matrix = as_float_matrix(X, self.n_features_in_)
        votes = self._vote_matrix(matrix)
        return (votes == 0).mean(axis=0)
