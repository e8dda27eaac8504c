"""CART decision tree grown with Gini impurity, fully deterministic.

Candidate thresholds are midpoints between consecutive distinct sorted
feature values. The best split maximizes impurity decrease with strict
comparison, scanning features in ascending index order and thresholds in
ascending value order, so ties resolve to the lowest feature index and
then the lowest threshold without consulting any randomness.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .base import (
    BaseClassifier,
    as_float_matrix,
    check_fit_inputs,
    encode_labels,
)


@dataclass
class TreeNode:
    n_samples: int
    label_index: int
    positive_fraction: float
    feature: int = -1
    threshold: float = 0.0
    left: "TreeNode | None" = None
    right: "TreeNode | None" = None

    @property
    def is_leaf(self) -> bool:
        return self.left is None


def gini_impurity(counts: np.ndarray) -> float:
    total = counts.sum()
    if total == 0:
        return 0.0
    shares = counts / total
    return float(1.0 - np.dot(shares, shares))


def _best_split(X, y_idx, rows, candidates, n_classes):
    """Best (decrease, feature, threshold, left_rows, right_rows) or None."""
    n_rows = len(rows)
    parent_counts = np.bincount(y_idx[rows], minlength=n_classes)
    parent_gini = gini_impurity(parent_counts)
    best_decrease = 0.0
    best = None
    for feature in candidates:
        values = X[rows, feature]
        order = np.argsort(values, kind="mergesort")
        sorted_values = values[order]
        sorted_labels = y_idx[rows][order]
        left_counts = np.zeros(n_classes, dtype=np.int64)
        right_counts = parent_counts.copy()
        for i in range(n_rows - 1):
            label = sorted_labels[i]
            left_counts[label] += 1
            right_counts[label] -= 1
            if sorted_values[i] == sorted_values[i + 1]:
                continue
            threshold = (sorted_values[i] + sorted_values[i + 1]) / 2.0
            if not sorted_values[i] < threshold < sorted_values[i + 1]:
                # Adjacent floats can collapse the midpoint onto one side,
                # which would desynchronize training and prediction.
                continue
            n_left = i + 1
            weighted = (
                n_left * gini_impurity(left_counts)
                + (n_rows - n_left) * gini_impurity(right_counts)
            ) / n_rows
            decrease = parent_gini - weighted
            if decrease > best_decrease:
                best_decrease = decrease
                best = (
                    decrease,
                    int(feature),
                    float(threshold),
                    rows[order[:n_left]],
                    rows[order[n_left:]],
                )
    return best


def grow_tree(
    X: np.ndarray,
    y_idx: np.ndarray,
    n_classes: int,
    *,
    max_depth: int | None = None,
    min_samples_split: int = 2,
    feature_rng: np.random.Generator | None = None,
    n_candidate_features: int | None = None,
    importance_sink: np.ndarray | None = None,
) -> TreeNode:
    """Grow a tree over X rows indexed by an implicit arange.

    When n_candidate_features is smaller than the feature count, each
    split draws that many distinct feature indexes from feature_rng; a
    subset covering all features draws nothing, so a forest configured
    without feature sampling grows exactly the deterministic tree.
    importance_sink, when given, accumulates per-feature impurity
    decrease weighted by the node's share of the root samples.
    """
    n_features = X.shape[1]
    n_root = len(y_idx)
    use_subset = (
        n_candidate_features is not None
        and n_candidate_features < n_features
        and feature_rng is not None
    )

    def build(rows: np.ndarray, depth: int) -> TreeNode:
        counts = np.bincount(y_idx[rows], minlength=n_classes)
        node = TreeNode(
            n_samples=len(rows),
            label_index=int(np.argmax(counts)),
            positive_fraction=float(counts[0] / len(rows)),
        )
        if (
            counts.max() == len(rows)
            or len(rows) < min_samples_split
            or (max_depth is not None and depth >= max_depth)
        ):
            return node
        if use_subset:
            candidates = np.sort(
                feature_rng.choice(
                    n_features, size=n_candidate_features, replace=False
                )
            )
        else:
            candidates = range(n_features)
        found = _best_split(X, y_idx, rows, candidates, n_classes)
        if found is None:
            return node
        decrease, feature, threshold, left_rows, right_rows = found
        if importance_sink is not None:
            importance_sink[feature] += (len(rows) / n_root) * decrease
        node.feature = feature
        node.threshold = threshold
        node.left = build(left_rows, depth + 1)
        node.right = build(right_rows, depth + 1)
        return node

    return build(np.arange(len(y_idx), dtype=np.intp), 0)


def predict_label_indices(root: TreeNode, X: np.ndarray) -> np.ndarray:
    """Route every row of X to a leaf and return leaf label indexes."""
    out = np.empty(len(X), dtype=np.intp)
    stack = [(root, np.arange(len(X), dtype=np.intp))]
    while stack:
        node, rows = stack.pop()
        if len(rows) == 0:
            continue
        if node.is_leaf:
            out[rows] = node.label_index
        else:
            goes_left = X[rows, node.feature] <= node.threshold
            stack.append((node.left, rows[goes_left]))
            stack.append((node.right, rows[~goes_left]))
    return out


def predict_positive_fractions(root: TreeNode, X: np.ndarray) -> np.ndarray:
    """Positive-class training fraction of the leaf each row lands in."""
    out = np.empty(len(X), dtype=np.float64)
    stack = [(root, np.arange(len(X), dtype=np.intp))]
    while stack:
        node, rows = stack.pop()
        if len(rows) == 0:
            continue
        if node.is_leaf:
            out[rows] = node.positive_fraction
        else:
            goes_left = X[rows, node.feature] <= node.threshold
            stack.append((node.left, rows[goes_left]))
            stack.append((node.right, rows[~goes_left]))
    return out


class DecisionTreeClassifier(BaseClassifier):
    """Single CART tree.

    The seed parameter exists so every kind shares one constructor shape;
    growth is deterministic and the seed never influences the fit.
    """

    def __init__(
        self,
        max_depth: int | None = None,
        min_samples_split: int = 2,
        seed: int = 0,
    ):
        self.max_depth = max_depth
        self.min_samples_split = min_samples_split
        self.seed = seed

    def fit(self, X, y) -> "DecisionTreeClassifier":
        matrix, labels, classes = check_fit_inputs(X, y)
        y_idx = encode_labels(labels, classes)
        importances = np.zeros(matrix.shape[1], dtype=np.float64)
        self.root_ = grow_tree(
            matrix,
            y_idx,
            len(classes),
            max_depth=self.max_depth,
            min_samples_split=self.min_samples_split,
            importance_sink=importances,
        )
        self.classes_ = classes
        self.n_features_in_ = matrix.shape[1]
        self.impurity_decreases_ = importances
        return self

    def predict(self, X) -> np.ndarray:
        self._require_fitted()
        matrix = as_float_matrix(X, self.n_features_in_)
        indices = predict_label_indices(self.root_, matrix)
        return np.array([self.classes_[i] for i in indices], dtype=object)

    def predict_score(self, X) -> np.ndarray:
        """Positive-class score per row (leaf positive fraction)."""
        self._require_fitted()
        matrix = as_float_matrix(X, self.n_features_in_)
        return predict_positive_fractions(self.root_, matrix)
