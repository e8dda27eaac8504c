"""Shared estimator plumbing and input validation.

Every classifier follows the same surface: hyperparameters are plain
constructor attributes, fit(X, y) learns state into trailing-underscore
attributes and returns self, and get_params/set_params expose the
constructor signature so grids and serializers can treat all estimator
kinds uniformly.
"""

from __future__ import annotations

import inspect

import numpy as np

from .corpus import POSITIVE_LABEL
from .errors import DegenerateInput, LengthMismatch, NotFitted, SchemaMismatch


class BaseClassifier:
    """Common parameter handling for all classifier kinds."""

    @classmethod
    def _param_names(cls) -> tuple[str, ...]:
        signature = inspect.signature(cls.__init__)
        return tuple(
            name for name in signature.parameters if name != "self"
        )

    def get_params(self, deep: bool = True) -> dict:
        return {name: getattr(self, name) for name in self._param_names()}

    def set_params(self, **params) -> "BaseClassifier":
        valid = set(self._param_names())
        for key, value in params.items():
            if key not in valid:
                raise ValueError(
                    f"unknown parameter {key!r} for {type(self).__name__}; "
                    f"valid parameters are {sorted(valid)}"
                )
            setattr(self, key, value)
        return self

    def _require_fitted(self) -> None:
        if not hasattr(self, "classes_"):
            raise NotFitted(
                f"{type(self).__name__} is not fitted; call fit first"
            )

    def __repr__(self) -> str:
        params = ", ".join(
            f"{k}={v!r}" for k, v in sorted(self.get_params().items())
        )
        return f"{type(self).__name__}({params})"


def as_float_matrix(X, n_features: int | None = None) -> np.ndarray:
    """Coerce X to a 2-D float64 matrix, checking width when known."""
    matrix = np.asarray(X, dtype=np.float64)
    if matrix.ndim != 2:
        raise SchemaMismatch(
            f"expected a 2-D feature matrix, got shape {matrix.shape}"
        )
    if n_features is not None and matrix.shape[1] != n_features:
        raise SchemaMismatch(
            f"expected {n_features} feature columns, got {matrix.shape[1]}"
        )
    return matrix


def as_label_array(y, n_rows: int) -> np.ndarray:
    """Coerce labels to a 1-D object array matching the row count."""
    labels = np.asarray(y, dtype=object)
    if labels.ndim != 1:
        raise SchemaMismatch(
            f"expected a 1-D label sequence, got shape {labels.shape}"
        )
    if len(labels) != n_rows:
        raise LengthMismatch(
            f"{len(labels)} labels for {n_rows} feature rows"
        )
    return labels


def class_order(y) -> tuple:
    """Distinct labels with the positive chatgpt class first.

    Without the chatgpt label the order is plain sorted order, and index
    zero still plays the positive role in every tie-break.
    """
    plain = [
        value.item() if isinstance(value, np.generic) else value for value in y
    ]
    unique = sorted(set(plain))
    if POSITIVE_LABEL in unique:
        unique.remove(POSITIVE_LABEL)
        unique.insert(0, POSITIVE_LABEL)
    return tuple(unique)


def check_fit_inputs(X, y) -> tuple[np.ndarray, np.ndarray, tuple]:
    """Validate a training pair and derive the class order.

    Returns (matrix, labels, classes); fewer than two distinct classes is
    DegenerateInput because every classifier here separates two authors.
    """
    matrix = as_float_matrix(X)
    labels = as_label_array(y, len(matrix))
    classes = class_order(labels)
    if len(classes) < 2:
        raise DegenerateInput(
            f"training data has {len(classes)} distinct class(es); need 2"
        )
    return matrix, labels, classes


def encode_labels(labels: np.ndarray, classes: tuple) -> np.ndarray:
    """Map labels to class indexes (positive class is index 0)."""
    index_of = {c: i for i, c in enumerate(classes)}
    return np.array([index_of[label] for label in labels], dtype=np.intp)
