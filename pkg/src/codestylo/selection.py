"""Stratified k-fold cross-validation and grid search.

Folds come from per-class seeded shuffles dealt round-robin, so class
balance carries into every fold as evenly as integer counts allow. Grid
search scores each candidate by mean weighted F1 over the folds and
keeps the earliest candidate on ties.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .base import as_float_matrix, as_label_array, class_order
from .errors import DegenerateSplit
from .evaluation import evaluate
from .model_io import make_model
from .randomness import seeded_rng

DEFAULT_GRIDS: dict[str, dict[str, tuple]] = {
    "dt": {"max_depth": (3, 5, 8, None), "min_samples_split": (2, 5)},
    "rf": {
        "n_trees": (50, 200),
        "max_depth": (3, 5, 8, None),
        "min_samples_split": (2, 5),
    },
    "rusboost": {"n_rounds": (25, 50), "base_depth": (1, 2)},
    "gnb": {},
    "knn": {"k": (3, 5, 7)},
}


def default_grid(kind: str) -> list[dict]:
    """Expand the default hyperparameter grid in declaration order."""
    axes = DEFAULT_GRIDS[kind]
    if not axes:
        return [{}]
    names = list(axes)
    return [
        dict(zip(names, combo))
        for combo in itertools.product(*(axes[n] for n in names))
    ]


def stratified_kfold_indices(
    y, n_folds: int = 5, seed: int = 0
) -> list[tuple[np.ndarray, np.ndarray]]:
    """Per-class round-robin fold assignment after a seeded shuffle.

    Every class needs at least two members so each fold's training side
    retains the class; otherwise the split is degenerate.
    """
    labels = np.asarray(y, dtype=object)
    if n_folds < 2:
        raise DegenerateSplit(f"n_folds {n_folds} must be at least 2")
    classes = class_order(labels)
    fold_of = np.empty(len(labels), dtype=np.intp)
    rng = seeded_rng(seed)
    for label in classes:
        member_rows = np.flatnonzero(labels == label)
        if len(member_rows) < 2:
            raise DegenerateSplit(
                f"class {label!r} has {len(member_rows)} sample(s); "
                f"cross-validation needs at least 2"
            )
        shuffled = member_rows[rng.permutation(len(member_rows))]
        for position, row in enumerate(shuffled):
            fold_of[row] = position % n_folds
    folds = []
    for fold in range(n_folds):
        test_rows = np.flatnonzero(fold_of == fold)
        if len(test_rows) == 0:
            continue
        train_rows = np.flatnonzero(fold_of != fold)
        folds.append((train_rows, test_rows))
    return folds


def cross_validate_weighted_f1(
    kind: str,
    params: dict,
    X,
    y,
    n_folds: int = 5,
    seed: int = 0,
) -> list[float]:
    """Weighted F1 per fold for a fresh model of the given kind."""
    matrix = as_float_matrix(X)
    labels = as_label_array(y, len(matrix))
    order = class_order(labels)
    scores = []
    for train_rows, test_rows in stratified_kfold_indices(
        labels, n_folds, seed
    ):
        model = make_model(kind, params, seed=seed)
        model.fit(matrix[train_rows], labels[train_rows])
        predictions = model.predict(matrix[test_rows])
        report = evaluate(predictions, labels[test_rows], labels=order)
        scores.append(report.weighted_f1)
    return scores


@dataclass(frozen=True)
class GridCandidate:
    params: dict
    fold_scores: tuple[float, ...]
    mean_weighted_f1: float


@dataclass(frozen=True)
class GridSearchResult:
    kind: str
    best_params: dict
    best_mean_f1: float
    candidates: tuple[GridCandidate, ...]


def grid_search(
    X,
    y,
    kind: str,
    grid: list[dict] | None = None,
    seed: int = 0,
    n_folds: int = 5,
) -> GridSearchResult:
    """Score every grid entry by cross-validation and keep the best.

    A missing grid means the kind's default grid. Ties keep the earliest
    entry, so grid order is part of the contract.
    """
    entries = default_grid(kind) if grid is None else list(grid)
    if not entries:
        raise ValueError("grid must contain at least one candidate")
    candidates = []
    best_index = 0
    for index, params in enumerate(entries):
        scores = cross_validate_weighted_f1(
            kind, params, X, y, n_folds=n_folds, seed=seed
        )
        mean = float(np.mean(scores))
        candidates.append(
            GridCandidate(
                params=dict(params),
                fold_scores=tuple(scores),
                mean_weighted_f1=mean,
            )
        )
        if mean > candidates[best_index].mean_weighted_f1:
            best_index = index
    best = candidates[best_index]
    return GridSearchResult(
        kind=kind,
        best_params=dict(best.params),
        best_mean_f1=best.mean_weighted_f1,
        candidates=tuple(candidates),
    )
