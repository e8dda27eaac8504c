"""Feature importance: impurity-based, permutation-based, and combined.

Two complementary views of which features drive a forest's decisions:

* Impurity importance sums the Gini decreases each feature earned inside
  the trees (weighted by node size), averaged over the forest and
  normalized to sum to one.
* Permutation importance measures how much the weighted F1 on held-out
  data drops when one feature's column is shuffled, averaged over many
  shuffles. Negative drops are clamped to zero before normalizing.

The combined view averages the two normalized vectors. The stability
protocol repeats both measurements: the impurity leg refits the forest
per iteration with independently derived seeds, while the permutation
leg shuffles a single fitted forest once per iteration.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .base import as_float_matrix, as_label_array
from .errors import NotFitted, WrongModelKind
from .evaluation import evaluate
from .forest import RandomForestClassifier
from .metrics import FEATURE_NAMES
from .randomness import seeded_rng

_SEED_MASK = (1 << 64) - 1


def normalize_importance(values: np.ndarray) -> np.ndarray:
    """Scale a nonnegative vector to sum to one; all-zero stays zero."""
    values = np.asarray(values, dtype=np.float64)
    total = values.sum()
    if total > 0.0:
        return values / total
    return values.copy()


def impurity_importance(model) -> np.ndarray:
    """Normalized mean impurity-decrease importance of a fitted forest."""
    if not isinstance(model, RandomForestClassifier):
        raise WrongModelKind(
            "impurity importance requires a random forest, got "
            f"{type(model).__name__}"
        )
    if getattr(model, "classes_", None) is None:
        raise NotFitted("this RandomForestClassifier is not fitted yet")
    per_tree = np.asarray(model.tree_importances_, dtype=np.float64)
    return normalize_importance(per_tree.mean(axis=0))


def permutation_importance(
    model,
    X,
    y,
    repeats: int = 1000,
    seed: int = 0,
) -> np.ndarray:
    """Normalized permutation importance of a fitted model.

    Feature j, repeat r shuffles column j with stream (seed, j, r) and
    records the weighted F1 drop against the unshuffled baseline. Drops
    are averaged per feature, clamped at zero, then normalized. A column
    whose shuffle cannot change the matrix (e.g. a constant feature)
    scores exactly zero.
    """
    if repeats < 1:
        raise ValueError(f"repeats must be >= 1, got {repeats}")
    matrix = as_float_matrix(X)
    labels = as_label_array(y, matrix.shape[0])
    order = model.classes_
    baseline = evaluate(model.predict(matrix), labels, labels=order).weighted_f1
    n_rows, n_features = matrix.shape
    drops = np.zeros(n_features, dtype=np.float64)
    for j in range(n_features):
        shuffled = matrix.copy()
        drop_total = 0.0
        for r in range(repeats):
            rng = seeded_rng(seed, j, r)
            shuffled[:, j] = matrix[rng.permutation(n_rows), j]
            score = evaluate(
                model.predict(shuffled), labels, labels=order
            ).weighted_f1
            drop_total += baseline - score
        drops[j] = max(0.0, drop_total / repeats)
    return normalize_importance(drops)


@dataclass(frozen=True)
class ImportanceRow:
    feature: str
    impurity: float
    permutation: float
    combined: float


@dataclass(frozen=True)
class ImportanceReport:
    feature_names: tuple[str, ...]
    impurity: tuple[float, ...]
    permutation: tuple[float, ...]
    combined: tuple[float, ...]

    def __post_init__(self):
        n = len(self.feature_names)
        for field_name in ("impurity", "permutation", "combined"):
            if len(getattr(self, field_name)) != n:
                raise ValueError(
                    f"{field_name} has {len(getattr(self, field_name))} "
                    f"entries for {n} features"
                )

    def ranked_rows(self) -> list[ImportanceRow]:
        """Rows sorted by combined score, descending; ties keep the
        original feature order."""
        indexed = sorted(
            range(len(self.feature_names)),
            key=lambda i: -self.combined[i],
        )
        return [
            ImportanceRow(
                self.feature_names[i],
                self.impurity[i],
                self.permutation[i],
                self.combined[i],
            )
            for i in indexed
        ]

    def to_dict(self) -> dict:
        return {
            "features": list(self.feature_names),
            "impurity": list(self.impurity),
            "permutation": list(self.permutation),
            "combined": list(self.combined),
        }


def combined_importance(
    impurity: np.ndarray,
    permutation: np.ndarray,
    feature_names: tuple[str, ...] = FEATURE_NAMES,
) -> ImportanceReport:
    """Average two normalized importance vectors into one report."""
    imp = normalize_importance(impurity)
    perm = normalize_importance(permutation)
    if imp.shape != perm.shape or imp.shape[0] != len(feature_names):
        raise ValueError(
            "importance vectors and feature names must have equal length"
        )
    combined = (imp + perm) / 2.0
    return ImportanceReport(
        feature_names=tuple(feature_names),
        impurity=tuple(float(v) for v in imp),
        permutation=tuple(float(v) for v in perm),
        combined=tuple(float(v) for v in combined),
    )


def dual_importance(
    X,
    y,
    rf_params: dict | None = None,
    iterations: int = 1000,
    seed: int = 0,
    feature_names: tuple[str, ...] = FEATURE_NAMES,
) -> ImportanceReport:
    """Run both importance protocols over many iterations.

    Impurity leg: refit the forest once per iteration, each fit seeded
    from an independent stream derived from the master seed, and average
    the normalized impurity vectors. Permutation leg: fit one forest
    with the master seed and shuffle each column `iterations` times.
    """
    if iterations < 1:
        raise ValueError(f"iterations must be >= 1, got {iterations}")
    matrix = as_float_matrix(X, n_features=len(feature_names))
    labels = as_label_array(y, matrix.shape[0])
    params = dict(rf_params or {})
    params.pop("seed", None)

    fit_seeds = np.random.SeedSequence(seed & _SEED_MASK).generate_state(
        iterations, np.uint64
    )
    impurity_total = np.zeros(len(feature_names), dtype=np.float64)
    for fit_seed in fit_seeds:
        model = RandomForestClassifier(**params, seed=int(fit_seed))
        model.fit(matrix, labels)
        impurity_total += impurity_importance(model)
    impurity = impurity_total / iterations

    master = RandomForestClassifier(**params, seed=seed)
    master.fit(matrix, labels)
    permutation = permutation_importance(
        master, matrix, labels, repeats=iterations, seed=seed
    )
    return combined_importance(impurity, permutation, feature_names)
