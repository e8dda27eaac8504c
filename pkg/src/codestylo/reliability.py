"""Robustness protocols: split sweeps, noise sweeps, category breakdowns.

Each sweep produces a curve of evaluation reports over a strictly
increasing control axis, ready to tabulate. Randomness is derived from
(seed, point index) streams so individual points are reproducible in
isolation, and a zero noise level bypasses perturbation entirely, which
keeps the baseline bit-exact.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .base import class_order
from .corpus import Category, Dataset, SplitSpec, stratified_split
from .evaluation import EvalReport, evaluate
from .model_io import make_model
from .randomness import seeded_rng

SPLIT_SWEEP_FRACTIONS: tuple[float, ...] = tuple(
    round(0.10 + 0.05 * i, 2) for i in range(18)
)

DEFAULT_NOISE_SIGMAS: tuple[float, ...] = tuple(
    round(0.1 * i, 1) for i in range(21)
)


@dataclass(frozen=True)
class SweepPoint:
    x: float
    reports: tuple[EvalReport, ...]

    @property
    def mean_weighted_f1(self) -> float:
        return sum(r.weighted_f1 for r in self.reports) / len(self.reports)

    @property
    def mean_accuracy(self) -> float:
        return sum(r.accuracy for r in self.reports) / len(self.reports)


@dataclass(frozen=True)
class SweepCurve:
    quantity: str
    points: tuple[SweepPoint, ...]

    def __post_init__(self):
        xs = [p.x for p in self.points]
        if any(b <= a for a, b in zip(xs, xs[1:])):
            raise ValueError(f"sweep axis must strictly increase, got {xs}")

    def to_rows(self) -> list[tuple[float, float, float]]:
        return [
            (p.x, p.mean_weighted_f1, p.mean_accuracy) for p in self.points
        ]


def split_ratio_sweep(
    dataset: Dataset,
    kind: str,
    params: dict | None = None,
    seeds: tuple[int, ...] = (0,),
    fractions: tuple[float, ...] = SPLIT_SWEEP_FRACTIONS,
) -> SweepCurve:
    """Evaluate one model kind across training fractions.

    Every fraction is evaluated once per seed with a fresh stratified
    split and a fresh model; the point aggregates those reports.
    """
    if not seeds:
        raise ValueError("at least one seed is required")
    labels_order = class_order(dataset.labels())
    points = []
    for fraction in fractions:
        reports = []
        for seed in seeds:
            train, test = stratified_split(dataset, SplitSpec(fraction, seed))
            model = make_model(kind, params, seed=seed)
            model.fit(train.feature_matrix(), train.labels())
            predictions = model.predict(test.feature_matrix())
            reports.append(
                evaluate(predictions, test.labels(), labels=labels_order)
            )
        points.append(SweepPoint(float(fraction), tuple(reports)))
    return SweepCurve("train_fraction", tuple(points))


def feature_scales(X: np.ndarray) -> np.ndarray:
    """Per-feature population standard deviation of a training matrix."""
    return np.asarray(X, dtype=np.float64).std(axis=0)


def gaussian_noise_sweep(
    model,
    train_scales: np.ndarray,
    X_test: np.ndarray,
    y_test,
    sigmas: tuple[float, ...] = DEFAULT_NOISE_SIGMAS,
    seed: int = 0,
) -> SweepCurve:
    """Evaluate a fitted model under increasing feature noise.

    Point j perturbs the test matrix with sigma * train_scales scaled
    standard normal noise from stream (seed, j). Sigma zero skips the
    perturbation, so its report is exactly the clean evaluation.
    """
    X_test = np.asarray(X_test, dtype=np.float64)
    scales = np.asarray(train_scales, dtype=np.float64)
    points = []
    for j, sigma in enumerate(sigmas):
        if sigma == 0.0:
            perturbed = X_test
        else:
            rng = seeded_rng(seed, j)
            noise = rng.standard_normal(X_test.shape) * (sigma * scales)
            perturbed = X_test + noise
        predictions = model.predict(perturbed)
        report = evaluate(predictions, y_test, labels=model.classes_)
        points.append(SweepPoint(float(sigma), (report,)))
    return SweepCurve("noise_sigma", tuple(points))


def per_category_eval(
    model, test_dataset: Dataset
) -> dict[Category, EvalReport]:
    """Evaluate a fitted model separately on each category present."""
    results: dict[Category, EvalReport] = {}
    for category in test_dataset.categories():
        subset = test_dataset.only_category(category)
        predictions = model.predict(subset.feature_matrix())
        results[category] = evaluate(
            predictions, subset.labels(), labels=model.classes_
        )
    return results


def category_holdout_eval(
    dataset: Dataset,
    kind: str,
    params: dict | None = None,
    seed: int = 0,
) -> dict[Category, EvalReport]:
    """Hold out each category in turn: train on the rest, test on it."""
    results: dict[Category, EvalReport] = {}
    for category in dataset.categories():
        train = dataset.without_category(category)
        test = dataset.only_category(category)
        model = make_model(kind, params, seed=seed)
        model.fit(train.feature_matrix(), train.labels())
        predictions = model.predict(test.feature_matrix())
        results[category] = evaluate(
            predictions, test.labels(), labels=model.classes_
        )
    return results
