from __future__ import annotations

import numpy as np
import pytest

from codestylo.corpus import Author, Category, Dataset, Sample
from codestylo.errors import DegenerateInput
from codestylo.evaluation import evaluate
from codestylo.forest import RandomForestClassifier
from codestylo.metrics import MetricVector, N_FEATURES
from codestylo.reliability import (
    DEFAULT_NOISE_SIGMAS,
    SPLIT_SWEEP_FRACTIONS,
    SweepCurve,
    SweepPoint,
    category_holdout_eval,
    feature_scales,
    gaussian_noise_sweep,
    per_category_eval,
    split_ratio_sweep,
)
from codestylo.tree import DecisionTreeClassifier


def _toy_dataset(n_per_class=12, categories=(Category.ADS, Category.DA)):
    """Separable dataset: chatgpt has feature 0 high, human low."""
    samples = []
    counter = 0
    for i in range(n_per_class):
        category = categories[i % len(categories)]
        for author, base in ((Author.CHATGPT, 10.0), (Author.HUMAN, 0.0)):
            features = [0.0] * N_FEATURES
            features[0] = base + 0.1 * (counter % 5)
            features[1] = float(counter % 7)
            samples.append(
                Sample(
                    id=f"p{i:03d}",
                    author=author,
                    category=category,
                    features=MetricVector(*features),
                )
            )
            counter += 1
    return Dataset(tuple(sorted(samples, key=lambda s: s.sort_key())))


def test_split_sweep_fractions_constant():
    assert len(SPLIT_SWEEP_FRACTIONS) == 18
    assert SPLIT_SWEEP_FRACTIONS[0] == 0.10
    assert SPLIT_SWEEP_FRACTIONS[-1] == 0.95
    steps = [
        round(b - a, 10)
        for a, b in zip(SPLIT_SWEEP_FRACTIONS, SPLIT_SWEEP_FRACTIONS[1:])
    ]
    assert all(s == 0.05 for s in steps)


def test_default_noise_sigmas_constant():
    assert len(DEFAULT_NOISE_SIGMAS) == 21
    assert DEFAULT_NOISE_SIGMAS[0] == 0.0
    assert DEFAULT_NOISE_SIGMAS[-1] == 2.0
    assert all(0.0 <= s <= 2.0 for s in DEFAULT_NOISE_SIGMAS)


def test_sweep_curve_rejects_non_increasing_axis():
    point = SweepPoint(0.5, (evaluate(["chatgpt"], ["chatgpt"]),))
    with pytest.raises(ValueError):
        SweepCurve("x", (point, point))


def test_split_ratio_sweep_point_count_and_axis():
    dataset = _toy_dataset()
    curve = split_ratio_sweep(
        dataset, "dt", seeds=(0, 1), fractions=(0.5, 0.8)
    )
    assert curve.quantity == "train_fraction"
    assert [p.x for p in curve.points] == [0.5, 0.8]
    assert all(len(p.reports) == 2 for p in curve.points)


def test_split_ratio_sweep_separable_data_scores_high():
    dataset = _toy_dataset()
    curve = split_ratio_sweep(dataset, "dt", seeds=(0,), fractions=(0.5,))
    assert curve.points[0].mean_accuracy == 1.0
    assert curve.points[0].mean_weighted_f1 == 1.0


def test_split_ratio_sweep_deterministic():
    dataset = _toy_dataset()
    a = split_ratio_sweep(dataset, "dt", seeds=(3,), fractions=(0.5, 0.75))
    b = split_ratio_sweep(dataset, "dt", seeds=(3,), fractions=(0.5, 0.75))
    assert a == b


def test_split_ratio_sweep_requires_seeds():
    with pytest.raises(ValueError):
        split_ratio_sweep(_toy_dataset(), "dt", seeds=())


def test_split_ratio_sweep_default_fractions_cover_full_axis():
    dataset = _toy_dataset(n_per_class=20)
    curve = split_ratio_sweep(dataset, "gnb", seeds=(0,))
    assert len(curve.points) == 18
    rows = curve.to_rows()
    assert rows[0][0] == 0.10 and rows[-1][0] == 0.95


def test_feature_scales_population_std():
    X = np.array([[0.0, 1.0], [2.0, 1.0], [4.0, 1.0]])
    scales = feature_scales(X)
    assert scales[0] == pytest.approx(np.sqrt(8.0 / 3.0))
    assert scales[1] == 0.0


def _fitted_model_and_test():
    rng = np.random.default_rng(7)
    X = rng.normal(size=(40, 3))
    y = np.where(X[:, 0] > 0, "chatgpt", "human")
    model = DecisionTreeClassifier(max_depth=3)
    model.fit(X, y)
    X_test = rng.normal(size=(20, 3))
    y_test = np.where(X_test[:, 0] > 0, "chatgpt", "human")
    return model, X, X_test, y_test


def test_noise_sweep_zero_sigma_is_bit_exact_baseline():
    model, X_train, X_test, y_test = _fitted_model_and_test()
    baseline = evaluate(model.predict(X_test), y_test, labels=model.classes_)
    curve = gaussian_noise_sweep(
        model, feature_scales(X_train), X_test, y_test, sigmas=(0.0, 1.0)
    )
    assert curve.points[0].reports[0] == baseline


def test_noise_sweep_axis_and_report_counts():
    model, X_train, X_test, y_test = _fitted_model_and_test()
    curve = gaussian_noise_sweep(
        model, feature_scales(X_train), X_test, y_test
    )
    assert curve.quantity == "noise_sigma"
    assert [p.x for p in curve.points] == list(DEFAULT_NOISE_SIGMAS)
    assert all(len(p.reports) == 1 for p in curve.points)


def test_noise_sweep_deterministic_per_point():
    model, X_train, X_test, y_test = _fitted_model_and_test()
    scales = feature_scales(X_train)
    full = gaussian_noise_sweep(
        model, scales, X_test, y_test, sigmas=(0.5, 1.0, 1.5), seed=9
    )
    # Re-running a prefix reproduces the same leading points because each
    # point draws from its own (seed, index) stream.
    prefix = gaussian_noise_sweep(
        model, scales, X_test, y_test, sigmas=(0.5, 1.0), seed=9
    )
    assert full.points[:2] == prefix.points


def test_noise_sweep_large_sigma_tends_to_degrade():
    model, X_train, X_test, y_test = _fitted_model_and_test()
    scales = feature_scales(X_train)
    curve = gaussian_noise_sweep(
        model, scales, X_test, y_test, sigmas=(0.0, 2.0), seed=1
    )
    clean = curve.points[0].reports[0].accuracy
    noisy = curve.points[1].reports[0].accuracy
    assert noisy <= clean


def test_noise_respects_zero_scale_features():
    # A feature with zero training spread receives no noise at all.
    X_train = np.array([[0.0, 5.0], [1.0, 5.0], [2.0, 5.0], [3.0, 5.0]])
    y_train = ["chatgpt", "chatgpt", "human", "human"]
    model = DecisionTreeClassifier()
    model.fit(X_train, y_train)
    X_test = np.array([[0.5, 5.0], [2.5, 5.0]])
    y_test = ["chatgpt", "human"]
    curve = gaussian_noise_sweep(
        model,
        np.array([0.0, 0.0]),
        X_test,
        y_test,
        sigmas=(0.0, 1.7),
        seed=4,
    )
    assert curve.points[1].reports[0] == curve.points[0].reports[0]


def test_per_category_eval_covers_present_categories_only():
    dataset = _toy_dataset(categories=(Category.M, Category.VGD))
    model = RandomForestClassifier(n_trees=5, seed=0)
    model.fit(dataset.feature_matrix(), dataset.labels())
    results = per_category_eval(model, dataset)
    assert set(results) == {Category.M, Category.VGD}
    for category, report in results.items():
        expected_n = len(dataset.only_category(category).samples)
        assert report.n_samples == expected_n


def test_per_category_confusion_sums_match_supports():
    dataset = _toy_dataset(categories=tuple(Category))
    model = DecisionTreeClassifier()
    model.fit(dataset.feature_matrix(), dataset.labels())
    results = per_category_eval(model, dataset)
    for report in results.values():
        for row, cm in zip(report.confusion, report.per_class):
            assert sum(row) == cm.support


def test_category_holdout_trains_without_target_category():
    dataset = _toy_dataset(n_per_class=15, categories=tuple(Category))
    results = category_holdout_eval(dataset, "dt", seed=0)
    assert set(results) == set(dataset.categories())
    for category, report in results.items():
        held_out = dataset.only_category(category)
        assert report.n_samples == len(held_out.samples)
        # Separable signal transfers across categories.
        assert report.accuracy == 1.0


def test_category_holdout_single_class_train_raises():
    # Only one category, so holding it out leaves an empty training set.
    dataset = _toy_dataset(categories=(Category.OO,))
    with pytest.raises(DegenerateInput):
        category_holdout_eval(dataset, "dt")
