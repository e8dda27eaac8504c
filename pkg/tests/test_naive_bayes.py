"""Gaussian naive Bayes posteriors, priors, and smoothing."""

from __future__ import annotations

import numpy as np
import pytest

from codestylo.naive_bayes import GaussianNBClassifier, log_sum_exp


def clustered_data(seed=0):
    rng = np.random.default_rng(seed)
    positive = rng.normal(0.0, 1.0, size=(25, 3))
    negative = rng.normal(5.0, 1.0, size=(25, 3))
    X = np.vstack([positive, negative])
    y = ["chatgpt"] * 25 + ["human"] * 25
    return X, y


def test_log_sum_exp_matches_naive_formula():
    values = np.array([[0.1, -0.4], [2.0, 2.0], [-900.0, -901.0]])
    result = log_sum_exp(values, axis=1)
    assert result[0] == pytest.approx(
        np.log(np.exp(0.1) + np.exp(-0.4)), abs=1e-12
    )
    assert result[1] == pytest.approx(2.0 + np.log(2.0), abs=1e-12)
    assert np.isfinite(result[2])


def test_posteriors_sum_to_one():
    X, y = clustered_data()
    model = GaussianNBClassifier().fit(X, y)
    posterior = model.predict_posterior(X)
    assert np.abs(posterior.sum(axis=1) - 1.0).max() <= 1e-12


def test_separated_clusters_classify_perfectly():
    X, y = clustered_data()
    model = GaussianNBClassifier().fit(X, y)
    assert list(model.predict(X)) == y


def test_priors_follow_class_frequencies():
    rng = np.random.default_rng(1)
    X = rng.normal(size=(8, 2))
    y = ["chatgpt"] * 6 + ["human"] * 2
    model = GaussianNBClassifier().fit(X, y)
    assert model.priors_[0] == pytest.approx(0.75)
    assert model.priors_[1] == pytest.approx(0.25)


def test_variances_are_floored():
    X = np.array([[0.0, 1.0], [0.0, 3.0], [10.0, 1.0], [10.0, 3.0]])
    y = ["chatgpt", "chatgpt", "human", "human"]
    model = GaussianNBClassifier().fit(X, y)
    pooled_max = X.var(axis=0).max()
    assert (model.variances_ >= 1e-9 * pooled_max).all()
    # Feature 0 is constant within each class, so it sits exactly at
    # the floor.
    assert model.variances_[0, 0] == pytest.approx(1e-9 * pooled_max)


def test_single_sample_classes_are_usable():
    X = np.array([[0.0], [2.0]])
    model = GaussianNBClassifier().fit(X, ["a", "b"])
    assert list(model.predict(X)) == ["a", "b"]
    posterior = model.predict_posterior(np.array([[0.0]]))
    assert posterior[0, 0] > 1.0 - 1e-6


def test_identical_rows_give_even_posterior_and_positive_tie():
    X = np.ones((6, 2))
    y = ["chatgpt", "human"] * 3
    model = GaussianNBClassifier().fit(X, y)
    posterior = model.predict_posterior(X)
    assert posterior[:, 0] == pytest.approx(0.5, abs=1e-12)
    assert list(model.predict(X)) == ["chatgpt"] * 6


def test_scores_are_positive_class_posterior():
    X, y = clustered_data(seed=4)
    model = GaussianNBClassifier().fit(X, y)
    scores = model.predict_score(X)
    posterior = model.predict_posterior(X)
    assert np.array_equal(scores, posterior[:, 0])


def test_no_hyperparameters_to_tune():
    assert GaussianNBClassifier().get_params() == {}
