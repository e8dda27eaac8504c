from __future__ import annotations

import numpy as np
import pytest

from codestylo.errors import NotFitted, SchemaMismatch, WrongModelKind
from codestylo.forest import RandomForestClassifier
from codestylo.importance import (
    ImportanceReport,
    combined_importance,
    dual_importance,
    impurity_importance,
    normalize_importance,
    permutation_importance,
)
from codestylo.metrics import FEATURE_NAMES
from codestylo.naive_bayes import GaussianNBClassifier
from codestylo.tree import DecisionTreeClassifier


def _signal_data(n=60, n_features=4, signal_col=0, seed=3):
    """Labels determined entirely by one column; the rest is noise."""
    rng = np.random.default_rng(seed)
    X = rng.normal(size=(n, n_features))
    y = np.where(X[:, signal_col] > 0.0, "chatgpt", "human")
    return X, y


def test_normalize_importance_unit_sum():
    out = normalize_importance(np.array([1.0, 3.0]))
    assert out.tolist() == [0.25, 0.75]


def test_normalize_importance_keeps_all_zero():
    out = normalize_importance(np.zeros(3))
    assert out.tolist() == [0.0, 0.0, 0.0]


def test_impurity_importance_requires_forest():
    X, y = _signal_data()
    model = DecisionTreeClassifier().fit(X, y)
    with pytest.raises(WrongModelKind):
        impurity_importance(model)
    with pytest.raises(WrongModelKind):
        impurity_importance(GaussianNBClassifier().fit(X, y))


def test_impurity_importance_requires_fit():
    with pytest.raises(NotFitted):
        impurity_importance(RandomForestClassifier())


def test_impurity_importance_sums_to_one_and_finds_signal():
    X, y = _signal_data()
    model = RandomForestClassifier(n_trees=20, seed=0).fit(X, y)
    imp = impurity_importance(model)
    assert imp.shape == (4,)
    assert imp.sum() == pytest.approx(1.0, abs=1e-12)
    assert int(np.argmax(imp)) == 0


def test_permutation_importance_finds_signal():
    X, y = _signal_data()
    model = RandomForestClassifier(n_trees=20, seed=0).fit(X, y)
    perm = permutation_importance(model, X, y, repeats=10, seed=0)
    assert perm.sum() == pytest.approx(1.0, abs=1e-12)
    assert int(np.argmax(perm)) == 0


def test_permutation_importance_constant_feature_exactly_zero():
    X, y = _signal_data(n_features=3)
    X = X.copy()
    X[:, 2] = 7.5
    model = DecisionTreeClassifier(max_depth=4).fit(X, y)
    perm = permutation_importance(model, X, y, repeats=7, seed=5)
    assert perm[2] == 0.0


def test_permutation_importance_deterministic():
    X, y = _signal_data()
    model = RandomForestClassifier(n_trees=10, seed=1).fit(X, y)
    a = permutation_importance(model, X, y, repeats=5, seed=2)
    b = permutation_importance(model, X, y, repeats=5, seed=2)
    assert np.array_equal(a, b)
    c = permutation_importance(model, X, y, repeats=5, seed=3)
    assert not np.array_equal(a, c)


def test_permutation_importance_rejects_bad_repeats():
    X, y = _signal_data()
    model = DecisionTreeClassifier().fit(X, y)
    with pytest.raises(ValueError):
        permutation_importance(model, X, y, repeats=0)


def test_combined_importance_is_elementwise_mean():
    report = combined_importance(
        np.array([1.0, 0.0]),
        np.array([0.0, 1.0]),
        feature_names=("a", "b"),
    )
    assert report.combined == (0.5, 0.5)
    assert report.impurity == (1.0, 0.0)
    assert report.permutation == (0.0, 1.0)


def test_combined_importance_renormalizes_inputs():
    report = combined_importance(
        np.array([2.0, 2.0]),
        np.array([3.0, 1.0]),
        feature_names=("a", "b"),
    )
    assert report.impurity == (0.5, 0.5)
    assert report.permutation == (0.75, 0.25)
    assert report.combined == (0.625, 0.375)


def test_combined_importance_length_mismatch():
    with pytest.raises(ValueError):
        combined_importance(
            np.array([1.0]), np.array([0.5, 0.5]), feature_names=("a",)
        )


def test_report_rows_ranked_descending_with_stable_ties():
    report = ImportanceReport(
        feature_names=("a", "b", "c"),
        impurity=(0.2, 0.3, 0.5),
        permutation=(0.4, 0.3, 0.3),
        combined=(0.3, 0.3, 0.4),
    )
    rows = report.ranked_rows()
    assert [r.feature for r in rows] == ["c", "a", "b"]
    assert rows[0].combined == 0.4


def test_report_rejects_wrong_lengths():
    with pytest.raises(ValueError):
        ImportanceReport(
            feature_names=("a", "b"),
            impurity=(1.0,),
            permutation=(0.5, 0.5),
            combined=(0.5, 0.5),
        )


def test_dual_importance_ranks_signal_feature_first():
    X, y = _signal_data(n=80)
    report = dual_importance(
        X,
        y,
        rf_params={"n_trees": 10},
        iterations=5,
        seed=0,
        feature_names=("f0", "f1", "f2", "f3"),
    )
    rows = report.ranked_rows()
    assert rows[0].feature == "f0"
    assert sum(report.impurity) == pytest.approx(1.0, abs=1e-12)
    assert sum(report.permutation) == pytest.approx(1.0, abs=1e-12)
    assert sum(report.combined) == pytest.approx(1.0, abs=1e-12)


def test_dual_importance_deterministic():
    X, y = _signal_data(n=40)
    kwargs = dict(
        rf_params={"n_trees": 5},
        iterations=3,
        seed=11,
        feature_names=("f0", "f1", "f2", "f3"),
    )
    assert dual_importance(X, y, **kwargs) == dual_importance(X, y, **kwargs)


def test_dual_importance_default_feature_names_require_14_columns():
    X, y = _signal_data(n_features=4)
    with pytest.raises(SchemaMismatch):
        dual_importance(X, y, iterations=1)
    assert len(FEATURE_NAMES) == 14


def test_dual_importance_rejects_bad_iterations():
    X, y = _signal_data()
    with pytest.raises(ValueError):
        dual_importance(
            X, y, iterations=0, feature_names=("f0", "f1", "f2", "f3")
        )
