"""Model serialization round-trips and schema validation."""

from __future__ import annotations

import json

import numpy as np
import pytest

from codestylo.boosting import RUSBoostClassifier
from codestylo.errors import NotFitted, SchemaMismatch
from codestylo.forest import RandomForestClassifier
from codestylo.model_io import (
    MODEL_KINDS,
    MODEL_SCHEMA,
    load_model,
    make_model,
    model_kind,
    save_model,
)
from codestylo.naive_bayes import GaussianNBClassifier
from codestylo.neighbors import KNNClassifier
from codestylo.tree import DecisionTreeClassifier


def training_data(seed=0):
    rng = np.random.default_rng(seed)
    positive = rng.normal(0.0, 1.5, size=(25, 5))
    negative = rng.normal(2.5, 1.5, size=(25, 5))
    X = np.vstack([positive, negative])
    y = ["chatgpt"] * 25 + ["human"] * 25
    return X, y


def fitted_models():
    X, y = training_data()
    return X, [
        DecisionTreeClassifier(max_depth=4).fit(X, y),
        RandomForestClassifier(n_trees=7, seed=3).fit(X, y),
        RUSBoostClassifier(n_rounds=6, seed=1).fit(X, y),
        GaussianNBClassifier().fit(X, y),
        KNNClassifier(k=3).fit(X, y),
    ]


def test_every_kind_round_trips_with_identical_predictions(tmp_path):
    X, models = fitted_models()
    probe = np.random.default_rng(9).normal(1.0, 2.0, size=(40, 5))
    for model in models:
        kind = model_kind(model)
        path = tmp_path / f"{kind}.json"
        save_model(model, path)
        restored = load_model(path)
        assert type(restored) is type(model)
        assert restored.get_params() == model.get_params()
        assert tuple(restored.classes_) == tuple(model.classes_)
        assert np.array_equal(restored.predict(probe), model.predict(probe))
        assert np.array_equal(
            restored.predict_score(probe), model.predict_score(probe)
        )


def test_saved_files_are_byte_deterministic(tmp_path):
    X, models = fitted_models()
    first = tmp_path / "a.json"
    second = tmp_path / "b.json"
    save_model(models[1], first)
    save_model(models[1], second)
    assert first.read_bytes() == second.read_bytes()


def test_float_state_survives_exactly(tmp_path):
    X, models = fitted_models()
    knn = models[4]
    path = tmp_path / "knn.json"
    save_model(knn, path)
    restored = load_model(path)
    assert np.array_equal(restored.train_scaled_, knn.train_scaled_)
    assert np.array_equal(restored.feature_stds_, knn.feature_stds_)
    gnb = models[3]
    save_model(gnb, path)
    restored = load_model(path)
    assert np.array_equal(restored.variances_, gnb.variances_)


def test_unfitted_model_cannot_be_saved(tmp_path):
    with pytest.raises(NotFitted):
        save_model(DecisionTreeClassifier(), tmp_path / "m.json")


def test_schema_tag_is_checked(tmp_path):
    X, models = fitted_models()
    path = tmp_path / "m.json"
    save_model(models[0], path)
    payload = json.loads(path.read_text(encoding="utf-8"))
    assert payload["schema"] == MODEL_SCHEMA
    payload["schema"] = "something-else/9"
    path.write_text(json.dumps(payload), encoding="utf-8")
    with pytest.raises(SchemaMismatch):
        load_model(path)


def test_unknown_kind_is_rejected(tmp_path):
    X, models = fitted_models()
    path = tmp_path / "m.json"
    save_model(models[0], path)
    payload = json.loads(path.read_text(encoding="utf-8"))
    payload["kind"] = "svm"
    path.write_text(json.dumps(payload), encoding="utf-8")
    with pytest.raises(SchemaMismatch):
        load_model(path)


def test_truncated_payload_is_rejected(tmp_path):
    X, models = fitted_models()
    path = tmp_path / "m.json"
    save_model(models[0], path)
    payload = json.loads(path.read_text(encoding="utf-8"))
    del payload["learned"]["tree"]
    path.write_text(json.dumps(payload), encoding="utf-8")
    with pytest.raises(SchemaMismatch):
        load_model(path)


def test_non_json_file_is_rejected(tmp_path):
    path = tmp_path / "m.json"
    path.write_text("not json at all", encoding="utf-8")
    with pytest.raises(SchemaMismatch):
        load_model(path)


def test_make_model_constructs_each_kind():
    for kind in MODEL_KINDS:
        model = make_model(kind, seed=5)
        params = model.get_params()
        if "seed" in params:
            assert params["seed"] == 5


def test_make_model_explicit_seed_wins():
    model = make_model("rf", {"seed": 11}, seed=5)
    assert model.get_params()["seed"] == 11


def test_make_model_rejects_unknown_kind():
    with pytest.raises(SchemaMismatch):
        make_model("perceptron")
