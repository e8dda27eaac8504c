"""Model persistence: versioned JSON with exact float round-trips.

The payload keeps hyperparameters and learned state separately, tagged
with a schema string and a kind name, so loading validates the contract
before reconstructing the estimator. Floats serialize through repr, so a
reloaded model predicts bit-identically.
"""

from __future__ import annotations

import json

import numpy as np

from .boosting import RUSBoostClassifier
from .errors import NotFitted, SchemaMismatch
from .forest import RandomForestClassifier
from .ioutil import atomic_write_text
from .naive_bayes import GaussianNBClassifier
from .neighbors import KNNClassifier
from .tree import DecisionTreeClassifier, TreeNode

MODEL_SCHEMA = "codestylo-model/1"

MODEL_KINDS = ("dt", "rf", "rusboost", "gnb", "knn")

_CLASS_BY_KIND = {
    "dt": DecisionTreeClassifier,
    "rf": RandomForestClassifier,
    "rusboost": RUSBoostClassifier,
    "gnb": GaussianNBClassifier,
    "knn": KNNClassifier,
}

_KIND_BY_CLASS = {cls: kind for kind, cls in _CLASS_BY_KIND.items()}


def model_kind(model) -> str:
    """Short kind name for an estimator instance."""
    try:
        return _KIND_BY_CLASS[type(model)]
    except KeyError:
        raise SchemaMismatch(
            f"{type(model).__name__} is not a serializable estimator"
        ) from None


def make_model(kind: str, params: dict | None = None, seed: int | None = None):
    """Construct an estimator by kind name.

    The seed fills the estimator's seed parameter when the kind has one
    and the params do not already pin it.
    """
    try:
        cls = _CLASS_BY_KIND[kind]
    except KeyError:
        raise SchemaMismatch(
            f"unknown model kind {kind!r}; expected one of {MODEL_KINDS}"
        ) from None
    model = cls()
    merged = dict(params or {})
    if seed is not None and "seed" in cls._param_names():
        merged.setdefault("seed", seed)
    return model.set_params(**merged)


def _node_to_dict(node: TreeNode) -> dict:
    payload = {
        "n": node.n_samples,
        "label": node.label_index,
        "positive_fraction": node.positive_fraction,
    }
    if not node.is_leaf:
        payload["feature"] = node.feature
        payload["threshold"] = node.threshold
        payload["left"] = _node_to_dict(node.left)
        payload["right"] = _node_to_dict(node.right)
    return payload


def _node_from_dict(payload: dict) -> TreeNode:
    node = TreeNode(
        n_samples=int(payload["n"]),
        label_index=int(payload["label"]),
        positive_fraction=float(payload["positive_fraction"]),
    )
    if "feature" in payload:
        node.feature = int(payload["feature"])
        node.threshold = float(payload["threshold"])
        node.left = _node_from_dict(payload["left"])
        node.right = _node_from_dict(payload["right"])
    return node


def _plain(value):
    return value.item() if isinstance(value, np.generic) else value


def _learned_state(model) -> dict:
    kind = model_kind(model)
    if kind == "dt":
        return {
            "tree": _node_to_dict(model.root_),
            "impurity_decreases": list(model.impurity_decreases_),
        }
    if kind == "rf":
        return {
            "trees": [_node_to_dict(t) for t in model.trees_],
            "tree_importances": [list(v) for v in model.tree_importances_],
        }
    if kind == "rusboost":
        return {
            "learners": [_node_to_dict(t) for t in model.learners_],
            "alphas": list(model.alphas_),
        }
    if kind == "gnb":
        return {
            "means": [list(row) for row in model.means_],
            "variances": [list(row) for row in model.variances_],
            "priors": list(model.priors_),
        }
    return {
        "train_scaled": [list(row) for row in model.train_scaled_],
        "train_label_indices": [int(i) for i in model.train_label_indices_],
        "feature_means": list(model.feature_means_),
        "feature_stds": list(model.feature_stds_),
    }


def _restore_state(model, kind: str, learned: dict) -> None:
    if kind == "dt":
        model.root_ = _node_from_dict(learned["tree"])
        model.impurity_decreases_ = np.array(
            learned["impurity_decreases"], dtype=np.float64
        )
    elif kind == "rf":
        model.trees_ = [_node_from_dict(t) for t in learned["trees"]]
        model.tree_importances_ = [
            np.array(v, dtype=np.float64) for v in learned["tree_importances"]
        ]
    elif kind == "rusboost":
        model.learners_ = [_node_from_dict(t) for t in learned["learners"]]
        model.alphas_ = [float(a) for a in learned["alphas"]]
    elif kind == "gnb":
        model.means_ = np.array(learned["means"], dtype=np.float64)
        model.variances_ = np.array(learned["variances"], dtype=np.float64)
        model.priors_ = np.array(learned["priors"], dtype=np.float64)
    else:
        model.train_scaled_ = np.array(
            learned["train_scaled"], dtype=np.float64
        )
        model.train_label_indices_ = np.array(
            learned["train_label_indices"], dtype=np.intp
        )
        model.feature_means_ = np.array(
            learned["feature_means"], dtype=np.float64
        )
        model.feature_stds_ = np.array(
            learned["feature_stds"], dtype=np.float64
        )


def save_model(model, path, feature_names=None) -> None:
    """Serialize a fitted estimator to JSON, atomically."""
    if not hasattr(model, "classes_"):
        raise NotFitted("only fitted models can be saved")
    payload = {
        "schema": MODEL_SCHEMA,
        "kind": model_kind(model),
        "params": {k: _plain(v) for k, v in model.get_params().items()},
        "classes": [_plain(c) for c in model.classes_],
        "n_features": int(model.n_features_in_),
        "feature_names": list(feature_names) if feature_names else None,
        "learned": _learned_state(model),
    }
    atomic_write_text(path, json.dumps(payload, indent=2, sort_keys=True))


def load_model(path):
    """Reconstruct an estimator saved by save_model.

    A missing or foreign schema tag, unknown kind, or malformed payload
    raises SchemaMismatch.
    """
    with open(path, encoding="utf-8") as handle:
        try:
            payload = json.load(handle)
        except json.JSONDecodeError as exc:
            raise SchemaMismatch(f"{path}: not valid JSON ({exc})") from None
    if not isinstance(payload, dict) or payload.get("schema") != MODEL_SCHEMA:
        raise SchemaMismatch(
            f"{path}: missing schema tag {MODEL_SCHEMA!r}"
        )
    kind = payload.get("kind")
    try:
        model = make_model(kind, payload["params"])
        model.classes_ = tuple(payload["classes"])
        model.n_features_in_ = int(payload["n_features"])
        _restore_state(model, kind, payload["learned"])
    except (KeyError, TypeError, ValueError) as exc:
        raise SchemaMismatch(f"{path}: malformed model payload ({exc})") from None
    return model
