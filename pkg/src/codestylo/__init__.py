"""Code stylometry toolkit.

Computes static quality metrics from Python source, ingests labeled
corpora into feature datasets, trains from-scratch classifiers to
attribute authorship, and measures how reliable those classifiers stay
under split changes, feature noise, and unseen task categories.
"""

from __future__ import annotations

from .boosting import RUSBoostClassifier
from .corpus import (
    Author,
    Category,
    Dataset,
    Sample,
    SplitSpec,
    ingest_corpus,
    read_features,
    stratified_split,
    write_features,
)
from .errors import (
    BadK,
    CodestyloError,
    DegenerateInput,
    DegenerateSplit,
    EmptyCorpus,
    GenerationFailed,
    LengthMismatch,
    LexError,
    NoCodeBlock,
    NotFitted,
    SchemaMismatch,
    TransportError,
    UnknownCategory,
    WrongModelKind,
)
from .evaluation import ClassMetrics, EvalReport, evaluate
from .forest import RandomForestClassifier
from .genharness import (
    EndpointConfig,
    GenerationOutcome,
    HttpChatEndpoint,
    PromptRecord,
    batch_generate,
    extract_code,
    read_manifest,
    render_prompt,
)
from .importance import (
    ImportanceReport,
    combined_importance,
    dual_importance,
    impurity_importance,
    permutation_importance,
)
from .lexing import classify_lines, detokenize, tokenize
from .metrics import (
    FEATURE_NAMES,
    N_FEATURES,
    MetricVector,
    extract_metrics,
    extract_metrics_from_file,
)
from .model_io import MODEL_KINDS, load_model, make_model, save_model
from .naive_bayes import GaussianNBClassifier
from .neighbors import KNNClassifier
from .reliability import (
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
from .selection import GridSearchResult, default_grid, grid_search
from .synth import write_synthetic_corpus
from .tree import DecisionTreeClassifier

__version__ = "0.1.0"

__all__ = [
    "Author",
    "BadK",
    "Category",
    "ClassMetrics",
    "CodestyloError",
    "Dataset",
    "DecisionTreeClassifier",
    "DEFAULT_NOISE_SIGMAS",
    "DegenerateInput",
    "DegenerateSplit",
    "EmptyCorpus",
    "EndpointConfig",
    "EvalReport",
    "FEATURE_NAMES",
    "GaussianNBClassifier",
    "GenerationFailed",
    "GenerationOutcome",
    "GridSearchResult",
    "HttpChatEndpoint",
    "ImportanceReport",
    "KNNClassifier",
    "LengthMismatch",
    "LexError",
    "MetricVector",
    "MODEL_KINDS",
    "N_FEATURES",
    "NoCodeBlock",
    "NotFitted",
    "PromptRecord",
    "RandomForestClassifier",
    "RUSBoostClassifier",
    "Sample",
    "SchemaMismatch",
    "SplitSpec",
    "SPLIT_SWEEP_FRACTIONS",
    "SweepCurve",
    "SweepPoint",
    "TransportError",
    "UnknownCategory",
    "WrongModelKind",
    "batch_generate",
    "category_holdout_eval",
    "classify_lines",
    "combined_importance",
    "default_grid",
    "detokenize",
    "dual_importance",
    "evaluate",
    "extract_code",
    "extract_metrics",
    "extract_metrics_from_file",
    "feature_scales",
    "gaussian_noise_sweep",
    "grid_search",
    "impurity_importance",
    "ingest_corpus",
    "load_model",
    "make_model",
    "per_category_eval",
    "permutation_importance",
    "read_features",
    "read_manifest",
    "render_prompt",
    "save_model",
    "split_ratio_sweep",
    "stratified_split",
    "tokenize",
    "write_features",
    "write_synthetic_corpus",
    "__version__",
]
