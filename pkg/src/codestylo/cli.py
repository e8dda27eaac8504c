"""Command-line interface.

Exit codes: 0 success, 1 usage error, 2 I/O or transport failure,
3 source that cannot be lexed, 4 data or protocol error (bad schema,
degenerate splits, wrong model kind, and similar).
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from .corpus import (
    SplitSpec,
    ingest_corpus,
    read_features,
    stratified_split,
    write_features,
)
from .errors import (
    BadK,
    DegenerateInput,
    DegenerateSplit,
    EmptyCorpus,
    GenerationFailed,
    LengthMismatch,
    LexError,
    SchemaMismatch,
    UnknownCategory,
    WrongModelKind,
)
from .evaluation import evaluate
from .genharness import (
    EndpointConfig,
    HttpChatEndpoint,
    batch_generate,
    read_manifest,
)
from .importance import dual_importance
from .ioutil import atomic_write_text
from .metrics import FEATURE_NAMES, extract_metrics_from_file
from .model_io import MODEL_KINDS, load_model, make_model, save_model
from .reliability import (
    category_holdout_eval,
    feature_scales,
    gaussian_noise_sweep,
    per_category_eval,
    split_ratio_sweep,
)
from .selection import grid_search
from .synth import write_synthetic_corpus

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_IO = 2
EXIT_LEX = 3
EXIT_DATA = 4

_DATA_ERRORS = (
    SchemaMismatch,
    EmptyCorpus,
    UnknownCategory,
    DegenerateSplit,
    DegenerateInput,
    BadK,
    LengthMismatch,
    WrongModelKind,
)


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """Parser whose usage failures raise instead of calling sys.exit."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise _UsageError(message)


def _params_arg(text: str) -> dict:
    try:
        value = json.loads(text)
    except json.JSONDecodeError as exc:
        raise argparse.ArgumentTypeError(f"not valid JSON: {exc}")
    if not isinstance(value, dict):
        raise argparse.ArgumentTypeError("must be a JSON object")
    return value


def _fraction_arg(text: str) -> float:
    value = float(text)
    if not 0.0 < value <= 1.0:
        raise argparse.ArgumentTypeError("must be in (0, 1]")
    return value


def _seeds_arg(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(
            "must be comma-separated integers"
        ) from None


def _fmt(value) -> str:
    return repr(float(value)) if isinstance(value, float) else str(value)


def _json_text(payload) -> str:
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def _print_report(report, heading="evaluation"):
    print(heading)
    print(f"  n_samples   {report.n_samples}")
    print(f"  accuracy    {report.accuracy!r}")
    print(f"  weighted_f1 {report.weighted_f1!r}")
    print(f"  macro_f1    {report.macro_f1!r}")
    for cm in report.per_class:
        print(
            f"  {cm.label}: precision={cm.precision!r} "
            f"recall={cm.recall!r} f1={cm.f1!r} support={cm.support}"
        )
    order = ",".join(str(label) for label in report.labels)
    print(f"  confusion (rows=true, cols=predicted, order={order})")
    for row in report.confusion:
        print("    " + " ".join(str(v) for v in row))


def _print_curve(curve):
    print(f"{curve.quantity} mean_weighted_f1 mean_accuracy")
    for x, f1, accuracy in curve.to_rows():
        print(f"{x!r} {f1!r} {accuracy!r}")


def _curve_payload(curve) -> dict:
    return {
        "quantity": curve.quantity,
        "points": [
            {
                "x": point.x,
                "mean_weighted_f1": point.mean_weighted_f1,
                "mean_accuracy": point.mean_accuracy,
                "reports": [r.to_dict() for r in point.reports],
            }
            for point in curve.points
        ],
    }


def _metrics_per_file(paths):
    """Extract metrics per path, printing failures to stderr.

    Returns (results, lex_failures, io_failures) where results pairs
    each readable path with its metric vector.
    """
    results = []
    lex_failures = io_failures = 0
    for name in paths:
        try:
            results.append((str(name), extract_metrics_from_file(name)))
        except LexError as exc:
            lex_failures += 1
            print(f"{name}: {exc}", file=sys.stderr)
        except OSError as exc:
            io_failures += 1
            print(f"{name}: {exc}", file=sys.stderr)
    return results, lex_failures, io_failures


def _cmd_analyze(args) -> int:
    results, lex_failures, io_failures = _metrics_per_file(args.files)
    if args.format == "json":
        payload = {
            "files": [
                {"path": name, "metrics": vector.as_dict()}
                for name, vector in results
            ]
        }
        sys.stdout.write(_json_text(payload))
    else:
        for index, (name, vector) in enumerate(results):
            if index:
                print()
            print(name)
            for field in FEATURE_NAMES:
                print(f"  {field:<24} {_fmt(getattr(vector, field))}")
    if lex_failures:
        return EXIT_LEX
    if io_failures:
        return EXIT_IO
    return EXIT_OK


def _cmd_featurize(args) -> int:
    dataset, diagnostics = ingest_corpus(args.root)
    for diag in diagnostics:
        location = str(diag.path)
        if diag.line is not None:
            location += f" line {diag.line}"
        print(f"skipped {location}: {diag.reason}", file=sys.stderr)
    write_features(dataset, args.out)
    print(f"wrote {len(dataset)} samples to {args.out}")
    return EXIT_OK


def _cmd_train(args) -> int:
    dataset = read_features(args.features)
    if args.train_fraction < 1.0:
        train, test = stratified_split(
            dataset, SplitSpec(args.train_fraction, args.seed)
        )
    else:
        train, test = dataset, None
    X_train = train.feature_matrix()
    y_train = train.labels()
    params = dict(args.params)
    if args.grid == "on":
        result = grid_search(
            X_train, y_train, args.model, seed=args.seed, n_folds=args.folds
        )
        params = dict(result.best_params)
        print(
            f"grid best params: {json.dumps(params, sort_keys=True)} "
            f"(mean weighted F1 {result.best_mean_f1!r})"
        )
    model = make_model(args.model, params, seed=args.seed)
    model.fit(X_train, y_train)
    save_model(model, args.out, feature_names=FEATURE_NAMES)
    print(
        f"trained {args.model} on {len(train)} samples; "
        f"model saved to {args.out}"
    )
    if test is not None:
        report = evaluate(model.predict(test.feature_matrix()), test.labels())
        _print_report(report, heading=f"holdout evaluation ({len(test)} samples)")
    else:
        print("trained on all samples; no holdout evaluation")
    return EXIT_OK


def _cmd_evaluate(args) -> int:
    dataset = read_features(args.features)
    model = load_model(args.model_file)
    report = evaluate(model.predict(dataset.feature_matrix()), dataset.labels())
    _print_report(report)
    if args.out:
        atomic_write_text(args.out, _json_text(report.to_dict()))
    return EXIT_OK


def _cmd_reliability(args) -> int:
    dataset = read_features(args.features)
    if args.test == "split":
        curve = split_ratio_sweep(
            dataset, args.model, args.params, seeds=args.seeds
        )
        _print_curve(curve)
        payload = _curve_payload(curve)
    elif args.test == "noise":
        train, test = stratified_split(
            dataset, SplitSpec(args.train_fraction, args.seed)
        )
        model = make_model(args.model, args.params, seed=args.seed)
        model.fit(train.feature_matrix(), train.labels())
        curve = gaussian_noise_sweep(
            model,
            feature_scales(train.feature_matrix()),
            test.feature_matrix(),
            test.labels(),
            seed=args.seed,
        )
        _print_curve(curve)
        payload = _curve_payload(curve)
    else:
        if args.holdout:
            results = category_holdout_eval(
                dataset, args.model, args.params, seed=args.seed
            )
        else:
            train, test = stratified_split(
                dataset, SplitSpec(args.train_fraction, args.seed)
            )
            model = make_model(args.model, args.params, seed=args.seed)
            model.fit(train.feature_matrix(), train.labels())
            results = per_category_eval(model, test)
        for category, report in results.items():
            print(
                f"{category.value}: n={report.n_samples} "
                f"accuracy={report.accuracy!r} "
                f"weighted_f1={report.weighted_f1!r}"
            )
        payload = {
            "categories": {
                category.value: report.to_dict()
                for category, report in results.items()
            }
        }
    if args.out:
        atomic_write_text(args.out, _json_text(payload))
    return EXIT_OK


def _cmd_importance(args) -> int:
    dataset = read_features(args.features)
    report = dual_importance(
        dataset.feature_matrix(),
        dataset.labels(),
        rf_params=args.rf_params,
        iterations=args.repeats,
        seed=args.seed,
    )
    print("feature impurity permutation combined")
    for row in report.ranked_rows():
        print(
            f"{row.feature} {row.impurity!r} "
            f"{row.permutation!r} {row.combined!r}"
        )
    if args.out:
        atomic_write_text(args.out, _json_text(report.to_dict()))
    return EXIT_OK


def _cmd_detect(args) -> int:
    model = load_model(args.model_file)
    results, lex_failures, io_failures = _metrics_per_file(args.files)
    rows = []
    for name, vector in results:
        X = np.array([vector.as_row()], dtype=np.float64)
        label = str(model.predict(X)[0])
        score = float(model.predict_score(X)[0])
        rows.append((name, label, score))
    if args.format == "json":
        payload = {
            "files": [
                {"path": name, "label": label, "score": score}
                for name, label, score in rows
            ]
        }
        sys.stdout.write(_json_text(payload))
    else:
        for name, label, score in rows:
            print(f"{name} {label} {score!r}")
    if lex_failures:
        return EXIT_LEX
    if io_failures:
        return EXIT_IO
    return EXIT_OK


def _cmd_generate(args) -> int:
    records = read_manifest(args.manifest)
    config = EndpointConfig(
        base_url=args.endpoint_url,
        model=args.model_name,
        auth_env=args.auth_env,
        timeout_s=args.timeout,
    )
    endpoint = HttpChatEndpoint(config)
    outcomes = batch_generate(
        records,
        endpoint,
        args.corpus_root,
        max_retries=args.max_retries,
        backoff_s=args.backoff,
    )
    ok = 0
    for outcome in outcomes:
        if outcome.status == "ok":
            ok += 1
            print(f"{outcome.id} ok retries={outcome.retries} -> {outcome.path}")
        else:
            print(
                f"{outcome.id} failed after {outcome.retries + 1} attempts: "
                f"{outcome.detail}",
                file=sys.stderr,
            )
    print(f"wrote {ok}/{len(outcomes)} files under {args.corpus_root}")
    return EXIT_OK


def _cmd_synth(args) -> int:
    written = write_synthetic_corpus(
        args.out_dir, n_prompts=args.prompts, seed=args.seed
    )
    print(f"wrote {len(written)} files under {args.out_dir}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="codestylo",
        description=(
            "Code stylometry toolkit: static metrics, authorship "
            "classifiers, and reliability protocols."
        ),
    )
    subparsers = parser.add_subparsers(
        dest="command", required=True, metavar="command"
    )

    sub = subparsers.add_parser(
        "analyze", help="print the metric vector of Python source files"
    )
    sub.add_argument("files", nargs="+", help="Python source files")
    sub.add_argument("--format", choices=("table", "json"), default="table")
    sub.set_defaults(func=_cmd_analyze)

    sub = subparsers.add_parser(
        "featurize", help="ingest a labeled corpus into a feature CSV"
    )
    sub.add_argument("root", help="corpus root directory")
    sub.add_argument("--out", required=True, help="feature CSV to write")
    sub.set_defaults(func=_cmd_featurize)

    sub = subparsers.add_parser(
        "train", help="train a classifier from a feature CSV"
    )
    sub.add_argument("features", help="feature CSV")
    sub.add_argument("--model", choices=MODEL_KINDS, required=True)
    sub.add_argument("--out", required=True, help="model JSON to write")
    sub.add_argument(
        "--train-fraction",
        type=_fraction_arg,
        default=0.8,
        help="stratified train share; 1.0 trains on everything (default 0.8)",
    )
    sub.add_argument("--seed", type=int, default=0)
    sub.add_argument(
        "--grid",
        choices=("on", "off"),
        default="off",
        help="cross-validated search over the kind's default grid",
    )
    sub.add_argument(
        "--params",
        type=_params_arg,
        default={},
        help="constructor parameters as a JSON object",
    )
    sub.add_argument(
        "--folds", type=int, default=5, help="grid search CV folds"
    )
    sub.set_defaults(func=_cmd_train)

    sub = subparsers.add_parser(
        "evaluate", help="score a saved model against a feature CSV"
    )
    sub.add_argument("features", help="feature CSV")
    sub.add_argument("--model-file", required=True, help="model JSON")
    sub.add_argument("--out", help="write the report as JSON")
    sub.set_defaults(func=_cmd_evaluate)

    sub = subparsers.add_parser(
        "reliability",
        help="robustness protocols: split sweep, category eval, noise sweep",
    )
    sub.add_argument("features", help="feature CSV")
    sub.add_argument(
        "--test", choices=("split", "category", "noise"), required=True
    )
    sub.add_argument("--model", choices=MODEL_KINDS, required=True)
    sub.add_argument("--params", type=_params_arg, default={})
    sub.add_argument(
        "--seeds",
        type=_seeds_arg,
        default=(0,),
        help="comma-separated seeds for the split sweep",
    )
    sub.add_argument("--seed", type=int, default=0)
    sub.add_argument(
        "--holdout",
        action="store_true",
        help="category test: train on four categories, test on the fifth",
    )
    sub.add_argument("--train-fraction", type=_fraction_arg, default=0.8)
    sub.add_argument("--out", help="write results as JSON")
    sub.set_defaults(func=_cmd_reliability)

    sub = subparsers.add_parser(
        "importance", help="dual feature importance for a random forest"
    )
    sub.add_argument("features", help="feature CSV")
    sub.add_argument("--rf-params", type=_params_arg, default={})
    sub.add_argument(
        "--repeats",
        type=int,
        default=1000,
        help="iterations per importance protocol",
    )
    sub.add_argument("--seed", type=int, default=0)
    sub.add_argument("--out", help="write the report as JSON")
    sub.set_defaults(func=_cmd_importance)

    sub = subparsers.add_parser(
        "detect", help="classify source files with a saved model"
    )
    sub.add_argument("model_file", help="model JSON")
    sub.add_argument("files", nargs="+", help="Python source files")
    sub.add_argument("--format", choices=("table", "json"), default="table")
    sub.set_defaults(func=_cmd_detect)

    sub = subparsers.add_parser(
        "generate",
        help="collect model-written solutions for a prompt manifest",
    )
    sub.add_argument("manifest", help="prompt manifest CSV")
    sub.add_argument("--corpus-root", required=True)
    sub.add_argument("--endpoint-url", required=True)
    sub.add_argument("--model-name", required=True, help="chat model name")
    sub.add_argument(
        "--auth-env",
        default="CHAT_API_TOKEN",
        help="environment variable holding the API token",
    )
    sub.add_argument("--timeout", type=float, default=60.0)
    sub.add_argument("--max-retries", type=int, default=2)
    sub.add_argument("--backoff", type=float, default=1.0)
    sub.set_defaults(func=_cmd_generate)

    sub = subparsers.add_parser(
        "synth", help="write a synthetic two-author corpus"
    )
    sub.add_argument("out_dir", help="corpus root to create")
    sub.add_argument("--prompts", type=int, default=30)
    sub.add_argument("--seed", type=int, default=0)
    sub.set_defaults(func=_cmd_synth)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _UsageError:
        return EXIT_USAGE
    except LexError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LEX
    except GenerationFailed as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (OSError, UnicodeDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except _DATA_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
