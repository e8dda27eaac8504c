from __future__ import annotations

import json

import pytest
import requests

from codestylo import cli, genharness
from codestylo.corpus import read_features
from codestylo.metrics import FEATURE_NAMES, extract_metrics
from codestylo.model_io import load_model
from codestylo.synth import write_synthetic_corpus

GOOD_SOURCE = "def f(x):\n    # doubles x\n    return x * 2\n"


@pytest.fixture(scope="module")
def corpus_root(tmp_path_factory):
    root = tmp_path_factory.mktemp("corpus")
    write_synthetic_corpus(root, n_prompts=30, seed=0)
    return root


@pytest.fixture(scope="module")
def features_csv(tmp_path_factory, corpus_root):
    path = tmp_path_factory.mktemp("features") / "features.csv"
    assert cli.main(["featurize", str(corpus_root), "--out", str(path)]) == 0
    return path


@pytest.fixture()
def model_file(tmp_path, features_csv):
    path = tmp_path / "model.json"
    code = cli.main(
        [
            "train",
            str(features_csv),
            "--model",
            "dt",
            "--out",
            str(path),
        ]
    )
    assert code == 0
    return path


# --- usage errors ---------------------------------------------------------


def test_no_subcommand_is_usage_error(capsys):
    assert cli.main([]) == 1
    assert "error" in capsys.readouterr().err


def test_unknown_subcommand_is_usage_error(capsys):
    assert cli.main(["frobnicate"]) == 1


def test_missing_required_option_is_usage_error(tmp_path):
    assert cli.main(["train", str(tmp_path / "f.csv")]) == 1


def test_invalid_params_json_is_usage_error(tmp_path, features_csv):
    code = cli.main(
        [
            "train",
            str(features_csv),
            "--model",
            "dt",
            "--out",
            str(tmp_path / "m.json"),
            "--params",
            "{not json",
        ]
    )
    assert code == 1


def test_out_of_range_fraction_is_usage_error(tmp_path, features_csv):
    code = cli.main(
        [
            "train",
            str(features_csv),
            "--model",
            "dt",
            "--out",
            str(tmp_path / "m.json"),
            "--train-fraction",
            "1.5",
        ]
    )
    assert code == 1


def test_unknown_model_kind_is_usage_error(tmp_path, features_csv):
    code = cli.main(
        [
            "train",
            str(features_csv),
            "--model",
            "svm",
            "--out",
            str(tmp_path / "m.json"),
        ]
    )
    assert code == 1


def test_help_exits_zero():
    with pytest.raises(SystemExit) as excinfo:
        cli.main(["--help"])
    assert excinfo.value.code == 0


# --- analyze ----------------------------------------------------------------


def test_analyze_table_lists_all_metrics(tmp_path, capsys):
    source = tmp_path / "good.py"
    source.write_text(GOOD_SOURCE, encoding="utf-8")
    assert cli.main(["analyze", str(source)]) == 0
    out = capsys.readouterr().out
    assert str(source) in out
    for name in FEATURE_NAMES:
        assert name in out


def test_analyze_json_matches_library_values(tmp_path, capsys):
    source = tmp_path / "good.py"
    source.write_text(GOOD_SOURCE, encoding="utf-8")
    assert cli.main(["analyze", str(source), "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    expected = extract_metrics(GOOD_SOURCE).as_dict()
    assert payload["files"][0]["metrics"] == expected


def test_analyze_missing_file_exits_2(tmp_path, capsys):
    assert cli.main(["analyze", str(tmp_path / "absent.py")]) == 2
    assert "absent.py" in capsys.readouterr().err


def test_analyze_unlexable_file_exits_3(tmp_path, capsys):
    bad = tmp_path / "bad.py"
    bad.write_text('x = "unterminated\n', encoding="utf-8")
    assert cli.main(["analyze", str(bad)]) == 3
    assert "bad.py" in capsys.readouterr().err


def test_analyze_lex_failure_outranks_io_failure(tmp_path):
    bad = tmp_path / "bad.py"
    bad.write_text('x = "unterminated\n', encoding="utf-8")
    missing = tmp_path / "absent.py"
    assert cli.main(["analyze", str(bad), str(missing)]) == 3


def test_analyze_good_files_still_printed_on_partial_failure(
    tmp_path, capsys
):
    good = tmp_path / "good.py"
    good.write_text(GOOD_SOURCE, encoding="utf-8")
    code = cli.main(["analyze", str(good), str(tmp_path / "absent.py")])
    captured = capsys.readouterr()
    assert code == 2
    assert str(good) in captured.out


# --- featurize --------------------------------------------------------------


def test_featurize_writes_feature_csv(tmp_path, corpus_root, capsys):
    out = tmp_path / "features.csv"
    assert cli.main(["featurize", str(corpus_root), "--out", str(out)]) == 0
    assert "wrote 60 samples" in capsys.readouterr().out
    assert len(read_features(out)) == 60


def test_featurize_skips_bad_files_with_diagnostics(tmp_path, capsys):
    root = tmp_path / "corpus"
    target = root / "ADS" / "p000"
    target.mkdir(parents=True)
    (target / "chatgpt.py").write_text("x = 1\n", encoding="utf-8")
    (target / "human.py").write_text('y = "broken\n', encoding="utf-8")
    out = tmp_path / "features.csv"
    assert cli.main(["featurize", str(root), "--out", str(out)]) == 0
    captured = capsys.readouterr()
    assert "skipped" in captured.err
    assert len(read_features(out)) == 1


def test_featurize_missing_root_exits_2(tmp_path):
    code = cli.main(
        [
            "featurize",
            str(tmp_path / "nowhere"),
            "--out",
            str(tmp_path / "f.csv"),
        ]
    )
    assert code == 2


def test_featurize_empty_corpus_exits_4(tmp_path):
    root = tmp_path / "corpus"
    root.mkdir()
    code = cli.main(
        ["featurize", str(root), "--out", str(tmp_path / "f.csv")]
    )
    assert code == 4


# --- train / evaluate -------------------------------------------------------


def test_train_saves_loadable_model_and_reports(
    tmp_path, features_csv, capsys
):
    out = tmp_path / "model.json"
    code = cli.main(
        ["train", str(features_csv), "--model", "dt", "--out", str(out)]
    )
    assert code == 0
    captured = capsys.readouterr()
    assert "holdout evaluation" in captured.out
    model = load_model(out)
    assert model.classes_[0] == "chatgpt"


def test_train_full_data_skips_holdout(tmp_path, features_csv, capsys):
    out = tmp_path / "m.json"
    code = cli.main(
        [
            "train",
            str(features_csv),
            "--model",
            "gnb",
            "--out",
            str(out),
            "--train-fraction",
            "1.0",
        ]
    )
    assert code == 0
    assert "no holdout evaluation" in capsys.readouterr().out


def test_train_grid_search_reports_chosen_params(
    tmp_path, features_csv, capsys
):
    out = tmp_path / "m.json"
    code = cli.main(
        [
            "train",
            str(features_csv),
            "--model",
            "knn",
            "--out",
            str(out),
            "--grid",
            "on",
            "--folds",
            "2",
        ]
    )
    assert code == 0
    assert "grid best params" in capsys.readouterr().out
    assert out.exists()


def test_evaluate_prints_report_and_writes_json(
    tmp_path, features_csv, model_file, capsys
):
    report_path = tmp_path / "report.json"
    code = cli.main(
        [
            "evaluate",
            str(features_csv),
            "--model-file",
            str(model_file),
            "--out",
            str(report_path),
        ]
    )
    assert code == 0
    out = capsys.readouterr().out
    assert "accuracy" in out and "confusion" in out
    payload = json.loads(report_path.read_text(encoding="utf-8"))
    assert 0.0 <= payload["accuracy"] <= 1.0
    assert payload["n_samples"] == 60


def test_evaluate_rejects_tampered_features(tmp_path, model_file):
    bad = tmp_path / "bad.csv"
    bad.write_text("id,author\nx,y\n", encoding="utf-8")
    code = cli.main(
        ["evaluate", str(bad), "--model-file", str(model_file)]
    )
    assert code == 4


def test_evaluate_rejects_corrupt_model_file(tmp_path, features_csv):
    bad = tmp_path / "model.json"
    bad.write_text("{}", encoding="utf-8")
    code = cli.main(
        ["evaluate", str(features_csv), "--model-file", str(bad)]
    )
    assert code == 4


# --- detect -----------------------------------------------------------------


def test_detect_labels_files(tmp_path, model_file, capsys):
    source = tmp_path / "sample.py"
    source.write_text(GOOD_SOURCE, encoding="utf-8")
    assert cli.main(["detect", str(model_file), str(source)]) == 0
    line = capsys.readouterr().out.strip()
    parts = line.split()
    assert parts[0] == str(source)
    assert parts[1] in {"chatgpt", "human"}
    assert 0.0 <= float(parts[2]) <= 1.0


def test_detect_json_format(tmp_path, model_file, capsys):
    source = tmp_path / "sample.py"
    source.write_text(GOOD_SOURCE, encoding="utf-8")
    code = cli.main(
        ["detect", str(model_file), str(source), "--format", "json"]
    )
    assert code == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["files"][0]["label"] in {"chatgpt", "human"}


def test_detect_missing_file_exits_2(tmp_path, model_file):
    assert cli.main(["detect", str(model_file), str(tmp_path / "no.py")]) == 2


# --- reliability ------------------------------------------------------------


def test_reliability_split_sweep_has_18_points(
    tmp_path, features_csv, capsys
):
    out = tmp_path / "sweep.json"
    code = cli.main(
        [
            "reliability",
            str(features_csv),
            "--test",
            "split",
            "--model",
            "gnb",
            "--out",
            str(out),
        ]
    )
    assert code == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0].startswith("train_fraction")
    assert len(lines) == 19
    payload = json.loads(out.read_text(encoding="utf-8"))
    assert len(payload["points"]) == 18


def test_reliability_noise_sweep_has_21_points(
    tmp_path, features_csv, capsys
):
    out = tmp_path / "noise.json"
    code = cli.main(
        [
            "reliability",
            str(features_csv),
            "--test",
            "noise",
            "--model",
            "dt",
            "--out",
            str(out),
        ]
    )
    assert code == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0].startswith("noise_sigma")
    assert len(lines) == 22
    payload = json.loads(out.read_text(encoding="utf-8"))
    assert [p["x"] for p in payload["points"]][:3] == [0.0, 0.1, 0.2]


def test_reliability_category_covers_all_five(features_csv, capsys):
    code = cli.main(
        [
            "reliability",
            str(features_csv),
            "--test",
            "category",
            "--model",
            "dt",
        ]
    )
    assert code == 0
    out = capsys.readouterr().out
    for name in ("ADS", "DA", "M", "OO", "VGD"):
        assert f"{name}:" in out


def test_reliability_category_holdout_mode(features_csv, capsys):
    code = cli.main(
        [
            "reliability",
            str(features_csv),
            "--test",
            "category",
            "--model",
            "dt",
            "--holdout",
        ]
    )
    assert code == 0
    assert "VGD:" in capsys.readouterr().out


# --- importance -------------------------------------------------------------


def test_importance_ranks_all_features(tmp_path, features_csv, capsys):
    out = tmp_path / "importance.json"
    code = cli.main(
        [
            "importance",
            str(features_csv),
            "--repeats",
            "2",
            "--rf-params",
            '{"n_trees": 4}',
            "--out",
            str(out),
        ]
    )
    assert code == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert len(lines) == 1 + len(FEATURE_NAMES)
    payload = json.loads(out.read_text(encoding="utf-8"))
    assert sorted(payload["features"]) == sorted(FEATURE_NAMES)
    assert sum(payload["combined"]) == pytest.approx(1.0, abs=1e-12)


# --- synth ------------------------------------------------------------------


def test_synth_writes_corpus(tmp_path, capsys):
    out_dir = tmp_path / "corpus"
    assert cli.main(["synth", str(out_dir), "--prompts", "5"]) == 0
    assert "wrote 10 files" in capsys.readouterr().out
    assert len(list(out_dir.rglob("*.py"))) == 10


# --- generate ---------------------------------------------------------------


def _write_manifest(path):
    path.write_text(
        "id,category,preamble,prompt,output_formatting,exporting\n"
        "p001,ADS,Preamble.,Write a stack.,One block.,stack.py\n"
        "p002,DA,Preamble.,Sum a column.,One block.,sums.py\n",
        encoding="utf-8",
    )


def test_generate_writes_corpus_files(tmp_path, capsys, monkeypatch):
    manifest = tmp_path / "manifest.csv"
    _write_manifest(manifest)
    monkeypatch.setenv("TEST_GEN_TOKEN", "tok-value-123")

    class FakeResponse:
        def raise_for_status(self):
            pass

        def json(self):
            return {
                "choices": [
                    {"message": {"content": "```python\nx = 1\n```"}}
                ]
            }

    monkeypatch.setattr(
        genharness.requests, "post", lambda *a, **k: FakeResponse()
    )
    corpus = tmp_path / "corpus"
    code = cli.main(
        [
            "generate",
            str(manifest),
            "--corpus-root",
            str(corpus),
            "--endpoint-url",
            "http://example.invalid/v1/chat",
            "--model-name",
            "test-model",
            "--auth-env",
            "TEST_GEN_TOKEN",
            "--backoff",
            "0",
        ]
    )
    captured = capsys.readouterr()
    assert code == 0
    assert "wrote 2/2 files" in captured.out
    assert (corpus / "ADS" / "p001" / "chatgpt.py").read_text(
        encoding="utf-8"
    ) == "x = 1\n"
    assert "tok-value-123" not in captured.out + captured.err


def test_generate_all_failures_exit_2(tmp_path, capsys, monkeypatch):
    manifest = tmp_path / "manifest.csv"
    _write_manifest(manifest)
    monkeypatch.setenv("TEST_GEN_TOKEN", "tok-value-123")

    def refuse(*args, **kwargs):
        raise requests.ConnectionError("connection refused")

    monkeypatch.setattr(genharness.requests, "post", refuse)
    code = cli.main(
        [
            "generate",
            str(manifest),
            "--corpus-root",
            str(tmp_path / "corpus"),
            "--endpoint-url",
            "http://example.invalid/v1/chat",
            "--model-name",
            "test-model",
            "--auth-env",
            "TEST_GEN_TOKEN",
            "--max-retries",
            "0",
            "--backoff",
            "0",
        ]
    )
    captured = capsys.readouterr()
    assert code == 2
    assert "tok-value-123" not in captured.out + captured.err


def test_generate_partial_failure_still_succeeds(
    tmp_path, capsys, monkeypatch
):
    manifest = tmp_path / "manifest.csv"
    _write_manifest(manifest)
    monkeypatch.setenv("TEST_GEN_TOKEN", "tok-value-123")
    replies = iter(
        [
            {"choices": [{"message": {"content": "```python\na = 1\n```"}}]},
            {"choices": [{"message": {"content": "no code, sorry"}}]},
        ]
    )

    class FakeResponse:
        def __init__(self, payload):
            self.payload = payload

        def raise_for_status(self):
            pass

        def json(self):
            return self.payload

    monkeypatch.setattr(
        genharness.requests,
        "post",
        lambda *a, **k: FakeResponse(next(replies)),
    )
    code = cli.main(
        [
            "generate",
            str(manifest),
            "--corpus-root",
            str(tmp_path / "corpus"),
            "--endpoint-url",
            "http://example.invalid/v1/chat",
            "--model-name",
            "test-model",
            "--auth-env",
            "TEST_GEN_TOKEN",
            "--max-retries",
            "0",
            "--backoff",
            "0",
        ]
    )
    captured = capsys.readouterr()
    assert code == 0
    assert "wrote 1/2 files" in captured.out
    assert "p002 failed" in captured.err


def test_generate_bad_manifest_exits_4(tmp_path):
    manifest = tmp_path / "manifest.csv"
    manifest.write_text("id,category\np1,ADS\n", encoding="utf-8")
    code = cli.main(
        [
            "generate",
            str(manifest),
            "--corpus-root",
            str(tmp_path / "corpus"),
            "--endpoint-url",
            "http://example.invalid",
            "--model-name",
            "m",
        ]
    )
    assert code == 4
