from __future__ import annotations

from pathlib import Path

import pytest

from codestylo.corpus import (
    Author,
    Category,
    SplitSpec,
    ingest_corpus,
    stratified_split,
)
from codestylo.forest import RandomForestClassifier
from codestylo.metrics import extract_metrics
from codestylo.synth import CATEGORY_CYCLE, write_synthetic_corpus


def test_default_corpus_has_sixty_files(tmp_path):
    written = write_synthetic_corpus(tmp_path)
    assert len(written) == 60
    assert all(p.exists() for p in written)


def test_layout_and_naming(tmp_path):
    write_synthetic_corpus(tmp_path, n_prompts=5)
    for index, category in enumerate(CATEGORY_CYCLE):
        prompt_dir = tmp_path / category.value / f"p{index:03d}"
        assert (prompt_dir / "chatgpt.py").is_file()
        assert (prompt_dir / "human.py").is_file()


def test_category_cycle_covers_all_five_evenly(tmp_path):
    written = write_synthetic_corpus(tmp_path, n_prompts=30)
    per_category = {c: 0 for c in Category}
    for path in written:
        per_category[Category(path.parents[1].name)] += 1
    assert all(count == 12 for count in per_category.values())


def test_generation_is_byte_deterministic(tmp_path):
    first = tmp_path / "a"
    second = tmp_path / "b"
    write_synthetic_corpus(first, n_prompts=10, seed=4)
    write_synthetic_corpus(second, n_prompts=10, seed=4)
    files = sorted(p.relative_to(first) for p in first.rglob("*.py"))
    assert len(files) == 20
    for rel in files:
        assert (first / rel).read_bytes() == (second / rel).read_bytes()


def test_different_seeds_differ(tmp_path):
    write_synthetic_corpus(tmp_path / "a", n_prompts=4, seed=0)
    write_synthetic_corpus(tmp_path / "b", n_prompts=4, seed=1)
    a = sorted((tmp_path / "a").rglob("*.py"))
    b = sorted((tmp_path / "b").rglob("*.py"))
    assert any(x.read_bytes() != y.read_bytes() for x, y in zip(a, b))


def test_rejects_nonpositive_prompt_count(tmp_path):
    with pytest.raises(ValueError):
        write_synthetic_corpus(tmp_path, n_prompts=0)


def test_all_files_lex_and_ingest_cleanly(tmp_path):
    write_synthetic_corpus(tmp_path, n_prompts=10)
    dataset, diagnostics = ingest_corpus(tmp_path)
    assert diagnostics == []
    assert len(dataset) == 20


def test_archetypes_have_distinct_structure(tmp_path):
    written = write_synthetic_corpus(tmp_path, n_prompts=15)
    for path in written:
        vector = extract_metrics(path.read_text(encoding="utf-8"))
        author = Author(path.stem)
        if author is Author.CHATGPT:
            assert 3 <= vector.n_functions <= 6
            assert 4 <= vector.n_comments <= 10
        else:
            assert vector.n_functions <= 1
            assert vector.n_comments <= 2
            assert 35 <= vector.n_lines <= 70


def test_bundled_corpus_matches_generator_output(tmp_path):
    bundled = Path(__file__).resolve().parents[1] / "data" / "synthetic_corpus"
    assert bundled.is_dir(), "bundled corpus missing: data/synthetic_corpus"
    write_synthetic_corpus(tmp_path, n_prompts=30, seed=0)
    bundled_files = sorted(
        p.relative_to(bundled) for p in bundled.rglob("*.py")
    )
    fresh_files = sorted(
        p.relative_to(tmp_path) for p in tmp_path.rglob("*.py")
    )
    assert bundled_files == fresh_files
    assert len(bundled_files) == 60
    for rel in bundled_files:
        assert (bundled / rel).read_bytes() == (tmp_path / rel).read_bytes()


def test_archetypes_are_learnable(tmp_path):
    write_synthetic_corpus(tmp_path, n_prompts=30)
    dataset, _ = ingest_corpus(tmp_path)
    train, test = stratified_split(dataset, SplitSpec(0.8, seed=0))
    model = RandomForestClassifier(n_trees=20, seed=0)
    model.fit(train.feature_matrix(), train.labels())
    predictions = model.predict(test.feature_matrix())
    accuracy = (predictions == test.labels()).mean()
    assert accuracy >= 0.9
