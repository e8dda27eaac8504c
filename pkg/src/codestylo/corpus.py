"""Labeled corpora, feature datasets, CSV round-trips, and splits.

A corpus on disk is ``<root>/<category>/<prompt-id>/<author>.py`` with
author file names ``chatgpt.py`` and ``human.py``. Ingestion walks that
layout, extracts one metric vector per file, and returns samples in the
canonical order (category, prompt id, author) together with per-file
diagnostics for anything that would not lex.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path

import numpy as np

from .errors import (
    DegenerateSplit,
    EmptyCorpus,
    LexError,
    SchemaMismatch,
    UnknownCategory,
)
from .ioutil import atomic_write_text
from .metrics import FEATURE_NAMES, MetricVector, extract_metrics, load_source
from .randomness import seeded_rng


class Author(Enum):
    CHATGPT = "chatgpt"
    HUMAN = "human"


class Category(Enum):
    ADS = "ADS"
    DA = "DA"
    M = "M"
    OO = "OO"
    VGD = "VGD"


POSITIVE_LABEL = Author.CHATGPT.value

_AUTHOR_FILES = ((Author.CHATGPT, "chatgpt.py"), (Author.HUMAN, "human.py"))

FEATURE_CSV_HEADER = ("id", "author", "category") + FEATURE_NAMES


@dataclass(frozen=True)
class Diagnostic:
    path: str
    reason: str
    line: int | None = None


@dataclass(frozen=True)
class Sample:
    id: str
    author: Author
    category: Category
    features: MetricVector

    def sort_key(self) -> tuple[str, str, str]:
        return (self.category.value, self.id, self.author.value)


@dataclass(frozen=True)
class Dataset:
    samples: tuple[Sample, ...]
    feature_names: tuple[str, ...] = field(default=FEATURE_NAMES)

    def __post_init__(self):
        object.__setattr__(self, "samples", tuple(self.samples))
        seen = set()
        for sample in self.samples:
            key = (sample.id, sample.author)
            if key in seen:
                raise ValueError(
                    f"duplicate sample {sample.id!r} by {sample.author.value}"
                )
            seen.add(key)

    def __len__(self) -> int:
        return len(self.samples)

    def feature_matrix(self) -> np.ndarray:
        if not self.samples:
            return np.empty((0, len(self.feature_names)), dtype=np.float64)
        return np.array(
            [sample.features.as_row() for sample in self.samples],
            dtype=np.float64,
        )

    def labels(self) -> np.ndarray:
        return np.array([s.author.value for s in self.samples], dtype=object)

    def categories(self) -> tuple[Category, ...]:
        present = {s.category for s in self.samples}
        return tuple(c for c in Category if c in present)

    def subset(self, indices) -> "Dataset":
        return Dataset(tuple(self.samples[i] for i in indices))

    def only_category(self, category: Category) -> "Dataset":
        return Dataset(tuple(s for s in self.samples if s.category is category))

    def without_category(self, category: Category) -> "Dataset":
        return Dataset(
            tuple(s for s in self.samples if s.category is not category)
        )

    def count_by_author(self) -> dict[Author, int]:
        counts = {author: 0 for author in Author}
        for sample in self.samples:
            counts[sample.author] += 1
        return counts


@dataclass(frozen=True)
class SplitSpec:
    train_fraction: float
    seed: int = 0


def ingest_corpus(root) -> tuple[Dataset, list[Diagnostic]]:
    """Walk a corpus tree into a Dataset plus per-file diagnostics.

    Unlexable or unreadable files become diagnostics, never samples.
    A directory under the root whose name is not a known category is an
    error; dot-directories are skipped. An ingest that produces zero
    samples raises EmptyCorpus.
    """
    root = Path(root)
    known = {c.value: c for c in Category}
    samples: list[Sample] = []
    diagnostics: list[Diagnostic] = []
    for cat_dir in sorted(p for p in root.iterdir() if p.is_dir()):
        if cat_dir.name.startswith("."):
            continue
        if cat_dir.name not in known:
            raise UnknownCategory(
                f"{cat_dir.name!r} is not one of "
                f"{sorted(known)} (at {cat_dir})"
            )
        category = known[cat_dir.name]
        for prompt_dir in sorted(p for p in cat_dir.iterdir() if p.is_dir()):
            for author, filename in _AUTHOR_FILES:
                source_path = prompt_dir / filename
                if not source_path.is_file():
                    continue
                try:
                    vector = extract_metrics(load_source(source_path))
                except LexError as exc:
                    diagnostics.append(
                        Diagnostic(str(source_path), str(exc), exc.line)
                    )
                except OSError as exc:
                    diagnostics.append(Diagnostic(str(source_path), str(exc)))
                else:
                    samples.append(
                        Sample(prompt_dir.name, author, category, vector)
                    )
    if not samples:
        raise EmptyCorpus(f"no usable samples under {root}")
    samples.sort(key=Sample.sort_key)
    return Dataset(tuple(samples)), diagnostics


def write_features(dataset: Dataset, path) -> None:
    """Write a dataset as CSV with the canonical header, atomically.

    Floats are serialized with repr so read_features restores them bit
    for bit; integer-valued metrics stay integers in the file.
    """
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(FEATURE_CSV_HEADER)
    for sample in dataset.samples:
        row = [sample.id, sample.author.value, sample.category.value]
        for name in FEATURE_NAMES:
            value = getattr(sample.features, name)
            row.append(repr(value) if isinstance(value, float) else str(value))
        writer.writerow(row)
    atomic_write_text(path, buffer.getvalue())


def read_features(path) -> Dataset:
    """Read a feature CSV written by write_features.

    The header must match the canonical layout exactly; any deviation,
    unparseable cell, or duplicate (id, author) pair raises SchemaMismatch.
    """
    with open(path, newline="", encoding="utf-8") as handle:
        reader = csv.reader(handle)
        try:
            header = next(reader)
        except StopIteration:
            raise SchemaMismatch(f"{path}: empty file, expected header") from None
        if tuple(header) != FEATURE_CSV_HEADER:
            raise SchemaMismatch(
                f"{path}: header {header!r} does not match the canonical "
                f"column layout"
            )
        samples = []
        for row_number, row in enumerate(reader, start=2):
            if len(row) != len(FEATURE_CSV_HEADER):
                raise SchemaMismatch(
                    f"{path}: row {row_number} has {len(row)} cells, "
                    f"expected {len(FEATURE_CSV_HEADER)}"
                )
            try:
                author = Author(row[1])
                category = Category(row[2])
                values = {
                    name: row[3 + i] for i, name in enumerate(FEATURE_NAMES)
                }
                vector = MetricVector.from_fields(values)
            except (ValueError, KeyError) as exc:
                raise SchemaMismatch(
                    f"{path}: row {row_number}: {exc}"
                ) from None
            samples.append(Sample(row[0], author, category, vector))
    try:
        return Dataset(tuple(samples))
    except ValueError as exc:
        raise SchemaMismatch(f"{path}: {exc}") from None


def round_half_up(value: float) -> int:
    """Round to the nearest integer with halves going up."""
    return int(math.floor(value + 0.5))


def stratified_split(
    dataset: Dataset, spec: SplitSpec
) -> tuple[Dataset, Dataset]:
    """Split per author class at the requested fraction.

    Each class contributes round_half_up(n_class * fraction) training
    samples chosen by a seeded shuffle; the remainder tests. Both sides
    keep the dataset's sample order. A fraction that empties either side
    of any class raises DegenerateSplit.
    """
    if not 0.0 < spec.train_fraction < 1.0:
        raise DegenerateSplit(
            f"train fraction {spec.train_fraction} must be strictly "
            f"between 0 and 1"
        )
    rng = seeded_rng(spec.seed)
    train_positions: set[int] = set()
    for author in Author:
        positions = [
            i for i, s in enumerate(dataset.samples) if s.author is author
        ]
        if not positions:
            raise DegenerateSplit(f"class {author.value!r} has no samples")
        take = round_half_up(len(positions) * spec.train_fraction)
        if take == 0 or take == len(positions):
            raise DegenerateSplit(
                f"fraction {spec.train_fraction} leaves class "
                f"{author.value!r} empty on one side "
                f"({take} of {len(positions)} in train)"
            )
        order = rng.permutation(len(positions))
        train_positions.update(positions[j] for j in order[:take])
    train_idx = [i for i in range(len(dataset)) if i in train_positions]
    test_idx = [i for i in range(len(dataset)) if i not in train_positions]
    return dataset.subset(train_idx), dataset.subset(test_idx)
