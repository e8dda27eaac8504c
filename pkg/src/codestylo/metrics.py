"""Static code-quality metrics computed from lexical structure alone.

Fourteen metrics per source file, in a fixed canonical order that every
dataset, CSV header, JSON report, and feature matrix in this package
shares. Nothing here imports or executes the measured code.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, fields

from .errors import LexError
from .lexing import (
    LineClass,
    Token,
    TokenKind,
    classify_lines,
    iter_statement_heads,
    tokenize,
)

FEATURE_NAMES: tuple[str, ...] = (
    "cyclomatic_complexity",
    "halstead_difficulty",
    "halstead_effort",
    "halstead_volume",
    "halstead_time",
    "halstead_bugs",
    "sloc",
    "lloc",
    "diff_sloc_lloc",
    "n_lines",
    "n_comments",
    "n_functions",
    "n_classes",
    "maintainability_index",
)

N_FEATURES = len(FEATURE_NAMES)

# Value keywords behave as operands; every other keyword steers control
# flow or structure and so counts as an operator.
_VALUE_KEYWORDS = frozenset({"True", "False", "None"})

_OPERAND_KINDS = frozenset({TokenKind.NAME, TokenKind.NUMBER, TokenKind.STRING})

# Closing brackets pair with their opener and add no operator of their own.
_CLOSING = frozenset({")", "]", "}"})

_DECISION_KEYWORDS = frozenset(
    {"if", "elif", "for", "while", "except", "assert", "and", "or"}
)

_SECONDS_PER_MENTAL_DISCRIMINATION = 18.0
_VOLUME_PER_DELIVERED_BUG = 3000.0


@dataclass(frozen=True)
class HalsteadCounts:
    distinct_operators: int
    distinct_operands: int
    total_operators: int
    total_operands: int


@dataclass(frozen=True)
class MetricVector:
    cyclomatic_complexity: int
    halstead_difficulty: float
    halstead_effort: float
    halstead_volume: float
    halstead_time: float
    halstead_bugs: float
    sloc: int
    lloc: int
    diff_sloc_lloc: int
    n_lines: int
    n_comments: int
    n_functions: int
    n_classes: int
    maintainability_index: float

    def as_row(self) -> tuple[float, ...]:
        """Values in canonical feature order, as floats."""
        return tuple(float(getattr(self, name)) for name in FEATURE_NAMES)

    def as_dict(self) -> dict[str, float | int]:
        return {name: getattr(self, name) for name in FEATURE_NAMES}

    @classmethod
    def from_fields(cls, values: dict[str, float | int]) -> "MetricVector":
        kwargs = {}
        for field in fields(cls):
            raw = values[field.name]
            kwargs[field.name] = int(raw) if field.type == "int" else float(raw)
        return cls(**kwargs)


def cyclomatic_complexity(tokens: list[Token]) -> int:
    """1 plus the count of decision-point keywords.

    if/elif/for/while/except/assert each add a branch, as do the
    short-circuit operators and/or. Ternary expressions and comprehension
    filters contribute through their if/for keywords. else, finally, try,
    with, def, class, and lambda add nothing.
    """
    decisions = sum(
        1
        for tok in tokens
        if tok.kind is TokenKind.KEYWORD and tok.text in _DECISION_KEYWORDS
    )
    return 1 + decisions


def halstead_counts(tokens: list[Token]) -> HalsteadCounts:
    """Tally distinct and total operators and operands.

    Operands: names, numbers, strings, and the value keywords True, False,
    None. Operators: all remaining keywords and every operator token except
    closing brackets. Comments and newlines count nothing. Distinctness is
    by exact token text.
    """
    operator_texts: set[str] = set()
    operand_texts: set[str] = set()
    total_operators = 0
    total_operands = 0
    for tok in tokens:
        if tok.kind in _OPERAND_KINDS:
            operand_texts.add(tok.text)
            total_operands += 1
        elif tok.kind is TokenKind.KEYWORD:
            if tok.text in _VALUE_KEYWORDS:
                operand_texts.add(tok.text)
                total_operands += 1
            else:
                operator_texts.add(tok.text)
                total_operators += 1
        elif tok.kind is TokenKind.OPERATOR and tok.text not in _CLOSING:
            operator_texts.add(tok.text)
            total_operators += 1
    return HalsteadCounts(
        distinct_operators=len(operator_texts),
        distinct_operands=len(operand_texts),
        total_operators=total_operators,
        total_operands=total_operands,
    )


def derive_halstead(
    counts: HalsteadCounts,
) -> tuple[float, float, float, float, float]:
    """Return (volume, difficulty, effort, time, bugs) from raw counts.

    Empty vocabularies yield zero volume and a zero operand set yields
    zero difficulty, so every downstream value is finite.
    """
    vocabulary = counts.distinct_operators + counts.distinct_operands
    length = counts.total_operators + counts.total_operands
    volume = length * math.log2(vocabulary) if vocabulary > 0 else 0.0
    if counts.distinct_operands > 0:
        difficulty = (counts.distinct_operators / 2.0) * (
            counts.total_operands / counts.distinct_operands
        )
    else:
        difficulty = 0.0
    effort = difficulty * volume
    time = effort / _SECONDS_PER_MENTAL_DISCRIMINATION
    bugs = volume / _VOLUME_PER_DELIVERED_BUG
    return volume, difficulty, effort, time, bugs


def maintainability_index(
    volume: float, cyclomatic: int, sloc: int, comment_ratio: float
) -> float:
    """Maintainability index rescaled to [0, 100]."""
    raw = (
        171.0
        - 5.2 * math.log(max(1.0, volume))
        - 0.23 * cyclomatic
        - 16.2 * math.log(max(1, sloc))
        + 50.0 * math.sin(math.sqrt(2.4 * comment_ratio))
    )
    return max(0.0, min(100.0, raw * 100.0 / 171.0))


def extract_metrics(source_text: str) -> MetricVector:
    """Compute the full 14-metric vector for one source file.

    Raises LexError when the text cannot be tokenized; callers that walk
    corpora catch it and record a diagnostic instead of a sample.
    """
    tokens = tokenize(source_text)
    line_classes = classify_lines(source_text)
    n_lines = len(line_classes)
    sloc = sum(1 for c in line_classes if c is LineClass.CODE)
    n_comments = sum(1 for t in tokens if t.kind is TokenKind.COMMENT)
    heads = list(iter_statement_heads(tokens))
    lloc = len(heads)
    n_functions = sum(1 for h in heads if h == "def")
    n_classes = sum(1 for h in heads if h == "class")
    cyclomatic = cyclomatic_complexity(tokens)
    volume, difficulty, effort, time, bugs = derive_halstead(
        halstead_counts(tokens)
    )
    ratio = n_comments / max(1, n_lines)
    return MetricVector(
        cyclomatic_complexity=cyclomatic,
        halstead_difficulty=difficulty,
        halstead_effort=effort,
        halstead_volume=volume,
        halstead_time=time,
        halstead_bugs=bugs,
        sloc=sloc,
        lloc=lloc,
        diff_sloc_lloc=sloc - lloc,
        n_lines=n_lines,
        n_comments=n_comments,
        n_functions=n_functions,
        n_classes=n_classes,
        maintainability_index=maintainability_index(
            volume, cyclomatic, sloc, ratio
        ),
    )


def load_source(path) -> str:
    """Read a source file as UTF-8.

    Undecodable bytes are a content defect, not an I/O failure, so they
    surface as LexError just like any other unlexable file.
    """
    with open(path, "rb") as handle:
        raw = handle.read()
    try:
        return raw.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise LexError(f"not valid UTF-8 ({exc.reason})", 1) from None


def extract_metrics_from_file(path) -> MetricVector:
    """Load a file and compute its metric vector."""
    return extract_metrics(load_source(path))
