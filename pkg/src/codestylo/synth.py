"""Synthetic labeled corpus generator.

Writes a small corpus in the standard on-disk layout
(``<root>/<category>/<prompt-id>/{chatgpt.py,human.py}``) whose two
authoring styles are deliberately distinguishable:

* the ``chatgpt`` archetype is concise and structured: several short
  commented helper functions per file;
* the ``human`` archetype is long and repetitive: straight-line
  statements with few comments and at most one function.

Every file is seeded from (seed, prompt index, author index), so a given
(root, n_prompts, seed) triple always produces byte-identical output.
All generated files are valid, lexable Python.
"""

from __future__ import annotations

from pathlib import Path

from .corpus import Author, Category
from .ioutil import atomic_write_text
from .randomness import seeded_rng

CATEGORY_CYCLE: tuple[Category, ...] = tuple(Category)

_TOPICS: dict[Category, tuple[str, ...]] = {
    Category.ADS: ("stack", "queue", "heap", "graph", "bucket"),
    Category.DA: ("series", "frame", "column", "record", "sample"),
    Category.M: ("total", "ratio", "matrix", "digit", "factor"),
    Category.OO: ("account", "widget", "shape", "order", "ticket"),
    Category.VGD: ("player", "sprite", "score", "level", "enemy"),
}

_VERBS = ("load", "scan", "merge", "count", "build", "trim")

_COMMENT_PHRASES = (
    "Collect the {topic} values before processing.",
    "Keep only the useful part of the {topic} data.",
    "Summarize the {topic} values in one pass.",
    "Normalize the {topic} input for later steps.",
    "Handle the empty {topic} case up front.",
    "Derive the final {topic} figure.",
)

_FUNCTION_BODIES = (
    (
        "    result = [item * 2 for item in values if item > 0]",
        "    return result",
    ),
    (
        "    if not values:",
        "        return 0",
        "    return max(values) - min(values)",
    ),
    (
        "    total = sum(item for item in values)",
        "    return total",
    ),
    (
        "    seen = set(values)",
        "    ordered = sorted(seen)",
        "    return ordered",
    ),
)


def _pick(rng, options):
    return options[int(rng.integers(0, len(options)))]


def _chatgpt_source(rng, topic: str) -> str:
    """Concise style: 3-5 short helper functions, each commented."""
    n_functions = int(rng.integers(3, 6))
    lines = [f"# Helpers for working with {topic} values."]
    for index in range(n_functions):
        verb = _pick(rng, _VERBS)
        phrase = _pick(rng, _COMMENT_PHRASES).format(topic=topic)
        lines.append("")
        lines.append(f"# {phrase}")
        lines.append(f"def {verb}_{topic}_{index}(values):")
        lines.extend(_pick(rng, _FUNCTION_BODIES))
    extra_comments = int(rng.integers(0, 3))
    for index in range(extra_comments):
        lines.append("")
        lines.append(f"# Step {index + 1} of the {topic} pipeline is above.")
    return "\n".join(lines) + "\n"


def _human_statements(rng, topic: str, n_statements: int) -> list[str]:
    """Repetitive straight-line statements chained through one variable."""
    start = int(rng.integers(1, 50))
    lines = [f"{topic}_0 = {start}"]
    index = 0
    while len(lines) < n_statements - 1:
        kind = int(rng.integers(0, 4))
        previous = f"{topic}_{index}"
        index += 1
        current = f"{topic}_{index}"
        step = int(rng.integers(1, 9))
        if kind == 0:
            lines.append(f"{current} = {previous} + {step}")
        elif kind == 1:
            lines.append(f"{current} = {previous} * 2 - {step}")
        elif kind == 2:
            lines.append(f"{current} = {previous} - {step} + {step} * 2")
        elif len(lines) + 4 <= n_statements - 1:
            lines.append(f"if {previous} > {step * 10}:")
            lines.append(f"    {current} = {previous} - {step}")
            lines.append("else:")
            lines.append(f"    {current} = {previous} + {step}")
        else:
            lines.append(f"{current} = {previous} + {step + 1}")
    lines.append(f"print({topic}_{index})")
    return lines


def _human_source(rng, topic: str) -> str:
    """Long repetitive style: 35-70 lines, 0-2 comments, 0-1 functions."""
    target_lines = int(rng.integers(35, 71))
    wrap_in_function = bool(int(rng.integers(0, 2)))
    n_comments = int(rng.integers(0, 3))
    overhead = 3 if wrap_in_function else 0
    body = _human_statements(rng, topic, target_lines - overhead - n_comments)
    for _ in range(n_comments):
        position = int(rng.integers(0, len(body) + 1))
        body.insert(position, f"# {topic} values")
    if wrap_in_function:
        body = (
            ["def main():"]
            + ["    " + line if line else line for line in body]
            + ["", "main()"]
        )
    return "\n".join(body) + "\n"


def write_synthetic_corpus(
    root, n_prompts: int = 30, seed: int = 0
) -> list[Path]:
    """Write n_prompts * 2 files under root; returns the paths written.

    Prompt index i belongs to category CATEGORY_CYCLE[i % 5], so the
    default 30 prompts give six per category and 60 files total.
    """
    if n_prompts < 1:
        raise ValueError(f"n_prompts must be >= 1, got {n_prompts}")
    root = Path(root)
    written: list[Path] = []
    for index in range(n_prompts):
        category = CATEGORY_CYCLE[index % len(CATEGORY_CYCLE)]
        prompt_id = f"p{index:03d}"
        for author_index, author in enumerate(Author):
            rng = seeded_rng(seed, index, author_index)
            topic = _pick(rng, _TOPICS[category])
            if author is Author.CHATGPT:
                source = _chatgpt_source(rng, topic)
            else:
                source = _human_source(rng, topic)
            path = root / category.value / prompt_id / f"{author.value}.py"
            atomic_write_text(path, source)
            written.append(path)
    return written
