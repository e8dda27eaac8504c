"""Harness for collecting model-written solutions over HTTP.

A manifest CSV lists prompts (id, category, and the prompt's four text
parts). Each prompt is rendered to a single chat message, sent to a
chat-completion endpoint, and the first fenced code block of the reply
is written into the standard corpus layout as the ``chatgpt.py`` file of
its prompt directory.

The API token is read from an environment variable at request time; it
is never written to disk, stored on objects, or included in error
messages. Transport problems and replies without a code block are
retried with exponential backoff; a prompt that exhausts its retries is
reported as a failed outcome rather than aborting the batch. Only a
batch in which every prompt fails raises.
"""

from __future__ import annotations

import csv
import os
import re
import time
from dataclasses import dataclass
from pathlib import Path

import requests

from .corpus import Author, Category
from .errors import (
    GenerationFailed,
    NoCodeBlock,
    SchemaMismatch,
    TransportError,
)
from .ioutil import atomic_write_text

MANIFEST_HEADER: tuple[str, ...] = (
    "id",
    "category",
    "preamble",
    "prompt",
    "output_formatting",
    "exporting",
)

_FENCE_RE = re.compile(r"```([^\n]*)\n(.*?)```", re.DOTALL)
_PYTHON_TAGS = frozenset({"python", "python3", "py"})


@dataclass(frozen=True)
class PromptRecord:
    id: str
    category: Category
    preamble: str
    prompt: str
    output_formatting: str
    exporting: str


@dataclass(frozen=True)
class EndpointConfig:
    """Transport settings for a chat-completion endpoint.

    auth_env names the environment variable holding the bearer token;
    the token itself is read per request and never stored.
    """

    base_url: str
    model: str
    auth_env: str = "CHAT_API_TOKEN"
    timeout_s: float = 60.0


@dataclass(frozen=True)
class GenerationOutcome:
    id: str
    category: Category
    status: str  # "ok" or "failed"
    retries: int
    path: Path | None
    detail: str = ""


def render_prompt(record: PromptRecord) -> str:
    """Join the non-empty prompt parts with blank lines, in order."""
    parts = (
        record.preamble,
        record.prompt,
        record.output_formatting,
        record.exporting,
    )
    return "\n\n".join(part for part in parts if part)


def extract_code(reply: str) -> str:
    """Return the body of the first fenced code block of a reply.

    Blocks tagged python/python3/py (case-insensitive) are preferred;
    with none of those, the first block of any tag is used. A reply
    without any fenced block raises NoCodeBlock.
    """
    blocks = _FENCE_RE.findall(reply)
    if not blocks:
        raise NoCodeBlock("reply contains no fenced code block")
    for tag, body in blocks:
        if tag.strip().lower() in _PYTHON_TAGS:
            return body
    return blocks[0][1]


class HttpChatEndpoint:
    """Chat-completion client: one user message in, reply text out."""

    def __init__(self, config: EndpointConfig):
        self.config = config

    def complete(self, prompt_text: str) -> str:
        token = os.environ.get(self.config.auth_env)
        if not token:
            raise TransportError(
                f"environment variable {self.config.auth_env} is not set"
            )
        body = {
            "model": self.config.model,
            "messages": [{"role": "user", "content": prompt_text}],
        }
        try:
            response = requests.post(
                self.config.base_url,
                json=body,
                headers={"Authorization": f"Bearer {token}"},
                timeout=self.config.timeout_s,
            )
            response.raise_for_status()
            payload = response.json()
        except requests.RequestException as exc:
            raise TransportError(f"chat request failed: {exc}") from exc
        except ValueError as exc:
            raise TransportError("chat response is not valid JSON") from exc
        try:
            content = payload["choices"][0]["message"]["content"]
        except (KeyError, IndexError, TypeError):
            raise TransportError(
                "chat response is missing choices[0].message.content"
            ) from None
        if not isinstance(content, str):
            raise TransportError("chat reply content is not text")
        return content


def read_manifest(path) -> list[PromptRecord]:
    """Parse a prompt manifest CSV; raises SchemaMismatch on bad shape."""
    with open(path, newline="", encoding="utf-8") as handle:
        rows = list(csv.reader(handle))
    if not rows or tuple(rows[0]) != MANIFEST_HEADER:
        raise SchemaMismatch(
            f"manifest header must be {','.join(MANIFEST_HEADER)}"
        )
    records = []
    seen_ids = set()
    for line_no, row in enumerate(rows[1:], start=2):
        if len(row) != len(MANIFEST_HEADER):
            raise SchemaMismatch(
                f"manifest line {line_no}: expected "
                f"{len(MANIFEST_HEADER)} fields, got {len(row)}"
            )
        prompt_id, category_name = row[0], row[1]
        if not prompt_id:
            raise SchemaMismatch(f"manifest line {line_no}: empty id")
        if prompt_id in seen_ids:
            raise SchemaMismatch(
                f"manifest line {line_no}: duplicate id {prompt_id!r}"
            )
        seen_ids.add(prompt_id)
        try:
            category = Category(category_name)
        except ValueError:
            raise SchemaMismatch(
                f"manifest line {line_no}: unknown category "
                f"{category_name!r}"
            ) from None
        records.append(PromptRecord(prompt_id, category, *row[2:]))
    return records


def batch_generate(
    records: list[PromptRecord],
    endpoint,
    corpus_root,
    max_retries: int = 2,
    backoff_s: float = 1.0,
    sleep=time.sleep,
) -> list[GenerationOutcome]:
    """Generate one solution file per prompt, in manifest order.

    Each prompt gets 1 + max_retries attempts; failed attempts wait
    backoff_s * 2**attempt before the next try. The extracted code is
    written to <corpus_root>/<category>/<id>/chatgpt.py. Failures are
    recorded per prompt; GenerationFailed is raised only when every
    prompt in a non-empty batch failed.
    """
    if max_retries < 0:
        raise ValueError(f"max_retries must be >= 0, got {max_retries}")
    corpus_root = Path(corpus_root)
    outcomes: list[GenerationOutcome] = []
    for record in records:
        prompt_text = render_prompt(record)
        outcome = None
        for attempt in range(1 + max_retries):
            try:
                reply = endpoint.complete(prompt_text)
                code = extract_code(reply)
            except (TransportError, NoCodeBlock) as exc:
                if attempt < max_retries:
                    sleep(backoff_s * (2**attempt))
                    continue
                outcome = GenerationOutcome(
                    id=record.id,
                    category=record.category,
                    status="failed",
                    retries=attempt,
                    path=None,
                    detail=str(exc),
                )
                break
            if code and not code.endswith("\n"):
                code += "\n"
            target = (
                corpus_root
                / record.category.value
                / record.id
                / f"{Author.CHATGPT.value}.py"
            )
            atomic_write_text(target, code)
            outcome = GenerationOutcome(
                id=record.id,
                category=record.category,
                status="ok",
                retries=attempt,
                path=target,
            )
            break
        outcomes.append(outcome)
    if outcomes and all(o.status == "failed" for o in outcomes):
        raise GenerationFailed(
            f"all {len(outcomes)} prompts failed", outcomes=tuple(outcomes)
        )
    return outcomes
