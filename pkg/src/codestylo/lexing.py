"""Tokenizer, line classifier, and logical-statement counter for Python source.

The lexer produces metric-grade structure only: it recognizes names,
keywords, numbers, strings, operators, comments, and logical-line ends.
It never parses grammar, resolves names, or executes anything, so files
that CPython would reject for syntax reasons still lex as long as their
strings terminate and their brackets balance.
"""

from __future__ import annotations

import keyword
import re
from dataclasses import dataclass
from enum import Enum

from .errors import LexError

KEYWORDS = frozenset(keyword.kwlist)

# Soft keywords (match, case, _) stay plain names: they only act as
# keywords in positions a parser would have to recognize.

_STRING_PREFIXES = frozenset(
    {"r", "u", "f", "b", "fr", "rf", "br", "rb"}
)

_OPERATORS_BY_LENGTH = (
    ("**=", "//=", ">>=", "<<=", "..."),
    (
        "**", "//", ">>", "<<", "<=", ">=", "==", "!=", "->", ":=",
        "+=", "-=", "*=", "/=", "%=", "@=", "&=", "|=", "^=",
    ),
    tuple("+-*/%@&|^~<>()[]{},:.;="),
)

_OPEN_BRACKETS = frozenset("([{")
_CLOSE_BRACKETS = frozenset(")]}")

_NUMBER_RE = re.compile(
    r"0[xX][0-9a-fA-F](?:_?[0-9a-fA-F])*"
    r"|0[bB][01](?:_?[01])*"
    r"|0[oO][0-7](?:_?[0-7])*"
    r"|(?:\d(?:_?\d)*\.(?:\d(?:_?\d)*)?|\.\d(?:_?\d)*|\d(?:_?\d)*)"
    r"(?:[eE][+-]?\d(?:_?\d)*)?[jJ]?"
)


class TokenKind(Enum):
    NAME = "name"
    KEYWORD = "keyword"
    NUMBER = "number"
    STRING = "string"
    OPERATOR = "operator"
    COMMENT = "comment"
    NEWLINE = "newline"


class LineClass(Enum):
    BLANK = "blank"
    COMMENT_ONLY = "comment_only"
    CODE = "code"


@dataclass(frozen=True)
class Token:
    kind: TokenKind
    text: str
    line: int
    col: int


def _normalize_newlines(text: str) -> str:
    return text.replace("\r\n", "\n").replace("\r", "\n")


def physical_lines(source_text: str) -> list[str]:
    """Split into physical lines; a trailing newline adds no phantom line."""
    lines = _normalize_newlines(source_text).split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    return lines


class _Lexer:
    def __init__(self, source_text: str):
        self.text = _normalize_newlines(source_text)
        self.pos = 0
        self.line = 1
        self.col = 0
        self.tokens: list[Token] = []
        self.bracket_stack: list[tuple[str, int]] = []
        self.line_has_tokens = False

    def run(self) -> list[Token]:
        text = self.text
        n = len(text)
        while self.pos < n:
            c = text[self.pos]
            if c in " \t\x0b\x0c":
                self._skip(1)
            elif c == "\n":
                if not self.bracket_stack:
                    self._emit(TokenKind.NEWLINE, self.pos, self.pos + 1)
                    self.line_has_tokens = False
                else:
                    self._skip(1)
            elif c == "\\" and self.pos + 1 < n and text[self.pos + 1] == "\n":
                self._skip(2)
            elif c == "#":
                end = text.find("\n", self.pos)
                if end == -1:
                    end = n
                self._emit(TokenKind.COMMENT, self.pos, end)
            elif c in "'\"":
                self._string(self.pos, self.pos)
            elif c.isidentifier():
                self._name()
            elif c.isdigit() or (
                c == "." and self.pos + 1 < n and text[self.pos + 1].isdigit()
            ):
                match = _NUMBER_RE.match(text, self.pos)
                self._emit(TokenKind.NUMBER, self.pos, match.end())
            else:
                self._operator()
        if self.bracket_stack:
            raise LexError("unclosed bracket", self.bracket_stack[0][1])
        if self.line_has_tokens:
            self.tokens.append(Token(TokenKind.NEWLINE, "", self.line, self.col))
        return self.tokens

    def _emit(self, kind: TokenKind, start: int, end: int) -> None:
        tok_text = self.text[start:end]
        self.tokens.append(Token(kind, tok_text, self.line, self.col))
        if kind is TokenKind.OPERATOR:
            if tok_text in _OPEN_BRACKETS:
                self.bracket_stack.append((tok_text, self.line))
            elif tok_text in _CLOSE_BRACKETS and self.bracket_stack:
                self.bracket_stack.pop()
        if kind is not TokenKind.NEWLINE:
            self.line_has_tokens = True
        self.pos = end
        newlines = tok_text.count("\n")
        if newlines:
            self.line += newlines
            self.col = len(tok_text) - tok_text.rfind("\n") - 1
        else:
            self.col += end - start

    def _skip(self, count: int) -> None:
        skipped = self.text[self.pos : self.pos + count]
        self.pos += count
        newlines = skipped.count("\n")
        if newlines:
            self.line += newlines
            self.col = len(skipped) - skipped.rfind("\n") - 1
        else:
            self.col += count

    def _name(self) -> None:
        text = self.text
        start = self.pos
        end = start + 1
        while end < len(text) and ("_" + text[end]).isidentifier():
            end += 1
        word = text[start:end]
        if (
            end < len(text)
            and text[end] in "'\""
            and word.lower() in _STRING_PREFIXES
        ):
            self._string(start, end)
            return
        kind = TokenKind.KEYWORD if word in KEYWORDS else TokenKind.NAME
        self._emit(kind, start, end)

    def _string(self, start: int, quote_pos: int) -> None:
        text = self.text
        quote = text[quote_pos]
        start_line = self.line
        if text.startswith(quote * 3, quote_pos):
            closer = quote * 3
            scan = quote_pos + 3
        else:
            closer = quote
            scan = quote_pos + 1
        n = len(text)
        while scan < n:
            c = text[scan]
            if c == "\\":
                scan += 2
                continue
            if text.startswith(closer, scan):
                self._emit(TokenKind.STRING, start, scan + len(closer))
                return
            if c == "\n" and len(closer) == 1:
                break
            scan += 1
        raise LexError("unterminated string", start_line)

    def _operator(self) -> None:
        text = self.text
        for group in _OPERATORS_BY_LENGTH:
            for op in group:
                if text.startswith(op, self.pos):
                    self._emit(TokenKind.OPERATOR, self.pos, self.pos + len(op))
                    return
        raise LexError(f"unexpected character {text[self.pos]!r}", self.line)


def tokenize(source_text: str) -> list[Token]:
    """Lex source text into tokens.

    Newlines inside brackets vanish; newlines at bracket depth zero become
    NEWLINE tokens, and a final partial line gets an empty-text NEWLINE.
    Raises LexError for unterminated strings, unclosed brackets at end of
    file, and characters outside the lexical grammar.
    """
    return _Lexer(source_text).run()


def detokenize(tokens: list[Token]) -> str:
    """Rebuild source whose token stream equals the input stream.

    Original spacing inside lines is reduced to single-space padding to the
    recorded columns; line structure, continuations, and token texts are
    preserved exactly, so tokenize(detokenize(tokenize(s))) == tokenize(s).
    """
    parts: list[str] = []
    line, col = 1, 0
    depth = 0
    for tok in tokens:
        if tok.line > line:
            gap = tok.line - line
            parts.append(("\n" if depth else "\\\n") * gap)
            parts.append(" " * tok.col)
        else:
            parts.append(" " * (tok.col - col))
        parts.append(tok.text)
        if tok.kind is TokenKind.OPERATOR:
            if tok.text in _OPEN_BRACKETS:
                depth += 1
            elif tok.text in _CLOSE_BRACKETS and depth:
                depth -= 1
        newlines = tok.text.count("\n")
        if newlines:
            line = tok.line + newlines
            col = len(tok.text) - tok.text.rfind("\n") - 1
        else:
            line = tok.line
            col = tok.col + len(tok.text)
    return "".join(parts)


def classify_lines(source_text: str) -> list[LineClass]:
    """Classify each physical line as BLANK, COMMENT_ONLY, or CODE.

    BLANK wins for whitespace-only lines even inside triple-quoted strings.
    COMMENT_ONLY requires the first non-whitespace character to start a
    comment outside any string. The scan is tolerant: it needs no lexable
    file, only string-state tracking, so diagnostics can still report
    line counts for files the tokenizer rejects.
    """
    classes: list[LineClass] = []
    in_string: tuple[str, bool] | None = None
    for raw_line in physical_lines(source_text):
        starts_in_string = in_string is not None
        stripped = raw_line.strip()
        if not stripped:
            classes.append(LineClass.BLANK)
        elif starts_in_string:
            classes.append(LineClass.CODE)
        elif stripped.startswith("#"):
            classes.append(LineClass.COMMENT_ONLY)
        else:
            classes.append(LineClass.CODE)
        in_string = _advance_string_state(raw_line, in_string)
    return classes


def _advance_string_state(
    line: str, in_string: tuple[str, bool] | None
) -> tuple[str, bool] | None:
    j = 0
    n = len(line)
    escaped_eol = False
    while j < n:
        c = line[j]
        if in_string is not None:
            quote, triple = in_string
            if c == "\\":
                if j + 1 >= n:
                    escaped_eol = True
                j += 2
            elif triple and line.startswith(quote * 3, j):
                in_string = None
                j += 3
            elif not triple and c == quote:
                in_string = None
                j += 1
            else:
                j += 1
        elif c == "#":
            break
        elif c in "'\"":
            if line.startswith(c * 3, j):
                in_string = (c, True)
                j += 3
            else:
                in_string = (c, False)
                j += 1
        else:
            j += 1
    if in_string is not None and not in_string[1] and not escaped_eol:
        in_string = None
    return in_string


_COMPOUND_HEADS = frozenset(
    {
        "if", "elif", "else", "for", "while", "def", "class",
        "try", "except", "finally", "with",
    }
)


def iter_statement_heads(tokens: list[Token]):
    """Yield the leading token text of every logical statement.

    A clause header (if/for/def/...) counts as one statement ending at its
    colon outside brackets, so statements of an inline suite count on their
    own. Semicolons at depth zero separate statements; empty segments
    between semicolons count nothing. A leading ``async`` defers to the
    def/for/with that follows it.
    """
    depth = 0
    at_start = True
    awaiting_colon = False
    for tok in tokens:
        if tok.kind is TokenKind.COMMENT:
            continue
        if tok.kind is TokenKind.NEWLINE:
            at_start = True
            awaiting_colon = False
            continue
        text = tok.text
        if tok.kind is TokenKind.OPERATOR:
            if text in _OPEN_BRACKETS:
                depth += 1
            elif text in _CLOSE_BRACKETS and depth:
                depth -= 1
        if at_start:
            if tok.kind is TokenKind.OPERATOR and text == ";":
                continue
            if tok.kind is TokenKind.KEYWORD and text == "async":
                continue
            at_start = False
            awaiting_colon = (
                tok.kind is TokenKind.KEYWORD and text in _COMPOUND_HEADS
            )
            yield text
        elif depth == 0 and tok.kind is TokenKind.OPERATOR:
            if text == ";":
                at_start = True
            elif text == ":" and awaiting_colon:
                awaiting_colon = False
                at_start = True


def count_logical_statements(tokens: list[Token]) -> int:
    """Count logical statements (LLoC) in a token stream."""
    return sum(1 for _ in iter_statement_heads(tokens))
