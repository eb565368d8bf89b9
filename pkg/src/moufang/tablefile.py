"""Plain-text Cayley table files.

Format: optional ``#`` comment lines, then the order ``n``, then ``n*n``
whitespace-separated 0-based entries in row-major order.
"""

from __future__ import annotations

import re
from pathlib import Path

from .errors import InputError
from .magma import Magma, make_magma


class TableParseError(InputError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line, self.column = line, column


def _tokens(text: str):
    for lineno, line in enumerate(text.splitlines(), 1):
        if line.lstrip().startswith("#"):
            continue
        for m in re.finditer(r"\S+", line):
            yield m.group(), lineno, m.start() + 1


def parse_table(text: str) -> Magma:
    tokens = list(_tokens(text))
    if not tokens:
        raise TableParseError("missing order", 1, 1)
    values = []
    for tok, line, col in tokens:
        if not re.fullmatch(r"\d+", tok):
            raise TableParseError(f"expected a non-negative integer, got {tok!r}", line, col)
        values.append(int(tok))
    n = values[0]
    if n < 1:
        raise TableParseError("order must be at least 1", tokens[0][1], tokens[0][2])
    entries = values[1:]
    if len(entries) != n * n:
        tok, line, col = tokens[-1]
        raise TableParseError(f"expected {n * n} entries for order {n}, got {len(entries)}", line, col)
    for k, v in enumerate(entries):
        if v >= n:
            _, line, col = tokens[k + 1]
            raise TableParseError(f"entry {v} is outside [0, {n})", line, col)
    return make_magma(n, entries)


def format_table(M: Magma, comment: str | None = None) -> str:
    lines = [f"# {c}" for c in comment.splitlines()] if comment else []
    lines.append(str(M.order))
    lines.extend(" ".join(str(v) for v in row) for row in M.table)
    return "\n".join(lines) + "\n"


def read_table(path) -> Magma:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    return parse_table(text)


def write_table(path, M: Magma, comment: str | None = None):
    Path(path).write_text(format_table(M, comment), newline="\n")
