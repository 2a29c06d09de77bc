"""Plain-text matrix files.

Layout::

    field: GF(3)
    2 2
    1 2
    0 1

Line 1 names the field, line 2 gives ``rows cols``, and the remaining
whitespace-separated tokens are the entries in row-major order. Text from a
``#`` to the end of its line is a comment.
"""

from __future__ import annotations

import re
from pathlib import Path

from .errors import MatrixParseError
from .fields import parse_field
from .matrix import Matrix

_HEADER = re.compile(r"^\s*field\s*:\s*(\S.*?)\s*$")


def _tokens(lines: list[str], start: int):
    for lineno, line in enumerate(lines[start:], start=start + 1):
        for m in re.finditer(r"\S+", line):
            yield lineno, m.start() + 1, m.group()


def parse_matrix(text: str) -> Matrix:
    lines = [l.split("#", 1)[0] for l in text.splitlines()]
    # skip leading blank lines but keep numbering
    first = next((i for i, l in enumerate(lines) if l.strip()), None)
    if first is None:
        raise MatrixParseError("empty matrix file", 1)
    m = _HEADER.match(lines[first])
    if not m:
        raise MatrixParseError("expected 'field: <Q|QI|GF(p)|GF(p^2)>'", first + 1)
    try:
        field = parse_field(m.group(1))
    except ValueError as e:
        raise MatrixParseError(str(e), first + 1, m.start(1) + 1) from None

    toks = _tokens(lines, first + 1)
    dims = []
    for _ in range(2):
        tok = next(toks, None)
        if tok is None:
            raise MatrixParseError("missing '<rows> <cols>' line", len(lines) + 1)
        lineno, col, word = tok
        if not word.isdigit() or int(word) == 0:
            raise MatrixParseError(f"dimension must be a positive integer, got {word!r}", lineno, col)
        dims.append(int(word))
    rows, cols = dims

    entries = []
    last = (first + 2, 1)
    for lineno, col, word in toks:
        if len(entries) == rows * cols:
            raise MatrixParseError(f"unexpected extra entry {word!r}", lineno, col)
        try:
            entries.append(field.parse_entry(word))
        except ValueError as e:
            raise MatrixParseError(str(e), lineno, col) from None
        last = (lineno, col)
    if len(entries) != rows * cols:
        raise MatrixParseError(
            f"expected {rows * cols} entries, found {len(entries)}", last[0], last[1])
    return Matrix(field, rows, cols, entries)


def format_matrix(a: Matrix) -> str:
    fmt = a.field.format_entry
    cells = [[fmt(x) for x in row] for row in a.row_lists()]
    width = max((len(c) for row in cells for c in row), default=1)
    body = "\n".join(" ".join(c.rjust(width) for c in row) for row in cells)
    return f"field: {a.field.name}\n{a.rows} {a.cols}\n{body}\n"


def read_matrix(path: str | Path) -> Matrix:
    return parse_matrix(Path(path).read_text(encoding="utf-8"))


def write_matrix(a: Matrix, path: str | Path) -> None:
    Path(path).write_text(format_matrix(a), encoding="utf-8")
