"""Line-oriented text formats for sequences and witnesses."""

from __future__ import annotations

import sys

from .realizer import Digraph
from .seqcore import DegreeSequence

__all__ = ["ParseError", "parse_arcs", "parse_degree_list", "parse_matrix", "parse_sequence", "read_text"]


class ParseError(ValueError):
    def __init__(self, message, lineno=None):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {message}" if lineno else message)


def read_text(path) -> str:
    if str(path) == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _data_lines(text):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def _ints(fields, lineno):
    try:
        values = [int(f) for f in fields]
    except ValueError:
        raise ParseError(f"expected integers, got {' '.join(fields)!r}", lineno) from None
    if any(v < 0 for v in values):
        raise ParseError("degrees must be nonnegative", lineno)
    return values


def parse_sequence(text: str) -> DegreeSequence:
    """Parse ``a b`` lines; ``#`` comments and blank lines are skipped.

    A first data line holding a single integer is taken as a size header and
    ignored.
    """
    pairs = []
    for idx, (lineno, fields) in enumerate(_data_lines(text)):
        values = _ints(fields, lineno)
        if idx == 0 and len(values) == 1:
            continue
        if len(values) != 2:
            raise ParseError(f"expected two integers 'a b', got {len(values)}", lineno)
        pairs.append(values)
    return DegreeSequence.from_pairs(pairs)


def parse_degree_list(text: str) -> list:
    """Parse one undirected degree per line."""
    out = []
    for lineno, fields in _data_lines(text):
        values = _ints(fields, lineno)
        if len(values) != 1:
            raise ParseError(f"expected one degree per line, got {len(values)} values", lineno)
        out.append(values[0])
    return out


def parse_arcs(text: str, n: int) -> Digraph:
    arcs = []
    for lineno, fields in _data_lines(text):
        values = _ints(fields, lineno)
        if len(values) != 2:
            raise ParseError("expected 'u v'", lineno)
        arcs.append(tuple(values))
    return Digraph.from_arcs(n, arcs)


def parse_matrix(text: str) -> Digraph:
    rows = []
    for lineno, fields in _data_lines(text):
        row = "".join(fields)
        if set(row) - {"0", "1"}:
            raise ParseError("matrix rows must contain only 0 and 1", lineno)
        rows.append([c == "1" for c in row])
    if any(len(r) != len(rows) for r in rows):
        raise ParseError("matrix must be square")
    return Digraph.from_matrix(rows) if rows else Digraph.from_arcs(0, [])
