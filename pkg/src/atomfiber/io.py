"""Plain-text file formats (4ti2-style headers, '#' line comments).

Matrix file::

    # optional comments
    2 4
    3 2 1 0
    0 1 2 3

A vector list uses the same layout with header ``m n`` and one vector per
row, written in canonical order without duplicates.  An element listing is
a sequence of such blocks, each preceded by a ``# rhs: ...`` comment line.
"""

import re
from fractions import Fraction

from .core import canonical_sort
from .errors import AtomFiberError

__all__ = ["ParseError", "parse_matrix", "read_matrix", "format_matrix",
           "write_matrix", "parse_vector_list", "read_vector_list",
           "format_vector_list", "write_vector_list", "parse_rhs",
           "parse_cost", "format_element_listing", "parse_element_listing"]

_INT = re.compile(r"[+-]?\d+\Z")
_RAT = re.compile(r"[+-]?\d+(/\d+)?\Z")


class ParseError(AtomFiberError, ValueError):
    pass


def _tokens(text):
    out = []
    for line in text.splitlines():
        out.extend(line.split("#", 1)[0].split())
    return out


def _int(tok):
    if not _INT.match(tok):
        raise ParseError(f"not an integer: {tok!r}")
    return int(tok)


def _table(text, conv=_int):
    toks = _tokens(text)
    if len(toks) < 2:
        raise ParseError("missing 'rows cols' header")
    rows, cols = _int(toks[0]), _int(toks[1])
    if rows < 0 or cols < 0:
        raise ParseError("negative dimension in header")
    body = toks[2:]
    if len(body) != rows * cols:
        raise ParseError(
            f"header announces {rows}x{cols} = {rows * cols} entries, found {len(body)}")
    vals = [conv(t) for t in body]
    return rows, cols, [tuple(vals[i * cols:(i + 1) * cols]) for i in range(rows)]


def parse_matrix(text):
    d, n, rows = _table(text)
    if d < 1 or n < 1:
        raise ParseError("matrix must have at least one row and one column")
    return tuple(rows)


def _read(path):
    try:
        with open(path, encoding="ascii") as fh:
            return fh.read()
    except (OSError, UnicodeDecodeError) as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc


def read_matrix(path):
    return parse_matrix(_read(path))


def format_matrix(a):
    lines = [f"{len(a)} {len(a[0])}"]
    lines += [" ".join(str(x) for x in row) for row in a]
    return "\n".join(lines) + "\n"


def write_matrix(path, a):
    with open(path, "w", encoding="ascii") as fh:
        fh.write(format_matrix(a))


def parse_vector_list(text):
    _, _, rows = _table(text)
    return rows


def read_vector_list(path):
    return parse_vector_list(_read(path))


def format_vector_list(vectors, n=None):
    vecs = canonical_sort(tuple(v) for v in vectors)
    if n is None:
        if not vecs:
            raise ValueError("dimension needed for an empty list")
        n = len(vecs[0])
    lines = [f"{len(vecs)} {n}"]
    lines += [" ".join(str(x) for x in v) for v in vecs]
    return "\n".join(lines) + "\n"


def write_vector_list(path, vectors, n=None):
    with open(path, "w", encoding="ascii") as fh:
        fh.write(format_vector_list(vectors, n))


def parse_rhs(text):
    """Integers separated by blanks and/or commas, optional parentheses."""
    toks = text.replace(",", " ").replace("(", " ").replace(")", " ").split()
    if not toks:
        raise ParseError("empty right-hand side")
    return tuple(_int(t) for t in toks)


def _rat(tok):
    if not _RAT.match(tok):
        raise ParseError(f"not a rational number: {tok!r}")
    return Fraction(tok)


def parse_cost(text):
    """Cost vector from a bare list ``"1 0 2/3"`` or a ``1 n`` matrix file."""
    toks = _tokens(text)
    if not toks:
        raise ParseError("empty cost vector")
    if len(toks) >= 2 and _INT.match(toks[0]) and _INT.match(toks[1]):
        rows, cols = int(toks[0]), int(toks[1])
        if rows == 1 and len(toks) == 2 + cols:
            return tuple(_rat(t) for t in toks[2:])
    return tuple(_rat(t) for t in toks)


def format_element_listing(blocks, n):
    """`blocks` is a sequence of ``(rhs, points, complete)`` triples.

    `complete` False marks an infinite fiber whose minimal points only are
    listed.
    """
    out = [f"# {len(blocks)} fibers"]
    for rhs, pts, complete in blocks:
        tag = "complete" if complete else "minimal"
        out.append(f"# rhs: {' '.join(str(x) for x in rhs)} {tag}")
        out.append(format_vector_list(pts, n).rstrip("\n"))
    return "\n".join(out) + "\n"


def parse_element_listing(text):
    blocks = []
    current = None
    body = []

    def flush():
        if current is not None:
            rhs, complete = current
            blocks.append((rhs, parse_vector_list("\n".join(body)), complete))

    for line in text.splitlines():
        s = line.strip()
        if s.startswith("# rhs:"):
            flush()
            parts = s[len("# rhs:"):].split()
            if not parts or parts[-1] not in ("complete", "minimal"):
                raise ParseError(f"bad block header: {line!r}")
            current = (tuple(_int(t) for t in parts[:-1]), parts[-1] == "complete")
            body = []
        elif current is not None:
            body.append(line)
    flush()
    return blocks
