"""Exact integer vectors and the sign-compatible order.

Vectors are plain tuples of Python ints and matrices are tuples of row
tuples.  Python ints are unbounded, so no arithmetic here can overflow.
Every function returns a fresh value and never mutates its input.
"""

import operator

from .errors import DimensionError

__all__ = [
    "as_vector", "as_matrix", "zero", "unit", "add", "sub", "neg", "scale",
    "dot", "mat_vec", "column", "columns", "transpose", "conforms",
    "conforms_prefix", "l1_norm", "sign_masks", "canonical_key",
    "canonical_sort", "is_nonnegative", "format_vector",
]


def as_vector(entries):
    """Return `entries` as a tuple of exact Python ints.

    Accepts any iterable of integer-like objects (including numpy integer
    scalars).  Floats are rejected, even integral ones, so that inexact data
    never enters a computation silently.
    """
    return tuple(operator.index(x) for x in entries)


def as_matrix(rows):
    """Return `rows` as a rectangular tuple-of-tuples integer matrix."""
    mat = tuple(as_vector(r) for r in rows)
    if not mat or not mat[0]:
        raise DimensionError("matrix must have at least one row and one column")
    n = len(mat[0])
    if any(len(r) != n for r in mat):
        raise DimensionError("matrix rows have different lengths")
    return mat


def _check(u, v):
    if len(u) != len(v):
        raise DimensionError(f"dimension mismatch: {len(u)} != {len(v)}")


def zero(n):
    return (0,) * n


def unit(n, i):
    return tuple(1 if j == i else 0 for j in range(n))


def add(u, v):
    _check(u, v)
    return tuple(a + b for a, b in zip(u, v))


def sub(u, v):
    _check(u, v)
    return tuple(a - b for a, b in zip(u, v))


def neg(u):
    return tuple(-a for a in u)


def scale(c, u):
    return tuple(c * a for a in u)


def dot(u, v):
    _check(u, v)
    return sum(a * b for a, b in zip(u, v))


def mat_vec(a, z):
    """Compute the product ``a @ z`` exactly."""
    if len(a[0]) != len(z):
        raise DimensionError(
            f"matrix has {len(a[0])} columns but vector has length {len(z)}")
    return tuple(sum(x * y for x, y in zip(row, z)) for row in a)


def column(a, j):
    return tuple(row[j] for row in a)


def columns(a):
    return [column(a, j) for j in range(len(a[0]))]


def transpose(a):
    return tuple(zip(*a))


def conforms(u, v):
    """Return True iff ``u ⊑ v``.

    That is, for every component ``u_j * v_j >= 0`` and
    ``|u_j| <= |v_j|``: `u` lies in the orthant of `v` and is no larger in
    absolute value anywhere.
    """
    _check(u, v)
    for a, b in zip(u, v):
        if b >= 0:
            if a < 0 or a > b:
                return False
        elif a > 0 or a < b:
            return False
    return True


def conforms_prefix(u, v, k):
    """Sign-compatibility test used for partially extended fibers.

    Partial modes constrain the sign of the first `k` coordinates of the
    fiber points but keep the full order on all coordinates, so this is the
    same test as :func:`conforms`.  It exists so that a prefix-restricted
    variant can be swapped in at a single place.
    """
    if not 0 <= k <= len(v):
        raise ValueError(f"k={k} outside [0, {len(v)}]")
    return conforms(u, v)


def l1_norm(v):
    return sum(abs(x) for x in v)


def sign_masks(v):
    """Bit masks of the positive and negative support of `v`.

    ``u ⊑ v`` implies ``pos(u) ⊆ pos(v)`` and ``neg(u) ⊆ neg(v)``, which
    makes the masks a cheap pre-filter in hot loops.
    """
    pos = negm = 0
    bit = 1
    for x in v:
        if x > 0:
            pos |= bit
        elif x < 0:
            negm |= bit
        bit <<= 1
    return pos, negm


def is_nonnegative(v, k=None):
    """True if the first `k` entries (all entries if None) are >= 0."""
    if k is None:
        k = len(v)
    return all(x >= 0 for x in v[:k])


def canonical_key(v):
    """Graded lexicographic key: l1-norm first, then lexicographic."""
    return (l1_norm(v), v)


def canonical_sort(vectors):
    """Sort and deduplicate vectors in canonical (graded lex) order."""
    return sorted(set(vectors), key=canonical_key)


def format_vector(v):
    return "(" + ",".join(str(x) for x in v) + ")"
