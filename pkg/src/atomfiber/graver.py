"""Graver bases, kernel Hilbert bases and minimal fiber elements.

The Graver basis is computed by a completion procedure over a symmetric
generating set of the integer kernel.  Minimal elements of an extended
fiber ``{z : Az = b}`` are obtained from the Graver basis of `A` by a walk
over Graver-irreducible points of the fiber; the Graver basis of the
lifted matrix ``(A | -b)`` is available as an independent route.
"""

import threading
from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from .core import add, as_matrix, as_vector, canonical_sort, neg, sign_masks
from .errors import CompletionLimitError, DimensionError
from .intlin import hermite_normal_form, kernel_lattice_basis, solve_integral

__all__ = ["GraverBasis", "MinimalElementSet", "MinimalElementProvider",
           "graver_basis", "hilbert_basis_kernel", "minimal_fiber_elements",
           "provider_for", "DEFAULT_LIMIT"]

DEFAULT_LIMIT = 10**6


@dataclass(frozen=True)
class GraverBasis:
    matrix: tuple
    elements: tuple  # canonical order

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, v):
        return tuple(v) in set(self.elements)


@dataclass(frozen=True)
class MinimalElementSet:
    """The ⊑-minimal points of ``{z : Az = b, z_i >= 0 for i < k}``."""
    rhs: tuple
    k: int
    elements: tuple  # canonical order

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __bool__(self):
        return bool(self.elements)


class _Reducer:
    """Sign-compatible reduction of vectors by a growing list of vectors."""

    __slots__ = ("items",)

    def __init__(self, vectors=()):
        self.items = []
        for v in vectors:
            self.append(v)

    def append(self, v):
        pos, negm = sign_masks(v)
        self.items.append((pos, negm, v))

    def find(self, s, pos, negm):
        """First stored g with g ⊑ s, or None."""
        for gp, gn, g in self.items:
            if gp & ~pos or gn & ~negm:
                continue
            for a, b in zip(g, s):
                if (b >= 0 and a > b) or (b < 0 and a < b):
                    break
            else:
                return g
        return None

    def reduce(self, s, masks=None):
        """Subtract conforming elements from `s` until none applies."""
        pos, negm = masks if masks is not None else sign_masks(s)
        while True:
            g = self.find(s, pos, negm)
            if g is None:
                return s
            s = tuple(x - y for x, y in zip(s, g))
            pos, negm = sign_masks(s)


def _clash(f, g):
    fp, fn = sign_masks(f)
    gp, gn = sign_masks(g)
    return bool((fp & gn) | (fn & gp))


def _minimal_prune(vectors):
    """Keep only the ⊑-minimal members of a duplicate-free collection."""
    vectors = canonical_sort(vectors)
    kept = _Reducer()
    out = []
    # canonical order lists any proper ⊑-predecessor first (smaller l1 norm)
    for v in vectors:
        if kept.find(v, *sign_masks(v)) is None:
            kept.append(v)
            out.append(v)
    return out


def graver_basis(a, limit=DEFAULT_LIMIT):
    """All ⊑-minimal nonzero vectors of the integer kernel of `a`.

    Completion: start from a kernel lattice basis and its negatives, reduce
    pairwise sums by sign-compatible subtraction, adjoin nonzero residues
    and enqueue their sums (FIFO, duplicates suppressed), then prune to the
    ⊑-minimal elements.  Sums of two sign-compatible vectors reduce to zero
    trivially and are never enqueued.
    """
    a = as_matrix(a)
    basis = kernel_lattice_basis(a).basis
    seeds = []
    for v in basis:
        seeds.extend((v, neg(v)))
    red = _Reducer()
    elems = []
    for v in seeds:
        r = red.reduce(v)
        if any(r) and r not in elems:
            red.append(r)
            elems.append(r)
    queue = deque()
    seen = set()

    def push(f):
        for g in elems:
            if _clash(f, g):
                s = add(f, g)
                if s not in seen:
                    seen.add(s)
                    queue.append(s)

    for f in list(elems):
        push(f)
    while queue:
        s = queue.popleft()
        r = red.reduce(s)
        if any(r):
            red.append(r)
            elems.append(r)
            if len(elems) > limit:
                raise CompletionLimitError(
                    f"Graver completion exceeded {limit} elements")
            push(r)
    return GraverBasis(matrix=a, elements=tuple(_minimal_prune(elems)))


def hilbert_basis_kernel(a, graver=None):
    """Hilbert basis of the cone ``{x >= 0 : Ax = 0}``.

    These are exactly the componentwise nonnegative Graver elements.
    """
    if graver is None:
        graver = provider_for(as_matrix(a)).graver
    return tuple(g for g in graver.elements if all(x >= 0 for x in g))


def _minimal_by_lifting(a, b):
    # Graver basis of (A | -b); the points with last coordinate 1
    lifted = tuple(row + (-bi,) for row, bi in zip(a, b))
    gr = graver_basis(lifted)
    return canonical_sort(g[:-1] for g in gr.elements if g[-1] == 1)


class MinimalElementProvider:
    """Memoized source of minimal fiber elements for one matrix.

    The cache maps a right-hand side to the minimal elements of its
    extended fiber; partial modes are answered by filtering, since a
    ⊑-minimal point of the restricted fiber is minimal in the extended one.
    The cache tolerates concurrent readers and writers.
    """

    def __init__(self, a, cache_size=None):
        self.matrix = as_matrix(a)
        self.n = len(self.matrix[0])
        self.cache_size = cache_size
        self._hnf = hermite_normal_form(self.matrix)
        self._graver = None
        self._reducer = None
        self._cache = {}
        self._entries = {}
        self._lock = threading.Lock()
        self.hits = self.misses = 0

    @property
    def graver(self):
        if self._graver is None:
            with self._lock:
                if self._graver is None:
                    gb = graver_basis(self.matrix)
                    self._reducer = _Reducer(gb.elements)
                    self._graver = gb
        return self._graver

    def _walk(self, z0):
        # Every minimal point is reached from any other by adding a Graver
        # element that clashes in sign and reducing; sign-compatible steps
        # fall straight back and are skipped.
        self.graver
        red = self._reducer
        m0 = red.reduce(z0)
        found = {m0}
        stack = [m0]
        while stack:
            m = stack.pop()
            mp, mn = sign_masks(m)
            for gp, gn, g in red.items:
                if not ((mp & gn) | (mn & gp)):
                    continue
                r = red.reduce(tuple(x + y for x, y in zip(m, g)))
                if r not in found:
                    found.add(r)
                    stack.append(r)
        return tuple(canonical_sort(found))

    def extended(self, b):
        """Minimal elements of ``{z in Z^n : Az = b}`` in canonical order."""
        b = tuple(b)
        hit = self._cache.get(b)
        if hit is not None:
            self.hits += 1
            return hit
        mirror = self._cache.get(tuple(-x for x in b))
        if mirror is not None:
            res = tuple(canonical_sort(neg(v) for v in mirror))
        else:
            if len(b) != len(self.matrix):
                raise DimensionError(
                    f"rhs has length {len(b)}, matrix has {len(self.matrix)} rows")
            z0 = solve_integral(self.matrix, b, hnf=self._hnf)
            res = () if z0 is None else self._walk(z0)
        self.misses += 1
        with self._lock:
            if self.cache_size is not None and len(self._cache) >= self.cache_size:
                old = next(iter(self._cache))
                del self._cache[old]
                for kk in range(self.n + 1):
                    self._entries.pop((old, kk), None)
            self._cache[b] = res
        return res

    def minimal(self, b, k=0):
        if not 0 <= k <= self.n:
            raise ValueError(f"mode k={k} outside [0, {self.n}]")
        full = self.extended(b)
        if k:
            full = tuple(v for v in full if all(x >= 0 for x in v[:k]))
        return full

    def entries(self, b, k=0):
        """Minimal elements paired with their sign masks, cached per mode."""
        key = (tuple(b), k)
        hit = self._entries.get(key)
        if hit is None:
            hit = tuple(sign_masks(v) + (v,) for v in self.minimal(b, k))
            with self._lock:
                self._entries[key] = hit
        return hit

    def nonempty(self, b, k=0):
        if k == 0:
            b = tuple(b)
            if b in self._cache:
                return bool(self._cache[b])
            return solve_integral(self.matrix, b, hnf=self._hnf) is not None
        return bool(self.minimal(b, k))


@lru_cache(maxsize=32)
def provider_for(a):
    """Shared provider for matrix `a` (a tuple of row tuples)."""
    return MinimalElementProvider(a)


def minimal_fiber_elements(a, b, k=0, method="walk"):
    """⊑-minimal elements of the partially extended fiber of `b`.

    The fiber is ``{z : Az = b, z_i >= 0 for i < k}``: ``k = 0`` is the
    extended fiber and ``k = n`` the nonnegative one.  ``method="lift"``
    bypasses the cache and reads the minimal elements off the Graver basis
    of ``(A | -b)`` instead.
    """
    a = as_matrix(a)
    b = as_vector(b)
    if len(b) != len(a):
        raise DimensionError(f"rhs has length {len(b)}, matrix has {len(a)} rows")
    n = len(a[0])
    if not 0 <= k <= n:
        raise ValueError(f"mode k={k} outside [0, {n}]")
    if method == "walk":
        elems = provider_for(a).minimal(b, k)
    elif method == "lift":
        elems = tuple(v for v in _minimal_by_lifting(a, b)
                      if all(x >= 0 for x in v[:k]))
    else:
        raise ValueError(f"unknown method {method!r}")
    return MinimalElementSet(rhs=b, k=k, elements=elems)
