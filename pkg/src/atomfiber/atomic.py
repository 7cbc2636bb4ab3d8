"""Completion procedure for atomic and extended atomic fibers.

`completion_run` saturates a seed set of right-hand sides: pairwise sums are
reduced to normal form by conformal summands from the current set and the
irreducible residues are adjoined.  The result contains every atomic
right-hand side of the mode; `atomicity_filter` then removes the members
that still split.  `project_and_lift` reaches the nonnegative fibers by
constraining one coordinate at a time, seeding each level with the atoms
of the previous one.
"""

import heapq
import logging
from bisect import insort
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .core import (as_matrix, as_vector, canonical_key, canonical_sort,
                   column, format_vector, neg)
from .errors import CompletionLimitError, InfeasibleSeedError
from .fiber import _decomposes, normal_form
from .graver import DEFAULT_LIMIT, provider_for

__all__ = ["AtomSet", "completion_run", "atomicity_filter",
           "extended_atomic_fibers", "project_and_lift",
           "partial_atomic_fibers", "sublattice_atomic_fibers",
           "column_seeds"]

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class AtomSet:
    """Atomic right-hand sides of one fiber family, in canonical order.

    The zero right-hand side is never listed: its fiber is atomic in every
    mode but it is never needed in a decomposition.
    """
    matrix: tuple
    k: int
    rhs_list: tuple

    @property
    def mode(self):
        if self.k == 0:
            return "extended"
        if self.k == len(self.matrix[0]):
            return "nonneg"
        return "partial"

    @property
    def count(self):
        return len(self.rhs_list)

    def __len__(self):
        return len(self.rhs_list)

    def __iter__(self):
        return iter(self.rhs_list)

    def __contains__(self, b):
        return tuple(b) in set(self.rhs_list)


class _Canonical:
    """Duplicate-free list kept in canonical order."""

    def __init__(self, items=()):
        self.keys = []
        self.members = set()
        for v in items:
            self.add(v)

    def add(self, v):
        if v in self.members:
            return False
        self.members.add(v)
        insort(self.keys, canonical_key(v))
        return True

    def __iter__(self):
        return (v for _, v in self.keys)

    def __len__(self):
        return len(self.keys)


def column_seeds(a, start=0):
    """``±A e_j`` for ``j >= start``, zero columns dropped."""
    out = []
    for j in range(start, len(a[0])):
        c = column(a, j)
        if any(c):
            out.extend((c, neg(c)))
    return out


def completion_run(a, f_init, k=0, limit=DEFAULT_LIMIT, threads=1,
                   provider=None):
    """Saturate `f_init` under conformal normal forms in mode `k`.

    Candidates (pairwise sums, including doubles) are processed in
    canonical order and each distinct sum once.  With ``threads > 1`` the
    minimal elements of upcoming candidates are computed ahead of time in
    a thread pool; the reductions themselves stay sequential, so the result
    does not depend on the thread count.

    Returns the final set in canonical order, zero excluded.
    """
    a = as_matrix(a)
    prov = provider or provider_for(a)
    seeds = [as_vector(f) for f in f_init]
    for f in seeds:
        if not prov.nonempty(f, k):
            raise InfeasibleSeedError(
                f"seed {format_vector(f)} has an empty fiber in mode {k}")
    gens = _Canonical(f for f in seeds if any(f))
    heap = []
    seen = set()

    def push(f):
        for g in gens:
            s = tuple(x + y for x, y in zip(f, g))
            if s not in seen and any(s):
                seen.add(s)
                heapq.heappush(heap, (canonical_key(s), s))

    for f in list(gens):
        push(f)
    pool = ThreadPoolExecutor(threads) if threads > 1 else None
    batch = max(4 * threads, 16)
    try:
        while heap:
            if pool is not None:
                ahead = [s for _, s in heapq.nsmallest(batch, heap)]
                list(pool.map(lambda s: prov.entries(s, k), ahead))
            _, s = heapq.heappop(heap)
            f = normal_form(s, gens, a, k, provider=prov)
            if any(f):
                gens.add(f)
                if len(gens) > limit:
                    raise CompletionLimitError(
                        f"atomic completion exceeded {limit} elements "
                        f"(mode {k})")
                push(f)
    finally:
        if pool is not None:
            pool.shutdown()
    log.debug("completion mode %d: %d elements, %d candidates",
              k, len(gens), len(seen))
    return list(gens)


def atomicity_filter(a, g_set, k=0, provider=None):
    """Members of `g_set` with no nontrivial conformal split over `g_set`.

    Any split of an atomic-free fiber refines to one whose first summand is
    atomic, and all atomic right-hand sides lie in a completion result, so
    testing summands drawn from the set is enough.
    """
    a = as_matrix(a)
    prov = provider or provider_for(a)
    cands = [tuple(b) for b in canonical_sort(g_set) if any(b)]
    keep = []
    for b in cands:
        if not any(g != b and _decomposes(prov, b, g, k) for g in cands):
            keep.append(b)
    return keep


def _atom_set(a, k, rhs):
    return AtomSet(matrix=a, k=k, rhs_list=tuple(canonical_sort(rhs)))


def extended_atomic_fibers(a, limit=DEFAULT_LIMIT, threads=1):
    """Right-hand sides of all nonzero extended atomic fibers of `a`."""
    a = as_matrix(a)
    prov = provider_for(a)
    g = completion_run(a, column_seeds(a), 0, limit, threads, prov)
    return _atom_set(a, 0, atomicity_filter(a, g, 0, prov))


def partial_atomic_fibers(a, k, limit=DEFAULT_LIMIT, threads=1):
    """Atoms of the fibers ``{z : Az = b, z_i >= 0 for i < k}``.

    Level 0 runs the completion from ``±A e_j``.  Level ``l + 1`` is seeded
    with the level-`l` atoms whose level-``(l+1)`` fiber is nonempty (an
    atom with an empty fiber can never occur in a split of a nonempty one)
    together with ``±A e_j`` for the coordinates still free.
    """
    a = as_matrix(a)
    n = len(a[0])
    if not 0 <= k <= n:
        raise ValueError(f"mode k={k} outside [0, {n}]")
    prov = provider_for(a)
    g = completion_run(a, column_seeds(a), 0, limit, threads, prov)
    atoms = atomicity_filter(a, g, 0, prov)
    log.info("level 0: %d candidates, %d atoms", len(g), len(atoms))
    for level in range(1, k + 1):
        seeds = [b for b in atoms if prov.nonempty(b, level)]
        seeds += column_seeds(a, level)
        g = completion_run(a, seeds, level, limit, threads, prov)
        atoms = atomicity_filter(a, g, level, prov)
        log.info("level %d: %d candidates, %d atoms", level, len(g), len(atoms))
    return _atom_set(a, k, atoms)


def project_and_lift(a, limit=DEFAULT_LIMIT, threads=1):
    """Right-hand sides of all nonzero atomic (nonnegative) fibers of `a`."""
    a = as_matrix(a)
    return partial_atomic_fibers(a, len(a[0]), limit, threads)


def sublattice_atomic_fibers(a, gens, limit=DEFAULT_LIMIT, threads=1):
    """Extended atomic fibers for right-hand sides in the lattice of `gens`.

    The completion is seeded with ``±g`` for every generator.  All sums and
    differences stay in the lattice, so every candidate is a member of it.
    """
    a = as_matrix(a)
    prov = provider_for(a)
    seeds = []
    for g in gens:
        g = as_vector(g)
        if any(g):
            seeds.extend((g, neg(g)))
    if not seeds:
        return _atom_set(a, 0, ())
    g = completion_run(a, seeds, 0, limit, threads, prov)
    return _atom_set(a, 0, atomicity_filter(a, g, 0, prov))
