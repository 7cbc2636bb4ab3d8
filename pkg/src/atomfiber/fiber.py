"""Fibers, the conformal-sum test, normal forms and greedy decomposition.

A fiber is identified by its right-hand side `b` and a mode `k`: the points
``z`` with ``Az = b`` whose first `k` coordinates are nonnegative.  Mode 0 is
the extended fiber, mode ``n`` the ordinary nonnegative fiber.
"""

from dataclasses import dataclass

from .core import as_matrix, as_vector, format_vector, l1_norm, sub
from .errors import DimensionError, EmptyFiberError, IncompleteAtomSetError
from .graver import MinimalElementSet, provider_for

__all__ = ["FiberHandle", "AtomDecomposition", "fiber", "oplus_decomposes",
           "normal_form", "decompose_fiber"]


class FiberHandle:
    """Lazy view of one fiber; minimal elements come from the shared cache."""

    def __init__(self, a, b, k=0, provider=None):
        self.matrix = as_matrix(a)
        self.rhs = as_vector(b)
        if len(self.rhs) != len(self.matrix):
            raise DimensionError("rhs length does not match matrix rows")
        n = len(self.matrix[0])
        if not 0 <= k <= n:
            raise ValueError(f"mode k={k} outside [0, {n}]")
        self.k = k
        self._provider = provider or provider_for(self.matrix)

    @property
    def minimal(self):
        return MinimalElementSet(self.rhs, self.k,
                                 self._provider.minimal(self.rhs, self.k))

    @property
    def nonempty(self):
        return self._provider.nonempty(self.rhs, self.k)

    def __contains__(self, z):
        z = tuple(z)
        if any(x < 0 for x in z[:self.k]):
            return False
        return all(sum(r * x for r, x in zip(row, z)) == bi
                   for row, bi in zip(self.matrix, self.rhs))

    def __repr__(self):
        return f"FiberHandle(rhs={format_vector(self.rhs)}, k={self.k})"


def fiber(a, b, k=0):
    return FiberHandle(a, b, k)


@dataclass(frozen=True)
class AtomDecomposition:
    """Multiplicities of atoms, in the order the atoms were supplied."""
    rhs: tuple
    atoms: tuple  # ((atom_rhs, multiplicity), ...)

    def multiplicity(self, b):
        b = tuple(b)
        return sum(m for r, m in self.atoms if r == b)

    def nonzero(self):
        return [(r, m) for r, m in self.atoms if m]

    def recompose(self):
        out = [0] * len(self.rhs)
        for r, m in self.atoms:
            for i, x in enumerate(r):
                out[i] += m * x
        return tuple(out)


def _covered(small, big):
    # every entry v of `big` dominates some entry w of `small`
    for vp, vn, v in big:
        for wp, wn, w in small:
            if wp & ~vp or wn & ~vn:
                continue
            for x, y in zip(w, v):
                if (y >= 0 and x > y) or (y < 0 and x < y):
                    break
            else:
                break
        else:
            return False
    return True


def _decomposes(prov, b, g, k):
    mb = prov.entries(b, k)
    if not mb:
        return False
    mg = prov.entries(g, k)
    if not mg or not _covered(mg, mb):
        return False
    # b - g is nonempty whenever the covering holds (v - w is a point), but
    # the test is cheap relative to the covering and states condition (i)
    return prov.nonempty(tuple(x - y for x, y in zip(b, g)), k)


def oplus_decomposes(a, b, g, k=0, provider=None):
    """True iff the fiber of `b` is the conformal sum of those of `g`, ``b-g``.

    Both summand fibers must be nonempty, and every ⊑-minimal point of the
    `b` fiber must dominate a point of the `g` fiber.  It is enough to look
    for minimal witnesses, since any witness dominates a minimal one.
    """
    a = as_matrix(a)
    b, g = as_vector(b), as_vector(g)
    if len(b) != len(a) or len(g) != len(a):
        raise DimensionError("rhs length does not match matrix rows")
    prov = provider or provider_for(a)
    return _decomposes(prov, b, g, k)


def _min_l1(prov, s, k):
    return min(l1_norm(v) for v in prov.minimal(s, k))


def normal_form(s, g_set, a, k=0, provider=None):
    """Reduce `s` by conformal summands from `g_set` until irreducible.

    `g_set` is scanned in the given order and the first summand found is
    subtracted.  Each step strictly lowers the smallest l1-norm among the
    minimal points of the current fiber, which is asserted.
    """
    a = as_matrix(a)
    prov = provider or provider_for(a)
    s = as_vector(s)
    if not prov.entries(s, k):
        return s
    while True:
        for g in g_set:
            if _decomposes(prov, s, g, k):
                nxt = sub(s, g)
                assert _min_l1(prov, nxt, k) < _min_l1(prov, s, k)
                s = nxt
                break
        else:
            return s


def decompose_fiber(a, b, atoms, k=0, provider=None):
    """Greedy decomposition of the fiber of `b` into the given atoms.

    For each atom in order, subtract it while it is a conformal summand of
    the remaining right-hand side.  The multiplicities depend on the atom
    order.  Raises EmptyFiberError for an empty fiber and
    IncompleteAtomSetError if the residual right-hand side is not zero.
    """
    a = as_matrix(a)
    b = as_vector(b)
    if len(b) != len(a):
        raise DimensionError("rhs length does not match matrix rows")
    prov = provider or provider_for(a)
    if not prov.nonempty(b, k):
        raise EmptyFiberError(f"fiber of {format_vector(b)} (mode {k}) is empty")
    rest = b
    mults = []
    for atom in atoms:
        atom = tuple(atom)
        m = 0
        while any(rest) and _decomposes(prov, rest, atom, k):
            rest = sub(rest, atom)
            m += 1
        mults.append((atom, m))
    if any(rest):
        raise IncompleteAtomSetError(
            f"residual {format_vector(rest)} after decomposing {format_vector(b)}",
            residual=rest)
    return AtomDecomposition(rhs=b, atoms=tuple(mults))
