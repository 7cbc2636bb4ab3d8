"""Integer programs with varying right-hand side via atomic programs.

Optimal points of ``min{c.z : Az = b_i, z >= 0}`` for the atomic right-hand
sides ``b_i`` are computed once.  For any other `b`, the fiber is split
greedily into atoms and the corresponding optimal points are added up.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational

from .atomic import AtomSet
from .core import as_matrix, as_vector, format_vector
from .errors import DimensionError, InfeasibleError, UnboundedError
from .fiber import decompose_fiber
from .graver import hilbert_basis_kernel, provider_for

__all__ = ["as_cost", "AtomicProgramTable", "solve_atomic_programs",
           "solve_ip"]


def as_cost(c):
    """Exact rational cost vector; accepts ints, Fractions and "p/q" strings."""
    out = []
    for x in c:
        if isinstance(x, (Rational, str)):
            out.append(Fraction(x))
        else:
            raise TypeError(f"cost entries must be exact rationals, got {x!r}")
    return tuple(out)


def _value(c, z):
    return sum((ci * zi for ci, zi in zip(c, z)), Fraction(0))


@dataclass(frozen=True)
class AtomicProgramTable:
    cost: tuple
    entries: dict = field(default_factory=dict)  # rhs -> (z_opt, value)
    status: str = "bounded"
    ray: tuple = None  # improving Hilbert basis element when unbounded


def solve_atomic_programs(a, c, atoms):
    """Optimal points of the atomic programs for every atom in `atoms`.

    If some Hilbert basis element ``h`` of ``{x >= 0 : Ax = 0}`` has
    ``c.h < 0`` every nonempty fiber is unbounded and no optima are stored.
    Otherwise each fiber is its minimal points plus nonnegative
    combinations of Hilbert elements of nonnegative cost, so the optimum is
    attained at a minimal point; ties go to the lexicographically smallest.
    """
    a = as_matrix(a)
    c = as_cost(c)
    n = len(a[0])
    if len(c) != n:
        raise DimensionError(f"cost has length {len(c)}, matrix has {n} columns")
    if isinstance(atoms, AtomSet) and atoms.k != n:
        raise ValueError("atomic programs need atoms of the nonnegative fibers")
    for h in hilbert_basis_kernel(a):
        if _value(c, h) < 0:
            return AtomicProgramTable(cost=c, status="unbounded", ray=h)
    prov = provider_for(a)
    entries = {}
    for b in atoms:
        b = tuple(b)
        pts = prov.minimal(b, n)
        z = min(pts, key=lambda z: (_value(c, z), z))
        entries[b] = (z, _value(c, z))
    return AtomicProgramTable(cost=c, entries=entries)


def solve_ip(a, c, b, table, atoms):
    """Optimal point and value of ``min{c.z : Az = b, z >= 0}``.

    Returns ``(z, value)``.  Raises InfeasibleError, UnboundedError, or
    IncompleteAtomSetError when `atoms` cannot decompose the fiber.
    """
    a = as_matrix(a)
    b = as_vector(b)
    c = as_cost(c)
    n = len(a[0])
    if c != table.cost:
        raise ValueError("table was built for a different cost vector")
    prov = provider_for(a)
    if not prov.nonempty(b, n):
        raise InfeasibleError(f"no nonnegative integer z with Az = {format_vector(b)}")
    if table.status == "unbounded":
        raise UnboundedError(
            f"cost decreases along kernel ray {format_vector(table.ray)}")
    dec = decompose_fiber(a, b, list(atoms), n, provider=prov)
    z = [0] * n
    for r, m in dec.nonzero():
        zr = table.entries[r][0]
        for i in range(n):
            z[i] += m * zr[i]
    z = tuple(z)
    return z, _value(c, z)
