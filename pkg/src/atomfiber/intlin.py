"""Integer linear algebra: Hermite normal form, integer kernels, Az = b."""

from dataclasses import dataclass

from .core import as_matrix, as_vector, mat_vec
from .errors import DimensionError

__all__ = ["HnfResult", "KernelLattice", "hermite_normal_form",
           "kernel_lattice_basis", "solve_integral"]


@dataclass(frozen=True)
class HnfResult:
    """Column-style Hermite normal form ``h = a @ u``.

    `u` is unimodular.  The first `rank` columns of `h` are in lower echelon
    form with positive pivots at rows `pivot_rows`; every entry to the left
    of a pivot lies in ``[0, pivot)``.  The remaining columns are zero.
    """
    h: tuple
    u: tuple
    rank: int
    pivot_rows: tuple


@dataclass(frozen=True)
class KernelLattice:
    basis: tuple

    def __len__(self):
        return len(self.basis)

    def __iter__(self):
        return iter(self.basis)


def _col_axpy(mat, dst, src, q):
    # column dst -= q * column src
    for row in mat:
        row[dst] -= q * row[src]


def _col_swap(mat, i, j):
    for row in mat:
        row[i], row[j] = row[j], row[i]


def _col_negate(mat, j):
    for row in mat:
        row[j] = -row[j]


def hermite_normal_form(a):
    """Column-style HNF of `a` together with the unimodular transform.

    Rows are processed top to bottom.  Within a row the pivot is the column
    (among those not yet used as pivots) holding the smallest nonzero
    absolute value, ties going to the lowest column index; the other columns
    are reduced against it by floor division until the row is cleared.
    """
    a = as_matrix(a)
    d, n = len(a), len(a[0])
    h = [list(r) for r in a]
    u = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    both = h + u
    p = 0
    pivot_rows = []
    for r in range(d):
        if p == n:
            break
        while True:
            live = [j for j in range(p, n) if h[r][j] != 0]
            if not live:
                break
            j = min(live, key=lambda c: (abs(h[r][c]), c))
            if j != p:
                _col_swap(both, j, p)
            piv = h[r][p]
            done = True
            for c in range(p + 1, n):
                if h[r][c]:
                    _col_axpy(both, c, p, h[r][c] // piv)
                    if h[r][c]:
                        done = False
            if done:
                break
        if h[r][p] == 0:
            continue
        if h[r][p] < 0:
            _col_negate(both, p)
        piv = h[r][p]
        for c in range(p):
            q = h[r][c] // piv
            if q:
                _col_axpy(both, c, p, q)
        pivot_rows.append(r)
        p += 1
    return HnfResult(h=tuple(map(tuple, h)), u=tuple(map(tuple, u)),
                     rank=p, pivot_rows=tuple(pivot_rows))


def kernel_lattice_basis(a):
    """A basis of ``{z in Z^n : a z = 0}``, read off the HNF transform."""
    res = hermite_normal_form(a)
    n = len(res.u)
    basis = tuple(tuple(res.u[i][j] for i in range(n))
                  for j in range(res.rank, n))
    return KernelLattice(basis)


def solve_integral(a, b, hnf=None):
    """Some integer ``z`` with ``a z = b``, or None if none exists.

    Uses forward substitution through the HNF; `hnf` may be passed to reuse
    a precomputed decomposition of `a`.
    """
    a = as_matrix(a)
    b = as_vector(b)
    if len(b) != len(a):
        raise DimensionError(f"rhs has length {len(b)}, matrix has {len(a)} rows")
    res = hnf if hnf is not None else hermite_normal_form(a)
    h, u = res.h, res.u
    n = len(u)
    y = [0] * n
    pivot_of_row = {r: c for c, r in enumerate(res.pivot_rows)}
    for r, row in enumerate(h):
        rest = b[r] - sum(row[c] * y[c] for c in range(res.rank))
        c = pivot_of_row.get(r)
        if c is None:
            if rest:
                return None
            continue
        # y[c] is still 0, so it did not contribute to `rest`
        q, m = divmod(rest, row[c])
        if m:
            return None
        y[c] = q
    z = tuple(sum(u[i][j] * y[j] for j in range(n)) for i in range(n))
    assert mat_vec(a, z) == b
    return z
