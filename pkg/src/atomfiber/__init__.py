"""Atomic fibers of integer matrices.

For ``A`` in Z^{d x n} the fiber of ``b`` is ``{z in Z^n_+ : Az = b}`` and the
extended fiber drops the sign condition.  This package computes the
right-hand sides whose fibers cannot be written as conformal sums of two
others, splits arbitrary fibers into such atoms, and uses the splits to
solve integer programs for every right-hand side at once.
"""

__version__ = "0.1.0"

from .core import (as_matrix, as_vector, canonical_key, canonical_sort,
                   conforms, conforms_prefix, l1_norm)
from .errors import (AtomFiberError, CompletionLimitError, DimensionError,
                     EmptyFiberError, IncompleteAtomSetError, InfeasibleError,
                     InfeasibleSeedError, UnboundedError)
from .intlin import (HnfResult, KernelLattice, hermite_normal_form,
                     kernel_lattice_basis, solve_integral)
from .graver import (GraverBasis, MinimalElementSet, graver_basis,
                     hilbert_basis_kernel, minimal_fiber_elements)
from .fiber import (AtomDecomposition, FiberHandle, decompose_fiber, fiber,
                    normal_form, oplus_decomposes)
from .atomic import (AtomSet, atomicity_filter, completion_run,
                     extended_atomic_fibers, partial_atomic_fibers,
                     project_and_lift, sublattice_atomic_fibers)
from .ipsolve import AtomicProgramTable, solve_atomic_programs, solve_ip
