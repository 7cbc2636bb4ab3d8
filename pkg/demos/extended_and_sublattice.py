"""Extended atomic fibers, partial sign constraints and sublattices."""

from atomfiber import (extended_atomic_fibers, partial_atomic_fibers,
                       sublattice_atomic_fibers)
from atomfiber.core import format_vector

A = ((3, 2, 1, 0), (0, 1, 2, 3))

print("extended:", " ".join(format_vector(b) for b in extended_atomic_fibers(A)))

# constraining more coordinates to be nonnegative leaves fewer atoms
for k in range(5):
    print(f"first {k} coordinates >= 0: {len(partial_atomic_fibers(A, k))} atoms")

# only right-hand sides on the diagonal lattice generated by (3,3)
diag = sublattice_atomic_fibers(A, [(3, 3)])
print("diagonal:", " ".join(format_vector(b) for b in diag))
