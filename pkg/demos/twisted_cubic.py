"""Atomic fibers of the twisted cubic.

The matrix [[3,2,1,0],[0,1,2,3]] sends a monomial exponent to its bidegree.
Every nonempty fiber splits into a Minkowski sum of 18 indivisible ones.
"""

from atomfiber import extended_atomic_fibers, minimal_fiber_elements, project_and_lift
from atomfiber.core import format_vector

A = ((3, 2, 1, 0), (0, 1, 2, 3))

atoms = project_and_lift(A)
print(f"{len(atoms)} atomic fibers")
for b in atoms:
    pts = minimal_fiber_elements(A, b, 4)
    print(f"  {format_vector(b):>8}  " + " ".join(format_vector(z) for z in pts))

# without sign constraints there are more atoms, and they come in +/- pairs
ext = extended_atomic_fibers(A)
print(f"{len(ext)} extended atomic fibers (plus the zero fiber)")
