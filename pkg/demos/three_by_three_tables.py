"""3x3 contingency tables with fixed row and column sums.

Rows of the matrix are differences of margins, so the right-hand sides
live in Z^4.  Level 0 of project_and_lift is the extended completion, so
most of the time goes there and the second call mostly hits the cache.
"""

import logging
import time

from atomfiber import extended_atomic_fibers, graver_basis, project_and_lift

logging.basicConfig(level=logging.INFO, format="%(message)s")

A = (
    (1, -1, 0, -1, 1, 0, 0, 0, 0),
    (0, 1, -1, 0, -1, 1, 0, 0, 0),
    (0, 0, 0, 1, -1, 0, -1, 1, 0),
    (0, 0, 0, 0, 1, -1, 0, -1, 1),
)

print(f"Graver basis: {len(graver_basis(A))} elements")
t = time.perf_counter()
atoms = project_and_lift(A)
print(f"{len(atoms)} nonzero atomic fibers in {time.perf_counter() - t:.1f}s")
t = time.perf_counter()
ext = extended_atomic_fibers(A)
print(f"{len(ext)} nonzero extended atomic fibers in {time.perf_counter() - t:.1f}s")
