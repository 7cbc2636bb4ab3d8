"""Split a fiber into atoms, then solve integer programs atom by atom."""

from fractions import Fraction

from atomfiber import (decompose_fiber, minimal_fiber_elements, project_and_lift,
                       solve_atomic_programs, solve_ip)
from atomfiber.core import format_vector

A = ((3, 2, 1, 0), (0, 1, 2, 3))
atoms = project_and_lift(A)

dec = decompose_fiber(A, (8, 7), list(atoms), 4)
print("(8,7) =", " + ".join(f"{m}*{format_vector(r)}" for r, m in dec.nonzero()))

# each point of the big fiber is a sum of one point from each summand
p24 = minimal_fiber_elements(A, (2, 4), 4)
p63 = minimal_fiber_elements(A, (6, 3), 4)
for u in p24:
    for w in p63:
        z = tuple(x + y for x, y in zip(u, w))
        print(f"  {format_vector(u)} + {format_vector(w)} = {format_vector(z)}")

# one table of atom optima answers every right-hand side
for c in [(1, 1, 1, 1), (1, 0, 0, 0), (Fraction(1, 2), -1, 0, 2)]:
    table = solve_atomic_programs(A, c, atoms)
    for b in [(8, 7), (12, 15), (30, 0)]:
        z, val = solve_ip(A, c, b, table, atoms)
        print(f"c={[str(x) for x in c]} b={format_vector(b)}: {val} at {format_vector(z)}")
