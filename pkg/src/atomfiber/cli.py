"""Command-line interface.

Exit codes: 0 success, 2 parse error, 3 completion limit, 4 infeasible,
5 incomplete atom set, 6 unbounded program.
"""

import argparse
import logging
import os
import sys

from . import __version__
from .atomic import (extended_atomic_fibers, partial_atomic_fibers,
                     sublattice_atomic_fibers)
from .core import format_vector
from .errors import (CompletionLimitError, EmptyFiberError,
                     IncompleteAtomSetError, InfeasibleError,
                     InfeasibleSeedError, UnboundedError)
from .fiber import decompose_fiber
from .graver import (DEFAULT_LIMIT, graver_basis, hilbert_basis_kernel,
                     minimal_fiber_elements, provider_for)
from .io import (ParseError, format_element_listing, format_vector_list,
                 parse_cost, parse_rhs, read_matrix, read_vector_list)
from .ipsolve import solve_atomic_programs, solve_ip

EXIT_OK, EXIT_PARSE, EXIT_LIMIT, EXIT_INFEASIBLE, EXIT_INCOMPLETE = 0, 2, 3, 4, 5
EXIT_UNBOUNDED = 6



def _stem(path):
    root, ext = os.path.splitext(path)
    return root if ext == ".mat" else path


def _emit(args, text, suffix):
    out = args.output or _stem(args.matrix) + suffix
    if out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="ascii") as fh:
            fh.write(text)
        if not args.quiet:
            print(f"wrote {out}", file=sys.stderr)


def _rhs(args, a):
    b = parse_rhs(args.rhs)
    if len(b) != len(a):
        raise ParseError(f"rhs has {len(b)} entries, matrix has {len(a)} rows")
    return b


def _mode(args, a):
    n = len(a[0])
    k = n if args.mode is None else args.mode
    if not 0 <= k <= n:
        raise ParseError(f"--mode must lie in [0, {n}]")
    return k


def _atoms_for(args, a, k):
    if getattr(args, "atoms", None):
        return read_vector_list(args.atoms)
    if k == 0 and getattr(args, "sublattice", None):
        gens = read_vector_list(args.sublattice)
        return list(sublattice_atomic_fibers(a, gens, args.limit, args.threads))
    if k == 0:
        return list(extended_atomic_fibers(a, args.limit, args.threads))
    return list(partial_atomic_fibers(a, k, args.limit, args.threads))


def _with_zero(args, rows, d):
    return list(rows) + [(0,) * d] if args.include_zero else list(rows)


def cmd_atomic(args):
    a = read_matrix(args.matrix)
    k = _mode(args, a)
    atoms = partial_atomic_fibers(a, k, args.limit, args.threads)
    d = len(a)
    _emit(args, format_vector_list(_with_zero(args, atoms, d), d), ".ato")
    if args.elements:
        prov = provider_for(a)
        finite = k == len(a[0]) and not hilbert_basis_kernel(a)
        blocks = [(b, prov.minimal(b, k), finite) for b in atoms.rhs_list]
        path = _stem(args.matrix) + ".fib"
        with open(path, "w", encoding="ascii") as fh:
            fh.write(format_element_listing(blocks, len(a[0])))
        if not args.quiet:
            print(f"wrote {path}", file=sys.stderr)
    return EXIT_OK


def cmd_extended_atomic(args):
    a = read_matrix(args.matrix)
    if args.sublattice:
        gens = read_vector_list(args.sublattice)
        atoms = sublattice_atomic_fibers(a, gens, args.limit, args.threads)
    else:
        atoms = extended_atomic_fibers(a, args.limit, args.threads)
    d = len(a)
    _emit(args, format_vector_list(_with_zero(args, atoms, d), d), ".eat")
    return EXIT_OK


def cmd_graver(args):
    a = read_matrix(args.matrix)
    gb = graver_basis(a, args.limit)
    _emit(args, format_vector_list(gb.elements, len(a[0])), ".gra")
    return EXIT_OK


def cmd_hilbert(args):
    a = read_matrix(args.matrix)
    _emit(args, format_vector_list(hilbert_basis_kernel(a), len(a[0])), ".hil")
    return EXIT_OK


def cmd_minimal(args):
    a = read_matrix(args.matrix)
    b = _rhs(args, a)
    k = _mode(args, a)
    ms = minimal_fiber_elements(a, b, k)
    _emit(args, format_vector_list(ms.elements, len(a[0])), ".min")
    return EXIT_OK


def cmd_decompose(args):
    a = read_matrix(args.matrix)
    b = _rhs(args, a)
    k = _mode(args, a)
    prov = provider_for(a)
    if not prov.nonempty(b, k):
        print("infeasible", file=sys.stderr)
        return EXIT_INFEASIBLE
    atoms = sorted(set(map(tuple, _atoms_for(args, a, k))),
                   key=lambda v: (sum(map(abs, v)), v))
    dec = decompose_fiber(a, b, atoms, k)
    for r, m in dec.nonzero():
        print(f"{format_vector(r)} : {m}")
    return EXIT_OK


def cmd_solve(args):
    a = read_matrix(args.matrix)
    b = _rhs(args, a)
    n = len(a[0])
    if args.cost_file:
        with open(args.cost_file, encoding="ascii") as fh:
            c = parse_cost(fh.read())
    elif args.cost:
        c = parse_cost(args.cost)
    else:
        raise ParseError("a cost vector is required (--cost or --cost-file)")
    if len(c) != n:
        raise ParseError(f"cost has {len(c)} entries, matrix has {n} columns")
    if not provider_for(a).nonempty(b, n):
        print("infeasible")
        return EXIT_INFEASIBLE
    atoms = partial_atomic_fibers(a, n, args.limit, args.threads)
    table = solve_atomic_programs(a, c, atoms)
    z, val = solve_ip(a, c, b, table, atoms)
    print(f"optimal point: {format_vector(z)}")
    print(f"value: {val}")
    return EXIT_OK


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--deterministic", dest="deterministic",
                        action="store_true", default=True,
                        help="deterministic processing order (always on)")
    common.add_argument("--threads", type=int, default=1, metavar="N",
                        help="threads for precomputing minimal elements")
    common.add_argument("--limit", type=int, default=DEFAULT_LIMIT, metavar="N",
                        help="abort a completion after N generated elements")
    common.add_argument("--mode", type=int, default=None, metavar="K",
                        help="constrain the first K coordinates to be >= 0")
    common.add_argument("--sublattice", metavar="GENS",
                        help="vector list generating the right-hand-side lattice")
    common.add_argument("-o", "--output", metavar="PATH",
                        help="output file ('-' for stdout)")
    common.add_argument("-q", "--quiet", action="store_true")
    common.add_argument("-v", "--verbose", action="store_true")

    p = argparse.ArgumentParser(prog="atomfiber",
                                description="Atomic fibers of integer matrices.")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("atomic", parents=[common], help="atomic fibers (.ato)")
    s.add_argument("matrix")
    s.add_argument("--elements", action="store_true",
                   help="also list the points of every atomic fiber (.fib)")
    s.add_argument("--include-zero", action="store_true",
                   help="append the zero right-hand side")
    s.set_defaults(func=cmd_atomic)

    s = sub.add_parser("extended-atomic", parents=[common],
                       help="extended atomic fibers (.eat)")
    s.add_argument("matrix")
    s.add_argument("--include-zero", action="store_true",
                   help="append the zero right-hand side")
    s.set_defaults(func=cmd_extended_atomic)

    s = sub.add_parser("graver", parents=[common], help="Graver basis (.gra)")
    s.add_argument("matrix")
    s.set_defaults(func=cmd_graver)

    s = sub.add_parser("hilbert", parents=[common],
                       help="Hilbert basis of the kernel cone (.hil)")
    s.add_argument("matrix")
    s.set_defaults(func=cmd_hilbert)

    s = sub.add_parser("minimal", parents=[common],
                       help="minimal elements of a fiber (.min)")
    s.add_argument("matrix")
    s.add_argument("rhs")
    s.set_defaults(func=cmd_minimal)

    s = sub.add_parser("decompose", parents=[common],
                       help="split a fiber into atomic fibers")
    s.add_argument("matrix")
    s.add_argument("rhs")
    s.add_argument("atoms", nargs="?", help="precomputed atom list file")
    s.set_defaults(func=cmd_decompose)

    s = sub.add_parser("solve", parents=[common],
                       help="min c.z subject to Az = b, z >= 0")
    s.add_argument("matrix")
    s.add_argument("rhs")
    s.add_argument("--cost", help='cost entries, e.g. "1 0 2/3 -1"')
    s.add_argument("--cost-file", metavar="PATH")
    s.set_defaults(func=cmd_solve)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    level = logging.INFO if args.verbose and not args.quiet else logging.WARNING
    logging.basicConfig(level=level, format="%(message)s", stream=sys.stderr)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except CompletionLimitError as exc:
        print(f"limit reached: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except (EmptyFiberError, InfeasibleError, InfeasibleSeedError) as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except IncompleteAtomSetError as exc:
        print(f"incomplete atom set: {exc}", file=sys.stderr)
        return EXIT_INCOMPLETE
    except UnboundedError as exc:
        print(f"unbounded: {exc}", file=sys.stderr)
        return EXIT_UNBOUNDED


if __name__ == "__main__":
    sys.exit(main())
