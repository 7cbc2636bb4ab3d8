"""Acceptance criteria, one test per criterion.

Each test appends a PASS/FAIL/SKIP line to the terminal summary.  Counts that
include the zero right-hand side are produced with ``--include-zero``.
"""

import itertools
import os
import random
import time

import pytest

from atomfiber.cli import main
from atomfiber.core import conforms, l1_norm
from atomfiber.errors import InfeasibleError
from atomfiber.fiber import decompose_fiber, oplus_decomposes
from atomfiber.graver import (MinimalElementProvider, graver_basis,
                              minimal_fiber_elements)
from atomfiber.intlin import kernel_lattice_basis
from atomfiber.io import format_matrix, parse_element_listing, parse_vector_list
from atomfiber.atomic import project_and_lift
from atomfiber.ipsolve import solve_atomic_programs, solve_ip
from conftest import ACCEPTANCE
from oracles import (FIBER_87, TABLE_3X3, TABLE_4X4, TWISTED_CUBIC,
                     TWISTED_CUBIC_TABLE, box_points, graver_bounded, ip_brute,
                     leq_conf, matvec, minimal_subset, nonneg_points)


class Criterion:
    """Context manager that records the outcome and elapsed time."""

    def __init__(self, number, title, budget):
        self.number, self.title, self.budget = number, title, budget
        self.detail = ""

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        took = time.perf_counter() - self.start
        ok = exc_type is None and took < self.budget
        info = f"{self.detail}; " if self.detail else ""
        ACCEPTANCE.append(f"{'PASS' if ok else 'FAIL'} [{self.number}] {self.title}: "
                          f"{info}{took:.1f}s (budget {self.budget:g}s)")
        if exc_type is None:
            assert took < self.budget, f"took {took:.1f}s"
        return False


def write(tmp_path, name, a):
    p = tmp_path / f"{name}.mat"
    p.write_text(format_matrix(a))
    return str(p)


def cli_rows(*argv):
    out = argv[-1]
    assert main(list(argv[:-1]) + ["-o", out, "-q"]) == 0
    with open(out) as fh:
        return parse_vector_list(fh.read())


def test_1_twisted_cubic_atomic(tmp_path):
    path = write(tmp_path, "tc", TWISTED_CUBIC)
    with Criterion(1, "twisted cubic atomic fibers", 10) as c:
        assert main(["atomic", path, "--elements", "-q"]) == 0
        rhs = parse_vector_list(open(path[:-4] + ".ato").read())
        blocks = parse_element_listing(open(path[:-4] + ".fib").read())
        c.detail = f"{len(rhs)} rhs"
        assert len(rhs) == 18 and set(rhs) == set(TWISTED_CUBIC_TABLE)
        assert {b: set(p) for b, p, _ in blocks} == {
            b: set(p) for b, p in TWISTED_CUBIC_TABLE.items()}
        assert all(complete for _, _, complete in blocks)


def test_2_twisted_cubic_extended(tmp_path):
    path = write(tmp_path, "tc", TWISTED_CUBIC)
    with Criterion(2, "twisted cubic extended atomic fibers", 60) as c:
        rows = cli_rows("extended-atomic", path, "--include-zero", str(tmp_path / "e"))
        c.detail = f"{len(rows)} rhs incl. zero"
        assert len(rows) == 51 and (0, 0) in rows


def test_3_three_by_three_tables(tmp_path):
    path = write(tmp_path, "t3", TABLE_3X3)
    with Criterion(3, "3x3 tables atomic and extended", 600) as c:
        atoms = cli_rows("atomic", path, "--include-zero", str(tmp_path / "a"))
        ext = cli_rows("extended-atomic", path, "--include-zero", str(tmp_path / "e"))
        c.detail = f"{len(atoms)} atomic, {len(ext)} extended incl. zero"
        assert len(atoms) == 31 and len(ext) == 79


def test_4_decompose_87(tmp_path, capsys):
    path = write(tmp_path, "tc", TWISTED_CUBIC)
    with Criterion(4, "decomposition of (8,7)", 5) as c:
        capsys.readouterr()
        assert main(["decompose", path, "8,7"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines == ["(2,4) : 1", "(6,3) : 1"]
        p24 = set(minimal_fiber_elements(TWISTED_CUBIC, (2, 4), 4))
        p63 = set(minimal_fiber_elements(TWISTED_CUBIC, (6, 3), 4))
        p87 = set(nonneg_points(TWISTED_CUBIC, (8, 7)))
        assert p87 == set(FIBER_87)
        assert p87 == {tuple(x + y for x, y in zip(u, w)) for u in p24 for w in p63}
        matched = 0
        for z, (u, w) in FIBER_87.items():
            assert u in p24 and w in p63
            assert tuple(x + y for x, y in zip(u, w)) == z
            matched += 1
        c.detail = f"{matched} identities"
        assert matched == 6


def test_5_four_by_four_tables():
    if os.environ.get("ATOMFIBER_LONG") != "1":
        ACCEPTANCE.append("SKIP [5] 4x4 tables atomic count 12675: long-running, "
                          "set ATOMFIBER_LONG=1")
        pytest.skip("long-running; set ATOMFIBER_LONG=1")
    with Criterion(5, "4x4 tables atomic count", 48 * 3600) as c:
        atoms = project_and_lift(TABLE_4X4)
        # same counting as the 3x3 tables: the zero fiber is included
        c.detail = f"{len(atoms) + 1} atoms incl. zero"
        assert len(atoms) + 1 == 12675


def test_6_ip_oracle():
    rng = random.Random(20260)
    atoms = project_and_lift(TWISTED_CUBIC)
    with Criterion(6, "IP oracle on 100 random (b, c)", 60) as c:
        done = infeasible = 0
        while done < 100:
            s = 3 * rng.randint(0, 10)
            b0 = rng.randint(0, s)
            b = (b0, s - b0)
            cost = tuple(rng.randint(-3, 3) for _ in range(4))
            table = solve_atomic_programs(TWISTED_CUBIC, cost, atoms)
            assert table.status == "bounded"
            expected = ip_brute(TWISTED_CUBIC, cost, b)
            if expected is None:
                with pytest.raises(InfeasibleError):
                    solve_ip(TWISTED_CUBIC, cost, b, table, atoms)
                infeasible += 1
                continue
            z, val = solve_ip(TWISTED_CUBIC, cost, b, table, atoms)
            assert matvec(TWISTED_CUBIC, z) == b and min(z) >= 0
            assert val == expected, (b, cost)
            done += 1
        c.detail = f"{done} pairs, {infeasible} infeasible draws also checked"


def test_7_graver_oracle():
    rng = random.Random(777)
    with Criterion(7, "Graver oracle on 20 random matrices", 60) as c:
        sizes = []
        for _ in range(20):
            d, n = rng.randint(1, 2), rng.randint(2, 4)
            a = tuple(tuple(rng.randint(-3, 3) for _ in range(n)) for _ in range(d))
            gb = set(graver_basis(a))
            brute, _ = graver_bounded(a)
            assert gb == brute, a
            # irreducible: no other kernel element conforms to g
            for g in gb:
                assert not any(h != g and conforms(h, g) for h in gb)
            sizes.append(f"{d}x{n}")
        c.detail = f"sizes {','.join(sorted(set(sizes)))}"


def test_8_property_suite(tmp_path):
    rng = random.Random(88)
    with Criterion(8, "property suites", 300) as c:
        # order axioms
        vecs = [tuple(rng.randint(-3, 3) for _ in range(3)) for _ in range(60)]
        for u, v, w in itertools.product(vecs[:20], repeat=3):
            assert conforms(u, u)
            if conforms(u, v) and conforms(v, u):
                assert u == v
            if conforms(u, v) and conforms(v, w):
                assert conforms(u, w)
        # Graver symmetry and conformal decomposition
        a = ((2, -1, 3, 1), (1, 2, -2, 0))
        gb = graver_basis(a).elements
        assert {tuple(-x for x in g) for g in gb} == set(gb)
        basis = kernel_lattice_basis(a).basis
        for _ in range(30):
            coef = [rng.randint(-5, 5) for _ in basis]
            z = tuple(sum(k * v[i] for k, v in zip(coef, basis)) for i in range(4))
            while any(z):
                g = next(g for g in gb if conforms(g, z))
                z = tuple(x - y for x, y in zip(z, g))
        # minimal sets: incomparable and dominating
        for b, k in [((8, 7), 0), ((4, 5), 2), ((9, 6), 4)]:
            ms = set(minimal_fiber_elements(TWISTED_CUBIC, b, k))
            pts = box_points(TWISTED_CUBIC, b, 9, k)
            assert ms == minimal_subset(pts)
            assert all(any(leq_conf(m, z) for m in ms) for z in pts)
        # normal-form steps lower the minimal l1 norm, decompositions recompose
        atoms = project_and_lift(TWISTED_CUBIC)
        prov = MinimalElementProvider(TWISTED_CUBIC)
        checked = 0
        for b in itertools.product(range(31), repeat=2):
            if sum(b) > 30 or not nonneg_points(TWISTED_CUBIC, b):
                continue
            low = min(map(l1_norm, prov.minimal(b, 4)), default=None)
            for g in atoms:
                if oplus_decomposes(TWISTED_CUBIC, b, g, 4, provider=prov):
                    rest = tuple(x - y for x, y in zip(b, g))
                    assert min(map(l1_norm, prov.minimal(rest, 4))) < low
            dec = decompose_fiber(TWISTED_CUBIC, b, list(atoms), 4, provider=prov)
            assert dec.recompose() == b
            total = [0, 0]
            for r, m in dec.nonzero():
                total = [t + m * x for t, x in zip(total, r)]
            assert tuple(total) == b
            checked += 1
        # schedule independence
        path = write(tmp_path, "tc", TWISTED_CUBIC)
        for cmd in ("atomic", "extended-atomic"):
            one = tmp_path / f"{cmd}.1"
            two = tmp_path / f"{cmd}.2"
            assert main([cmd, path, "--threads", "1", "-o", str(one), "-q"]) == 0
            assert main([cmd, path, "--threads", "2", "-o", str(two), "-q"]) == 0
            assert one.read_bytes() == two.read_bytes()
        c.detail = f"{checked} feasible rhs recomposed"
