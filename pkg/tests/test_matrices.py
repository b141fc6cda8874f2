from math import prod

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dualcircle.matrices import (
    IntMatrix,
    NoIntegralSolution,
    cokernel_invariants,
    image_lattice_basis,
    kernel_basis,
    smith_normal_form,
    solve_integral,
)

small_matrices = st.integers(min_value=1, max_value=4).flatmap(
    lambda r: st.integers(min_value=1, max_value=4).flatmap(
        lambda c: st.lists(
            st.lists(st.integers(min_value=-9, max_value=9), min_size=c, max_size=c),
            min_size=r, max_size=r)))


def det(m: IntMatrix) -> int:
    n = m.rows
    if n == 0:
        return 1
    a = [list(row) for row in m.entries]
    sign = 1
    from fractions import Fraction
    a = [[Fraction(x) for x in row] for row in a]
    for i in range(n):
        piv = next((j for j in range(i, n) if a[j][i] != 0), None)
        if piv is None:
            return 0
        if piv != i:
            a[i], a[piv] = a[piv], a[i]
            sign = -sign
        for j in range(i + 1, n):
            f = a[j][i] / a[i][i]
            a[j] = [x - f * y for x, y in zip(a[j], a[i])]
    out = sign * prod(a[i][i] for i in range(n))
    assert out.denominator == 1
    return int(out)


class TestSmith:
    def test_worked_example(self):
        snf = smith_normal_form(IntMatrix.from_rows([[2, 4], [6, 8]]))
        assert snf.d.diagonal_entries() == [2, 4]

    def test_identity(self):
        snf = smith_normal_form(IntMatrix.identity(3))
        assert snf.d.entries == IntMatrix.identity(3).entries

    def test_zero_one_by_one(self):
        snf = smith_normal_form(IntMatrix.from_rows([[0]]))
        assert snf.d.entries == ((0,),)

    @given(small_matrices)
    @settings(max_examples=300, deadline=None)
    def test_decomposition_properties(self, rows):
        m = IntMatrix.from_rows(rows)
        snf = smith_normal_form(m)
        assert snf.u.mul(m).mul(snf.v).entries == snf.d.entries
        assert abs(det(snf.u)) == 1
        assert abs(det(snf.v)) == 1
        assert snf.u.mul(snf.u_inv).entries == IntMatrix.identity(m.rows).entries
        assert snf.v.mul(snf.v_inv).entries == IntMatrix.identity(m.cols).entries
        diag = snf.d.diagonal_entries()
        for i in range(m.rows):
            for j in range(m.cols):
                if i != j:
                    assert snf.d.entries[i][j] == 0
        for a, b in zip(diag, diag[1:]):
            assert a >= 0 and b >= 0
            if a != 0:
                assert b % a == 0
            else:
                assert b == 0

    @given(small_matrices)
    @settings(max_examples=100, deadline=None)
    def test_square_determinant_is_preserved(self, rows):
        m = IntMatrix.from_rows(rows)
        if m.rows != m.cols:
            return
        snf = smith_normal_form(m)
        assert abs(det(m)) == prod(snf.d.diagonal_entries())


class TestLatticeHelpers:
    def test_kernel_basis(self):
        m = IntMatrix.from_rows([[1, 2, 3]])
        k = kernel_basis(m)
        assert k.cols == 2
        for j in range(k.cols):
            assert m.apply(k.column(j)) == (0,)

    def test_cokernel(self):
        free, torsion = cokernel_invariants(IntMatrix.from_rows([[2, 0], [0, 3]]))
        assert free == 0 and torsion == [6]
        free, torsion = cokernel_invariants(IntMatrix.from_rows([[2], [0]]))
        assert free == 1 and torsion == [2]

    def test_image_lattice(self):
        m = IntMatrix.from_rows([[2, 4], [0, 0]])
        basis = image_lattice_basis(m)
        assert basis.cols == 1
        col = basis.column(0)
        assert col[1] == 0 and abs(col[0]) == 2

    def test_solve(self):
        m = IntMatrix.from_rows([[2, 0], [0, 3]])
        x = solve_integral(m, (4, -9))
        assert m.apply(x) == (4, -9)
        with pytest.raises(NoIntegralSolution):
            solve_integral(m, (1, 0))

    @given(small_matrices, st.lists(st.integers(-5, 5), min_size=1, max_size=4))
    @settings(max_examples=150, deadline=None)
    def test_solve_finds_solutions_for_reachable_targets(self, rows, coeffs):
        m = IntMatrix.from_rows(rows)
        coeffs = (coeffs * m.cols)[:m.cols]
        b = m.apply(coeffs)
        x = solve_integral(m, b)
        assert m.apply(x) == b

    def test_huge_entries_are_exact(self):
        p37 = 5**37
        snf = smith_normal_form(IntMatrix.from_rows([[p37, 0], [0, 5]]))
        assert snf.d.diagonal_entries() == [5, p37]

    def test_larger_random_stress(self):
        import random

        rng = random.Random(2024)
        for _ in range(20):
            r = rng.randint(1, 7)
            c = rng.randint(1, 7)
            m = IntMatrix.from_rows(
                [[rng.randint(-50, 50) for _ in range(c)] for _ in range(r)])
            snf = smith_normal_form(m)
            assert snf.u.mul(m).mul(snf.v).entries == snf.d.entries
            assert snf.u.mul(snf.u_inv).entries == IntMatrix.identity(r).entries
            assert snf.v.mul(snf.v_inv).entries == IntMatrix.identity(c).entries
            diag = snf.d.diagonal_entries()
            nonzero = [d for d in diag if d]
            assert all(b % a == 0 for a, b in zip(nonzero, nonzero[1:]))
            # zeros trail: after the first zero, everything is zero
            if 0 in diag:
                assert all(d == 0 for d in diag[diag.index(0):])
            # kernel columns really lie in the kernel
            k = kernel_basis(m)
            for j in range(k.cols):
                assert m.apply(k.column(j)) == (0,) * r
