"""Exact linear algebra: frozen examples plus randomized invariants.

The independent oracle for torsion orders is cofactor expansion, written
here and never used by the library code.
"""

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from graphkt.intlinalg import (
    AbelianGroup,
    IntMatrix,
    cokernel,
    det_bareiss,
    group_format,
    invariant_factors,
    kernel_basis,
    snf,
)


def cofactor_det(rows):
    """Independent determinant oracle: textbook cofactor expansion."""
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    total = 0
    for j in range(n):
        if rows[0][j]:
            minor = [r[:j] + r[j + 1:] for r in rows[1:]]
            total += (-1) ** j * rows[0][j] * cofactor_det(minor)
    return total


def random_matrix(rng, max_dim=6, lo=-9, hi=9):
    r, c = rng.randint(1, max_dim), rng.randint(1, max_dim)
    return IntMatrix.from_rows(
        [[rng.randint(lo, hi) for _ in range(c)] for _ in range(r)], cols=c
    )


def assert_snf_contract(m, res):
    assert res.u @ m @ res.v == res.s
    assert abs(det_bareiss(res.u)) == 1
    assert abs(det_bareiss(res.v)) == 1
    d = res.s.diagonal()
    assert all(d[k] >= 1 for k in range(res.rank))
    assert all(d[k] == 0 for k in range(res.rank, len(d)))
    for a, b in zip(d[: res.rank - 1], d[1: res.rank]):
        assert b % a == 0
    # off-diagonal must vanish
    for i in range(res.s.rows):
        for j in range(res.s.cols):
            if i != j:
                assert res.s[i, j] == 0


class TestIntMatrix:
    def test_shape_validation(self):
        with pytest.raises(ValueError):
            IntMatrix(2, 2, [1, 2, 3])
        with pytest.raises(TypeError):
            IntMatrix(1, 1, [1.5])
        with pytest.raises(ValueError):
            IntMatrix(-1, 0, [])

    def test_zero_dimensional_shapes_are_legal(self):
        assert IntMatrix(0, 3, []).rows == 0
        assert IntMatrix(3, 0, []).cols == 0
        assert IntMatrix.from_rows([], cols=2).transpose() == IntMatrix(2, 0, [])

    def test_matmul(self):
        a = IntMatrix.from_rows([[1, 2], [3, 4]])
        b = IntMatrix.from_rows([[0, 1], [1, 0]])
        assert a @ b == IntMatrix.from_rows([[2, 1], [4, 3]])
        with pytest.raises(ValueError):
            a @ IntMatrix.from_rows([[1, 2, 3]])

    def test_matmul_through_zero_dim(self):
        a = IntMatrix.from_rows([[], []], cols=0)  # 2x0
        b = IntMatrix(0, 3, [])
        assert a @ b == IntMatrix.zeros(2, 3)

    def test_transpose_involution(self):
        m = IntMatrix.from_rows([[1, 2, 3], [4, 5, 6]])
        assert m.transpose().transpose() == m


class TestSnfExamples:
    def test_identity(self):
        res = snf(IntMatrix.identity(3))
        assert res.s == IntMatrix.identity(3)
        assert res.rank == 3

    def test_zero_matrix(self):
        res = snf(IntMatrix.zeros(2, 3))
        assert res.s == IntMatrix.zeros(2, 3)
        assert res.rank == 0
        assert res.u == IntMatrix.identity(2)
        assert res.v == IntMatrix.identity(3)

    def test_2x2_derived(self):
        # d1 = gcd of all entries = 2; d1*d2 = |det| = 8 by the cofactor oracle
        rows = [[2, 4], [6, 8]]
        assert abs(cofactor_det(rows)) == 8
        m = IntMatrix.from_rows(rows)
        res = snf(m)
        assert res.s.diagonal() == (2, 4)
        assert_snf_contract(m, res)

    def test_zero_dimensional(self):
        for shape in [(0, 0), (0, 4), (4, 0)]:
            res = snf(IntMatrix.zeros(*shape))
            assert res.rank == 0
            assert res.s == IntMatrix.zeros(*shape)


class TestSnfProperties:
    def test_reconstruction_randomized(self):
        rng = random.Random(20240917)
        for _ in range(120):
            m = random_matrix(rng)
            assert_snf_contract(m, snf(m))

    def test_reconstruction_large(self):
        rng = random.Random(7)
        for _ in range(6):
            r, c = rng.randint(25, 40), rng.randint(25, 40)
            m = IntMatrix.from_rows(
                [[rng.randint(-9, 9) for _ in range(c)] for _ in range(r)], cols=c
            )
            assert_snf_contract(m, snf(m))

    @given(
        st.lists(
            st.lists(st.integers(-20, 20), min_size=1, max_size=4),
            min_size=1,
            max_size=4,
        ).filter(lambda rows: len({len(r) for r in rows}) == 1)
    )
    def test_reconstruction_hypothesis(self, rows):
        m = IntMatrix.from_rows(rows, cols=len(rows[0]))
        assert_snf_contract(m, snf(m))

    def test_transpose_symmetry(self):
        rng = random.Random(99)
        for _ in range(80):
            m = random_matrix(rng)
            assert invariant_factors(m) == invariant_factors(m.transpose())

    def test_determinism(self):
        m = IntMatrix.from_rows([[3, 1, -4], [1, 5, 9], [-2, 6, 5]])
        assert snf(m) == snf(m)

    def test_torsion_order_vs_cofactor_oracle(self):
        rng = random.Random(4242)
        checked = 0
        while checked < 40:
            n = rng.randint(1, 5)
            rows = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)]
            d = cofactor_det(rows)
            if d == 0:
                continue
            factors = invariant_factors(IntMatrix.from_rows(rows, cols=n))
            prod = 1
            for f in factors:
                prod *= f
            assert prod == abs(d)
            checked += 1

    def test_det_bareiss_matches_cofactor(self):
        rng = random.Random(31)
        for _ in range(60):
            n = rng.randint(0, 5)
            rows = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)]
            assert det_bareiss(IntMatrix.from_rows(rows, cols=n)) == cofactor_det(rows)


class TestKernel:
    def test_sum_map(self):
        m = IntMatrix.from_rows([[1, 1]])
        basis = kernel_basis(m)
        assert len(basis) == 1
        (x,) = basis
        assert x[0] + x[1] == 0
        from math import gcd

        assert gcd(x[0], x[1]) == 1

    def test_injective(self):
        assert kernel_basis(IntMatrix.identity(4)) == []

    def test_hand_eliminated(self):
        # kernel of this 3x2 map is exactly the multiples of (1, 0)
        m = IntMatrix.from_rows([[0, 1], [0, -1], [0, 1]])
        basis = kernel_basis(m)
        assert len(basis) == 1
        assert basis[0] in ((1, 0), (-1, 0))

    def test_zero_source_map(self):
        # a map out of Z^0 has empty kernel basis
        assert kernel_basis(IntMatrix(3, 0, [])) == []

    def test_map_to_zero_group(self):
        # a map into Z^0 has everything in its kernel
        basis = kernel_basis(IntMatrix(0, 3, []))
        assert len(basis) == 3

    def test_soundness_randomized(self):
        from math import gcd

        rng = random.Random(555)
        for _ in range(80):
            m = random_matrix(rng)
            rank = len(invariant_factors(m))
            basis = kernel_basis(m)
            assert len(basis) == m.cols - rank
            for x in basis:
                prod = [sum(m[i, j] * x[j] for j in range(m.cols)) for i in range(m.rows)]
                assert all(e == 0 for e in prod)
                g = 0
                for e in x:
                    g = gcd(g, e)
                assert g == 1


class TestCokernel:
    @pytest.mark.parametrize("n,expected", [
        (2, AbelianGroup(0)),
        (3, AbelianGroup(0, (2,))),
        (4, AbelianGroup(0, (3,))),
        (7, AbelianGroup(0, (6,))),
    ])
    def test_one_by_one(self, n, expected):
        assert cokernel(IntMatrix.from_rows([[n - 1]])) == expected

    def test_zero_column_matrix(self):
        assert cokernel(IntMatrix(2, 0, [])) == AbelianGroup(2)

    def test_hand_smith(self):
        assert cokernel(IntMatrix.from_rows([[0], [1]])) == AbelianGroup(1)

    def test_map_to_zero_group(self):
        assert cokernel(IntMatrix(0, 3, [])) == AbelianGroup(0)


class TestAbelianGroup:
    def test_normal_form_is_validated(self):
        with pytest.raises(ValueError):
            AbelianGroup(-1)
        with pytest.raises(ValueError):
            AbelianGroup(0, (1,))
        with pytest.raises(ValueError):
            AbelianGroup(0, (4, 2))  # not a divisibility chain

    def test_equality_is_componentwise(self):
        assert AbelianGroup(1, (2, 4)) == AbelianGroup(1, [2, 4])
        assert AbelianGroup(1) != AbelianGroup(2)

    @pytest.mark.parametrize("group,text", [
        (AbelianGroup(0), "0"),
        (AbelianGroup(1), "Z"),
        (AbelianGroup(0, (3,)), "Z/3"),
        (AbelianGroup(2), "Z^2"),
        (AbelianGroup(2, (2, 4)), "Z^2 (+) Z/2 (+) Z/4"),
        (AbelianGroup(1, (5,)), "Z (+) Z/5"),
    ])
    def test_group_format(self, group, text):
        assert group_format(group) == text
