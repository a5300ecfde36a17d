"""Exact linear algebra: normal forms, kernels, solving, invariants."""

import random

import pytest

from retractrat.zlinalg import (
    AbelianInvariants,
    LinearSolver,
    Mat,
    cokernel_invariants,
    det,
    hermite_basis,
    is_unimodular,
    kernel_basis,
    quotient_invariants,
    row_hermite,
    smith_diagonal,
    smith_normal_form,
    solve_integer,
)


def random_matrix(rng, rows, cols, bound=9):
    return Mat.from_rows([[rng.randint(-bound, bound) for _ in range(cols)]
                          for _ in range(rows)], cols)


class TestSmith:
    def test_example_2468(self):
        # d1 = gcd of entries = 2, d1*d2 = |det| = 8
        A = Mat.from_rows([[2, 4], [6, 8]])
        U, D, V = smith_normal_form(A)
        assert [D.a[0][0], D.a[1][1]] == [2, 4]
        assert U.mul(A).mul(V) == D

    def test_identity(self):
        A = Mat.identity(3)
        _, D, _ = smith_normal_form(A)
        assert D == Mat.identity(3)

    def test_zero_matrix(self):
        A = Mat.zero(2, 3)
        U, D, V = smith_normal_form(A)
        assert D.is_zero()
        assert U == Mat.identity(2) and V == Mat.identity(3)

    def test_randomized_decomposition(self):
        rng = random.Random(12345)
        for _ in range(200):
            rows, cols = rng.randint(1, 6), rng.randint(1, 6)
            A = random_matrix(rng, rows, cols)
            U, D, V = smith_normal_form(A)
            assert U.mul(A).mul(V) == D
            assert det(U) in (1, -1) and det(V) in (1, -1)
            diag = [D.a[i][i] for i in range(min(rows, cols))]
            for i in range(rows):
                for j in range(cols):
                    if i != j:
                        assert D.a[i][j] == 0
            prev = None
            for d in diag:
                assert d >= 0
                if prev not in (None, 0):
                    assert d % prev == 0 or d == 0
                prev = d

    def test_diagonal_fast_path_agrees(self):
        rng = random.Random(99)
        for _ in range(100):
            A = random_matrix(rng, rng.randint(1, 5), rng.randint(1, 5))
            _, D, _ = smith_normal_form(A)
            assert smith_diagonal(A) == [D.a[i][i] for i in range(min(A.rows, A.cols))]

    def test_determinism(self):
        A = Mat.from_rows([[6, 4, 2], [8, 2, 9], [3, 3, 3]])
        first = smith_normal_form(A)
        second = smith_normal_form(A)
        assert first.U == second.U and first.D == second.D and first.V == second.V


class TestSolve:
    def test_simple(self):
        assert solve_integer(Mat.from_rows([[2]]), [4]) == [2]
        assert solve_integer(Mat.from_rows([[2]]), [3]) is None
        x = solve_integer(Mat.from_rows([[1, 2], [3, 4]]), [5, 11])
        assert x == [1, 2]

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            solve_integer(Mat.from_rows([[1, 2]]), [1, 2])

    def test_solution_verified(self):
        rng = random.Random(5)
        for _ in range(200):
            A = random_matrix(rng, rng.randint(1, 4), rng.randint(1, 4), bound=5)
            x0 = [rng.randint(-4, 4) for _ in range(A.cols)]
            b = A.mulvec(x0)
            x = solve_integer(A, b)
            assert x is not None
            assert A.mulvec(x) == b

    def test_underdetermined(self):
        A = Mat.from_rows([[2, 3]])
        x = solve_integer(A, [1])
        assert x is not None and 2 * x[0] + 3 * x[1] == 1


class TestKernel:
    def test_examples(self):
        assert kernel_basis(Mat.from_rows([[1, 1]])).columns() == [[1, -1]]
        assert kernel_basis(Mat.identity(2)).cols == 0
        assert kernel_basis(Mat.from_rows([[2, 4]])).columns() == [[2, -1]]

    def test_kernel_columns_annihilate(self):
        rng = random.Random(17)
        for _ in range(100):
            A = random_matrix(rng, rng.randint(1, 5), rng.randint(1, 6))
            K = kernel_basis(A)
            for j in range(K.cols):
                assert A.mulvec(K.col(j)) == [0] * A.rows

    def test_saturation(self):
        # stacking a kernel basis with any kernel vector must give unit divisors
        rng = random.Random(23)
        for _ in range(50):
            A = random_matrix(rng, rng.randint(1, 4), rng.randint(2, 5))
            K = kernel_basis(A)
            if K.cols == 0:
                continue
            coeffs = [rng.randint(-3, 3) for _ in range(K.cols)]
            vec = [sum(c * K.a[i][j] for j, c in enumerate(coeffs))
                   for i in range(K.rows)]
            stacked = Mat.from_cols(K.columns() + [vec], rows=K.rows)
            diag = [d for d in smith_diagonal(stacked) if d != 0]
            assert all(d == 1 for d in diag)

    def test_zero_column_count(self):
        K = kernel_basis(Mat.zero(2, 3))
        assert K.cols == 3


class TestHermite:
    def test_canonical_form(self):
        H, U, pivots = row_hermite(Mat.from_rows([[4, 6], [2, 2]]), transform=True)
        assert U.mul(Mat.from_rows([[4, 6], [2, 2]])) == H
        assert det(U) in (1, -1)
        for r, c in pivots:
            assert H.a[r][c] > 0
            for i in range(r):
                assert 0 <= H.a[i][c] < H.a[r][c]

    def test_block_diagonal_splits(self):
        # canonical bases of coordinate direct sums stay blockwise
        rows = [[2, 1, 0, 0], [0, 3, 0, 0], [0, 0, 5, 1]]
        H, _, pivots = row_hermite(Mat.from_rows(rows))
        for r, c in pivots:
            left = c < 2
            for j in range(4):
                if (j < 2) != left:
                    assert H.a[r][j] == 0

    def test_hermite_basis_canonical(self):
        cols = [[2, 4], [4, 2]]
        B1 = hermite_basis(cols, 2)
        B2 = hermite_basis(list(reversed(cols)), 2)
        assert B1 == B2


class TestInvariants:
    def test_cokernel_examples(self):
        assert cokernel_invariants(Mat.from_rows([[2]]), 1) == AbelianInvariants((2,), 0)
        assert cokernel_invariants(Mat.identity(2), 2).is_trivial
        got = cokernel_invariants(Mat.from_rows([[2, 0], [0, 3]]), 2)
        assert got == AbelianInvariants((6,), 0)

    def test_free_rank(self):
        got = cokernel_invariants(Mat.from_cols([[2, 0]], rows=2), 2)
        assert got == AbelianInvariants((2,), 1)

    def test_divisor_chain_enforced(self):
        with pytest.raises(ValueError):
            AbelianInvariants((3, 2), 0)

    def test_quotient_invariants(self):
        basis = Mat.identity(2)
        sub = Mat.from_cols([[2, 0], [0, 3]], rows=2)
        assert quotient_invariants(basis, sub) == AbelianInvariants((6,), 0)

    def test_str(self):
        assert str(AbelianInvariants()) == "0"
        assert str(AbelianInvariants((2, 4), 1)) == "Z x C2 x C4"


class TestMat:
    def test_mul_and_shapes(self):
        A = Mat.from_rows([[1, 2], [3, 4]])
        B = Mat.from_rows([[0, 1], [1, 0]])
        assert A.mul(B) == Mat.from_rows([[2, 1], [4, 3]])
        with pytest.raises(ValueError):
            A.mul(Mat.from_rows([[1, 2, 3]]))

    def test_empty_shapes(self):
        Z = Mat.zero(0, 3)
        K = Mat.zero(3, 0)
        assert K.transpose().rows == 0
        assert Z.transpose().cols == 0

    def test_permutation_detection(self):
        assert Mat.from_rows([[0, 1], [1, 0]]).is_permutation()
        assert not Mat.from_rows([[0, -1], [1, 0]]).is_permutation()

    def test_unimodular(self):
        assert is_unimodular(Mat.from_rows([[1, 5], [0, -1]]))
        assert not is_unimodular(Mat.from_rows([[2, 0], [0, 1]]))

    def test_solver_reuse(self):
        A = Mat.from_rows([[2, 0], [0, 3]])
        solver = LinearSolver(A)
        assert solver.solve([4, 3]) == [2, 1]
        assert solver.solve([1, 1]) is None
        assert solver.contains([2, 0])
