import math
import random

import pytest

from clusterk0.intlattice import (
    AbelianGroupType,
    IntMatrix,
    NoSolution,
    QuotientGroup,
    cokernel,
    det,
    hnf,
    hnf_basis,
    kernel_lattice,
    lattice_equal,
    rank,
    snf,
    solve_mod_lattice,
)

from .oracles import frac_det, frac_rank

M = IntMatrix.from_rows


def random_matrix(rng, rows, cols, lo=-9, hi=9):
    return M([[rng.randint(lo, hi) for _ in range(cols)] for _ in range(rows)], cols)


def random_unimodular(rng, n, steps=12):
    rows = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(steps):
        i, j = rng.sample(range(n), 2) if n > 1 else (0, 0)
        if i == j:
            rows[i] = [-x for x in rows[i]]
            continue
        q = rng.randint(-3, 3)
        rows[i] = [a + q * b for a, b in zip(rows[i], rows[j])]
        if rng.random() < 0.3:
            rows[i], rows[j] = rows[j], rows[i]
    return M(rows, n)


def is_hnf(H):
    last = -1
    zero_seen = False
    for i in range(H.rows):
        row = H.row(i)
        nz = [j for j, x in enumerate(row) if x]
        if not nz:
            zero_seen = True
            continue
        assert not zero_seen, "zero rows must come last"
        c = nz[0]
        assert c > last and row[c] > 0
        for k in range(i):
            assert 0 <= H[k, c] < row[c]
        last = c
    return True


def check_smith(A, sd):
    assert sd.U @ A @ sd.V == sd.S
    assert abs(det(sd.U)) == 1 and abs(det(sd.V)) == 1
    diag = sd.diagonal
    for i in range(sd.S.rows):
        for j in range(sd.S.cols):
            if i != j:
                assert sd.S[i, j] == 0
    assert all(x >= 0 for x in diag)
    for x, y in zip(diag, diag[1:]):
        if x:
            assert y % x == 0
        else:
            assert y == 0


class TestIntMatrix:
    def test_shape_invariant(self):
        with pytest.raises(ValueError):
            IntMatrix(2, 2, (1, 2, 3))

    def test_bigints_survive(self):
        A = M([[10**40, 1], [1, 0]])
        assert (A @ A)[0, 0] == 10**80 + 1

    def test_transpose(self):
        A = M([[1, 2, 3], [4, 5, 6]])
        assert A.T.tolist() == [[1, 4], [2, 5], [3, 6]]


class TestHnf:
    def test_identity_fixed_point(self):
        I = IntMatrix.identity(3)
        assert hnf(I) == (I, I)

    def test_two_by_two(self):
        H, U = hnf(M([[2, 4], [1, 1]]))
        assert H.tolist() == [[1, 1], [0, 2]]
        assert U @ M([[2, 4], [1, 1]]) == H

    def test_zero(self):
        Z = IntMatrix.zeros(2, 3)
        assert hnf(Z) == (Z, IntMatrix.identity(2))

    def test_random(self):
        rng = random.Random(7)
        for _ in range(200):
            A = random_matrix(rng, rng.randint(1, 7), rng.randint(1, 7))
            H, U = hnf(A)
            assert U @ A == H
            assert abs(det(U)) == 1
            assert is_hnf(H)
            assert rank(A) == frac_rank(A.tolist())


class TestSnf:
    def test_tridiagonal(self):
        A = M([[2, 1, 0], [1, 2, 1], [0, 1, 2]])
        sd = snf(A)
        check_smith(A, sd)
        assert sd.diagonal == [1, 1, 4]

    def test_identity(self):
        assert snf(IntMatrix.identity(4)).diagonal == [1, 1, 1, 1]

    def test_zero_one_by_one(self):
        assert snf(M([[0]])).diagonal == [0]

    def test_needs_divisibility_fix(self):
        A = M([[2, 0], [0, 3]])
        sd = snf(A)
        check_smith(A, sd)
        assert sd.diagonal == [1, 6]

    def test_intermediate_swell(self):
        rng = random.Random(3)
        A = random_matrix(rng, 15, 15, -99, 99)
        sd = snf(A)
        check_smith(A, sd)
        assert abs(frac_det(A.tolist())) == math.prod(sd.diagonal)

    def test_random_round_trip_and_determinant(self):
        rng = random.Random(2024)
        for trial in range(1000):
            n = rng.randint(1, 8) if trial < 990 else 20
            m = n if rng.random() < 0.5 else rng.randint(1, 8)
            A = random_matrix(rng, n, m)
            sd = snf(A)
            check_smith(A, sd)
            if n == m:
                prod = 1
                for x in sd.diagonal:
                    prod *= x
                assert abs(frac_det(A.tolist())) == prod


class TestCokernel:
    def test_example_z4(self):
        assert cokernel(M([[2, 1, 0], [1, 2, 1], [0, 1, 2]])) == AbelianGroupType(0, (4,))

    def test_empty_relations(self):
        assert cokernel(IntMatrix.zeros(0, 5)) == AbelianGroupType(5)

    def test_identity_relations(self):
        assert cokernel(IntMatrix.identity(4)).is_trivial()

    def test_distinguishes_z4_from_klein(self):
        assert cokernel(M([[4]])) != cokernel(M([[2, 0], [0, 2]]))

    def test_row_operation_invariance(self):
        rng = random.Random(11)
        for _ in range(150):
            g = rng.randint(1, 6)
            R = random_matrix(rng, rng.randint(0, 6), g, -4, 4)
            P = random_unimodular(rng, R.rows) if R.rows else IntMatrix.zeros(0, 0)
            assert cokernel(R) == cokernel(P @ R if R.rows else R)

    def test_sparse_elimination_matches_dense_snf(self):
        rng = random.Random(5)
        for _ in range(200):
            g = rng.randint(1, 9)
            R = random_matrix(rng, rng.randint(0, 9), g, -2, 2)
            dense = AbelianGroupType.from_diagonal(g, snf(R).diagonal)
            assert cokernel(R) == dense

    def test_quotient_coordinates_kill_relations(self):
        rng = random.Random(9)
        for _ in range(100):
            g = rng.randint(1, 7)
            R = random_matrix(rng, rng.randint(0, 7), g, -3, 3)
            Q = QuotientGroup(R)
            for i in range(R.rows):
                assert Q.is_zero(R.row(i))
            v = [rng.randint(-5, 5) for _ in range(g)]
            w = [rng.randint(-5, 5) for _ in range(g)]
            s = [a + b for a, b in zip(v, w)]
            lhs = Q.coords(s)
            rhs = tuple(
                (a + b) % m if m else a + b
                for a, b, m in zip(Q.coords(v), Q.coords(w), Q.moduli)
            )
            assert lhs == rhs

    def test_group_type_validation(self):
        with pytest.raises(ValueError):
            AbelianGroupType(0, (1,))
        with pytest.raises(ValueError):
            AbelianGroupType(0, (4, 6))

    def test_human_form(self):
        assert str(AbelianGroupType(0, (4,))) == "Z/4"
        assert str(AbelianGroupType(1)) == "Z"
        assert str(AbelianGroupType(0)) == "0"
        assert str(AbelianGroupType(2, (2, 4))) == "Z^2 x Z/2 x Z/4"


class TestKernelLattice:
    def test_identity(self):
        assert kernel_lattice(IntMatrix.identity(3)).rows == 0

    def test_zero(self):
        assert kernel_lattice(IntMatrix.zeros(3, 2)) == IntMatrix.identity(3)

    def test_antidiagonal(self):
        assert kernel_lattice(M([[1], [-1]])).tolist() == [[1, 1]]

    def test_random(self):
        rng = random.Random(13)
        for _ in range(150):
            A = random_matrix(rng, rng.randint(1, 7), rng.randint(1, 5), -3, 3)
            K = kernel_lattice(A)
            for i in range(K.rows):
                assert not any((M([K.row(i)], A.rows) @ A).entries)
            assert K.rows + rank(A) == A.rows
            assert hnf_basis(K) == K


class TestSolveModLattice:
    def test_identity(self):
        b = [3, -1, 4]
        assert solve_mod_lattice(IntMatrix.identity(3), IntMatrix.zeros(0, 3), b) == b

    def test_canonical_among_exhaustive_solutions(self):
        Mx, L = M([[2]]), M([[4]])
        found = [x for x in range(-4, 5) if (2 * x - 6) % 4 == 0]
        assert found == [-3, -1, 1, 3]
        assert solve_mod_lattice(Mx, L, [6]) == [1]

    def test_parity_obstruction(self):
        with pytest.raises(NoSolution):
            solve_mod_lattice(M([[2]]), IntMatrix.zeros(0, 1), [1])

    def test_random_verifies(self):
        rng = random.Random(17)
        hits = 0
        for _ in range(200):
            g, m = rng.randint(1, 4), rng.randint(1, 4)
            Mx = random_matrix(rng, g, m, -4, 4)
            L = random_matrix(rng, rng.randint(0, 3), m, -4, 4)
            b = [rng.randint(-6, 6) for _ in range(m)]
            try:
                x = solve_mod_lattice(Mx, L, b)
            except NoSolution:
                # no solution: b must fall outside the joint span
                joint = Mx.vstack(L)
                assert hnf_basis(joint) != hnf_basis(joint.vstack(M([b])))
                continue
            hits += 1
            resid = [u - v for u, v in zip(Mx.vecmul(x), b)]
            assert lattice_equal(L.vstack(M([resid])), L) if L.rows else not any(resid)
        assert hits > 50


class TestLatticeEqual:
    def test_permuted_basis(self):
        assert lattice_equal(M([[1, 0], [0, 1]]), M([[0, 1], [1, 0]]))

    def test_sign(self):
        assert lattice_equal(M([[2]]), M([[-2]]))

    def test_different(self):
        assert not lattice_equal(M([[2]]), M([[3]]))
