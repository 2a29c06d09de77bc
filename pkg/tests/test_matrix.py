import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from conftest import mat
from ginv.errors import DimensionMismatch, FieldMismatch, NotIdempotent
from ginv.fields import GF, Q, QI
from ginv.matrix import (
    Matrix,
    block_decompose,
    enumerate_matrices,
    inverse,
    mat_mul,
    mat_star,
    rank_factorization,
    rref_rank,
    solve_left,
    solve_right,
)

small = st.fractions(min_value=-5, max_value=5, max_denominator=4)


def q_matrices(rows, cols):
    return st.lists(small, min_size=rows * cols, max_size=rows * cols).map(
        lambda xs: Matrix(Q, rows, cols, xs))


def qi_matrices(n):
    pair = st.tuples(small, small)
    return st.lists(pair, min_size=n * n, max_size=n * n).map(lambda xs: Matrix(QI, n, n, xs))


def test_mul_example():
    a = mat([[1, 1], [0, 0]])
    b = mat([[1, 1], [0, 1]])
    expected = [[1, 2], [0, 0]]
    assert mat_mul(a, b) == mat(expected)
    # independent check with plain Fractions
    assert [[sum(Fraction(x) * y for x, y in zip(r, c)) for c in zip(*[[1, 1], [0, 1]])]
            for r in [[1, 1], [0, 0]]] == expected


def test_identity_and_zero():
    a = mat([[1, 2, 3], [4, 5, 6]])
    assert Matrix.identity(Q, 2) @ a == a
    assert Matrix.zeros(Q, 2) @ a == Matrix.zeros(Q, 2, 3)


def test_mul_errors():
    with pytest.raises(DimensionMismatch):
        mat([[1, 2]]) @ mat([[1, 2]])
    with pytest.raises(FieldMismatch):
        mat([[1]]) @ mat([[1]], GF(2))


def test_star_examples():
    assert mat_star(mat([[1, 1], [0, 0]])) == mat([[1, 0], [1, 0]])
    assert mat_star(mat([["i"]], QI)) == mat([["-i"]], QI)
    assert mat([[1, 2, 3]]).star().shape == (3, 1)


def test_involution_axioms_exhaustive_gf2(gf2_2x2):
    for a in gf2_2x2:
        assert a.star().star() == a
        for b in gf2_2x2:
            assert (a @ b).star() == b.star() @ a.star()
            assert (a + b).star() == a.star() + b.star()


@given(qi_matrices(2), qi_matrices(2))
def test_involution_axioms_gaussian(a, b):
    assert a.star().star() == a
    assert (a @ b).star() == b.star() @ a.star()
    assert (a + b).star() == a.star() + b.star()


def test_rref_examples():
    assert rref_rank(mat([[1, 1], [0, 0]]))[1:] == (1, [0])
    assert rref_rank(Matrix.identity(Q, 4))[1] == 4
    assert rref_rank(mat([[1, 1], [1, 1]], GF(2)))[1] == 1


def test_rank_matches_oracle_gf2_gf3():
    for p in (2, 3):
        for rows in oracles.all_square(p, 2):
            assert rref_rank(mat(rows, GF(p)))[1] == oracles.rank(p, rows)


@given(q_matrices(3, 4))
def test_rref_idempotent(a):
    r, k, piv = rref_rank(a)
    r2, k2, piv2 = rref_rank(r)
    assert r2 == r and k2 == k and piv2 == piv


@given(q_matrices(3, 3))
def test_rank_factorization(a):
    F, G = rank_factorization(a)
    k = a.rank()
    if k:
        assert F @ G == a
    assert F.shape == (3, k) and G.shape == (k, 3)


def test_inverse():
    assert inverse(mat([[2, 0], [0, 3]])) == mat([[Fraction(1, 2), 0], [0, Fraction(1, 3)]])
    assert inverse(mat([[1, 1], [1, 1]])) is None


def test_solve_right_examples():
    a = mat([[1, 1], [0, 0]])
    assert solve_right(Matrix.identity(Q, 2), a) == a
    assert solve_right(Matrix.zeros(Q, 2), a) is None
    x = solve_right(mat([[1, 1], [0, 1]]), a)
    assert x == mat([[1, 1], [0, 0]])
    assert mat([[1, 1], [0, 1]]) @ x == a


def test_solve_right_deterministic_free_variables():
    # b has a free column; its row of X is fixed to zero
    x = solve_right(mat([[1, 2], [0, 0]]), mat([[3], [0]]))
    assert x == mat([[3], [0]])


def test_solve_dimension_error():
    with pytest.raises(DimensionMismatch):
        solve_right(mat([[1, 2]]), mat([[1], [2]]))


def test_solve_right_against_enumeration(gf2_2x2):
    for b in gf2_2x2:
        for a in gf2_2x2:
            x = solve_right(b, a)
            expected = oracles.solvable(2, b.row_lists(), a.row_lists())
            assert (x is not None) == expected
            if x is not None:
                assert b @ x == a


@given(q_matrices(3, 2), q_matrices(2, 3))
def test_solve_left(b, y):
    a = y @ b
    z = solve_left(b, a)
    assert z is not None and z @ b == a


def test_block_decompose_trivial():
    a = mat([[1, 2], [3, 4]])
    one, zero = Matrix.identity(Q, 2), Matrix.zeros(Q, 2)
    d = block_decompose(one, one, a)
    assert d.a11 == a and d.a12.is_zero() and d.a21.is_zero() and d.a22.is_zero()
    d = block_decompose(zero, zero, a)
    assert d.a22 == a and d.a11.is_zero() and d.a12.is_zero() and d.a21.is_zero()


def test_block_decompose_fixture_pair(fixture_pair):
    _, b = fixture_pair
    p = mat([[1, 0], [0, 0]])
    d = block_decompose(p, p, b)
    assert d.a11 == mat([[1, 0], [0, 0]])
    assert d.a12 == mat([[0, 1], [0, 0]])
    assert d.a21.is_zero()
    assert d.a22 == mat([[0, 0], [0, 1]])


def test_block_decompose_requires_idempotents():
    with pytest.raises(NotIdempotent):
        block_decompose(mat([[0, 1], [0, 0]]), Matrix.identity(Q, 2), Matrix.identity(Q, 2))


def test_block_reconstruction_exhaustive_gf2(gf2_2x2):
    idem = [p for p in gf2_2x2 if p @ p == p]
    for p, q in itertools.product(idem, idem):
        for a in gf2_2x2:
            assert block_decompose(p, q, a).reconstruct() == a


def test_enumerate_matrices_counts():
    ms = list(enumerate_matrices(GF(3), 2))
    assert len(ms) == 81 and len(set(ms)) == 81
    assert len(set(enumerate_matrices(GF(2), 2, 3))) == 64


def test_power_and_hash():
    a = mat([[1, 1], [0, 1]])
    assert a ** 3 == mat([[1, 3], [0, 1]])
    assert a ** 0 == Matrix.identity(Q, 2)
    assert hash(a) == hash(mat([[1, 1], [0, 1]]))
    assert a != mat([[1, 1], [0, 1]], GF(5))


def test_entry_access():
    a = mat([["1/2", 0], [0, 1]])
    assert a[0, 0] == Q("1/2")
    with pytest.raises(IndexError):
        a[2, 0]


def test_from_rows_validation():
    with pytest.raises(DimensionMismatch):
        Matrix.from_rows(Q, [[1, 2], [3]])
    with pytest.raises(DimensionMismatch):
        Matrix(Q, 2, 2, [1, 2, 3])
