"""Exact matrix core: determinants, minors, flips, characteristic polynomials."""

from fractions import Fraction as F
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from interlace import (
    DimensionMismatch,
    InvalidSelector,
    Matrix,
    MinorSelector,
    Polynomial,
    anti_identity,
    flip_cols,
    flip_rows,
    identity,
)
from conftest import cofactor_det, random_int_matrix, random_rational_matrix


def test_constructor_rejects_bad_shapes():
    with pytest.raises(DimensionMismatch):
        Matrix([])
    with pytest.raises(DimensionMismatch):
        Matrix([[1, 2], [3]])
    with pytest.raises(DimensionMismatch):
        Matrix([[1, 2, 3], [4, 5, 6]])


def test_entries_are_exact_and_floats_rejected():
    m = Matrix([["0.25", "3/7"], [2, F(1, 3)]])
    assert m[1, 1] == F(1, 4)
    assert m[1, 2] == F(3, 7)
    with pytest.raises(TypeError):
        Matrix([[0.5, 1], [1, 1]])


def test_indexing_is_one_based_and_checked():
    m = Matrix([[1, 2], [3, 4]])
    assert m[1, 2] == 2 and m[2, 1] == 3
    for bad in ((0, 1), (1, 3), (3, 1)):
        with pytest.raises(InvalidSelector):
            m[bad]


def test_matrix_is_immutable():
    m = identity(2)
    with pytest.raises(AttributeError):
        m.n = 3


def test_determinant_frozen_values():
    assert identity(4).det() == 1
    assert Matrix([[1, 2], [3, 4]]).det() == -2
    assert Matrix([[F(1, 2), F(1, 3)], [F(1, 5), F(1, 7)]]).det() == F(1, 210)
    # forced pivot swap: leading zero entry
    assert Matrix([[0, 1], [1, 0]]).det() == -1
    assert Matrix([[0, 2, 1], [1, 1, 1], [2, 0, 3]]).det() == -4


def test_determinant_matches_cofactor_oracle():
    for seed in range(40):
        n = 1 + seed % 5
        m = random_rational_matrix(n, seed)
        assert m.det() == cofactor_det(m), (n, seed)


def test_determinant_of_singular_matrices_is_zero():
    for seed in range(10):
        n = 2 + seed % 3
        m = random_int_matrix(n, seed)
        rows = [list(r) for r in m.rows]
        rows[-1] = rows[0]  # duplicate row
        dup = Matrix(rows)
        assert dup.det() == 0
        assert cofactor_det(dup) == 0


def test_minor_selector_validation():
    with pytest.raises(InvalidSelector):
        MinorSelector((2, 1), (1, 2))
    with pytest.raises(InvalidSelector):
        MinorSelector((1, 1), (1, 2))
    with pytest.raises(InvalidSelector):
        MinorSelector((0, 1), (1, 2))
    with pytest.raises(InvalidSelector):
        MinorSelector((1, 2), (1,))


def test_full_order_minor_equals_determinant():
    for seed in range(8):
        n = 2 + seed % 4
        m = random_rational_matrix(n, seed + 100)
        sel = MinorSelector(tuple(range(1, n + 1)), tuple(range(1, n + 1)))
        assert m.minor(sel) == m.det()


def test_minor_enumeration_is_lexicographic_and_complete():
    m = random_int_matrix(4, 7)
    seen = [sel for sel, _ in m.minors(2)]
    expected = []
    for rows in combinations(range(1, 5), 2):
        for cols in combinations(range(1, 5), 2):
            expected.append(MinorSelector(rows, cols))
    assert seen == expected
    # counts for every order: C(n,k)^2
    for k, want in ((1, 16), (2, 36), (3, 16), (4, 1)):
        assert sum(1 for _ in m.minors(k)) == want


def test_minor_values_match_cofactor_oracle():
    m = random_rational_matrix(4, 11)
    for sel, val in m.minors(3):
        assert val == cofactor_det(m.submatrix(sel))


def test_minor_order_bounds():
    m = identity(3)
    for bad in (0, 4):
        with pytest.raises(InvalidSelector):
            list(m.minors(bad))


def test_anti_identity_and_flips():
    j3 = anti_identity(3)
    assert j3.rows == Matrix([[0, 0, 1], [0, 1, 0], [1, 0, 0]]).rows
    assert j3.det() == -1
    # det J_n = (-1)^(n(n-1)/2)
    for n in range(1, 9):
        assert anti_identity(n).det() == (-1) ** (n * (n - 1) // 2)
    for seed in range(6):
        n = 2 + seed % 4
        m = random_rational_matrix(n, seed + 50)
        j = anti_identity(n)
        assert flip_rows(m) == j * m
        assert flip_cols(m) == m * j
        assert flip_rows(flip_rows(m)) == m
        assert flip_cols(flip_cols(m)) == m


def test_matmul_and_power():
    a = Matrix([[1, 1], [0, 1]])
    assert (a * a).rows == Matrix([[1, 2], [0, 1]]).rows
    assert (a ** 0) == identity(2)
    assert (a ** 1) == a
    assert (a ** 5) == Matrix([[1, 5], [0, 1]])
    with pytest.raises(DimensionMismatch):
        a * identity(3)
    with pytest.raises(ValueError):
        a ** -1


def test_scalar_arithmetic():
    a = Matrix([[1, 2], [3, 4]])
    assert (-a).rows == Matrix([[-1, -2], [-3, -4]]).rows
    assert (a - a) == Matrix([[0, 0], [0, 0]])
    assert (2 * a) == Matrix([[2, 4], [6, 8]])
    assert a.transpose() == Matrix([[1, 3], [2, 4]])


@settings(deadline=None, max_examples=40)
@given(st.lists(st.lists(st.integers(-5, 5), min_size=3, max_size=3),
                min_size=9, max_size=9))
def test_determinant_is_multiplicative(flat):
    a = Matrix(flat[:3])
    b = Matrix(flat[3:6])
    c = Matrix(flat[6:9])
    assert (a * b).det() == a.det() * b.det()
    assert ((a * b) * c) == (a * (b * c))


def test_charpoly_frozen_values():
    assert anti_identity(3).charpoly() == Polynomial([1, -1, -1, 1])
    assert Matrix([[0, 1], [1, 1]]).charpoly() == Polynomial([1, -1, -1])
    assert identity(3).charpoly() == Polynomial([1, -3, 3, -1])


def test_charpoly_matches_determinant_evaluation():
    for seed in range(20):
        n = 1 + seed % 5
        m = random_rational_matrix(n, seed + 200)
        p = m.charpoly()
        assert p.degree == n
        assert p.coeffs[0] == 1
        for t in (F(0), F(1), F(-2), F(3, 2)):
            shifted = Matrix([[t * int(i == j) - m.rows[i][j] for j in range(n)]
                              for i in range(n)])
            assert p(t) == shifted.det(), (seed, t)


def test_charpoly_invariant_under_double_flip():
    for seed in range(10):
        n = 2 + seed % 4
        m = random_rational_matrix(n, seed + 300)
        assert flip_rows(flip_cols(m)).charpoly() == m.charpoly()


def test_charpoly_constant_term_is_signed_determinant():
    for seed in range(10):
        n = 2 + seed % 4
        m = random_rational_matrix(n, seed + 400)
        assert m.charpoly().coeffs[-1] == (-1) ** n * m.det()
