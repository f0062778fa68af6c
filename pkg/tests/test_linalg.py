import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from seifert_blanchfield import (GF, QQ, ZZ, ColumnEchelon, Matrix, NotIdempotent, NotInvertible,
                                 RingMismatch, ShapeMismatch, arithmetic, cofactor_determinant,
                                 determinant, inverse, is_invertible, is_nilpotent, rank,
                                 solve_linear, split_idempotent)


def M(rows, ring=ZZ):
    return Matrix.from_rows(rows, ring)


small_ints = st.integers(min_value=-3, max_value=3)


@st.composite
def square_matrices(draw, max_n=4):
    n = draw(st.integers(min_value=0, max_value=max_n))
    entries = draw(st.lists(small_ints, min_size=n * n, max_size=n * n))
    return Matrix(ZZ, n, n, entries)


def test_arithmetic_examples():
    a = M([[1, 2], [3, 4]])
    b = M([[0, 1], [1, 0]])
    assert arithmetic(a, b, "mul") == M([[2, 1], [4, 3]])
    assert arithmetic(a, b, "add") == M([[1, 3], [4, 4]])
    assert arithmetic(a, None, "transpose_conjugate") == M([[1, 3], [2, 4]])


def test_shape_and_ring_mismatch():
    with pytest.raises(ShapeMismatch):
        M([[1, 2]]) @ M([[1, 2]])
    with pytest.raises(RingMismatch):
        M([[1]]) + M([[1]], QQ)


def test_determinant_examples():
    assert determinant(M([[-2, 1], [1, -2]])) == 3
    assert determinant(Matrix.zeros(0, 0)) == 1
    assert determinant(M([[1, 2], [3, 4]], GF(5))) == 3
    assert determinant(M([[Fraction(1, 2), 1], [0, 4]], QQ)) == 2


@settings(max_examples=200, deadline=None)
@given(square_matrices())
def test_determinant_matches_cofactor_oracle(m):
    assert determinant(m) == cofactor_determinant(m)


@settings(max_examples=100, deadline=None)
@given(square_matrices())
def test_determinant_matches_sympy(m):
    expected = sympy.Matrix(m.tolist()).det() if m.rows else 1
    assert determinant(m) == int(expected)


@settings(max_examples=200, deadline=None)
@given(square_matrices())
def test_inverse_exists_iff_unit_determinant(m):
    d = determinant(m)
    if d in (1, -1):
        inv = inverse(m)
        assert inv @ m == Matrix.identity(m.rows)
        assert m @ inv == Matrix.identity(m.rows)
    else:
        assert not is_invertible(m)
        with pytest.raises(NotInvertible):
            inverse(m)


def test_inverse_examples():
    assert inverse(M([[0, 1], [-1, 0]])) == M([[0, -1], [1, 0]])
    assert inverse(M([[2]], QQ)) == M([[Fraction(1, 2)]], QQ)
    with pytest.raises(NotInvertible):
        inverse(M([[2]]))


def test_solve_linear_examples():
    assert solve_linear(M([[2]]), M([[1]])) is None
    assert solve_linear(M([[2]]), M([[2]])) == M([[1]])
    lam = M([[0, 1], [-1, 0]])
    x = solve_linear(lam, Matrix.identity(2), side="right")
    assert x @ lam == Matrix.identity(2)


@settings(max_examples=150, deadline=None)
@given(square_matrices(3), st.lists(small_ints, min_size=9, max_size=9))
def test_solve_linear_finds_planted_solutions(a, xs):
    n = a.rows
    x = Matrix(ZZ, n, 1, xs[:n])
    b = a @ x
    sol = solve_linear(a, b)
    assert sol is not None
    assert a @ sol == b


def test_column_echelon_kernel():
    a = M([[1, 2, 3], [2, 4, 6]])
    ce = ColumnEchelon(a)
    assert ce.rank == 1
    assert (a @ ce.kernel_basis()).is_zero()
    assert a @ ce.U == ce.H
    assert rank(a) == 1


def test_is_nilpotent():
    assert is_nilpotent(M([[1, -1], [1, -1]])) == 2
    assert is_nilpotent(M([[0, 1], [0, 0]])) == 2
    assert is_nilpotent(M([[1]])) is None
    assert is_nilpotent(Matrix.zeros(0, 0)) == 0


def test_split_idempotent_example():
    s = split_idempotent(M([[1, 1], [0, 0]]))
    assert s.rank == 1
    assert s.image_basis @ s.section == M([[1, 1], [0, 0]])
    with pytest.raises(NotIdempotent):
        split_idempotent(M([[2]]))


def _random_unimodular(rng, n):
    m = Matrix.identity(n)
    for _ in range(3 * n):
        i, j = rng.randrange(n), rng.randrange(n)
        if i != j:
            rows = m.tolist()
            c = rng.choice((-2, -1, 1, 2))
            rows[i] = [a + c * b for a, b in zip(rows[i], rows[j])]
            m = M(rows)
    return m


def test_split_random_idempotents():
    rng = random.Random(11)
    for _ in range(200):
        n = rng.randint(1, 4)
        r = rng.randint(0, n)
        u = _random_unimodular(rng, n)
        d = Matrix.from_rows([[int(i == j and i < r) for j in range(n)] for i in range(n)])
        p = u @ d @ inverse(u)
        s = split_idempotent(p)
        assert s.rank == r
        assert s.image_basis @ s.section == p
        assert s.section @ s.image_basis == Matrix.identity(r)


def test_prime_field_arithmetic():
    a = M([[3, 4], [1, 2]], GF(7))
    inv = inverse(a)
    assert inv @ a == Matrix.identity(2, GF(7))
