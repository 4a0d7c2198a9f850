"""Exact linear algebra: determinants, ranks, kernel vectors.

Oracles here are deliberately naive (cofactor expansion, Fraction-based
Gaussian elimination) and independent of the Bareiss code under test.
"""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from regulartri import (
    DimensionError,
    Matrix,
    NoDependenceError,
    NotCorankOneError,
    determinant,
    kernel_vector,
    rank,
)


def _cofactor_det(rows):
    n = len(rows)
    if n == 1:
        return Fraction(rows[0][0])
    total = Fraction(0)
    for j in range(n):
        if rows[0][j] == 0:
            continue
        minor = [[rows[i][k] for k in range(n) if k != j] for i in range(1, n)]
        sign = -1 if j % 2 else 1
        total += sign * rows[0][j] * _cofactor_det(minor)
    return total


def _gauss_rank(rows):
    work = [[Fraction(x) for x in row] for row in rows]
    nc = len(work[0])
    r = 0
    for c in range(nc):
        pivot = next((i for i in range(r, len(work)) if work[i][c] != 0), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        for i in range(len(work)):
            if i != r and work[i][c] != 0:
                f = work[i][c] / work[r][c]
                work[i] = [a - f * b for a, b in zip(work[i], work[r])]
        r += 1
    return r


def test_matrix_shape_checks():
    m = Matrix([(1, 2), (3, 4)])
    assert m.nrows == 2 and m.ncols == 2
    assert m.transpose().rows == ((1, 3), (2, 4))
    with pytest.raises(DimensionError):
        Matrix([])
    with pytest.raises(DimensionError):
        Matrix([(1, 2), (3,)])


def test_determinant_pins():
    assert determinant([(1, 0), (0, 1)]) == 1
    assert determinant([(0, 1), (1, 0)]) == -1
    assert determinant([(2, 3), (4, 5)]) == -2
    assert determinant([(1, 2, 3), (4, 5, 6), (7, 8, 9)]) == 0
    assert determinant([(3,)]) == 3
    assert determinant(Matrix([(1, 1), (1, 2)])) == 1


def test_determinant_rational_entries():
    rows = [(Fraction(1, 2), Fraction(1, 3)), (Fraction(1, 5), Fraction(1, 7))]
    assert determinant(rows) == Fraction(1, 14) - Fraction(1, 15)


def test_determinant_rejects_non_square():
    with pytest.raises(DimensionError):
        determinant([(1, 2, 3), (4, 5, 6)])


def test_determinant_matches_cofactor_oracle():
    rng = random.Random(20260814)
    for _ in range(200):
        n = rng.randint(1, 5)
        rows = [[rng.randint(-6, 6) for _ in range(n)] for _ in range(n)]
        assert determinant(rows) == _cofactor_det(rows)


def test_determinant_exact_on_large_entries():
    # Floating point would lose these digits; exact arithmetic must not.
    rows = [
        (10**15, 10**15 + 1, 0),
        (10**15 - 1, 10**15, 1),
        (1, 2, 10**15),
    ]
    assert determinant(rows) == _cofactor_det(rows)


def test_rank_pins():
    assert rank([(1, 0), (0, 1)]) == 2
    assert rank([(1, 2), (2, 4)]) == 1
    assert rank([(0, 0), (0, 0)]) == 0
    assert rank([(1, 2, 3), (4, 5, 6), (7, 8, 9)]) == 2


def test_rank_matches_gauss_oracle():
    rng = random.Random(77)
    for _ in range(200):
        nr = rng.randint(1, 5)
        nc = rng.randint(1, 5)
        rows = [[rng.randint(-3, 3) for _ in range(nc)] for _ in range(nr)]
        assert rank(rows) == _gauss_rank(rows)


def test_kernel_vector_pins():
    # Column 2 = column 0 + column 1.
    k = kernel_vector([(1, 0, 1), (0, 1, 1)])
    assert k == (1, 1, -1)
    # Sign normalization: first nonzero entry comes out positive.
    k = kernel_vector([(1, 0, 0), (0, 1, -1)])
    assert k == (0, 1, 1)


def test_kernel_vector_is_primitive_and_exact():
    rng = random.Random(99)
    found = 0
    for _ in range(400):
        nr = rng.randint(2, 4)
        nc = nr + 1
        rows = [[rng.randint(-4, 4) for _ in range(nc)] for _ in range(nr)]
        if _gauss_rank(rows) != nc - 1:
            continue
        found += 1
        k = kernel_vector(rows)
        assert len(k) == nc
        assert any(x != 0 for x in k)
        for row in rows:
            assert sum(a * b for a, b in zip(row, k)) == 0
        from math import gcd

        g = 0
        for x in k:
            g = gcd(g, x)
        assert g == 1
        assert next(x for x in k if x != 0) > 0
    assert found >= 100


def test_kernel_vector_error_cases():
    with pytest.raises(NoDependenceError):
        kernel_vector([(1, 0), (0, 1)])
    with pytest.raises(NotCorankOneError):
        kernel_vector([(1, 0, 0, 0), (0, 1, 0, 0)])
