from fractions import Fraction
import random

import pytest
from hypothesis import given, strategies as st

from skewmeadow.matrix import (IDENTITY, ZERO, Matrix2, MatrixRing, SingularityClass,
                               class_representative, classify, det, grid, grid_values,
                               inv_matrix)

M = MatrixRing()
E21 = Matrix2.of([[0, 0], [1, 0]])
P = Matrix2.of([[1, 0], [1, 0]])
entries = st.fractions(min_value=-20, max_value=20, max_denominator=10)
matrices = st.builds(Matrix2, entries, entries, entries, entries)


def test_rendering():
    assert str(Matrix2.of([["1/2", "1/2"], [0, 0]])) == "[[1/2,1/2],[0,0]]"
    assert str(IDENTITY) == "[[1,0],[0,1]]"


def test_grid_values():
    assert grid_values(2) == [Fraction(v) for v in ("-2", "-1", "-1/2", "0", "1/2", "1", "2")]
    assert sum(1 for _ in grid(2)) == 7 ** 4


@pytest.mark.parametrize("m,expected", [
    (IDENTITY, IDENTITY),
    (Matrix2.of([[2, 1], [1, 1]]), Matrix2.of([[1, -1], [-1, 2]])),
    (ZERO, ZERO),
    (E21, Matrix2.of([[0, 1], [0, 0]])),
    (Matrix2.of([[4, 0], [0, 0]]), Matrix2.of([["1/4", 0], [0, 0]])),
    (P, Matrix2.of([["1/2", "1/2"], [0, 0]])),
])
def test_inverse_examples(m, expected):
    assert inv_matrix(m) == expected


def test_every_class_has_a_representative():
    rng = random.Random(3)
    for kind in SingularityClass:
        assert classify(class_representative(kind, rng, 10)) is kind


@given(matrices)
def test_inversion_ring_laws(x):
    assert M.inv(M.inv(x)) == x
    assert x * (M.inv(x) * x) == x
    assert x * IDENTITY == x
    assert M.inv(-x) == -M.inv(x)


@given(matrices)
def test_regular_matrices_invert_exactly(x):
    if det(x) != 0:
        assert x * inv_matrix(x) == IDENTITY == inv_matrix(x) * x


def test_ril_fails_on_nilpotent():
    assert E21 * E21 == ZERO
    assert E21 * (E21 * inv_matrix(E21)) != E21


def test_inverse_of_idempotent_not_idempotent():
    ip = inv_matrix(P)
    assert P * P == P
    assert ip * ip != ip
    assert inv_matrix(P * P) != ip * ip
