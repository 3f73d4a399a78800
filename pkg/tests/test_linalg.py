import random
from fractions import Fraction

import pytest
import sympy
from pytest import raises

from gradim.errors import DimensionMismatch, PreconditionError
from gradim.linalg import (
    IntegerLattice,
    RationalMatrix,
    bareiss_rank,
    hermite_normal_form,
    lattice_rank,
    row_echelon,
)


def test_identity_is_reduced():
    identity = RationalMatrix.from_rows([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    echelon = row_echelon(identity)
    assert echelon.matrix == identity
    assert echelon.pivot_columns == (0, 1, 2)
    assert echelon.rank == 3


def test_dependent_rows():
    echelon = row_echelon(RationalMatrix.from_rows([[1, 1], [2, 2]]))
    assert echelon.rank == 1
    assert echelon.nonzero_rows() == ((Fraction(1), Fraction(1)),)


def test_reduced_rows_have_unit_pivots():
    m = RationalMatrix.from_rows([[2, 4, 1], [1, 3, 0], [3, 7, 1]])
    echelon = row_echelon(m)
    assert echelon.rank == 2
    for row, col in zip(echelon.nonzero_rows(), echelon.pivot_columns):
        assert row[col] == 1
        for other in echelon.nonzero_rows():
            if other is not row:
                assert other[col] == 0


def test_pivot_order():
    m = RationalMatrix.from_rows([[1, 1, 0], [0, 1, 1]])
    echelon = row_echelon(m, pivot_order=[2, 1, 0])
    assert echelon.pivot_columns == (2, 1)
    with raises(PreconditionError):
        row_echelon(m, pivot_order=[0, 0, 1])


def test_rational_entries():
    m = RationalMatrix.from_rows([["1/2", "1/3"], [3, 2]])
    assert m.rank() == 1
    assert not m.is_integral()


def test_ragged_rows():
    with raises(DimensionMismatch):
        RationalMatrix.from_rows([[1, 2], [3]])


def test_empty_matrix():
    m = RationalMatrix.from_rows([], ncols=3)
    assert m.shape == (0, 3)
    assert row_echelon(m).rank == 0
    assert bareiss_rank([]) == 0


def test_rank_matches_sympy():
    rng = random.Random(5)
    for _ in range(100):
        nrows, ncols = rng.randint(1, 5), rng.randint(1, 5)
        rows = [[rng.randint(-3, 3) for _ in range(ncols)] for _ in range(nrows)]
        m = RationalMatrix.from_rows(rows)
        expected = sympy.Matrix(rows).rank()
        assert m.rank() == expected
        assert row_echelon(m).rank == expected
        assert m.transpose().rank() == expected


@pytest.mark.parametrize(
    "vectors, dimension, rank",
    [
        ([], 2, 0),
        ([(1, 0), (1, 1), (1, 2)], 2, 2),
        ([(2, 4), (1, 2), (3, 6)], 2, 1),
        ([(2, 0, 2), (1, 0, 1)], 3, 1),
        ([(1, 0, 0), (0, 1, 0), (0, 0, 1)], 3, 3),
    ],
)
def test_lattice_rank_examples(vectors, dimension, rank):
    assert lattice_rank(IntegerLattice.from_vectors(vectors, dimension)) == rank


def test_lattice_dimension_checks():
    with raises(DimensionMismatch):
        IntegerLattice(((1, 0), (1,)), 2)
    with raises(PreconditionError):
        IntegerLattice.from_vectors([])


def test_hermite_normal_form_shape():
    basis = hermite_normal_form([[2, 4], [1, 2], [3, 7]])
    # Z(2,4) + Z(1,2) + Z(3,7) = Z(1,2) + Z(0,1) = Z^2
    assert basis == [[1, 0], [0, 1]]
    for row in hermite_normal_form([[4, 6, 2], [2, 3, 1], [0, 2, 2]]):
        head = next(x for x in row if x)
        assert head > 0


def test_lattice_rank_invariances():
    rng = random.Random(11)
    for _ in range(1000):
        n = rng.randint(1, 4)
        vectors = [tuple(rng.randint(0, 3) for _ in range(n)) for _ in range(rng.randint(1, 5))]
        rank = lattice_rank(IntegerLattice.from_vectors(vectors))
        assert rank == sympy.Matrix(vectors).rank()
        shuffled = vectors[:]
        rng.shuffle(shuffled)
        assert lattice_rank(IntegerLattice.from_vectors(shuffled)) == rank
        negated = [tuple(-x for x in shuffled[0])] + shuffled[1:]
        assert lattice_rank(IntegerLattice.from_vectors(negated)) == rank
        if len(vectors) > 1:
            combined = [tuple(a + b for a, b in zip(vectors[0], vectors[1]))] + vectors[1:]
            assert lattice_rank(IntegerLattice.from_vectors(combined)) == rank
