import random

import pytest
from pytest import raises

from gradim.errors import DimensionMismatch, InvalidOrder
from gradim.monomials import (
    ExponentVector,
    MonomialOrder,
    Ordering,
    WeightVector,
    compare,
    weighted_degree,
)
from gradim.sagbi import regular_non_noetherian_subalgebra
from gradim.sampling import random_exponent_vector, random_order

E = ExponentVector


@pytest.fixture(
    params=["lex", "grlex", "grevlex"],
)
def named_order(request):
    return MonomialOrder.named(request.param, 3)


def test_one_is_smallest(named_order):
    one = E.zero(3)
    for i in range(3):
        assert compare(one, E.unit(3, i), named_order) is Ordering.LESS
        assert compare(E.unit(3, i), one, named_order) is Ordering.GREATER


def test_named_examples():
    assert compare(E((2, 1)), E((1, 2)), MonomialOrder.grlex(2)) is Ordering.GREATER
    assert compare(E((1, 0)), E((0, 5)), MonomialOrder.lex(2)) is Ordering.GREATER
    assert compare(E((1, 0)), E((0, 5)), MonomialOrder.grlex(2)) is Ordering.LESS
    # x*z^2 < y^3 in grevlex, x*z^2 > y^3 in grlex
    assert compare(E((1, 0, 2)), E((0, 3, 0)), MonomialOrder.grevlex(3)) is Ordering.LESS
    assert compare(E((1, 0, 2)), E((0, 3, 0)), MonomialOrder.grlex(3)) is Ordering.GREATER
    assert compare(E((1, 1)), E((1, 1)), MonomialOrder.lex(2)) is Ordering.EQUAL


def test_xy_weight_order():
    order = regular_non_noetherian_subalgebra().order
    xy, yz = E((1, 1, 0)), E((0, 1, 1))
    assert compare(xy, yz, order) is Ordering.GREATER
    # x and y tie on the weight row, lex breaks the tie
    assert compare(E((1, 0, 0)), E((0, 1, 0)), order) is Ordering.GREATER
    assert compare(E((0, 0, 5)), E((0, 1, 0)), order) is Ordering.LESS


def test_weighted_grlex():
    order = MonomialOrder.grlex(2, WeightVector((1, 3)))
    assert compare(E((2, 0)), E((0, 1)), order) is Ordering.LESS
    assert weighted_degree(E((2, 1)), WeightVector((1, 3))) == 5


@pytest.mark.parametrize(
    "rows",
    [
        ((0, 1),),
        ((1, -1), (0, 1)),
        ((1, 1),),
        ((1, 0), (1,)),
        (),
    ],
    ids=["column-without-positive-entry", "negative-first-entry", "rank-deficient", "ragged", "empty"],
)
def test_invalid_orders(rows):
    with raises(InvalidOrder):
        MonomialOrder.from_rows(rows)


def test_unknown_order_name():
    with raises(InvalidOrder, match="unknown order"):
        MonomialOrder.named("revlex", 2)


def test_dimension_mismatch():
    with raises(DimensionMismatch):
        compare(E((1, 0)), E((1, 0, 0)), MonomialOrder.lex(3))
    with raises(DimensionMismatch):
        E((1, 0)) + E((1,))
    with raises(DimensionMismatch):
        weighted_degree(E((1, 0)), WeightVector.ones(3))


def test_negative_exponent_rejected():
    with raises(ValueError):
        E((1, -1))
    with raises(ValueError):
        WeightVector((1, 0))


def test_order_is_a_monoid_order():
    """Totality and multiplicativity on random orders and monomials."""
    rng = random.Random(1)
    for _ in range(1000):
        n = rng.randint(1, 4)
        order = random_order(rng, n)
        a, b, c = (random_exponent_vector(rng, n, rng.randint(0, 6)) for _ in range(3))
        ab = compare(a, b, order)
        assert (ab is Ordering.EQUAL) == (a == b)
        assert compare(b, a, order) is Ordering(-ab.value)
        assert compare(a + c, b + c, order) is ab


def test_descending_chains_are_finite(named_order):
    """Below any monomial only finitely many steps down are possible."""
    rng = random.Random(7)
    start = E((3, 2, 1))
    current = start
    steps = 0
    while not current.is_zero():
        candidates = [
            b
            for b in (random_exponent_vector(rng, 3, rng.randint(0, 6)) for _ in range(50))
            if compare(b, current, named_order) is Ordering.LESS
        ]
        current = min(candidates, key=named_order.key, default=E.zero(3))
        steps += 1
        assert steps < 1000
