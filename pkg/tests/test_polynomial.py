import random
from fractions import Fraction

from pytest import raises

from gradim.errors import DimensionMismatch, ZeroPolynomialError
from gradim.formats import parse_polynomial
from gradim.monomials import ExponentVector, MonomialOrder, WeightVector
from gradim.polynomial import Polynomial, leading_monomial, leading_term, poly_mul
from gradim.sagbi import regular_non_noetherian_subalgebra
from gradim.sampling import random_homogeneous_polynomial, random_order

XY = ("x", "y")
XYZ = ("x", "y", "z")


def p(text, variables=XY):
    return parse_polynomial(text, variables)


def test_poly_mul_examples():
    assert poly_mul(p("x + y"), p("x - y")) == p("x^2 - y^2")
    assert poly_mul(p("x + y"), p("x + y")) == p("x^2 + 2*x*y + y^2")
    assert poly_mul(p("1/2*x"), p("2*y")) == p("x*y")
    assert poly_mul(p("x"), Polynomial.zero(2)).is_zero()
    assert poly_mul(p("x + y"), Polynomial.one(2)) == p("x + y")


def test_poly_mul_dimension_mismatch():
    with raises(DimensionMismatch):
        poly_mul(p("x"), p("x", ("x", "y", "z")))


def test_arithmetic_cancels_terms():
    f = p("x*y + 1") - p("x*y")
    assert f == Polynomial.one(2)
    assert len(f) == 1
    assert (p("x") * 0).is_zero()


def test_leading_term_examples():
    lex = MonomialOrder.lex(2)
    assert leading_term(p("y^3 + 2*x"), lex) == (ExponentVector((1, 0)), Fraction(2))
    assert leading_monomial(p("y^3 + 2*x"), MonomialOrder.grlex(2)) == ExponentVector((0, 3))
    order = regular_non_noetherian_subalgebra().order
    f = parse_polynomial("x*y^2 + x*y*z", XYZ)
    assert leading_term(f, order) == (ExponentVector((1, 2, 0)), Fraction(1))


def test_leading_term_of_zero():
    with raises(ZeroPolynomialError):
        leading_term(Polynomial.zero(2), MonomialOrder.lex(2))


def test_leading_term_dimension_mismatch():
    with raises(DimensionMismatch):
        leading_term(p("x"), MonomialOrder.lex(3))


def test_homogeneity():
    weights = WeightVector((1, 2))
    assert p("x^2 + y").is_homogeneous(weights)
    assert p("x^2 + y").degree(weights) == 2
    assert not p("x + y").is_homogeneous(weights)
    with raises(ValueError):
        p("x + y").degree(weights)


def test_power():
    assert p("x + y") ** 0 == Polynomial.one(2)
    assert p("x + y") ** 3 == poly_mul(p("x + y"), p("x^2 + 2*x*y + y^2"))


def test_leading_terms_multiply():
    rng = random.Random(3)
    for _ in range(1000):
        n = rng.randint(1, 3)
        order = random_order(rng, n)
        f = random_homogeneous_polynomial(rng, n, rng.randint(0, 3))
        g = random_homogeneous_polynomial(rng, n, rng.randint(0, 3))
        if f.is_zero() or g.is_zero():
            continue
        (a, c), (b, d) = leading_term(f, order), leading_term(g, order)
        assert leading_term(poly_mul(f, g), order) == (a + b, c * d)
