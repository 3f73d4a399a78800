import math
import random
from itertools import product

import pytest
import sympy
from pytest import approx, raises

from gradim.errors import NotRegularError, PreconditionError, ZeroPolynomialError
from gradim.series import (
    GradedSeries,
    NoFit,
    Obstruction,
    RationalSeries,
    Verdict,
    classify_hilbert_serre,
    default_denominators,
    expand,
    exponential_series,
    fit_any,
    fit_rational,
    lift_regular_element,
    partition_series,
    periodic_denominators,
    pole_order_at_one,
    polynomial_ring_series,
    power_sum_series,
    radius_estimate,
    regular_element_factor,
)
from gradim.monoid import hilbert_function
from gradim.sampling import random_monoid

XY_POWERS = GradedSeries((1,) + tuple(range(1, 61)))
XY_POWERS_WITHOUT_X = GradedSeries((1, 0) + tuple(n // 2 for n in range(2, 61)))


def test_series_rejects_negative_coefficients():
    with raises(PreconditionError):
        GradedSeries((1, -1))
    with raises(PreconditionError):
        GradedSeries(())


def test_fit_examples():
    fit = fit_rational(XY_POWERS, (1, 1))
    assert fit == RationalSeries((1, -1, 1), (1, 1))
    assert pole_order_at_one(fit) == 2

    fit = fit_rational(XY_POWERS_WITHOUT_X, (2, 2))
    assert fit.numerator == (1, 0, -1, 1, 1)
    assert pole_order_at_one(fit) == 2

    fit = fit_rational(polynomial_ring_series(3, 30), (1, 1, 1))
    assert fit.numerator == (1,)
    assert fit.pole_order == 3


def test_fit_failure_names_the_offending_degree():
    fit = fit_rational(XY_POWERS, (1,))
    assert isinstance(fit, NoFit)
    assert not fit
    assert fit.degree == 60 - 6 + 1
    assert fit.coefficient == 1


def test_fit_preconditions():
    with raises(PreconditionError):
        fit_rational(XY_POWERS, (1, 1), guard=0)
    with raises(PreconditionError):
        fit_rational(XY_POWERS, (4,), guard=3)
    with raises(PreconditionError):
        fit_rational(GradedSeries((1, 1, 1)), (1,))
    with raises(PreconditionError):
        fit_rational(XY_POWERS, (0,))


def test_rational_form_text():
    fit = RationalSeries((1, -1, 1), (1, 1))
    assert str(fit) == "(t**2 - t + 1)/((1 - t)**2)"
    t = sympy.Symbol("t")
    assert sympy.simplify(fit.as_expr() - (t ** 2 - t + 1) / (1 - t) ** 2) == 0
    assert str(RationalSeries((1, 0, -1, 1, 1), (2, 2))) == "(t**4 + t**3 - t**2 + 1)/((1 - t**2)**2)"


@pytest.mark.parametrize(
    "numerator, denominator, pole",
    [
        ((1, -1), (1,), 0),
        ((1, -1, 1), (1, 1), 2),
        ((1, 0, -1, 1, 1), (2, 2), 2),
        ((1, -2, 1), (1, 1, 1), 1),
        ((3,), (), 0),
        ((1, 1), (2,), 1),
    ],
)
def test_pole_order_examples(numerator, denominator, pole):
    assert pole_order_at_one(RationalSeries(numerator, denominator)) == pole


def test_pole_order_of_zero():
    with raises(ZeroPolynomialError):
        pole_order_at_one(RationalSeries((0, 0), (1,)))


def test_expand():
    assert expand(RationalSeries((1, -1, 1), (1, 1)), 6) == (1, 1, 2, 3, 4, 5, 6)
    assert RationalSeries((1,), (2,)).expand(5) == (1, 0, 1, 0, 1, 0)
    assert RationalSeries((1, 2, 3), ()).expand(1) == (1, 2)


def test_fit_recovers_random_rational_series():
    rng = random.Random(2)
    for _ in range(1000):
        denominator = tuple(rng.randint(1, 3) for _ in range(rng.randint(0, 4)))
        numerator = tuple(rng.randint(0, 3) for _ in range(rng.randint(1, 6)))
        if not any(numerator):
            continue
        rs = RationalSeries(numerator, denominator)
        h = GradedSeries(rs.expand(40))
        fit = fit_rational(h, denominator)
        assert fit == rs
        assert fit.expand(40) == h.coefficients


def test_regular_element_factor_examples():
    P = polynomial_ring_series(2, 10)
    assert regular_element_factor(P, 1).coefficients == (1,) * 11
    assert regular_element_factor(P, 2).coefficients == (1, 2) + (2,) * 9
    with raises(PreconditionError):
        regular_element_factor(P, 0)


def test_zero_divisor_is_reported():
    # k[x]/(x^2) has no regular element of degree 1
    with raises(NotRegularError) as info:
        regular_element_factor(GradedSeries((1, 1, 0, 0, 0)), 1)
    assert info.value.degree == 2


def test_lift_inverts_factor():
    for m, h in product(range(1, 4), range(1, 4)):
        P = polynomial_ring_series(m, 20)
        assert lift_regular_element(regular_element_factor(P, h), h) == P


def _quotient_by_pure_power(m, h, N):
    """Hilbert function of k[x_1..x_m]/(x_1^h), by counting exponent vectors."""
    counts = [0] * (N + 1)
    for a in product(range(N + 1), repeat=m):
        if a[0] < h and sum(a) <= N:
            counts[sum(a)] += 1
    return GradedSeries(tuple(counts))


@pytest.mark.parametrize("m, h", [(1, 1), (1, 3), (2, 1), (2, 2), (3, 1), (3, 3)])
def test_regular_element_drops_pole_order_by_one(m, h):
    N = 14
    P = polynomial_ring_series(m, N)
    Q = regular_element_factor(P, h)
    assert Q == _quotient_by_pure_power(m, h, N)
    pole = pole_order_at_one(fit_rational(P, (1,) * m))
    quotient_pole = pole_order_at_one(fit_rational(Q, (1,) * (m - 1)))
    assert quotient_pole == pole - 1


def test_radius_examples():
    assert radius_estimate(exponential_series(40)) == approx(0.5, abs=0.02)
    assert radius_estimate(exponential_series(40), method="root") == approx(0.5, abs=0.02)
    assert radius_estimate(GradedSeries((1,) * 41)) == approx(1.0, abs=1e-6)
    assert 0.95 <= radius_estimate(partition_series(200)) <= 1.05
    assert radius_estimate(GradedSeries((1,) + (0,) * 20)) == math.inf


def test_radius_preconditions():
    with raises(PreconditionError):
        radius_estimate(GradedSeries((1,) * 5))
    with raises(PreconditionError):
        radius_estimate(GradedSeries((1,) * 20), method="ratio")


def cubes_every_seventh(N):
    return GradedSeries(tuple(n ** 3 if n % 7 == 0 else 1 for n in range(N + 1)))


def powers_of_two_every_tenth(N):
    return GradedSeries(tuple(2 ** n if n % 10 == 0 else 1 for n in range(N + 1)))


def test_radius_follows_sparse_spikes():
    assert radius_estimate(cubes_every_seventh(200)) == approx(1.0, abs=0.01)
    assert radius_estimate(powers_of_two_every_tenth(200)) == approx(0.5, abs=0.01)
    assert radius_estimate(powers_of_two_every_tenth(200), method="root") == approx(0.5, abs=0.01)


def test_periodic_denominators():
    candidates = periodic_denominators(200, 11)
    assert (7, 7, 7, 7) in candidates
    assert (50, 50) in candidates
    assert (51,) not in candidates
    assert all(c[0] * len(c) <= 100 for c in candidates)
    assert periodic_denominators(8, 11) == []


def test_classify_finds_a_periodic_denominator():
    verdict = classify_hilbert_serre(cubes_every_seventh(200))
    assert verdict.verdict is Verdict.HILBERT_SERRE
    assert verdict.fit.denominator == (7, 7, 7, 7)
    assert verdict.pole_order == 4


def test_classify_sparse_exponential_spikes():
    verdict = classify_hilbert_serre(powers_of_two_every_tenth(200))
    assert verdict.verdict is Verdict.NOT_HILBERT_SERRE
    assert verdict.obstruction is Obstruction.RADIUS
    assert verdict.radius == approx(0.5, abs=0.01)


def test_partition_numbers():
    assert partition_series(6).coefficients == (1, 1, 2, 3, 5, 7, 11)
    assert partition_series(30)[30] == 5604
    assert list(partition_series(100)) == [sympy.npartitions(n) for n in range(101)]


def test_power_sum_series():
    for d in range(1, 6):
        h = power_sum_series(d, 60)
        assert h.head(3) == (1, 2, 2 ** d + 1)
        assert pole_order_at_one(fit_rational(h, (1,) * (d + 1))) == d + 1
        assert classify_hilbert_serre(h).pole_order == d + 1
    with raises(PreconditionError):
        power_sum_series(0, 10)


def test_default_denominators():
    candidates = default_denominators(60, (1, 2))
    assert candidates[0] == ()
    assert (1, 1) in candidates
    assert (2, 2) in candidates
    assert all(60 >= 2 * (max(c, default=0) + 5) for c in candidates)
    sums = [sum(c) for c in candidates]
    assert sums == sorted(sums)
    assert all(max(c, default=0) <= 5 for c in default_denominators(20))


def test_fit_any():
    fit = fit_any(XY_POWERS, default_denominators(60))
    assert fit == RationalSeries((1, -1, 1), (1, 1))
    assert fit_any(exponential_series(40), default_denominators(40)) is None


def test_classify_hilbert_serre_examples():
    verdict = classify_hilbert_serre(XY_POWERS)
    assert verdict.verdict is Verdict.HILBERT_SERRE
    assert verdict.pole_order == 2

    verdict = classify_hilbert_serre(exponential_series(40))
    assert verdict.verdict is Verdict.NOT_HILBERT_SERRE
    assert verdict.obstruction is Obstruction.RADIUS

    verdict = classify_hilbert_serre(partition_series(400), d_max=10)
    assert verdict.verdict is Verdict.NOT_HILBERT_SERRE
    assert verdict.obstruction is Obstruction.POLE_UNBOUNDED
    assert verdict.d_max == 10


def test_classify_degenerate_series():
    verdict = classify_hilbert_serre(GradedSeries((1,)))
    assert verdict.verdict is Verdict.HILBERT_SERRE
    assert verdict.pole_order == 0
    verdict = classify_hilbert_serre(GradedSeries((1,) + (0,) * 20))
    assert verdict.pole_order == 0


def test_classify_without_candidates_is_unknown():
    verdict = classify_hilbert_serre(GradedSeries((1,) * 41), denom_candidates=[])
    assert verdict.verdict is Verdict.UNKNOWN_AT_TRUNCATION
    assert verdict.as_record()["verdict"] == "unknown-at-truncation"


def test_classification_record_keys():
    record = classify_hilbert_serre(XY_POWERS).as_record()
    assert list(record) == ["verdict", "pole_order", "numerator", "denominator", "radius_estimate", "evidence"]
    assert record["numerator"] == "t**2 - t + 1"


def test_pole_order_is_monotone_under_domination():
    """Adding a generator only adds monoid elements, so it cannot lower the pole order."""
    rng = random.Random(4)
    for _ in range(30):
        M = random_monoid(rng, rng.randint(1, 3), rng.randint(1, 3), 2)
        bigger = random_monoid(rng, M.dimension, 1, 2)
        M2 = type(M)(M.dimension, M.generators + bigger.generators)
        f, g = hilbert_function(M, 40), hilbert_function(M2, 40)
        assert all(a <= b for a, b in zip(f, g))
        fit_f = fit_rational(f, tuple(sorted(M.degrees)))
        fit_g = fit_rational(g, tuple(sorted(M2.degrees)))
        assert pole_order_at_one(fit_f) <= pole_order_at_one(fit_g)
