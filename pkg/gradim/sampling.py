"""
Seeded random presentations for property tests and the `check` command.
"""
import random
from typing import Optional, Tuple

from .monoid import MonoidPresentation
from .monomials import ExponentVector, MonomialOrder, WeightVector
from .polynomial import Polynomial
from .sagbi import SubalgebraPresentation


def random_exponent_vector(rng: random.Random, n: int, degree: int) -> ExponentVector:
    """Uniform-ish monomial of total degree `degree` in n variables."""
    exponents = [0] * n
    for _ in range(degree):
        exponents[rng.randrange(n)] += 1
    return ExponentVector(exponents)


def random_monoid(
    rng: random.Random, n: int, generators: int, max_degree: int
) -> MonoidPresentation:
    """`generators` nonzero monomials of total degree 1..max_degree in N^n."""
    chosen = tuple(
        random_exponent_vector(rng, n, rng.randint(1, max_degree)) for _ in range(generators)
    )
    return MonoidPresentation(n, chosen)


def random_order(rng: random.Random, n: int, max_weight: int = 5) -> MonomialOrder:
    """A positive weight row refined by lex."""
    top = tuple(rng.randint(1, max_weight) for _ in range(n))
    rows = (top, *(tuple(int(i == j) for j in range(n)) for i in range(n)))
    return MonomialOrder.from_rows(rows, name=f"weight{top}")


def random_homogeneous_polynomial(
    rng: random.Random, n: int, degree: int, terms: int = 3, coefficient_range: int = 3
) -> Polynomial:
    """
    Sum of up to `terms` monomials of total degree `degree` with integer
    coefficients in [-coefficient_range, coefficient_range]. May be zero.
    """
    result = Polynomial.zero(n)
    for _ in range(terms):
        c = rng.randint(-coefficient_range, coefficient_range)
        result = result + Polynomial.monomial(random_exponent_vector(rng, n, degree), c)
    return result


def random_subalgebra(
    rng: random.Random,
    n: Optional[int] = None,
    generators: Optional[int] = None,
    max_degree: int = 3,
    order: Optional[MonomialOrder] = None,
) -> SubalgebraPresentation:
    """
    2 to 4 nonzero homogeneous generators in 2 or 3 variables, degrees up to
    `max_degree`, coefficients in [-3, 3]. Zero draws are discarded.
    """
    n = rng.randint(2, 3) if n is None else n
    count = rng.randint(2, 4) if generators is None else generators
    chosen: Tuple[Polynomial, ...] = ()
    while len(chosen) < count:
        f = random_homogeneous_polynomial(rng, n, rng.randint(1, max_degree))
        if not f.is_zero():
            chosen += (f,)
    order = random_order(rng, n) if order is None else order
    return SubalgebraPresentation(n, chosen, order, WeightVector.ones(n))
