"""
Degree-truncated initial algebras of homogeneous subalgebras
S = k[f_1, ..., f_m] of a polynomial ring.

For a homogeneous component S_n the leading monomials of a reduced row
echelon basis, with columns sorted by the monomial order, are exactly the
leading monomials of the nonzero elements of S_n. The initial algebra is
therefore computed degree by degree, without relying on a completion loop
that need not terminate. Subduction is provided as an independent check.
"""
import logging
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, FrozenSet, Iterator, List, Optional, Sequence, Tuple

from .config import Limits, resolve
from .errors import (
    CapacityError,
    DimensionMismatch,
    PreconditionError,
    SubductionLimitError,
)
from .linalg import RationalMatrix, row_echelon
from .monoid import MonoidPresentation, hilbert_function
from .monomials import (
    ExponentVector,
    MonomialOrder,
    WeightVector,
    default_variables,
    weighted_degree,
)
from .polynomial import Polynomial, leading_monomial, leading_term, poly_mul
from .series import GradedSeries

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SubalgebraPresentation:
    dimension: int
    generators: Tuple[Polynomial, ...]
    order: MonomialOrder
    weights: Optional[WeightVector] = None
    variables: Optional[Tuple[str, ...]] = None

    def __post_init__(self):
        weights = self.weights if self.weights is not None else WeightVector.ones(self.dimension)
        variables = tuple(self.variables) if self.variables is not None else default_variables(self.dimension)
        if weights.dimension != self.dimension or self.order.dimension != self.dimension:
            raise DimensionMismatch(
                f"weights ({weights.dimension}) and order ({self.order.dimension}) "
                f"must both have {self.dimension} variables"
            )
        if len(variables) != self.dimension:
            raise DimensionMismatch(f"{len(variables)} variable names for {self.dimension} variables")
        generators = tuple(self.generators)
        for f in generators:
            if f.nvars != self.dimension:
                raise DimensionMismatch(f"generator {f!r} is not on {self.dimension} variables")
            if f.is_zero():
                raise PreconditionError("generators must be nonzero")
            if not f.is_homogeneous(weights):
                raise PreconditionError(f"generator {f!r} is not homogeneous")
            if f.degree(weights) < 1:
                raise PreconditionError(f"generator {f!r} has degree 0")
        object.__setattr__(self, "generators", generators)
        object.__setattr__(self, "weights", weights)
        object.__setattr__(self, "variables", variables)

    @property
    def degrees(self) -> Tuple[int, ...]:
        return tuple(f.degree(self.weights) for f in self.generators)

    def with_order(self, order: MonomialOrder) -> "SubalgebraPresentation":
        return SubalgebraPresentation(self.dimension, self.generators, order, self.weights, self.variables)


@dataclass(frozen=True)
class DegreeComponent:
    degree: int
    basis: Tuple[Polynomial, ...]
    leading_monomials: FrozenSet[ExponentVector]

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def basis_element(self, monomial: ExponentVector, order: MonomialOrder) -> Polynomial:
        return next(f for f in self.basis if leading_monomial(f, order) == monomial)


def _exponent_tuples(degrees: Sequence[int], n: int) -> Iterator[Tuple[int, ...]]:
    """All e with sum(e_i * degrees_i) == n."""
    if not degrees:
        if n == 0:
            yield ()
        return
    d, rest = degrees[0], degrees[1:]
    for e in range(n // d, -1, -1):
        for tail in _exponent_tuples(rest, n - e * d):
            yield (e, *tail)


class _Powers:
    def __init__(self, generators: Sequence[Polynomial], nvars: int):
        self._generators = generators
        self._cache: Dict[Tuple[int, int], Polynomial] = {}
        self._products: Dict[Tuple[int, ...], Polynomial] = {}
        self._one = Polynomial.one(nvars)

    def power(self, i: int, e: int) -> Polynomial:
        if e == 0:
            return self._one
        key = (i, e)
        if key not in self._cache:
            self._cache[key] = poly_mul(self.power(i, e - 1), self._generators[i])
        return self._cache[key]

    def product(self, exponents: Tuple[int, ...]) -> Polynomial:
        if exponents not in self._products:
            result = self._one
            for i, e in enumerate(exponents):
                if e:
                    result = poly_mul(result, self.power(i, e))
            self._products[exponents] = result
        return self._products[exponents]


def degree_component_basis(
    S: SubalgebraPresentation, n: int, limits: Optional[Limits] = None, powers: Optional[_Powers] = None
) -> DegreeComponent:
    """
    Echelon basis of S_n and its leading monomials, the degree-n part of in_<(S).
    """
    if n < 0:
        raise PreconditionError(f"degree must be >= 0, got {n}")
    if n == 0:
        one = Polynomial.one(S.dimension)
        return DegreeComponent(0, (one,), frozenset({ExponentVector.zero(S.dimension)}))
    limits = resolve(limits)
    powers = powers or _Powers(S.generators, S.dimension)
    exponent_tuples = []
    for exponents in _exponent_tuples(S.degrees, n):
        exponent_tuples.append(exponents)
        if len(exponent_tuples) > limits.max_products:
            raise CapacityError(f"generator products of degree {n}", limits.max_products, len(exponent_tuples))
    products = [powers.product(e) for e in exponent_tuples]
    columns = sorted({a for p in products for a in p.terms}, key=S.order.key, reverse=True)
    if not columns:
        return DegreeComponent(n, (), frozenset())
    matrix = RationalMatrix.from_rows(([p.coefficient(a) for a in columns] for p in products), ncols=len(columns))
    echelon = row_echelon(matrix)
    basis = tuple(
        Polynomial(S.dimension, {a: c for a, c in zip(columns, row) if c})
        for row in echelon.nonzero_rows()
    )
    leading = frozenset(columns[c] for c in echelon.pivot_columns)
    logger.debug("degree %d: %d products, dimension %d", n, len(products), len(basis))
    return DegreeComponent(n, basis, leading)


def factor_monomial(
    target: Sequence[int], factors: Sequence[Sequence[int]], max_nodes: int
) -> Optional[Tuple[int, ...]]:
    """
    Exponents e >= 0 with sum(e_i * factors_i) == target, or None.

    Among several solutions the lexicographically greatest e is returned.
    Zero factors never take part. Exceeding `max_nodes` raises CapacityError.
    """
    target = tuple(target)
    usable = [i for i, f in enumerate(factors) if any(f)]
    dead = set()
    visited = 0

    def search(k: int, rest: Tuple[int, ...]) -> Optional[Tuple[int, ...]]:
        nonlocal visited
        if not any(rest):
            return (0,) * (len(usable) - k)
        if k == len(usable) or (k, rest) in dead:
            return None
        visited += 1
        if visited > max_nodes:
            raise CapacityError("factorization search nodes", max_nodes, visited)
        f = factors[usable[k]]
        most = min(r // x for r, x in zip(rest, f) if x)
        for e in range(most, -1, -1):
            found = search(k + 1, tuple(r - e * x for r, x in zip(rest, f)))
            if found is not None:
                return (e, *found)
        dead.add((k, rest))
        return None

    found = search(0, target)
    if found is None:
        return None
    exponents = [0] * len(factors)
    for i, e in zip(usable, found):
        exponents[i] = e
    return tuple(exponents)


@dataclass(frozen=True)
class Subduction:
    remainder: Polynomial
    steps: int


def subduct(
    f: Polynomial,
    F: Sequence[Polynomial],
    ord: MonomialOrder,
    max_steps: Optional[int] = None,
    limits: Optional[Limits] = None,
) -> Subduction:
    """
    Reduce `f` by products of elements of F while its leading monomial is a
    product of leading monomials of F.
    """
    limits = resolve(limits)
    max_steps = limits.max_subduction_steps if max_steps is None else max_steps
    if any(g.is_zero() for g in F):
        raise PreconditionError("subduction needs nonzero polynomials")
    heads = [leading_term(g, ord) for g in F]
    monomials = [a for a, _ in heads]
    powers = _Powers(list(F), f.nvars)
    remainder = f
    steps = 0
    while not remainder.is_zero():
        a, c = leading_term(remainder, ord)
        exponents = factor_monomial(a, monomials, limits.max_search_nodes)
        if exponents is None:
            break
        if steps == max_steps:
            raise SubductionLimitError(remainder, steps)
        product = powers.product(exponents)
        scale = Fraction(1)
        for (_, coefficient), e in zip(heads, exponents):
            scale *= coefficient ** e
        remainder = remainder - product.scale(c / scale)
        steps += 1
    return Subduction(remainder, steps)


@dataclass(frozen=True)
class NewGenerator:
    monomial: ExponentVector
    degree: int
    witness: Polynomial


@dataclass(frozen=True)
class InitialAlgebraTruncation:
    degree_bound: int
    components: Tuple[FrozenSet[ExponentVector], ...]
    new_generators: Tuple[NewGenerator, ...]
    stabilized_at: Optional[int]
    weights: WeightVector = field(repr=False, default=None)
    variables: Tuple[str, ...] = field(repr=False, default=())

    @property
    def dimensions(self) -> Tuple[int, ...]:
        return tuple(len(c) for c in self.components)

    @property
    def stabilized(self) -> bool:
        return self.stabilized_at is not None

    def series(self) -> GradedSeries:
        return GradedSeries(self.dimensions)

    def generator_monomials(self) -> Tuple[ExponentVector, ...]:
        return tuple(g.monomial for g in self.new_generators)

    def monoid(self) -> MonoidPresentation:
        return MonoidPresentation(
            len(self.weights), self.generator_monomials(), self.weights, self.variables or None
        )


def initial_algebra_truncation(
    S: SubalgebraPresentation, D: int, limits: Optional[Limits] = None
) -> InitialAlgebraTruncation:
    if D < max(S.degrees, default=0):
        raise PreconditionError(f"degree bound {D} is below the largest generator degree")
    limits = resolve(limits)
    powers = _Powers(S.generators, S.dimension)
    components = [frozenset({ExponentVector.zero(S.dimension)})]
    discovered: List[NewGenerator] = []
    for n in range(1, D + 1):
        component = degree_component_basis(S, n, limits=limits, powers=powers)
        components.append(component.leading_monomials)
        known = [g.monomial for g in discovered]
        for monomial in sorted(component.leading_monomials, key=S.order.key, reverse=True):
            if factor_monomial(monomial, known, limits.max_search_nodes) is None:
                witness = component.basis_element(monomial, S.order)
                discovered.append(NewGenerator(monomial, n, witness))
                logger.debug("new generator in degree %d: %r", n, tuple(monomial))
    last = max((g.degree for g in discovered), default=0)
    stabilized_at = last if last < D else None
    return InitialAlgebraTruncation(
        D, tuple(components), tuple(discovered), stabilized_at, S.weights, S.variables
    )


@dataclass(frozen=True)
class PoincareCheck:
    subalgebra_series: GradedSeries
    initial_series: GradedSeries
    first_discrepancy: Optional[int]

    @property
    def equal(self) -> bool:
        return self.first_discrepancy is None


def verify_poincare_equality(
    S: SubalgebraPresentation, D: int, limits: Optional[Limits] = None
) -> PoincareCheck:
    """
    dim_k S_n against the Hilbert function of the monoid generated by the
    discovered leading monomials, for n <= D.
    """
    if D < 1:
        raise PreconditionError(f"degree bound must be >= 1, got {D}")
    limits = resolve(limits)
    powers = _Powers(S.generators, S.dimension)
    ranks = tuple(degree_component_basis(S, n, limits=limits, powers=powers).dimension for n in range(D + 1))
    truncation = initial_algebra_truncation(S, max(D, max(S.degrees, default=0)), limits=limits)
    initial = hilbert_function(truncation.monoid(), D, limits=limits)
    discrepancy = next((n for n in range(D + 1) if ranks[n] != initial[n]), None)
    if discrepancy is not None:
        logger.error("Poincaré series differ in degree %d: %d != %d", discrepancy, ranks[discrepancy], initial[discrepancy])
    return PoincareCheck(GradedSeries(ranks), initial, discrepancy)


def non_noetherian_subalgebra() -> SubalgebraPresentation:
    """k[x + y, xy, xy^2] in k[x, y] under lex with x > y."""
    x, y = (Polynomial.variable(2, i) for i in range(2))
    return SubalgebraPresentation(2, (x + y, x * y, x * y * y), MonomialOrder.lex(2))


def regular_non_noetherian_subalgebra() -> SubalgebraPresentation:
    """
    k[x + y + z, xy, xy^2] in k[x, y, z], ordered first by the exponent sum of
    x and y, then lexicographically.
    """
    x, y, z = (Polynomial.variable(3, i) for i in range(3))
    order = MonomialOrder.from_rows(((1, 1, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)), name="xy-weight")
    return SubalgebraPresentation(3, (x + y + z, x * y, x * y * y), order)


@dataclass(frozen=True)
class PurePowerCheck:
    degree_bound: int
    truncation: InitialAlgebraTruncation
    pure_powers: Tuple[ExponentVector, ...]
    missing: Tuple[int, ...]
    degree_one: FrozenSet[ExponentVector]

    @property
    def passed(self) -> bool:
        return not self.pure_powers and not self.missing


def pure_power_check(D: int, limits: Optional[Limits] = None) -> PurePowerCheck:
    """
    For k[x + y + z, xy, xy^2]: no leading monomial is a pure power of y, and
    xy^m is a new generator of the initial algebra for 2 <= m <= D - 1.
    """
    if D < 3:
        raise PreconditionError(f"degree bound must be >= 3, got {D}")
    truncation = initial_algebra_truncation(regular_non_noetherian_subalgebra(), D, limits=limits)
    pure_powers = tuple(
        a for component in truncation.components[1:] for a in component if a[0] == 0 and a[2] == 0
    )
    new = set(truncation.generator_monomials())
    missing = tuple(m for m in range(2, D) if ExponentVector((1, m, 0)) not in new)
    return PurePowerCheck(D, truncation, pure_powers, missing, truncation.components[1])


def _orders_with_x_first(count: int, seed: int) -> List[MonomialOrder]:
    """lex, grlex and `count` weight orders (wx, wy), wx > wy, no two proportional."""
    weights = sorted(
        {(wx // math.gcd(wx, wy), wy // math.gcd(wx, wy)) for wy in range(1, 6) for wx in range(wy + 1, wy + 6)}
    )
    if count > len(weights):
        raise PreconditionError(f"at most {len(weights)} distinct weight orders, asked for {count}")
    orders = [MonomialOrder.lex(2), MonomialOrder.grlex(2)]
    for wx, wy in random.Random(seed).sample(weights, count):
        orders.append(MonomialOrder.from_rows(((wx, wy), (1, 0), (0, 1)), name=f"weight({wx},{wy})"))
    return orders



def order_family_check(
    D: int, random_orders: int = 3, seed: int = 0, limits: Optional[Limits] = None
) -> Dict[str, InitialAlgebraTruncation]:
    """
    Initial algebras of k[x + y, xy, xy^2] under lex, grlex and seeded random
    weight orders with x > y, keyed by order name.
    """
    S = non_noetherian_subalgebra()
    return {
        order.name: initial_algebra_truncation(S.with_order(order), D, limits=limits)
        for order in _orders_with_x_first(random_orders, seed)
    }
