"""
Truncated Poincaré series, rational reconstruction and Hilbert-Serre
classification.

A series is stored as its exact coefficients h_0..h_N. Multiplying by a
denominator prod(1 - t^a) and checking that the top coefficients vanish
recovers the rational form when there is one:

>>> h = GradedSeries((1,) + tuple(range(1, 31)))
>>> fit = fit_rational(h, (1, 1))
>>> fit.numerator
(1, -1, 1)
>>> pole_order_at_one(fit)
2

A series without a finite pole at t = 1 is reported as such only with a
certificate:

>>> classify_hilbert_serre(exponential_series(40)).verdict
<Verdict.NOT_HILBERT_SERRE: 'not-hilbert-serre'>
"""
import logging
import math
from dataclasses import dataclass
from enum import Enum
from itertools import accumulate
from typing import Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np
import sympy
from boltons.iterutils import first, unique

from .config import Defaults
from .errors import NotRegularError, PreconditionError, ZeroPolynomialError

logger = logging.getLogger(__name__)

T = sympy.Symbol("t")


@dataclass(frozen=True)
class GradedSeries:
    """
    Coefficients h_0..h_N of a truncated Poincaré series.
    """

    coefficients: Tuple[int, ...]

    def __post_init__(self):
        coefficients = tuple(self.coefficients)
        if not coefficients:
            raise PreconditionError("a series needs at least the coefficient h_0")
        for n, h in enumerate(coefficients):
            if not isinstance(h, int) or h < 0:
                raise PreconditionError(f"coefficient h_{n} = {h!r} is not a natural number")
        object.__setattr__(self, "coefficients", coefficients)

    @property
    def truncation(self) -> int:
        return len(self.coefficients) - 1

    @property
    def is_connected(self) -> bool:
        """Whether h_0 = 1, as for a graded algebra with R_0 = k."""
        return self.coefficients[0] == 1

    def is_zero(self) -> bool:
        return not any(self.coefficients)

    def head(self, count: int = 10) -> Tuple[int, ...]:
        return self.coefficients[:count]

    def truncate(self, N: int) -> "GradedSeries":
        return GradedSeries(self.coefficients[: N + 1])

    def cumulative(self) -> Tuple[int, ...]:
        return tuple(accumulate(self.coefficients))

    def __getitem__(self, n):
        return self.coefficients[n]

    def __len__(self):
        return len(self.coefficients)

    def __iter__(self):
        return iter(self.coefficients)


@dataclass(frozen=True)
class RationalSeries:
    """
    numerator(t) / prod(1 - t^a for a in denominator), numerator coefficients
    listed from the constant term up.
    """

    numerator: Tuple[int, ...]
    denominator: Tuple[int, ...] = ()

    def __post_init__(self):
        numerator = list(self.numerator)
        while numerator and numerator[-1] == 0:
            numerator.pop()
        denominator = tuple(sorted(self.denominator))
        if any(a < 1 for a in denominator):
            raise PreconditionError(f"denominator exponents must be >= 1, got {denominator!r}")
        object.__setattr__(self, "numerator", tuple(numerator))
        object.__setattr__(self, "denominator", denominator)

    @property
    def pole_order(self) -> int:
        return pole_order_at_one(self)

    def expand(self, N: int) -> Tuple[int, ...]:
        return expand(self, N)

    def as_expr(self) -> sympy.Expr:
        numerator = sum(c * T ** i for i, c in enumerate(self.numerator))
        denominator = sympy.Mul(*[(1 - T ** a) for a in self.denominator])
        return numerator / denominator

    def numerator_text(self) -> str:
        return sympy.sstr(sum(c * T ** i for i, c in enumerate(self.numerator)))

    def denominator_text(self) -> str:
        if not self.denominator:
            return "1"
        return "*".join(
            f"(1 - t**{a})" + (f"**{k}" if k > 1 else "")
            if a > 1
            else "(1 - t)" + (f"**{k}" if k > 1 else "")
            for a, k in _multiplicities(self.denominator)
        )

    def __str__(self):
        return f"({self.numerator_text()})/({self.denominator_text()})"


def _multiplicities(values: Sequence[int]) -> List[Tuple[int, int]]:
    return [(a, values.count(a)) for a in unique(values)]


@dataclass(frozen=True)
class NoFit:
    """
    A denominator that does not make the truncated numerator vanish in its
    guard window. `degree` is the first degree of the window where it does not.
    """

    denominator: Tuple[int, ...]
    degree: int
    coefficient: int

    def __bool__(self):
        return False


def _multiply_by_denominator(coefficients: Sequence[int], denominator: Iterable[int]) -> List[int]:
    result = list(coefficients)
    for a in denominator:
        # descending so each entry still sees the undivided lower coefficient
        for n in range(len(result) - 1, a - 1, -1):
            result[n] -= result[n - a]
    return result


def _divide_by_denominator(coefficients: Sequence[int], denominator: Iterable[int]) -> List[int]:
    result = list(coefficients)
    for a in denominator:
        for n in range(a, len(result)):
            result[n] += result[n - a]
    return result


def default_guard(denominator: Sequence[int]) -> int:
    return max(denominator, default=0) + Defaults.guard_extra


def fit_rational(
    h: GradedSeries, denom: Sequence[int], guard: Optional[int] = None
) -> Union[RationalSeries, NoFit]:
    denom = tuple(denom)
    if any(a < 1 for a in denom):
        raise PreconditionError(f"denominator exponents must be >= 1, got {denom!r}")
    guard = default_guard(denom) if guard is None else guard
    if guard < max(denom, default=0) or guard < 1:
        raise PreconditionError(f"guard {guard} is smaller than the largest denominator exponent")
    N = h.truncation
    if N < 2 * guard:
        raise PreconditionError(f"truncation {N} is below twice the guard {guard}")
    product = _multiply_by_denominator(h.coefficients, denom)
    window = range(N - guard + 1, N + 1)
    offending = first(window, key=lambda n: product[n] != 0)
    if offending is not None:
        return NoFit(denom, offending, product[offending])
    return RationalSeries(tuple(product[: N - guard + 1]), denom)


def expand(rs: RationalSeries, N: int) -> Tuple[int, ...]:
    coefficients = list(rs.numerator[: N + 1]) + [0] * max(0, N + 1 - len(rs.numerator))
    return tuple(_divide_by_denominator(coefficients, rs.denominator))


def _divide_by_one_minus_t(polynomial: List[int]) -> List[int]:
    # p(t) = (1 - t) q(t) with p(1) = 0 gives q_i = p_0 + ... + p_i
    return list(accumulate(polynomial[:-1]))


def pole_order_at_one(rs: RationalSeries) -> int:
    numerator = list(rs.numerator)
    if not numerator:
        raise ZeroPolynomialError("a zero numerator has no pole order")
    multiplicity = 0
    while sum(numerator) == 0:
        numerator = _divide_by_one_minus_t(numerator)
        multiplicity += 1
    return max(0, len(rs.denominator) - multiplicity)


def regular_element_factor(P: GradedSeries, h: int) -> GradedSeries:
    """
    Series of M/xM for a non-zero-divisor x of degree `h`: (1 - t^h) P(t).
    """
    if h < 1:
        raise PreconditionError("a regular element of degree 0 would be a unit or a zero-divisor")
    product = _multiply_by_denominator(P.coefficients, (h,))
    offending = first(range(len(product)), key=lambda n: product[n] < 0)
    if offending is not None:
        raise NotRegularError(offending, product[offending])
    return GradedSeries(tuple(product))


def lift_regular_element(Q: GradedSeries, h: int) -> GradedSeries:
    """Inverse of `regular_element_factor`: Q(t) / (1 - t^h), truncated."""
    if h < 1:
        raise PreconditionError("degree of a regular element must be positive")
    return GradedSeries(tuple(_divide_by_denominator(Q.coefficients, (h,))))


def _records(coefficients: Sequence[int]) -> List[Tuple[int, int]]:
    """(n, h_n) for every h_n larger than all earlier coefficients."""
    records, best = [], 0
    for n, c in enumerate(coefficients):
        if c > best:
            records.append((n, c))
            best = c
    return records


def _root_test(points: Sequence[Tuple[int, int]]) -> float:
    return 1 / max(math.exp(math.log(c) / n) for n, c in points)


def radius_estimate(h: GradedSeries, method: str = "asymptotic") -> float:
    """
    Radius of convergence estimated from the last half of the coefficients.

    "root" is the plain root test 1 / max h_n^(1/n). "asymptotic" fits
    log h_n = a*n + b*sqrt(n) + c*log(n) + d through the running-maximum
    records of the tail and returns exp(-a), which also resolves
    sub-exponential growth such as the partition numbers. The estimate
    follows the upper envelope of the coefficients, so sparse spikes set the
    rate. With fewer than four records it falls back to the root test.
    Zero coefficients are skipped; an all-zero tail has infinite radius.
    """
    N = h.truncation
    if N < 10:
        raise PreconditionError(f"radius estimation needs N >= 10, got {N}")
    if method not in ("root", "asymptotic"):
        raise PreconditionError(f"unknown radius method {method!r}")
    tail = [(n, c) for n, c in enumerate(h.coefficients) if n >= N // 2 and n > 0 and c > 0]
    if not tail:
        return math.inf
    if method == "root":
        return _root_test(tail)
    records = [(n, c) for n, c in _records(h.coefficients) if n >= N // 2 and n > 0]
    if len(records) < 4:
        return _root_test(tail)
    n = np.array([n for n, _ in records], dtype=float)
    logs = np.array([math.log(c) for _, c in records])
    basis = np.column_stack([n, np.sqrt(n), np.log(n), np.ones_like(n)])
    (rate, *_), *_ = np.linalg.lstsq(basis, logs, rcond=None)
    return float(math.exp(-rate))


class Verdict(Enum):
    HILBERT_SERRE = "hilbert-serre"
    NOT_HILBERT_SERRE = "not-hilbert-serre"
    UNKNOWN_AT_TRUNCATION = "unknown-at-truncation"


class Obstruction(Enum):
    RADIUS = "radius"
    POLE_UNBOUNDED = "pole-unbounded"


@dataclass(frozen=True)
class HSClassification:
    verdict: Verdict
    evidence: str
    pole_order: Optional[int] = None
    fit: Optional[RationalSeries] = None
    obstruction: Optional[Obstruction] = None
    radius: Optional[float] = None
    d_max: Optional[int] = None

    def as_record(self) -> dict:
        return {
            "verdict": self.verdict.value,
            "pole_order": self.pole_order,
            "numerator": self.fit.numerator_text() if self.fit else None,
            "denominator": self.fit.denominator_text() if self.fit else None,
            "radius_estimate": None if self.radius is None else round(self.radius, 6),
            "evidence": self.evidence,
        }


def default_denominators(
    N: int,
    degrees: Sequence[int] = (),
    max_power: int = Defaults.max_pure_power,
    max_period: int = 12,
) -> List[Tuple[int, ...]]:
    """
    Candidate denominators for a series truncated at N: powers (1 - t^L)^k for
    L = 1, each distinct generator degree and their lcm (when at most
    max_period), k <= max_power, plus the full
    product over the generator degrees when it is small enough to be tested.
    Only candidates whose guard window fits into the truncation are kept,
    sorted by the degree of the denominator.
    """
    periods = sorted({1, *degrees})
    lcm = 1
    for d in set(degrees):
        lcm = lcm * d // math.gcd(lcm, d)
    if lcm not in periods and lcm <= max_period:
        periods.append(lcm)
    candidates = {(L,) * k for L in periods for k in range(max_power + 1)}
    if degrees and len(degrees) <= 8:
        candidates.add(tuple(sorted(degrees)))
    usable = [c for c in candidates if N >= 2 * default_guard(c)]
    return sorted(usable, key=lambda c: (sum(c), len(c), c))


def periodic_denominators(N: int, max_power: int) -> List[Tuple[int, ...]]:
    """
    (1 - t^L)^k for 2 <= L <= N / 4 and k <= max_power, keeping those with
    L * k <= N / 2 and a guard window inside the truncation.
    """
    candidates = [
        (L,) * k
        for L in range(2, N // 4 + 1)
        for k in range(1, max_power + 1)
        if L * k <= N // 2 and N >= 2 * default_guard((L,))
    ]
    return sorted(candidates, key=lambda c: (sum(c), len(c), c))


def fit_any(
    h: GradedSeries, candidates: Iterable[Sequence[int]]
) -> Optional[RationalSeries]:
    for denominator in candidates:
        if h.truncation < 2 * default_guard(denominator):
            continue
        fit = fit_rational(h, denominator)
        if fit:
            logger.debug("series fits over %s: %s", denominator, fit)
            return fit
    return None


def _outgrows(cumulative: Sequence[int], d: int, margin: float) -> bool:
    N = len(cumulative) - 1
    start = N - N // 4
    if cumulative[start] <= 0:
        return False
    growth = (math.log(cumulative[N]) - d * math.log(N)) - (
        math.log(cumulative[start]) - d * math.log(start)
    )
    return growth > math.log1p(margin)


def classify_hilbert_serre(
    h: GradedSeries,
    denom_candidates: Optional[Iterable[Sequence[int]]] = None,
    d_max: int = Defaults.d_max,
    radius_margin: float = Defaults.radius_margin,
    growth_margin: float = Defaults.growth_margin,
) -> HSClassification:
    N = h.truncation
    if h.is_zero() or all(c == 0 for c in h.coefficients[1:]) and N < 2 * default_guard(()):
        return HSClassification(
            Verdict.HILBERT_SERRE,
            "polynomial series: no pole at t = 1",
            pole_order=0,
            fit=RationalSeries(h.coefficients, ()) if not h.is_zero() else None,
        )
    candidates = default_denominators(N) if denom_candidates is None else list(denom_candidates)
    fit = fit_any(h, candidates)
    if fit is None and denom_candidates is None:
        fit = fit_any(h, periodic_denominators(N, d_max + 1))
    if fit is not None:
        d = pole_order_at_one(fit)
        return HSClassification(
            Verdict.HILBERT_SERRE,
            f"exact rational fit {fit} with a vanishing guard window of "
            f"{default_guard(fit.denominator)} coefficients",
            pole_order=d,
            fit=fit,
        )
    radius = radius_estimate(h) if N >= 10 else None
    if radius is not None and radius < 1 - radius_margin:
        return HSClassification(
            Verdict.NOT_HILBERT_SERRE,
            f"radius of convergence estimated at {radius:.4f} < 1",
            obstruction=Obstruction.RADIUS,
            radius=radius,
        )
    cumulative = h.cumulative()
    if N >= 8 and all(_outgrows(cumulative, d, growth_margin) for d in range(d_max + 1)):
        return HSClassification(
            Verdict.NOT_HILBERT_SERRE,
            f"cumulative coefficients outgrow N^d over the last quarter for every d <= {d_max}",
            obstruction=Obstruction.POLE_UNBOUNDED,
            radius=radius,
            d_max=d_max,
        )
    return HSClassification(
        Verdict.UNKNOWN_AT_TRUNCATION,
        f"no candidate denominator fits at N = {N} and no obstruction was certified",
        radius=radius,
    )


def partition_series(N: int) -> GradedSeries:
    """
    p(0..N) by Euler's pentagonal number recurrence
    p(n) = sum_k (-1)^(k+1) (p(n - k(3k-1)/2) + p(n - k(3k+1)/2)).
    """
    p = [1] + [0] * N
    for n in range(1, N + 1):
        total = 0
        k = 1
        while True:
            first_pentagonal = k * (3 * k - 1) // 2
            if first_pentagonal > n:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[n - first_pentagonal]
            second_pentagonal = k * (3 * k + 1) // 2
            if second_pentagonal <= n:
                total += sign * p[n - second_pentagonal]
            k += 1
        p[n] = total
    return GradedSeries(tuple(p))


def power_sum_series(d: int, N: int) -> GradedSeries:
    if d < 1:
        raise PreconditionError(f"exponent d must be >= 1, got {d}")
    return GradedSeries(tuple(n ** d + 1 for n in range(N + 1)))


def exponential_series(N: int, base: int = 2) -> GradedSeries:
    if base < 2:
        raise PreconditionError(f"base must be >= 2, got {base}")
    return GradedSeries(tuple(base ** n + 1 for n in range(N + 1)))


def polynomial_ring_series(m: int, N: int) -> GradedSeries:
    """Series of k[x_1..x_m] with standard grading: C(n + m - 1, m - 1)."""
    return GradedSeries(tuple(math.comb(n + m - 1, m - 1) if m else int(n == 0) for n in range(N + 1)))
