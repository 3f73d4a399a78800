"""
Monomial algebras k[M] for finitely presented submonoids M of N^n.

All four dimensions of k[M] (Krull dimension, transcendence degree, GK
dimension, pole order of the Poincaré series) coincide with the rank of the
group generated by M. `dimension_report` computes each of them independently
from the presentation so that they can be checked against each other.
"""
import logging
import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Set, Tuple

import numpy as np
from boltons.iterutils import pairwise, unique

from .config import Defaults, Limits, resolve
from .errors import CapacityError, DimensionMismatch, PreconditionError
from .linalg import IntegerLattice, lattice_rank
from .monomials import ExponentVector, WeightVector, default_variables, weighted_degree
from .series import (
    GradedSeries,
    RationalSeries,
    default_denominators,
    expand,
    fit_any,
    pole_order_at_one,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MonoidPresentation:
    dimension: int
    generators: Tuple[ExponentVector, ...]
    weights: Optional[WeightVector] = None
    variables: Optional[Tuple[str, ...]] = None

    def __post_init__(self):
        weights = self.weights if self.weights is not None else WeightVector.ones(self.dimension)
        variables = tuple(self.variables) if self.variables is not None else default_variables(self.dimension)
        if weights.dimension != self.dimension:
            raise DimensionMismatch(f"{weights.dimension} weights for {self.dimension} variables")
        if len(variables) != self.dimension:
            raise DimensionMismatch(f"{len(variables)} variable names for {self.dimension} variables")
        generators = tuple(ExponentVector(g) for g in self.generators)
        for g in generators:
            if len(g) != self.dimension:
                raise DimensionMismatch(f"generator {tuple(g)!r} does not lie in N^{self.dimension}")
            if g.is_zero():
                raise PreconditionError("generators must be nonzero")
        object.__setattr__(self, "generators", generators)
        object.__setattr__(self, "weights", weights)
        object.__setattr__(self, "variables", variables)

    @classmethod
    def of(cls, generators: Sequence[Sequence[int]], weights: Optional[Sequence[int]] = None, **kwargs):
        generators = [tuple(g) for g in generators]
        if "dimension" in kwargs:
            dimension = kwargs.pop("dimension")
        elif generators:
            dimension = len(generators[0])
        else:
            raise PreconditionError("dimension is required for a monoid without generators")
        return cls(
            dimension,
            tuple(generators),
            WeightVector(tuple(weights)) if weights is not None else None,
            **kwargs,
        )

    def degree(self, g: Sequence[int]) -> int:
        return weighted_degree(g, self.weights)

    @property
    def degrees(self) -> Tuple[int, ...]:
        return tuple(self.degree(g) for g in self.generators)


def hilbert_function(M: MonoidPresentation, N: int, limits: Optional[Limits] = None) -> GradedSeries:
    """
    h_n = number of distinct elements of M of weighted degree n, n <= N.

    Elements are built degree by degree: every element of degree n > 0 is an
    element of degree n - deg(g) plus a generator g, so only the strata of
    degree <= N are ever stored.
    """
    if N < 0:
        raise PreconditionError(f"truncation must be >= 0, got {N}")
    limits = resolve(limits)
    by_degree: Dict[int, List[Tuple[int, ...]]] = {}
    for g in unique(M.generators):
        d = M.degree(g)
        if d <= N:
            by_degree.setdefault(d, []).append(tuple(g))
    strata: List[Set[Tuple[int, ...]]] = [{(0,) * M.dimension}]
    stored = 1
    for n in range(1, N + 1):
        stratum: Set[Tuple[int, ...]] = set()
        for d, generators in by_degree.items():
            if d > n:
                continue
            for element in strata[n - d]:
                for g in generators:
                    stratum.add(tuple(a + b for a, b in zip(element, g)))
        stored += len(stratum)
        if stored > limits.max_elements:
            raise CapacityError("monoid elements", limits.max_elements, stored)
        strata.append(stratum)
    logger.debug("enumerated %d monoid elements up to degree %d", stored, N)
    return GradedSeries(tuple(len(s) for s in strata))


def monoid_rank(M: MonoidPresentation) -> int:
    return lattice_rank(IntegerLattice(tuple(M.generators), M.dimension))


@dataclass(frozen=True)
class GrowthTable:
    """
    A(N) = h_0 + ... + h_N.
    """

    counts: Tuple[int, ...]

    def __post_init__(self):
        counts = tuple(self.counts)
        if any(b < a for a, b in pairwise(counts)):
            raise PreconditionError("a growth table must be non-decreasing")
        object.__setattr__(self, "counts", counts)

    def __getitem__(self, N):
        return self.counts[N]

    def __len__(self):
        return len(self.counts)


def growth_table(h: GradedSeries) -> GrowthTable:
    return GrowthTable(h.cumulative())


def default_window(N: int) -> Tuple[int, int]:
    return max(2, N // 2), N


def gk_slope(A: GrowthTable, window: Optional[Tuple[int, int]] = None) -> float:
    """
    Least-squares slope of log A(N) against log N over `window` (inclusive).
    """
    lo, hi = default_window(len(A) - 1) if window is None else window
    if lo < 2:
        raise PreconditionError(f"window must start at N >= 2, got {lo}")
    if hi > len(A) - 1:
        raise PreconditionError(f"window end {hi} is past the table end {len(A) - 1}")
    if hi - lo + 1 < 5:
        raise PreconditionError(f"window [{lo}, {hi}] has fewer than 5 points")
    xs = np.log(np.arange(lo, hi + 1, dtype=float))
    ys = np.array([math.log(A[N]) for N in range(lo, hi + 1)])
    slope, _ = np.polyfit(xs, ys, 1)
    return float(slope)


def lattice_point_bound(rank: int, N: int, K: int = 1) -> int:
    """
    Upper bound (2KN + 1)^rank for A(N). Coordinates of an element of weighted
    degree <= N are at most N (weights are >= 1), and a rank-m lattice injects
    into m of its coordinates.
    """
    return (2 * K * N + 1) ** rank


@dataclass(frozen=True)
class DimensionReport:
    krull_dim: int
    trdeg: int
    gk_estimate: float
    pole_order: Optional[int]
    all_equal: bool
    fit: Optional[RationalSeries] = None
    series: Optional[GradedSeries] = field(default=None, repr=False)

    def as_record(self) -> dict:
        return {
            "krull_dim": self.krull_dim,
            "trdeg": self.trdeg,
            "gk_estimate": round(self.gk_estimate, 4),
            "pole_order": "unknown" if self.pole_order is None else self.pole_order,
            "fit": str(self.fit) if self.fit else "none",
            "all_equal": self.all_equal,
        }


def dimension_report(
    M: MonoidPresentation,
    N: int = Defaults.fit_truncation,
    growth_N: Optional[int] = None,
    denominators: Optional[Sequence[Sequence[int]]] = None,
    tolerance: float = Defaults.tolerance,
    limits: Optional[Limits] = None,
) -> DimensionReport:
    """
    The four dimensions of k[M]. Krull dimension and transcendence degree are
    the lattice rank; the pole order comes from an exact rational fit of the
    series truncated at N (unknown when no candidate fits); the GK estimate
    is the growth slope at `growth_N` (N by default).

    Past N the growth table is read off the fitted series when there is one,
    so a slope at N = 200 does not need the monoid enumerated that far.
    """
    rank = monoid_rank(M)
    growth_N = N if growth_N is None else growth_N
    h = hilbert_function(M, N, limits=limits)
    if denominators is None:
        candidates = default_denominators(N, M.degrees)
        product = tuple(sorted(M.degrees))
        # prod(1 - t^deg g) is a valid denominator for any finite presentation
        if product in candidates:
            candidates.remove(product)
            candidates.insert(0, product)
    else:
        candidates = [tuple(d) for d in denominators]
    fit = fit_any(h, candidates)
    pole = pole_order_at_one(fit) if fit is not None else None
    if growth_N <= N:
        growth = h.truncate(growth_N)
    elif fit is not None:
        growth = GradedSeries(expand(fit, growth_N))
    else:
        growth = hilbert_function(M, growth_N, limits=limits)
    slope = gk_slope(growth_table(growth))
    all_equal = pole == rank and abs(slope - rank) <= tolerance
    if pole is not None and pole != rank:
        logger.warning("pole order %d differs from lattice rank %d", pole, rank)
    return DimensionReport(rank, rank, slope, pole, all_equal, fit=fit, series=h)
