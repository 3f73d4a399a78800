"""
Named reproductions of the worked examples and counterexamples.

Each case builds its inputs (a monoid, a subalgebra or a bare series),
runs them through the library and compares the observations with the
expected outcome record stored in ``data/gallery.json``. Every record
there carries a ``provenance`` statement of the mathematical fact it
encodes.

Cases register themselves by subclassing `GalleryCase` with a concrete
`case_id`.
"""
import dataclasses
import json
import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Any, Callable, Dict, List, Mapping, Optional, Sequence, Tuple, Type

from boltons.strutils import camel2under

from .config import Defaults, Limits, resolve
from .errors import CapacityError, UnknownCase
from .formats import format_monomial
from .monoid import (
    MonoidPresentation,
    default_window,
    dimension_report,
    gk_slope,
    growth_table,
    hilbert_function,
    monoid_rank,
)
from .monomials import ExponentVector
from .sagbi import (
    SubalgebraPresentation,
    pure_power_check,
    initial_algebra_truncation,
    non_noetherian_subalgebra,
    order_family_check,
    verify_poincare_equality,
)
from .series import (
    GradedSeries,
    classify_hilbert_serre,
    exponential_series,
    fit_rational,
    partition_series,
    pole_order_at_one,
    power_sum_series,
    radius_estimate,
)

logger = logging.getLogger(__name__)

FIXTURES = Path(__file__).parent / "data" / "gallery.json"
HEAD_LENGTH = 8


@lru_cache(maxsize=None)
def load_fixtures() -> Mapping[str, dict]:
    return json.loads(FIXTURES.read_text())


@dataclass(frozen=True)
class GalleryParams:
    """
    Overrides for a case's builder parameters; None keeps the case default.
    """

    truncation: Optional[int] = None
    growth_truncation: Optional[int] = None
    degree_bound: Optional[int] = None
    d: Optional[int] = None
    sequence: Optional[Tuple[int, ...]] = None

    def over(self, defaults: "GalleryParams") -> "GalleryParams":
        overrides = {
            f.name: getattr(self, f.name)
            for f in dataclasses.fields(self)
            if getattr(self, f.name) is not None
        }
        return dataclasses.replace(defaults, **overrides)


@dataclass(frozen=True)
class Check:
    name: str
    expected: Any
    actual: Any
    passed: bool


def _normalize(value):
    if isinstance(value, tuple):
        return [_normalize(v) for v in value]
    return value


def matches(expected: Any, actual: Any) -> bool:
    """
    A literal must be equal; ``{"value", "tolerance"}`` and ``{"min", "max"}``
    describe numeric intervals.
    """
    if isinstance(expected, dict):
        if actual is None:
            return False
        if "value" in expected:
            return abs(actual - expected["value"]) <= expected.get("tolerance", 0)
        return expected.get("min", -float("inf")) <= actual <= expected.get("max", float("inf"))
    return _normalize(actual) == expected


@dataclass(frozen=True)
class RunReport:
    case_id: str
    kind: str
    series_head: Optional[Tuple[int, ...]]
    rational_form: Optional[str]
    pole_order: Optional[int]
    rank: Optional[int]
    gk_slope: Optional[float]
    verdict: Optional[str]
    notes: Tuple[str, ...] = ()
    checks: Tuple[Check, ...] = field(default=(), repr=False)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> Tuple[Check, ...]:
        return tuple(c for c in self.checks if not c.passed)

    def as_record(self) -> Dict[str, Any]:
        return {
            "case": self.case_id,
            "kind": self.kind,
            "result": "pass" if self.passed else "fail",
            "series_head": self.series_head,
            "rational_form": self.rational_form,
            "pole_order": self.pole_order,
            "rank": self.rank,
            "gk_slope": None if self.gk_slope is None else round(self.gk_slope, 4),
            "verdict": self.verdict,
            "failed_checks": " ".join(c.name for c in self.failures) or None,
            "notes": "; ".join(self.notes) or None,
        }


class CaseConstant:
    """
    Class-level constant every concrete case must define.
    """

    __isabstractmethod__ = True


class GalleryCase(ABC):
    case_id: str = CaseConstant()
    defaults = GalleryParams()
    registry: Dict[str, Type["GalleryCase"]] = {}

    def __init_subclass__(cls, **kwargs):
        super().__init_subclass__(**kwargs)
        if not getattr(cls.case_id, "__isabstractmethod__", False):
            GalleryCase.registry[cls.case_id] = cls

    def __init__(self, params: Optional[GalleryParams] = None, limits: Optional[Limits] = None):
        self.overrides = params or GalleryParams()
        self.params = self.overrides.over(self.defaults)
        self.limits = resolve(limits)

    @classmethod
    def kind(cls) -> str:
        return camel2under(cls.__name__[: -len("Case")] if cls.__name__.endswith("Case") else cls.__name__)

    @property
    def fixture(self) -> dict:
        return load_fixtures()[self.case_id]

    def expected(self) -> Dict[str, Any]:
        return dict(self.fixture["expected"])

    @abstractmethod
    def build(self):
        pass

    @abstractmethod
    def observe(self, inputs) -> Dict[str, Any]:
        pass

    def run(self) -> RunReport:
        try:
            observations = self.observe(self.build())
        except CapacityError as e:
            raise e.for_case(self.case_id) from e
        checks = tuple(
            Check(name, want, observations.get(name), matches(want, observations.get(name)))
            for name, want in self.expected().items()
        )
        notes = tuple(self.fixture.get("notes", ())) + tuple(observations.get("notes", ()))
        head = observations.get("series_head")
        report = RunReport(
            case_id=self.case_id,
            kind=self.kind(),
            series_head=tuple(head) if head is not None else None,
            rational_form=observations.get("rational_form"),
            pole_order=observations.get("pole_order"),
            rank=observations.get("rank"),
            gk_slope=observations.get("gk_slope"),
            verdict=observations.get("verdict"),
            notes=notes,
            checks=checks,
        )
        if report.passed:
            logger.info("%s: pass", self.case_id)
        else:
            logger.info("%s: fail (%s)", self.case_id, ", ".join(c.name for c in report.failures))
        return report


def _xy_family(first: int, top_degree: int) -> MonoidPresentation:
    """Monomials x*y^j, first <= j, of total degree <= top_degree."""
    return MonoidPresentation(2, tuple(ExponentVector((1, j)) for j in range(first, top_degree)))


def _spanning_rank(top: Callable[[int], int], degrees: int = 3) -> int:
    """Lattice rank of the monomials x^n y^j, 1 <= n <= degrees, j <= top(n)."""
    return monoid_rank(
        MonoidPresentation.of([(n, j) for n in range(1, degrees + 1) for j in range(top(n) + 1)])
    )


def _xy_names(last: int) -> List[str]:
    return [format_monomial((1, m)) for m in range(last + 1)]


class MonomialFamilyCase(GalleryCase):
    case_id = CaseConstant()
    first_power: int = CaseConstant()
    defaults = GalleryParams(truncation=Defaults.fit_truncation, growth_truncation=Defaults.growth_truncation)

    def build(self) -> MonoidPresentation:
        p = self.params
        return _xy_family(self.first_power, max(p.truncation, p.growth_truncation))

    def observe(self, M: MonoidPresentation) -> Dict[str, Any]:
        p = self.params
        report = dimension_report(M, p.truncation, growth_N=p.growth_truncation, limits=self.limits)
        return {
            "series_head": report.series.head(HEAD_LENGTH),
            "numerator": report.fit.numerator if report.fit else None,
            "denominator": report.fit.denominator if report.fit else None,
            "rational_form": str(report.fit) if report.fit else None,
            "pole_order": report.pole_order,
            "rank": report.krull_dim,
            "trdeg": report.trdeg,
            "gk_slope": report.gk_estimate,
            "all_equal": report.all_equal,
        }


class XYPowersCase(MonomialFamilyCase):
    """k[x, xy, xy^2, ...]"""

    case_id = "ex-3.2-2"
    first_power = 0


class XYPowersWithoutXCase(MonomialFamilyCase):
    """k[xy, xy^2, ...]"""

    case_id = "ex-3.2-3"
    first_power = 1


class PartitionMonoidCase(GalleryCase):
    """
    k[x1, x2^2, x3^3, ...]: the monoid oracle at a small degree against the
    pentagonal recurrence at the growth truncation.
    """

    case_id = "ex-3.2-5"
    defaults = GalleryParams(truncation=30, growth_truncation=Defaults.growth_truncation)

    def build(self) -> Tuple[MonoidPresentation, GradedSeries]:
        N = self.params.truncation
        generators = tuple(ExponentVector.unit(N, i).scale(i + 1) for i in range(N))
        return MonoidPresentation(N, generators), partition_series(self.params.growth_truncation)

    def expected(self) -> Dict[str, Any]:
        return {**super().expected(), "rank": self.params.truncation}

    def observe(self, inputs) -> Dict[str, Any]:
        M, p = inputs
        N, G = self.params.truncation, self.params.growth_truncation
        oracle = hilbert_function(M, N, limits=self.limits)
        A = growth_table(p)
        lo, mid = G // 4, G // 2
        return {
            "series_head": p.head(HEAD_LENGTH),
            "oracle_matches": oracle.coefficients == p.truncate(N).coefficients,
            "rank": monoid_rank(M),
            "gk_slope": gk_slope(A, default_window(G)),
            "slope_increasing": gk_slope(A, (lo, mid)) < gk_slope(A, (mid, G)),
        }


class NonNoetherianInitialAlgebraCase(GalleryCase):
    """k[x + y, xy, xy^2] has the non-finitely generated initial algebra k[x, xy, xy^2, ...]."""

    case_id = "ex-5.2"
    defaults = GalleryParams(degree_bound=Defaults.degree_bound)

    def build(self) -> SubalgebraPresentation:
        return non_noetherian_subalgebra()

    def expected(self) -> Dict[str, Any]:
        return {**super().expected(), "new_generators": _xy_names(self.params.degree_bound - 1)}

    def observe(self, S: SubalgebraPresentation) -> Dict[str, Any]:
        D = self.params.degree_bound
        truncation = initial_algebra_truncation(S, D, limits=self.limits)
        family = order_family_check(D, limits=self.limits)
        poincare = verify_poincare_equality(S, D, limits=self.limits)
        generators = truncation.generator_monomials()
        return {
            "series_head": truncation.series().head(HEAD_LENGTH),
            "new_generators": [format_monomial(g, S.variables) for g in generators],
            "stabilized": truncation.stabilized,
            "poincare_equal": poincare.equal,
            "order_family_agrees": all(
                t.generator_monomials() == generators and not t.stabilized for t in family.values()
            ),
            "rank": monoid_rank(truncation.monoid()),
            "notes": [f"orders checked: {', '.join(family)}"],
        }


class NoPurePowerCase(GalleryCase):
    """k[x + y + z, xy, xy^2] under the xy-weight order."""

    case_id = "ex-5.3"
    defaults = GalleryParams(degree_bound=8)

    def build(self) -> int:
        return self.params.degree_bound

    def observe(self, D: int) -> Dict[str, Any]:
        check = pure_power_check(D, limits=self.limits)
        variables = ("x", "y", "z")
        return {
            "series_head": check.truncation.series().head(HEAD_LENGTH),
            "pure_powers_of_y": [format_monomial(a, variables) for a in check.pure_powers],
            "missing_xy_powers": list(check.missing),
            "degree_one": sorted(format_monomial(a, variables) for a in check.degree_one),
            "stabilized": check.truncation.stabilized,
        }


class InitialAlgebraDimensionsCase(GalleryCase):
    """All dimensions of k[x, xy, xy^2, ...], reached as an initial algebra."""

    case_id = "ex-6.1"
    defaults = GalleryParams(
        truncation=Defaults.fit_truncation,
        growth_truncation=Defaults.growth_truncation,
        degree_bound=Defaults.degree_bound,
    )

    def build(self) -> SubalgebraPresentation:
        return non_noetherian_subalgebra()

    def expected(self) -> Dict[str, Any]:
        return {**super().expected(), "new_generators": _xy_names(self.params.degree_bound - 1)}

    def observe(self, S: SubalgebraPresentation) -> Dict[str, Any]:
        p = self.params
        truncation = initial_algebra_truncation(S, p.degree_bound, limits=self.limits)
        family = _xy_family(0, p.degree_bound)
        initial = truncation.monoid()
        report = dimension_report(initial, p.truncation, growth_N=p.growth_truncation, limits=self.limits)
        return {
            "series_head": truncation.series().head(HEAD_LENGTH),
            "new_generators": [format_monomial(g, S.variables) for g in truncation.generator_monomials()],
            "initial_series_matches": truncation.dimensions
            == hilbert_function(family, p.degree_bound, limits=self.limits).coefficients,
            "rational_form": str(report.fit) if report.fit else None,
            "rank": report.krull_dim,
            "trdeg": report.trdeg,
            "pole_order": report.pole_order,
            "gk_slope": report.gk_estimate,
            "all_equal": report.all_equal,
        }


class RankTwoMonoidCase(MonomialFamilyCase):
    """k[xy, xy^2, ...] as the monoid algebra of (1, 1), (1, 2), ..."""

    case_id = "ex-6.2"
    first_power = 1


class IdealizationCase(GalleryCase):
    """
    k with a square-zero positive part of dimension a_n in degree n. Every
    positive-degree element is nilpotent, so the Krull dimension is 0 while
    the pole order follows the sequence.
    """

    case_id = "ex-6.3"
    defaults = GalleryParams(truncation=Defaults.fit_truncation)

    def build(self) -> GradedSeries:
        N = self.params.truncation
        sequence = self.params.sequence if self.params.sequence is not None else (1,) * N
        tail = tuple(sequence[:N]) + (0,) * max(0, N - len(sequence))
        return GradedSeries((1, *tail))

    def expected(self) -> Dict[str, Any]:
        expected = super().expected()
        if self.overrides.sequence is not None:
            for key in ("pole_order", "strict_gap", "verdict"):
                expected.pop(key, None)
        return expected

    def observe(self, h: GradedSeries) -> Dict[str, Any]:
        classification = classify_hilbert_serre(h)
        pole = classification.pole_order
        krull_dim = 0
        return {
            "series_head": h.head(HEAD_LENGTH),
            "krull_dim": krull_dim,
            "rational_form": str(classification.fit) if classification.fit else None,
            "pole_order": pole,
            "strict_gap": pole is not None and pole > krull_dim,
            "verdict": classification.verdict.value,
        }


class PowerSumCase(GalleryCase):
    """
    Spans of x^n y^j, j <= n^d: a domain of transcendence degree 2 whose
    pole order is d + 1.
    """

    case_id = "ex-6.4-d"
    defaults = GalleryParams(truncation=Defaults.fit_truncation, d=3)

    def build(self) -> GradedSeries:
        return power_sum_series(self.params.d, self.params.truncation)

    def expected(self) -> Dict[str, Any]:
        d = self.params.d
        return {**super().expected(), "pole_order": d + 1, "classified_pole_order": d + 1}

    def observe(self, h: GradedSeries) -> Dict[str, Any]:
        d = self.params.d
        fit = fit_rational(h, (1,) * (d + 1))
        classification = classify_hilbert_serre(h)
        pole = pole_order_at_one(fit) if fit else None
        return {
            "series_head": h.head(HEAD_LENGTH),
            "rational_form": str(fit) if fit else None,
            "pole_order": pole,
            "classified_pole_order": classification.pole_order,
            "verdict": classification.verdict.value,
            "trdeg": _spanning_rank(lambda n: n ** d),
        }


class ExponentialGrowthCase(GalleryCase):
    """Spans of x^n y^j, j <= 2^n: the series has radius of convergence 1/2."""

    case_id = "ex-6.5"
    defaults = GalleryParams(truncation=40)

    def build(self) -> GradedSeries:
        return exponential_series(self.params.truncation)

    def observe(self, h: GradedSeries) -> Dict[str, Any]:
        classification = classify_hilbert_serre(h)
        return {
            "series_head": h.head(HEAD_LENGTH),
            "radius": radius_estimate(h),
            "verdict": classification.verdict.value,
            "obstruction": classification.obstruction.value if classification.obstruction else None,
            "trdeg": _spanning_rank(lambda n: 2 ** n),
        }


class PartitionSeriesCase(GalleryCase):
    """The partition generating function: radius 1 and no finite pole order."""

    case_id = "ex-6.6"
    defaults = GalleryParams(truncation=Defaults.growth_truncation)

    def build(self) -> GradedSeries:
        return partition_series(self.params.truncation)

    def observe(self, h: GradedSeries) -> Dict[str, Any]:
        classification = classify_hilbert_serre(h, d_max=Defaults.d_max)
        return {
            "series_head": h.head(HEAD_LENGTH),
            "radius": radius_estimate(h),
            "verdict": classification.verdict.value,
            "obstruction": classification.obstruction.value if classification.obstruction else None,
            "d_max": classification.d_max,
        }


def case_ids() -> Tuple[str, ...]:
    return tuple(GalleryCase.registry)


def case_class(case_id: str) -> Type[GalleryCase]:
    try:
        return GalleryCase.registry[case_id]
    except KeyError:
        raise UnknownCase(case_id, case_ids())


def build_case(case_id: str, params: Optional[GalleryParams] = None):
    return case_class(case_id)(params).build()


def run_case(
    case_id: str, params: Optional[GalleryParams] = None, limits: Optional[Limits] = None
) -> RunReport:
    return case_class(case_id)(params, limits).run()


def run_all(params: Optional[GalleryParams] = None, limits: Optional[Limits] = None) -> List[RunReport]:
    """Every case in id order; `params` overrides apply to each of them."""
    return [run_case(case_id, params, limits) for case_id in case_ids()]


def resolve_case_ids(selection: str) -> Sequence[str]:
    if selection == "all":
        return case_ids()
    case_class(selection)
    return (selection,)
