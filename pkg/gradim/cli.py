"""
Command line interface.

Each subcommand is an `argsclass`; the top-level `Gradim` class holds them
as a `Union`, so after parsing `Gradim.command` is an instance of exactly
one of them:

>>> parse(Gradim, ["--format", "machine", "partition", "-N", "6"])
Gradim(command=Partition(truncation=6), format=<Format.machine: 'machine'>, log_level=<LogLevel.warning: 'WARNING'>)

Exit codes: 0 on success, 1 when a gallery case or a `check` run fails or
a computation raises, 2 on usage and input errors.
"""
import logging
import random
import sys

from argparse import ArgumentParser
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence, Type, Union

from datargs import arg, argsclass, parse

from .config import Defaults, Limits
from .errors import GradimError, ParseError, UnknownCase
from .formats import (
    format_monomial,
    format_polynomial,
    format_series,
    load_monoid,
    load_series,
    load_subalgebra,
    parse_denominator,
)
from .gallery import GalleryParams, case_class, case_ids, resolve_case_ids, run_case
from .monoid import dimension_report, hilbert_function, monoid_rank
from .report import Format, Record, render
from .sagbi import initial_algebra_truncation, verify_poincare_equality
from .sampling import random_monoid
from .series import (
    classify_hilbert_serre,
    default_denominators,
    fit_any,
    fit_rational,
    partition_series,
    pole_order_at_one,
)

logger = logging.getLogger(__name__)


class LogLevel(Enum):
    debug = "DEBUG"
    info = "INFO"
    warning = "WARNING"
    error = "ERROR"


@argsclass(description="print the Hilbert function of a monoid file")
class Hilbert:
    path: Path = arg(positional=True, help="monoid file")
    truncation: int = arg("-N", default=Defaults.fit_truncation, help="last degree")


@argsclass(description="Krull dimension, transcendence degree, GK estimate and pole order of k[M]")
class Dim:
    path: Path = arg(positional=True, help="monoid file")
    truncation: int = arg("-N", default=Defaults.fit_truncation, help="truncation of the rational fit")
    growth_truncation: Optional[int] = arg(
        default=None, help="truncation of the growth slope (default: same as -N)"
    )
    tolerance: float = arg(default=Defaults.tolerance, help="allowed |GK estimate - rank|")


@argsclass(description="degree-truncated initial algebra of a subalgebra file")
class Sagbi:
    path: Path = arg(positional=True, help="subalgebra file")
    degree_bound: int = arg("-D", default=Defaults.degree_bound, help="last degree")
    verify: bool = arg(help="also compare the Poincaré series of S and its initial algebra")
    witnesses: bool = arg(help="print a witness polynomial for each new generator")


@argsclass(description="rational fit and pole order of a series file")
class Fit:
    path: Path = arg(positional=True, help="series file")
    denom: Optional[str] = arg(
        default=None, help="denominator exponents, e.g. '1,1' for (1-t)^2 (default: try candidates)"
    )
    guard: Optional[int] = arg(default=None, help="vanishing window length")


@argsclass(description="Hilbert-Serre classification of a series file")
class Classify:
    path: Path = arg(positional=True, help="series file")
    d_max: int = arg(default=Defaults.d_max, help="largest pole order tried before reporting unboundedness")


@argsclass(description="run named example cases")
class Gallery:
    case: str = arg(positional=True, nargs="?", default="all", help="case id or 'all'")
    truncation: Optional[int] = arg("-N", default=None, help="series truncation")
    growth_truncation: Optional[int] = arg(default=None, help="truncation for growth slopes")
    degree_bound: Optional[int] = arg("-D", default=None, help="SAGBI degree bound")
    d: Optional[int] = arg("-d", default=None, help="exponent of the power-sum case")
    sequence: Optional[Sequence[int]] = arg(default=None, help="a_1 a_2 ... for the idealization case")
    list: bool = arg(help="list case ids and exit")


@argsclass(description="partition numbers p(0), ..., p(N)")
class Partition:
    truncation: int = arg("-N", default=Defaults.fit_truncation, help="last index")


@argsclass(description="random monomial algebras: fitted pole order against lattice rank")
class Check:
    seed: int = arg(default=0)
    count: int = arg(default=50, help="number of random monoids")
    variables: int = arg(default=3, help="largest number of variables")
    generators: int = arg(default=4, help="largest number of generators")
    max_degree: int = arg(default=3, help="largest generator degree")
    truncation: int = arg("-N", default=Defaults.fit_truncation)
    growth_truncation: int = arg(default=Defaults.growth_truncation, help="truncation of the growth slope")
    tolerance: float = arg(default=Defaults.tolerance, help="allowed |GK estimate - rank|")


@argsclass(description="dimensions of graded algebras")
class Gradim:
    command: Union[Hilbert, Dim, Sagbi, Fit, Classify, Gallery, Partition, Check]
    format: Format = arg(default=Format.table, help="output format")
    log_level: LogLevel = arg(default=LogLevel.warning, help="logging threshold (logs go to stderr)")


@dataclass
class Outcome:
    records: List[Record]
    exit_code: int = 0
    text: Optional[str] = None


class Commands:
    """
    Handlers keyed by subcommand class.
    """

    dispatch: Dict[type, Callable[..., Outcome]] = {}

    @classmethod
    def register(cls, typ: Type):
        def decorator(func):
            cls.dispatch[typ] = func
            return func

        return decorator

    @classmethod
    def run(cls, command, limits: Limits) -> Outcome:
        return cls.dispatch[type(command)](command, limits)


@Commands.register(Hilbert)
def run_hilbert(command: Hilbert, limits: Limits) -> Outcome:
    M = load_monoid(command.path)
    h = hilbert_function(M, command.truncation, limits=limits)
    return Outcome([{"truncation": command.truncation, "series": h.coefficients}], text=format_series(h) + "\n")


@Commands.register(Dim)
def run_dim(command: Dim, limits: Limits) -> Outcome:
    M = load_monoid(command.path)
    report = dimension_report(
        M,
        command.truncation,
        growth_N=command.growth_truncation,
        tolerance=command.tolerance,
        limits=limits,
    )
    return Outcome([report.as_record()])


@Commands.register(Sagbi)
def run_sagbi(command: Sagbi, limits: Limits) -> Outcome:
    S = load_subalgebra(command.path)
    truncation = initial_algebra_truncation(S, command.degree_bound, limits=limits)
    summary = {
        "degree_bound": command.degree_bound,
        "order": S.order.name or "matrix",
        "dimensions": truncation.dimensions,
        "new_generators": ", ".join(format_monomial(g, S.variables) for g in truncation.generator_monomials()),
        "stabilized_at": truncation.stabilized_at,
    }
    exit_code = 0
    if command.verify:
        check = verify_poincare_equality(S, command.degree_bound, limits=limits)
        summary["poincare_equal"] = check.equal
        summary["first_discrepancy"] = check.first_discrepancy
        exit_code = 0 if check.equal else 1
    records: List[Record] = [summary]
    if command.witnesses:
        records.extend(
            {
                "degree": g.degree,
                "generator": format_monomial(g.monomial, S.variables),
                "witness": format_polynomial(g.witness, S.variables, S.order),
            }
            for g in truncation.new_generators
        )
    return Outcome(records, exit_code)


@Commands.register(Fit)
def run_fit(command: Fit, limits: Limits) -> Outcome:
    h = load_series(command.path)
    if command.denom is not None:
        denominator = parse_denominator(command.denom)
        fit = fit_rational(h, denominator, guard=command.guard)
        if not fit:
            return Outcome([
                {
                    "fit": "none",
                    "denominator": denominator,
                    "first_nonzero_degree": fit.degree,
                    "coefficient": fit.coefficient,
                }
            ])
    else:
        fit = fit_any(h, default_denominators(h.truncation))
        if fit is None:
            return Outcome([{"fit": "none", "denominator": None}])
    return Outcome([
        {
            "fit": str(fit),
            "numerator": fit.numerator,
            "denominator": fit.denominator,
            "pole_order": pole_order_at_one(fit),
        }
    ])


@Commands.register(Classify)
def run_classify(command: Classify, limits: Limits) -> Outcome:
    h = load_series(command.path)
    return Outcome([classify_hilbert_serre(h, d_max=command.d_max).as_record()])


@Commands.register(Gallery)
def run_gallery(command: Gallery, limits: Limits) -> Outcome:
    if command.list:
        return Outcome(
            [{"case": case_id, "kind": case_class(case_id).kind()} for case_id in case_ids()]
        )
    params = GalleryParams(
        truncation=command.truncation,
        growth_truncation=command.growth_truncation,
        degree_bound=command.degree_bound,
        d=command.d,
        sequence=tuple(command.sequence) if command.sequence is not None else None,
    )
    reports = [run_case(case_id, params, limits) for case_id in resolve_case_ids(command.case)]
    failed = [r.case_id for r in reports if not r.passed]
    return Outcome([r.as_record() for r in reports], exit_code=1 if failed else 0)


@Commands.register(Partition)
def run_partition(command: Partition, limits: Limits) -> Outcome:
    p = partition_series(command.truncation)
    return Outcome([{"truncation": command.truncation, "series": p.coefficients}], text=format_series(p) + "\n")


@Commands.register(Check)
def run_check(command: Check, limits: Limits) -> Outcome:
    """
    A wrong claim is a fitted pole order different from the lattice rank;
    a growth slope outside the tolerance is only flagged.
    """
    rng = random.Random(command.seed)
    records: List[Record] = []
    mismatches = 0
    for index in range(command.count):
        M = random_monoid(
            rng,
            rng.randint(1, command.variables),
            rng.randint(1, command.generators),
            command.max_degree,
        )
        report = dimension_report(
            M,
            command.truncation,
            growth_N=command.growth_truncation,
            tolerance=command.tolerance,
            limits=limits,
        )
        rank = monoid_rank(M)
        if report.pole_order is None:
            status = "unknown-at-truncation"
        elif report.pole_order != rank:
            status = "mismatch"
            mismatches += 1
            logger.error("monoid %d: pole order %d but rank %d", index, report.pole_order, rank)
        elif abs(report.gk_estimate - rank) > command.tolerance:
            status = "slope-unknown-at-truncation"
        else:
            status = "equal"
        records.append(
            {
                "index": index,
                "generators": " ".join(format_monomial(g, M.variables) for g in M.generators),
                "rank": rank,
                "pole_order": report.pole_order,
                "gk_slope": round(report.gk_estimate, 4),
                "status": status,
            }
        )
    return Outcome(records, exit_code=1 if mismatches else 0)


def _configure_logging(level: LogLevel) -> None:
    logging.basicConfig(
        level=level.value,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )


class GradimParser(ArgumentParser):
    """
    An `ArgumentParser` whose subcommand is mandatory.
    """

    def add_subparsers(self, **kwargs):
        kwargs.setdefault("required", True)
        kwargs.setdefault("metavar", "command")
        return super().add_subparsers(**kwargs)


def parse_args(argv: Optional[Sequence[str]] = None) -> Gradim:
    return parse(Gradim, argv, parser=GradimParser(prog="gradim", description="dimensions of graded algebras"))


def cli_main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        options = parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2
    _configure_logging(options.log_level)
    try:
        outcome = Commands.run(options.command, Limits.from_env())
    except (ParseError, UnknownCase) as e:
        print(f"gradim: {e}", file=sys.stderr)
        return 2
    except OSError as e:
        print(f"gradim: {e}", file=sys.stderr)
        return 2
    except GradimError as e:
        print(f"gradim: {e}", file=sys.stderr)
        return 1
    if outcome.text is not None and options.format is Format.table:
        sys.stdout.write(outcome.text)
    else:
        sys.stdout.write(render(outcome.records, options.format))
    return outcome.exit_code


def main():
    sys.exit(cli_main())
