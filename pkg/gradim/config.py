"""
Capacity caps and default truncations.

Caps come from the environment so that a long gallery or `check` run can be
widened without code changes:

    GRADIM_MAX_ELEMENTS          monoid elements stored by hilbert_function
    GRADIM_MAX_PRODUCTS          generator products per degree component
    GRADIM_MAX_SEARCH_NODES      nodes visited by a monomial factorization search
    GRADIM_MAX_SUBDUCTION_STEPS  default step budget of subduct
"""
import dataclasses
import os
from dataclasses import dataclass
from typing import Mapping, Optional

from .errors import PreconditionError

ENV_PREFIX = "GRADIM_"


@dataclass(frozen=True)
class Limits:
    max_elements: int = 2_000_000
    max_products: int = 200_000
    max_search_nodes: int = 1_000_000
    max_subduction_steps: int = 10_000

    @classmethod
    def from_env(cls, environ: Optional[Mapping[str, str]] = None) -> "Limits":
        environ = os.environ if environ is None else environ
        values = {}
        for field in dataclasses.fields(cls):
            variable = ENV_PREFIX + field.name.upper()
            raw = environ.get(variable)
            if raw is None:
                continue
            try:
                value = int(raw.replace("_", ""))
            except ValueError:
                raise PreconditionError(f"{variable} must be an integer, got {raw!r}")
            if value < 1:
                raise PreconditionError(f"{variable} must be positive, got {value}")
            values[field.name] = value
        return cls(**values)


def resolve(limits: Optional[Limits]) -> Limits:
    return Limits.from_env() if limits is None else limits


class Defaults:
    fit_truncation = 60
    growth_truncation = 200
    degree_bound = 10
    d_max = 10
    tolerance = 0.2
    radius_margin = 0.05
    growth_margin = 0.05
    guard_extra = 5
    max_pure_power = 12
