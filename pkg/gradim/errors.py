"""
Exceptions raised by gradim.

Outcomes that are part of an answer (a failed rational fit, an undecided
classification, a gallery case that does not meet its expectations) are
returned as values and never raised.
"""
from typing import Optional, Sequence


class GradimError(Exception):
    pass


class DimensionMismatch(GradimError, ValueError):
    pass


class InvalidOrder(GradimError, ValueError):
    pass


class PreconditionError(GradimError, ValueError):
    pass


class ZeroPolynomialError(PreconditionError):
    pass


class CapacityError(GradimError):
    """
    A configurable cap was exceeded.
    `case_id` is attached by the gallery when a case triggered it.
    """

    def __init__(self, what: str, limit: int, count: int, case_id: Optional[str] = None):
        self.what = what
        self.limit = limit
        self.count = count
        self.case_id = case_id
        super().__init__(str(self))

    def __str__(self):
        prefix = f"{self.case_id}: " if self.case_id else ""
        return f"{prefix}{self.what}: count {self.count} exceeds limit {self.limit}"

    def for_case(self, case_id: str) -> "CapacityError":
        return CapacityError(self.what, self.limit, self.count, case_id=case_id)


class NotRegularError(GradimError):
    def __init__(self, degree: int, coefficient: int):
        self.degree = degree
        self.coefficient = coefficient
        super().__init__(
            f"negative coefficient {coefficient} in degree {degree}: "
            f"the element is not a non-zero-divisor at this truncation"
        )


class SubductionLimitError(GradimError):
    def __init__(self, remainder, steps: int):
        self.remainder = remainder
        self.steps = steps
        super().__init__(f"subduction did not terminate within {steps} steps")


class ParseError(GradimError, ValueError):
    def __init__(self, message: str, line: int, column: int):
        self.message = message
        self.line = line
        self.column = column
        super().__init__(str(self))

    def __str__(self):
        return f"line {self.line}, column {self.column}: {self.message}"


class UnknownCase(GradimError, KeyError):
    def __init__(self, case_id: str, valid: Sequence[str]):
        self.case_id = case_id
        self.valid = tuple(valid)
        super().__init__(case_id)

    def __str__(self):
        return f"unknown case {self.case_id!r} (choose from {', '.join(self.valid)})"
