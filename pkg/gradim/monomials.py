"""
Exponent vectors, gradings and matrix monomial orders.

A monomial x1^a1 * ... * xn^an is stored as its exponent vector. Adding two
vectors multiplies the monomials:

>>> a = ExponentVector((1, 2, 0))
>>> b = ExponentVector((0, 1, 1))
>>> a + b
ExponentVector((1, 3, 1))
>>> weighted_degree(a + b, WeightVector((1, 2, 3)))
10

Orders are matrices of weight rows; lex and grlex are just particular matrices:

>>> order = MonomialOrder.grlex(2)
>>> compare(ExponentVector((2, 1)), ExponentVector((1, 2)), order)
<Ordering.GREATER: 1>
"""
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Tuple

from .errors import DimensionMismatch, InvalidOrder


class ExponentVector(tuple):
    """
    Point of N^n. Immutable, hashable, and added componentwise.
    """

    def __new__(cls, exponents: Iterable[int] = ()):
        values = tuple(exponents)
        for value in values:
            if not isinstance(value, int) or isinstance(value, bool) or value < 0:
                raise ValueError(f"exponents must be natural numbers, got {values!r}")
        return super().__new__(cls, values)

    @classmethod
    def _trusted(cls, values: Iterable[int]) -> "ExponentVector":
        return tuple.__new__(cls, values)

    @classmethod
    def zero(cls, n: int) -> "ExponentVector":
        return cls._trusted((0,) * n)

    @classmethod
    def unit(cls, n: int, i: int) -> "ExponentVector":
        return cls._trusted(1 if j == i else 0 for j in range(n))

    @property
    def dimension(self) -> int:
        return len(self)

    @property
    def total_degree(self) -> int:
        return sum(self)

    def is_zero(self) -> bool:
        return not any(self)

    def _check(self, other) -> None:
        if len(other) != len(self):
            raise DimensionMismatch(
                f"exponent vectors of dimension {len(self)} and {len(other)}"
            )

    def __add__(self, other):
        self._check(other)
        return ExponentVector._trusted(a + b for a, b in zip(self, other))

    def __sub__(self, other):
        self._check(other)
        result = tuple(a - b for a, b in zip(self, other))
        if any(value < 0 for value in result):
            raise ValueError(f"{other!r} does not divide {self!r}")
        return ExponentVector._trusted(result)

    def scale(self, factor: int) -> "ExponentVector":
        return ExponentVector._trusted(factor * a for a in self)

    def divides(self, other: "ExponentVector") -> bool:
        self._check(other)
        return all(a <= b for a, b in zip(self, other))

    def __repr__(self):
        return f"ExponentVector({tuple(self)!r})"


@dataclass(frozen=True)
class WeightVector:
    weights: Tuple[int, ...]

    def __post_init__(self):
        weights = tuple(self.weights)
        object.__setattr__(self, "weights", weights)
        if any(not isinstance(w, int) or w < 1 for w in weights):
            raise ValueError(f"weights must be positive integers, got {weights!r}")

    @classmethod
    def ones(cls, n: int) -> "WeightVector":
        return cls((1,) * n)

    @property
    def dimension(self) -> int:
        return len(self.weights)

    def __iter__(self):
        return iter(self.weights)

    def __len__(self):
        return len(self.weights)


def weighted_degree(a: Sequence[int], w: WeightVector) -> int:
    if len(a) != len(w):
        raise DimensionMismatch(
            f"exponent vector of dimension {len(a)} with {len(w)} weights"
        )
    return sum(wi * ai for wi, ai in zip(w.weights, a))


class Ordering(Enum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


def _rank(rows: Sequence[Sequence[int]], n: int) -> int:
    # rank over Q; orders are validated once, at construction
    matrix = [[Fraction(x) for x in row] for row in rows]
    rank = 0
    for col in range(n):
        pivot = next((i for i in range(rank, len(matrix)) if matrix[i][col]), None)
        if pivot is None:
            continue
        matrix[rank], matrix[pivot] = matrix[pivot], matrix[rank]
        for i in range(rank + 1, len(matrix)):
            factor = matrix[i][col] / matrix[rank][col]
            if factor:
                matrix[i] = [x - factor * y for x, y in zip(matrix[i], matrix[rank])]
        rank += 1
    return rank


@dataclass(frozen=True)
class MonomialOrder:
    """
    Matrix order: a < b iff the first row r with r.a != r.b has r.a < r.b.

    Valid when every column's first nonzero entry is positive (so 1 < x_i)
    and the matrix has full column rank (so the order is total).
    """

    rows: Tuple[Tuple[int, ...], ...]
    name: Optional[str] = field(default=None, compare=False)

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        if not rows:
            raise InvalidOrder("an order needs at least one row")
        n = len(rows[0])
        if any(len(row) != n for row in rows):
            raise InvalidOrder("order rows must all have the same length")
        for col in range(n):
            first = next((row[col] for row in rows if row[col]), 0)
            if first <= 0:
                raise InvalidOrder(
                    f"column {col}: first nonzero entry must be positive, got {first}"
                )
        if _rank(rows, n) < n:
            raise InvalidOrder("order matrix must have full column rank")

    @property
    def dimension(self) -> int:
        return len(self.rows[0])

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]], name: Optional[str] = None):
        return cls(tuple(tuple(row) for row in rows), name=name)

    @classmethod
    def lex(cls, n: int) -> "MonomialOrder":
        return cls(_identity(n), name="lex")

    @classmethod
    def grlex(cls, n: int, weights: Optional[WeightVector] = None) -> "MonomialOrder":
        top = tuple(weights.weights) if weights is not None else (1,) * n
        return cls((top, *_identity(n)), name="grlex")

    @classmethod
    def grevlex(cls, n: int, weights: Optional[WeightVector] = None) -> "MonomialOrder":
        top = tuple(weights.weights) if weights is not None else (1,) * n
        reverse = tuple(
            tuple(-1 if j == i else 0 for j in range(n)) for i in range(n - 1, 0, -1)
        )
        return cls((top, *reverse), name="grevlex")

    @classmethod
    def named(
        cls, name: str, n: int, weights: Optional[WeightVector] = None
    ) -> "MonomialOrder":
        constructors = {"lex": cls.lex, "grlex": cls.grlex, "grevlex": cls.grevlex}
        try:
            constructor = constructors[name]
        except KeyError:
            raise InvalidOrder(
                f"unknown order {name!r} (choose from {', '.join(constructors)})"
            )
        if name == "lex":
            return constructor(n)
        return constructor(n, weights)

    def key(self, a: Sequence[int]) -> Tuple[int, ...]:
        if len(a) != self.dimension:
            raise DimensionMismatch(
                f"exponent vector of dimension {len(a)} under an order on {self.dimension} variables"
            )
        return tuple(sum(r * x for r, x in zip(row, a)) for row in self.rows)


def _identity(n: int) -> Tuple[Tuple[int, ...], ...]:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def compare(a: Sequence[int], b: Sequence[int], ord: MonomialOrder) -> Ordering:
    ka, kb = ord.key(a), ord.key(b)
    if ka < kb:
        return Ordering.LESS
    if ka > kb:
        return Ordering.GREATER
    return Ordering.EQUAL


def default_variables(n: int) -> Tuple[str, ...]:
    if n <= 3:
        return ("x", "y", "z")[:n]
    return tuple(f"x{i}" for i in range(1, n + 1))
