"""
Exact linear algebra over Q and integer lattices.

Row reduction over `Fraction` gives the dimensions dim_k S_n and the leading
monomials of homogeneous components; the Hermite normal form gives the rank
of the group generated by a monoid's exponent vectors.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from .errors import DimensionMismatch, PreconditionError

logger = logging.getLogger(__name__)

Entry = Union[int, Fraction, str]


@dataclass(frozen=True)
class RationalMatrix:
    rows: Tuple[Tuple[Fraction, ...], ...]
    ncols: int = 0

    def __post_init__(self):
        rows = tuple(tuple(Fraction(x) for x in row) for row in self.rows)
        ncols = len(rows[0]) if rows else self.ncols
        if any(len(row) != ncols for row in rows):
            raise DimensionMismatch("matrix rows must all have the same length")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "ncols", ncols)

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[Entry]], ncols: int = 0) -> "RationalMatrix":
        return cls(tuple(tuple(row) for row in rows), ncols=ncols)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> Tuple[int, int]:
        return self.nrows, self.ncols

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for row in self.rows for x in row)

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(tuple(zip(*self.rows)), ncols=self.nrows)

    def rank(self) -> int:
        if self.is_integral():
            return bareiss_rank([[int(x) for x in row] for row in self.rows])
        return len(row_echelon(self).pivot_columns)


@dataclass(frozen=True)
class EchelonForm:
    matrix: RationalMatrix
    pivot_columns: Tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.pivot_columns)

    def nonzero_rows(self) -> Tuple[Tuple[Fraction, ...], ...]:
        return self.matrix.rows[: self.rank]


def row_echelon(m: RationalMatrix, pivot_order: Optional[Sequence[int]] = None) -> EchelonForm:
    """
    Reduced row echelon form, choosing pivots column by column in `pivot_order`
    (a permutation of the column indices, identity by default).

    Each nonzero row has a 1 in its pivot column and zeros in every other
    pivot column. Pivot columns are listed in the order they were found.
    """
    ncols = m.ncols
    order = list(range(ncols)) if pivot_order is None else list(pivot_order)
    if sorted(order) != list(range(ncols)):
        raise PreconditionError(f"pivot order {order!r} is not a permutation of {ncols} columns")
    rows: List[List[Fraction]] = [list(row) for row in m.rows]
    pivots: List[int] = []
    rank = 0
    for col in order:
        if rank == len(rows):
            break
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        head = rows[rank][col]
        if head != 1:
            rows[rank] = [x / head for x in rows[rank]]
        pivot_row = rows[rank]
        for i, row in enumerate(rows):
            factor = row[col]
            if i != rank and factor:
                rows[i] = [x - factor * y for x, y in zip(row, pivot_row)]
        pivots.append(col)
        rank += 1
    return EchelonForm(RationalMatrix(tuple(map(tuple, rows)), ncols=ncols), tuple(pivots))


def bareiss_rank(rows: Sequence[Sequence[int]]) -> int:
    """
    Rank of an integer matrix by fraction-free (Bareiss) elimination.
    Every intermediate entry is a minor of the input, so no fractions appear.
    """
    a = [list(row) for row in rows]
    if not a:
        return 0
    nrows, ncols = len(a), len(a[0])
    previous = 1
    rank = 0
    for col in range(ncols):
        if rank == nrows:
            break
        pivot = next((i for i in range(rank, nrows) if a[i][col]), None)
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        p = a[rank][col]
        for i in range(rank + 1, nrows):
            ai = a[i]
            factor = ai[col]
            a[i] = [(p * x - factor * y) // previous for x, y in zip(ai, a[rank])]
        previous = p
        rank += 1
    return rank


@dataclass(frozen=True)
class IntegerLattice:
    """
    Subgroup of Z^n generated by `generators`.
    """

    generators: Tuple[Tuple[int, ...], ...]
    dimension: int

    def __post_init__(self):
        generators = tuple(tuple(int(x) for x in g) for g in self.generators)
        if any(len(g) != self.dimension for g in generators):
            raise DimensionMismatch(f"lattice generators must lie in Z^{self.dimension}")
        object.__setattr__(self, "generators", generators)

    @classmethod
    def from_vectors(cls, vectors: Iterable[Sequence[int]], dimension: Optional[int] = None):
        vectors = tuple(tuple(v) for v in vectors)
        if dimension is None:
            if not vectors:
                raise PreconditionError("dimension is required for an empty generator list")
            dimension = len(vectors[0])
        return cls(vectors, dimension)

    def basis(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(map(tuple, hermite_normal_form(self.generators)))


def hermite_normal_form(rows: Sequence[Sequence[int]]) -> List[List[int]]:
    """
    Row-style Hermite normal form over Z, zero rows dropped.

    Pivots are positive, entries above a pivot are reduced into [0, pivot).
    The nonzero rows form a basis of the lattice spanned by `rows`.
    """
    a = [list(row) for row in rows if any(row)]
    if not a:
        return []
    ncols = len(a[0])
    r = 0
    for col in range(ncols):
        if r == len(a):
            break
        while True:
            candidates = [i for i in range(r, len(a)) if a[i][col]]
            if not candidates:
                break
            best = min(candidates, key=lambda i: abs(a[i][col]))
            a[r], a[best] = a[best], a[r]
            head = a[r][col]
            done = True
            for i in range(r + 1, len(a)):
                if a[i][col]:
                    q = a[i][col] // head
                    a[i] = [x - q * y for x, y in zip(a[i], a[r])]
                    if a[i][col]:
                        done = False
            if done:
                break
        if not a[r][col]:
            continue
        if a[r][col] < 0:
            a[r] = [-x for x in a[r]]
        head = a[r][col]
        for i in range(r):
            q = a[i][col] // head
            if q:
                a[i] = [x - q * y for x, y in zip(a[i], a[r])]
        r += 1
    return [row for row in a[:r]]


def lattice_rank(L: IntegerLattice) -> int:
    rank = len(hermite_normal_form(L.generators))
    logger.debug("lattice of %d generators in Z^%d has rank %d", len(L.generators), L.dimension, rank)
    return rank
