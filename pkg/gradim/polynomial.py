"""
Polynomials with exact rational coefficients.
"""
from fractions import Fraction
from numbers import Rational
from types import MappingProxyType
from typing import Dict, Iterable, Mapping, Optional, Tuple, Union

from .errors import DimensionMismatch, ZeroPolynomialError
from .monomials import ExponentVector, MonomialOrder, WeightVector, weighted_degree

Coefficient = Union[int, Fraction]


class Polynomial:
    """
    Finite map from exponent vectors to nonzero rationals over a fixed
    number of variables. Instances are immutable.
    """

    __slots__ = ("_nvars", "_terms")

    def __init__(self, nvars: int, terms: Optional[Mapping[Tuple[int, ...], Coefficient]] = None):
        cleaned: Dict[ExponentVector, Fraction] = {}
        for exponents, coefficient in (terms or {}).items():
            if len(exponents) != nvars:
                raise DimensionMismatch(
                    f"term {tuple(exponents)!r} in a polynomial on {nvars} variables"
                )
            if not isinstance(coefficient, Rational):
                raise TypeError(f"coefficients must be exact rationals, got {coefficient!r}")
            if coefficient:
                key = exponents if isinstance(exponents, ExponentVector) else ExponentVector(exponents)
                cleaned[key] = Fraction(coefficient)
        self._nvars = nvars
        self._terms = MappingProxyType(cleaned)

    @classmethod
    def _from_clean(cls, nvars: int, terms: Dict[ExponentVector, Fraction]) -> "Polynomial":
        result = cls.__new__(cls)
        result._nvars = nvars
        result._terms = MappingProxyType({k: v for k, v in terms.items() if v})
        return result

    @classmethod
    def zero(cls, nvars: int) -> "Polynomial":
        return cls(nvars)

    @classmethod
    def constant(cls, nvars: int, value: Coefficient = 1) -> "Polynomial":
        return cls(nvars, {ExponentVector.zero(nvars): value})

    @classmethod
    def one(cls, nvars: int) -> "Polynomial":
        return cls.constant(nvars, 1)

    @classmethod
    def monomial(cls, exponents: Iterable[int], coefficient: Coefficient = 1) -> "Polynomial":
        vector = ExponentVector(exponents)
        return cls(len(vector), {vector: coefficient})

    @classmethod
    def variable(cls, nvars: int, i: int) -> "Polynomial":
        return cls(nvars, {ExponentVector.unit(nvars, i): 1})

    @property
    def nvars(self) -> int:
        return self._nvars

    @property
    def terms(self) -> Mapping[ExponentVector, Fraction]:
        return self._terms

    @property
    def support(self) -> Tuple[ExponentVector, ...]:
        return tuple(self._terms)

    def coefficient(self, exponents: Tuple[int, ...]) -> Fraction:
        return self._terms.get(exponents, Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self._nvars == other._nvars and dict(self._terms) == dict(other._terms)
        if isinstance(other, Rational):
            return self == Polynomial.constant(self._nvars, other)
        return NotImplemented

    def __hash__(self):
        return hash((self._nvars, frozenset(self._terms.items())))

    def _check(self, other: "Polynomial") -> None:
        if other._nvars != self._nvars:
            raise DimensionMismatch(
                f"polynomials on {self._nvars} and {other._nvars} variables"
            )

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, Rational):
            return Polynomial.constant(self._nvars, other)
        raise TypeError(f"cannot combine a polynomial with {other!r}")

    def __add__(self, other):
        other = self._coerce(other)
        terms = dict(self._terms)
        for exponents, coefficient in other._terms.items():
            terms[exponents] = terms.get(exponents, 0) + coefficient
        return Polynomial._from_clean(self._nvars, terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._from_clean(self._nvars, {k: -v for k, v in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, Rational):
            return self.scale(other)
        return poly_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, Rational):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise ValueError("negative powers are not polynomials")
        result = Polynomial.one(self._nvars)
        base = self
        while exponent:
            if exponent & 1:
                result = poly_mul(result, base)
            exponent >>= 1
            if exponent:
                base = poly_mul(base, base)
        return result

    def scale(self, factor: Coefficient) -> "Polynomial":
        factor = Fraction(factor)
        return Polynomial._from_clean(self._nvars, {k: v * factor for k, v in self._terms.items()})

    def degrees(self, weights: WeightVector) -> Tuple[int, ...]:
        return tuple(sorted({weighted_degree(a, weights) for a in self._terms}))

    def is_homogeneous(self, weights: WeightVector) -> bool:
        return len(self.degrees(weights)) <= 1

    def degree(self, weights: WeightVector) -> int:
        """
        Weighted degree of a nonzero homogeneous polynomial.
        """
        degrees = self.degrees(weights)
        if not degrees:
            raise ZeroPolynomialError("the zero polynomial has no degree")
        if len(degrees) > 1:
            raise ValueError(f"polynomial is not homogeneous (degrees {degrees})")
        return degrees[0]

    def monic(self, order: MonomialOrder) -> "Polynomial":
        _, coefficient = leading_term(self, order)
        return self.scale(1 / coefficient)

    def __repr__(self):
        from .formats import format_polynomial

        return f"Polynomial({format_polynomial(self)!r})"


def leading_term(f: Polynomial, ord: MonomialOrder) -> Tuple[ExponentVector, Fraction]:
    if f.is_zero():
        raise ZeroPolynomialError("the zero polynomial has no leading term")
    if f.nvars != ord.dimension:
        raise DimensionMismatch(
            f"polynomial on {f.nvars} variables under an order on {ord.dimension}"
        )
    exponents = max(f.terms, key=ord.key)
    return exponents, f.terms[exponents]


def leading_monomial(f: Polynomial, ord: MonomialOrder) -> ExponentVector:
    return leading_term(f, ord)[0]


def poly_mul(f: Polynomial, g: Polynomial) -> Polynomial:
    f._check(g)
    terms: Dict[ExponentVector, Fraction] = {}
    for a, ca in f.terms.items():
        for b, cb in g.terms.items():
            key = ExponentVector._trusted(x + y for x, y in zip(a, b))
            terms[key] = terms.get(key, 0) + ca * cb
    return Polynomial._from_clean(f.nvars, terms)
