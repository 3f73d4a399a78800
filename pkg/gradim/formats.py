"""
Text formats: the monomial and polynomial grammar, and the monoid,
subalgebra, series and matrix files read by the command line.

Polynomials are written with named variables, integer or rational
coefficients, ``*``, ``^``, ``+``, ``-``, parentheses and division by a
constant::

    polynomial := ["+" | "-"] term {("+" | "-") term}
    term       := factor {("*" | "/") factor}
    factor     := atom ["^" natural]
    atom       := number | name | "(" polynomial ")"
    number     := digits ["/" digits]
    name       := letter {letter | digit | "_"}

The printer writes terms in descending graded lexicographic order and the
parser reads its output back to the same polynomial:

>>> f = parse_polynomial("(x + y)^2", ("x", "y"))
>>> format_polynomial(f, ("x", "y"))
'x^2 + 2*x*y + y^2'
>>> format_monomial(ExponentVector((1, 0, 3)), ("x1", "x2", "x3"))
'x1*x3^3'
"""
import re
from fractions import Fraction
from pathlib import Path
from typing import Dict, Iterable, List, NamedTuple, Optional, Sequence, Tuple, Union

from boltons.iterutils import unique

from .errors import GradimError, ParseError
from .linalg import RationalMatrix
from .monoid import MonoidPresentation
from .monomials import (
    ExponentVector,
    MonomialOrder,
    WeightVector,
    default_variables,
)
from .polynomial import Polynomial
from .sagbi import SubalgebraPresentation
from .series import GradedSeries

PathLike = Union[str, Path]

_TOKEN = re.compile(
    r"\s*(?:(?P<number>[0-9]+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*/^()]))"
)
_NAME = re.compile(r"[A-Za-z_][A-Za-z_0-9]*")
_HEADER = re.compile(r"^\s*(?P<key>[A-Za-z_]+)\s*:(?P<value>.*)$")


class Token(NamedTuple):
    kind: str
    text: str
    column: int


def _tokenize(text: str, line: int, column: int) -> List[Token]:
    tokens = []
    position = 0
    while position < len(text):
        if not text[position:].strip():
            break
        match = _TOKEN.match(text, position)
        if not match:
            offset = len(text) - len(text[position:].lstrip())
            raise ParseError(f"unexpected character {text[offset]!r}", line, column + offset)
        kind = match.lastgroup
        tokens.append(Token(kind, match.group(kind), column + match.start(kind)))
        position = match.end()
    tokens.append(Token("end", "", column + len(text.rstrip())))
    return tokens


class _Parser:
    """
    Recursive descent over one line of text, evaluating as it goes.
    """

    def __init__(self, text: str, variables: Sequence[str], line: int = 1, column: int = 1):
        self.variables = {name: i for i, name in enumerate(variables)}
        self.nvars = len(variables)
        self.line = line
        self.tokens = _tokenize(text, line, column)
        self.index = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def error(self, message: str, token: Optional[Token] = None) -> ParseError:
        token = token or self.current
        return ParseError(message, self.line, token.column)

    def advance(self) -> Token:
        token = self.current
        self.index += 1
        return token

    def accept(self, text: str) -> bool:
        if self.current.kind == "op" and self.current.text == text:
            self.index += 1
            return True
        return False

    def expect(self, text: str) -> None:
        if not self.accept(text):
            found = self.current.text or "end of input"
            raise self.error(f"expected {text!r}, found {found!r}")

    def parse(self) -> Polynomial:
        result = self.polynomial()
        if self.current.kind != "end":
            raise self.error(f"unexpected {self.current.text!r}")
        return result

    def polynomial(self) -> Polynomial:
        negative = False
        if self.accept("-"):
            negative = True
        else:
            self.accept("+")
        result = self.term()
        if negative:
            result = -result
        while True:
            if self.accept("+"):
                result = result + self.term()
            elif self.accept("-"):
                result = result - self.term()
            else:
                return result

    def term(self) -> Polynomial:
        result = self.factor()
        while True:
            if self.accept("*"):
                result = result * self.factor()
            elif self.current.kind == "op" and self.current.text == "/":
                slash = self.advance()
                divisor = self.factor()
                constant = _as_constant(divisor)
                if constant is None:
                    raise self.error("division is only allowed by a constant", slash)
                if constant == 0:
                    raise self.error("division by zero", slash)
                result = result.scale(1 / constant)
            else:
                return result

    def factor(self) -> Polynomial:
        base = self.atom()
        if self.current.kind == "op" and self.current.text == "^":
            self.advance()
            token = self.advance()
            if token.kind != "number":
                raise self.error("exponent must be a natural number", token)
            return base ** int(token.text)
        return base

    def atom(self) -> Polynomial:
        token = self.advance()
        if token.kind == "number":
            return Polynomial.constant(self.nvars, int(token.text))
        if token.kind == "name":
            if token.text not in self.variables:
                raise self.error(
                    f"unknown variable {token.text!r} (declared: {', '.join(self.variables) or 'none'})",
                    token,
                )
            return Polynomial.variable(self.nvars, self.variables[token.text])
        if token.kind == "op" and token.text == "(":
            inner = self.polynomial()
            self.expect(")")
            return inner
        raise self.error(f"expected a number, variable or '(', found {token.text or 'end of input'!r}", token)


def _as_constant(f: Polynomial) -> Optional[Fraction]:
    if f.is_zero():
        return Fraction(0)
    zero = ExponentVector.zero(f.nvars)
    if set(f.terms) == {zero}:
        return f.terms[zero]
    return None


def natural_key(name: str) -> Tuple:
    """x2 sorts before x10."""
    return tuple(int(part) if part.isdigit() else part for part in re.split(r"(\d+)", name))


def infer_variables(texts: Iterable[str]) -> Tuple[str, ...]:
    names = unique(name for text in texts for name in _NAME.findall(text))
    return tuple(sorted(names, key=natural_key))


def parse_polynomial(
    text: str, variables: Optional[Sequence[str]] = None, line: int = 1, column: int = 1
) -> Polynomial:
    variables = infer_variables([text]) if variables is None else tuple(variables)
    return _Parser(text, variables, line, column).parse()


def parse_monomial(
    text: str, variables: Optional[Sequence[str]] = None, line: int = 1, column: int = 1
) -> ExponentVector:
    f = parse_polynomial(text, variables, line, column)
    if len(f) != 1 or next(iter(f.terms.values())) != 1:
        raise ParseError(f"{text.strip()!r} is not a monomial", line, column)
    return next(iter(f.terms))


def format_monomial(a: Sequence[int], variables: Optional[Sequence[str]] = None) -> str:
    variables = default_variables(len(a)) if variables is None else variables
    factors = [
        name if e == 1 else f"{name}^{e}" for name, e in zip(variables, a) if e
    ]
    return "*".join(factors) or "1"


def _format_coefficient(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_polynomial(
    f: Polynomial, variables: Optional[Sequence[str]] = None, order: Optional[MonomialOrder] = None
) -> str:
    variables = default_variables(f.nvars) if variables is None else variables
    if f.is_zero():
        return "0"
    order = order or MonomialOrder.grlex(f.nvars)
    pieces = []
    for a in sorted(f.terms, key=order.key, reverse=True):
        c = f.terms[a]
        sign = "-" if c < 0 else "+"
        magnitude = abs(c)
        monomial = format_monomial(a, variables)
        if a.is_zero():
            body = _format_coefficient(magnitude)
        elif magnitude == 1:
            body = monomial
        else:
            body = f"{_format_coefficient(magnitude)}*{monomial}"
        if not pieces:
            pieces.append(body if sign == "+" else f"-{body}")
        else:
            pieces.append(f" {sign} {body}")
    return "".join(pieces)


class _Line(NamedTuple):
    number: int
    column: int
    text: str


def _content_lines(text: str) -> List[_Line]:
    lines = []
    for number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0].rstrip()
        if content.strip():
            column = len(content) - len(content.lstrip()) + 1
            lines.append(_Line(number, column, content.strip()))
    return lines


def _split_headers(lines: Sequence[_Line], known: Sequence[str]) -> Tuple[Dict[str, _Line], List[_Line]]:
    headers: Dict[str, _Line] = {}
    body: List[_Line] = []
    for line in lines:
        match = _HEADER.match(line.text)
        if not match:
            body.append(line)
            continue
        key = match.group("key").lower()
        if key not in known:
            raise ParseError(f"unknown header {key!r} (expected one of {', '.join(known)})", line.number, line.column)
        if key in headers:
            raise ParseError(f"duplicate header {key!r}", line.number, line.column)
        value_column = line.column + match.start("value")
        headers[key] = _Line(line.number, value_column, match.group("value"))
    return headers, body


def _parse_names(line: _Line) -> Tuple[str, ...]:
    names = tuple(name for name in re.split(r"[\s,]+", line.text.strip()) if name)
    for name in names:
        if not _NAME.fullmatch(name):
            raise ParseError(f"invalid variable name {name!r}", line.number, line.column)
    if len(set(names)) != len(names):
        raise ParseError("duplicate variable name", line.number, line.column)
    return names


def _parse_integers(line: _Line, what: str) -> Tuple[int, ...]:
    values = []
    for match in re.finditer(r"[^\s,]+", line.text):
        if not re.fullmatch(r"[+-]?[0-9]+", match.group()):
            raise ParseError(f"{what} must be integers, got {match.group()!r}", line.number, line.column + match.start())
        values.append(int(match.group()))
    return tuple(values)


def _parse_weights(line: Optional[_Line], variables: Sequence[str]) -> Optional[WeightVector]:
    if line is None:
        return None
    weights = _parse_integers(line, "weights")
    if len(weights) != len(variables):
        raise ParseError(f"{len(weights)} weights for {len(variables)} variables", line.number, line.column)
    try:
        return WeightVector(weights)
    except ValueError as e:
        raise ParseError(str(e), line.number, line.column)


def parse_order(line: _Line, nvars: int, weights: Optional[WeightVector]) -> MonomialOrder:
    text = line.text.strip()
    try:
        if _NAME.fullmatch(text):
            return MonomialOrder.named(text, nvars, weights)
        rows = [
            _parse_integers(_Line(line.number, line.column, row), "order entries")
            for row in text.split(";")
            if row.strip()
        ]
        if any(len(row) != nvars for row in rows):
            raise ParseError(f"order rows must have {nvars} entries", line.number, line.column)
        return MonomialOrder.from_rows(rows)
    except GradimError as e:
        if isinstance(e, ParseError):
            raise
        raise ParseError(str(e), line.number, line.column)


def parse_monoid(text: str) -> MonoidPresentation:
    """
    Monoid file: optional ``vars:`` and ``weights:`` headers, then one
    monomial per line. ``#`` starts a comment.
    """
    headers, body = _split_headers(_content_lines(text), ("vars", "weights"))
    if "vars" in headers:
        variables = _parse_names(headers["vars"])
    else:
        variables = infer_variables(line.text for line in body)
    weights = _parse_weights(headers.get("weights"), variables)
    generators = []
    for line in body:
        monomial = parse_monomial(line.text, variables, line.number, line.column)
        if monomial.is_zero():
            raise ParseError("the constant monomial 1 is not a generator", line.number, line.column)
        generators.append(monomial)
    return MonoidPresentation(len(variables), tuple(generators), weights, variables)


def format_monoid(M: MonoidPresentation) -> str:
    lines = [f"vars: {', '.join(M.variables)}", f"weights: {' '.join(map(str, M.weights))}"]
    lines.extend(format_monomial(g, M.variables) for g in M.generators)
    return "\n".join(lines) + "\n"


def parse_subalgebra(text: str) -> SubalgebraPresentation:
    """
    Subalgebra file: ``vars:``, optional ``weights:``, optional ``order:``
    (lex, grlex, grevlex, or matrix rows separated by ``;``), then
    ``generators:`` followed by one polynomial per line.
    """
    lines = _content_lines(text)
    split = next((i for i, line in enumerate(lines) if re.fullmatch(r"generators\s*:", line.text)), None)
    if split is None:
        last = lines[-1] if lines else _Line(1, 1, "")
        raise ParseError("missing 'generators:' section", last.number, 1)
    headers, stray = _split_headers(lines[:split], ("vars", "weights", "order"))
    if stray:
        raise ParseError(f"unexpected line before 'generators:': {stray[0].text!r}", stray[0].number, stray[0].column)
    body = lines[split + 1:]
    if "vars" in headers:
        variables = _parse_names(headers["vars"])
    else:
        variables = infer_variables(line.text for line in body)
    weights = _parse_weights(headers.get("weights"), variables)
    if "order" in headers:
        order = parse_order(headers["order"], len(variables), weights)
    else:
        order = MonomialOrder.grlex(len(variables), weights)
    generators = []
    for line in body:
        f = parse_polynomial(line.text, variables, line.number, line.column)
        if f.is_zero():
            raise ParseError("generators must be nonzero", line.number, line.column)
        generators.append(f)
    return SubalgebraPresentation(len(variables), tuple(generators), order, weights, variables)


def parse_series(text: str) -> GradedSeries:
    """Series file: natural numbers h_0, h_1, ... separated by whitespace or commas."""
    values = []
    for line in _content_lines(text):
        for match in re.finditer(r"[^\s,]+", line.text):
            token = match.group()
            if not re.fullmatch(r"[0-9]+", token):
                raise ParseError(
                    f"coefficients must be natural numbers, got {token!r}", line.number, line.column + match.start()
                )
            values.append(int(token))
    if not values:
        raise ParseError("a series file needs at least one coefficient", 1, 1)
    return GradedSeries(tuple(values))


def format_series(h: Iterable[int]) -> str:
    return " ".join(map(str, h))


def parse_denominator(text: str) -> Tuple[int, ...]:
    """``"1,1"`` or ``"2 2"`` is (1 - t)(1 - t) resp. (1 - t^2)^2; empty means 1."""
    line = _Line(1, 1, text)
    values = _parse_integers(line, "denominator exponents")
    if any(a < 1 for a in values):
        raise ParseError("denominator exponents must be >= 1", 1, 1)
    return values


def parse_matrix(text: str) -> RationalMatrix:
    rows = []
    for line in _content_lines(text):
        row = []
        for match in re.finditer(r"\S+", line.text):
            try:
                if not match.group().isascii():
                    raise ValueError(match.group())
                row.append(Fraction(match.group()))
            except (ValueError, ZeroDivisionError):
                raise ParseError(f"not a rational number: {match.group()!r}", line.number, line.column + match.start())
        if rows and len(row) != len(rows[0]):
            raise ParseError(f"expected {len(rows[0])} entries, found {len(row)}", line.number, line.column)
        rows.append(row)
    return RationalMatrix.from_rows(rows)


def format_matrix(m: RationalMatrix) -> str:
    return "".join(" ".join(_format_coefficient(x) for x in row) + "\n" for row in m.rows)


def _read(path: PathLike) -> str:
    """UTF-8 text of a file; undecodable bytes are a parse error at their position."""
    data = Path(path).read_bytes()
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as e:
        line_start = data.rfind(b"\n", 0, e.start) + 1
        line = data.count(b"\n", 0, e.start) + 1
        column = len(data[line_start : e.start].decode("utf-8", errors="replace")) + 1
        raise ParseError(f"invalid UTF-8 byte {data[e.start]:#04x}", line, column) from e


def load_monoid(path: PathLike) -> MonoidPresentation:
    return parse_monoid(_read(path))


def load_subalgebra(path: PathLike) -> SubalgebraPresentation:
    return parse_subalgebra(_read(path))


def load_series(path: PathLike) -> GradedSeries:
    return parse_series(_read(path))


def load_matrix(path: PathLike) -> RationalMatrix:
    return parse_matrix(_read(path))
