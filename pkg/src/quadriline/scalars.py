"""Exact scalar arithmetic: unbounded rationals and odd prime fields.

Rational values are plain :class:`fractions.Fraction`; prime-field values are
:class:`FpElement`.  Both support ``+ - * / **``, exact equality and truthiness
(zero is falsy), so every layer above this one is written once and runs over
either field.  Characteristic 2 is rejected outright: midpoints and the
reflection step of normalization both need division by 2.

A :class:`Ratio` is a point of the projective line, used for slopes and aspect
ratios.  It is stored in canonical form (last nonzero entry scaled to 1), which
makes equality and hashing structural.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional

from .errors import FieldError, ParseError, PreconditionError

_RATIONAL_RE = re.compile(r"[+-]?\d+(?:/\d+)?\Z")
_INT_RE = re.compile(r"[+-]?\d+\Z")


class FpElement:
    """Canonical residue in [0, p), with field arithmetic via operators."""

    __slots__ = ("value", "field")

    def __init__(self, value, field):
        self.value = value % field.p
        self.field = field

    def _coerce(self, other):
        if isinstance(other, FpElement):
            if other.field.p != self.field.p:
                raise FieldError("mixed moduli %d and %d" % (self.field.p, other.field.p))
            return other.value
        if isinstance(other, int):
            return other
        return None

    def __add__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return FpElement(self.value + v, self.field)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return FpElement(self.value - v, self.field)

    def __rsub__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return FpElement(v - self.value, self.field)

    def __mul__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return FpElement(self.value * v, self.field)

    __rmul__ = __mul__

    def __truediv__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        v %= self.field.p
        if v == 0:
            raise ZeroDivisionError("division by zero in F_%d" % self.field.p)
        return FpElement(self.value * pow(v, self.field.p - 2, self.field.p), self.field)

    def __rtruediv__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        if self.value == 0:
            raise ZeroDivisionError("division by zero in F_%d" % self.field.p)
        inv = pow(self.value, self.field.p - 2, self.field.p)
        return FpElement(v * inv, self.field)

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        return FpElement(pow(self.value, exponent, self.field.p), self.field)

    def __neg__(self):
        return FpElement(-self.value, self.field)

    def __eq__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return self.value == v % self.field.p

    def __hash__(self):
        return hash((self.field.p, self.value))

    def __bool__(self):
        return self.value != 0

    def __str__(self):
        return str(self.value)

    def __repr__(self):
        return f"FpElement({self.value} mod {self.field.p})"


def _is_odd_prime(p):
    if p < 3 or p % 2 == 0:
        return False
    for d in range(3, math.isqrt(p) + 1, 2):
        if p % d == 0:
            return False
    return True


class RationalField:
    """The field of arbitrary-precision rationals."""

    char = 0
    name = "rational"
    # Projective 9-tuples over the rationals are scaled so the last
    # nonzero coordinate is 1.
    pivot = "last"

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def from_int(self, n: int) -> Fraction:
        return Fraction(n)

    def parse(self, text: str) -> Fraction:
        text = text.strip()
        if not _RATIONAL_RE.match(text):
            raise ParseError(f"not a rational literal: {text!r}")
        try:
            return Fraction(text)
        except ZeroDivisionError:
            raise ParseError(f"zero denominator in literal {text!r}") from None

    def format(self, x: Fraction) -> str:
        return str(x)

    def is_square(self, x: Fraction) -> bool:
        if x < 0:
            return False
        n, d = x.numerator, x.denominator
        return math.isqrt(n) ** 2 == n and math.isqrt(d) ** 2 == d

    def sqrt(self, x: Fraction) -> Optional[Fraction]:
        """Exact square root, or None when x is not a square in the field."""
        if x < 0:
            return None
        n, d = x.numerator, x.denominator
        rn, rd = math.isqrt(n), math.isqrt(d)
        if rn * rn != n or rd * rd != d:
            return None
        return Fraction(rn, rd)

    def elements(self):
        raise FieldError("cannot enumerate the rationals")

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("rational")

    def __repr__(self):
        return "RationalField()"


class PrimeField:
    """The field F_p for an odd prime p."""

    name = "prime"
    # Leading nonzero coordinate is scaled to 1 for projective 9-tuples.
    pivot = "first"

    def __init__(self, p: int):
        if p == 2:
            raise FieldError("characteristic 2 is not supported")
        if not _is_odd_prime(p):
            raise FieldError(f"modulus {p} is not an odd prime")
        self.p = p
        self.char = p

    def zero(self):
        return FpElement(0, self)

    def one(self):
        return FpElement(1, self)

    def from_int(self, n: int) -> FpElement:
        return FpElement(n, self)

    def parse(self, text: str) -> FpElement:
        text = text.strip()
        if not _INT_RE.match(text):
            raise ParseError(f"not an integer literal: {text!r}")
        return FpElement(int(text), self)

    def format(self, x: FpElement) -> str:
        return str(x.value)

    def is_square(self, x: FpElement) -> bool:
        if x.value == 0:
            return True
        return pow(x.value, (self.p - 1) // 2, self.p) == 1

    def sqrt(self, x: FpElement) -> Optional[FpElement]:
        """Exact square root via Euler's criterion plus deterministic search."""
        if x.value == 0:
            return self.zero()
        if not self.is_square(x):
            return None
        for r in range(1, self.p // 2 + 1):
            if r * r % self.p == x.value:
                return FpElement(r, self)
        raise FieldError(f"square root search failed in F_{self.p}")  # unreachable

    def elements(self):
        return (FpElement(v, self) for v in range(self.p))

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("prime", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"


QQ = RationalField()


def scalar_parse(text: str, field):
    """Parse a number literal in the given field's grammar."""
    return field.parse(text)


class Root(NamedTuple):
    """A root of a quadratic, with its multiplicity (1 or 2)."""

    value: object
    multiplicity: int


def solve_quadratic(field, a, b, c):
    """All roots of a*X^2 + b*X + c in the field, each reported once.

    Returns a list of :class:`Root`; a double root appears once with
    multiplicity 2.  The list is empty when the discriminant is not a square
    in the field (no field extension is ever adjoined).  The identically zero
    polynomial has no sensible root set and raises ``PreconditionError``;
    callers that care about that case (the twin-pair degeneration) detect it
    themselves.
    """
    if not a and not b and not c:
        raise PreconditionError("all quadratic coefficients are zero")
    if not a:
        if not b:
            return []  # c != 0: no roots
        return [Root(-c / b, 1)]
    disc = b * b - 4 * a * c
    if not disc:
        return [Root(-b / (2 * a), 2)]
    r = field.sqrt(disc)
    if r is None:
        return []
    return [Root((-b + r) / (2 * a), 1), Root((-b - r) / (2 * a), 1)]


@dataclass(frozen=True)
class Ratio:
    """A point [num : den] of the projective line over the working field.

    Canonical form: the last nonzero entry is 1, i.e. affine ratios are stored
    as (value, 1) and the infinite ratio as (1, 0).  Use :meth:`of` rather
    than the raw constructor so canonicalization always runs.
    """

    num: object
    den: object

    @staticmethod
    def of(num, den) -> "Ratio":
        if den:
            return Ratio(num / den, den / den)
        if num:
            return Ratio(num / num, den)
        raise ParseError("0/0 is not a point of the projective line")

    def orthogonal(self) -> "Ratio":
        """The ratio s/t -> -t/s (orthogonal slope)."""
        return Ratio.of(-self.den, self.num)

    @property
    def is_infinite(self) -> bool:
        return not self.den

    def __str__(self):
        if not self.den:
            return "1/0"
        return str(self.num)


def ratio_parse(text: str, field) -> Ratio:
    """Parse 's/t' (integer numerator and denominator) or a single scalar."""
    text = text.strip()
    if "/" in text:
        parts = text.split("/")
        if len(parts) == 2 and _INT_RE.match(parts[0]) and _INT_RE.match(parts[1]):
            return Ratio.of(field.from_int(int(parts[0])), field.from_int(int(parts[1])))
    if field.name == "rational" and _RATIONAL_RE.match(text):
        return Ratio.of(field.parse(text), field.one())
    if _INT_RE.match(text):
        return Ratio.of(field.parse(text), field.one())
    raise ParseError(f"not a ratio literal: {text!r}")


def ratio_format(r: Ratio, field) -> str:
    if r.is_infinite:
        return "1/0"
    return field.format(r.num)
