"""Exact scalar arithmetic: reduced rationals and half-integers.

Everything downstream works with exponents living on a lattice ``a + Z`` where
``a`` has denominator 1 or 2, so the two types here are a reduced rational
(backed by the stdlib Fraction) and a validated half-integer.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "Rational",
    "HalfInt",
    "ZeroDenominator",
    "RangeExceeded",
    "rational",
    "rat",
    "rat_text",
    "parse_rational",
    "half",
]

# half-integers are capped so runaway recursions surface as errors, not hangs
_TWICE_LIMIT = 1000


class ZeroDenominator(ValueError):
    """Raised when a rational is built with denominator zero."""


class RangeExceeded(ValueError):
    """Raised when a half-integer leaves the supported window."""


class Rational(Fraction):
    """A reduced rational number.

    Normalization (gcd reduction, positive denominator) is inherited from
    Fraction; the subclass only pins down the text form used across the
    package.
    """

    __slots__ = ()

    def __str__(self) -> str:
        return rat_text(self)

    def __repr__(self) -> str:
        return f"Rational({rat_text(self)!r})"


def rational(numerator, denominator=1) -> Rational:
    """Build a reduced rational; denominator zero raises ZeroDenominator."""
    try:
        return Rational(numerator, denominator)
    except ZeroDivisionError as exc:
        raise ZeroDenominator(f"denominator must be nonzero: {numerator}/{denominator}") from exc


def rat(x) -> Rational:
    """Coerce ints, Fractions or 'p/q' strings to Rational."""
    if isinstance(x, Rational):
        return x
    if isinstance(x, str):
        return parse_rational(x)
    if isinstance(x, (int, Fraction)):
        return Rational(x)
    raise TypeError(f"cannot coerce {x!r} to Rational")


def parse_rational(text: str) -> Rational:
    text = text.strip()
    if "/" in text:
        num, _, den = text.partition("/")
        return rational(int(num.strip()), int(den.strip()))
    return Rational(int(text))


def rat_text(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class HalfInt:
    """An element of (1/2)Z stored as twice its value."""

    twice_value: int

    def __post_init__(self) -> None:
        if not isinstance(self.twice_value, int):
            raise TypeError("twice_value must be an int")
        if abs(self.twice_value) > _TWICE_LIMIT:
            raise RangeExceeded(f"half-integer out of range: {self.twice_value}/2")

    @property
    def value(self) -> Rational:
        return Rational(self.twice_value, 2)

    @classmethod
    def from_rational(cls, q) -> "HalfInt":
        q = rat(q)
        if q.denominator not in (1, 2):
            raise ValueError(f"not a half-integer: {q}")
        return cls(q.numerator * (2 // q.denominator))

    def __add__(self, other: "HalfInt") -> "HalfInt":
        return HalfInt(self.twice_value + other.twice_value)

    def __sub__(self, other: "HalfInt") -> "HalfInt":
        return HalfInt(self.twice_value - other.twice_value)

    def __neg__(self) -> "HalfInt":
        return HalfInt(-self.twice_value)

    def __lt__(self, other: "HalfInt") -> bool:
        return self.twice_value < other.twice_value

    def __le__(self, other: "HalfInt") -> bool:
        return self.twice_value <= other.twice_value

    def __str__(self) -> str:
        return rat_text(self.value)


def half(x) -> HalfInt:
    """Coerce a number or 'p/q' string to a HalfInt."""
    if isinstance(x, HalfInt):
        return x
    return HalfInt.from_rational(rat(x))
