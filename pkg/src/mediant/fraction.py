"""Exact non-negative rational values and the mediant/neighbour operations.

Everything downstream (census statistics, approximation engines, collinearity
detection) uses :class:`Fraction` as its currency.  Values are immutable,
always reduced, and ordered by integer cross-multiplication; no floating
point is involved in any comparison or construction.
"""

from __future__ import annotations

import decimal
from dataclasses import dataclass
from math import gcd


@dataclass(frozen=True)
class Fraction:
    """A reduced rational p/q with p >= 0 and q >= 1.

    Construction reduces: ``Fraction(2, 4) == Fraction(1, 2)`` and
    ``Fraction(0, 5) == Fraction(0, 1)``.  Python integers are arbitrary
    precision, so numerators and denominators never overflow.
    """

    p: int
    q: int = 1

    def __post_init__(self):
        p, q = self.p, self.q
        if not isinstance(p, int) or not isinstance(q, int):
            raise TypeError("numerator and denominator must be integers")
        if q <= 0:
            raise ValueError("denominator must be a positive integer")
        if p < 0:
            raise ValueError("negative rationals are not supported")
        g = gcd(p, q)  # gcd(0, q) == q, so 0/q canonicalizes to 0/1
        if g > 1:
            object.__setattr__(self, "p", p // g)
            object.__setattr__(self, "q", q // g)

    @classmethod
    def _coprime(cls, p: int, q: int) -> "Fraction":
        # Fast path for callers that already hold a reduced pair
        # (kernel output, convergent recurrences).  Skips gcd.
        self = object.__new__(cls)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)
        return self

    @classmethod
    def parse(cls, text: str) -> "Fraction":
        """Parse ``"p/q"`` or a bare integer string like ``"3"``."""
        s = text.strip()
        if "/" in s:
            num, _, den = s.partition("/")
            return cls(int(num), int(den))
        return cls(int(s), 1)

    def __str__(self) -> str:
        return f"{self.p}/{self.q}"

    def __float__(self) -> float:
        return self.p / self.q

    def __lt__(self, other: "Fraction") -> bool:
        return self.p * other.q < other.p * self.q

    def __le__(self, other: "Fraction") -> bool:
        return self.p * other.q <= other.p * self.q

    def __gt__(self, other: "Fraction") -> bool:
        return self.p * other.q > other.p * self.q

    def __ge__(self, other: "Fraction") -> bool:
        return self.p * other.q >= other.p * self.q


ZERO = Fraction(0, 1)
ONE = Fraction(1, 1)


def reduce(a: int, b: int) -> Fraction:
    """Reduce the pair (a, b) to its canonical fraction; b must be >= 1."""
    return Fraction(a, b)


def mediant(f1: Fraction, f2: Fraction) -> Fraction:
    """The "Freshman sum" (p1+p2)/(q1+q2), reduced.

    For a neighbour pair the result is already co-prime and is the unique
    fraction strictly between the two with denominator <= q1+q2; for
    arbitrary inputs it is simply the reduced component-wise sum.
    """
    return Fraction(f1.p + f2.p, f1.q + f2.q)


def are_neighbours(f1: Fraction, f2: Fraction) -> bool:
    """Determinant test |q1*p2 - p1*q2| == 1."""
    if f1 == f2:
        raise ValueError("neighbour test requires two distinct fractions")
    return abs(f1.q * f2.p - f1.p * f2.q) == 1


def symmetry_partner(f: Fraction) -> Fraction:
    """Mirror p/q about x = 1/2, giving (q-p)/q (always already reduced)."""
    if f.p > f.q:
        raise ValueError("symmetry partner is defined for values in [0, 1]")
    return Fraction._coprime(f.q - f.p, f.q)


def abs_difference(f1: Fraction, f2: Fraction) -> Fraction:
    """|f1 - f2| as an exact fraction."""
    return Fraction(abs(f1.p * f2.q - f2.p * f1.q), f1.q * f2.q)


@dataclass(frozen=True)
class NeighbourPair:
    """Two fractions satisfying lo < hi and the determinant-1 condition."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if not self.lo < self.hi:
            raise ValueError("neighbour pair requires lo < hi")
        if not are_neighbours(self.lo, self.hi):
            raise ValueError(
                f"{self.lo} and {self.hi} are not neighbours "
                "(determinant condition fails)"
            )

    @classmethod
    def parse(cls, text: str) -> "NeighbourPair":
        """Parse ``"p1/q1,p2/q2"``."""
        parts = text.split(",")
        if len(parts) != 2:
            raise ValueError("expected two fractions separated by a comma")
        return cls(Fraction.parse(parts[0]), Fraction.parse(parts[1]))


def parse_decimal(text: str) -> Fraction:
    """Exact fraction for a non-negative decimal string.

    Accepts plain decimals ("0.6180339887") and scientific notation
    ("1e-12").  The string is converted digit-for-digit: "0.1" becomes
    1/10, never a binary float.
    """
    try:
        d = decimal.Decimal(text.strip())
    except decimal.InvalidOperation as exc:
        raise ValueError(f"not a decimal number: {text!r}") from exc
    if not d.is_finite():
        raise ValueError(f"not a finite decimal: {text!r}")
    if d < 0:
        raise ValueError("negative values are not supported")
    num, den = d.as_integer_ratio()
    return Fraction(num, den)


def fixed_decimal(f: Fraction, places: int) -> str:
    """Render f with exactly `places` digits after the point.

    Rounds half-to-even on the exact rational, so the printed digits are
    the correctly rounded decimal expansion (no float drift).
    """
    if places < 0:
        raise ValueError("places must be >= 0")
    scaled = f.p * 10**places
    quo, rem = divmod(scaled, f.q)
    double = 2 * rem
    if double > f.q or (double == f.q and quo % 2 == 1):
        quo += 1
    digits = str(quo).rjust(places + 1, "0")
    if places == 0:
        return digits
    return f"{digits[:-places]}.{digits[-places:]}"


def significant_decimal(f: Fraction, digits: int = 12) -> str:
    """Render f to `digits` significant digits (round half-to-even)."""
    if f.p == 0:
        return "0"
    with decimal.localcontext() as ctx:
        ctx.prec = digits
        value = decimal.Decimal(f.p) / decimal.Decimal(f.q)
    # "f" keeps plain positional notation (no exponent) for small values.
    return format(value, "f")
