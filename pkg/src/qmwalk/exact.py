"""Exact number types: dyadic rationals and Gaussian integers.

Nothing in here touches floating point except the presentation helpers
(``Dyadic.to_decimal``, ``Dyadic.__float__``).
"""

from __future__ import annotations

import decimal
from fractions import Fraction
from functools import total_ordering


class CapacityError(ValueError):
    """A requested level exceeds the materialization or scan cap."""


class InconsistencyError(AssertionError):
    """An internal cross-check failed. Should never be raised."""


@total_ordering
class Dyadic:
    """Exact rational ``m / 2**e`` kept in lowest terms.

    Normal form: ``m`` odd, or ``e == 0`` (integers, including zero).
    """

    __slots__ = ("_m", "_e")

    def __init__(self, numerator: int = 0, exponent: int = 0):
        if exponent < 0:
            numerator <<= -exponent
            exponent = 0
        if numerator == 0:
            exponent = 0
        else:
            tz = (numerator & -numerator).bit_length() - 1
            shift = min(tz, exponent)
            numerator >>= shift
            exponent -= shift
        self._m = numerator
        self._e = exponent

    @property
    def numerator(self) -> int:
        return self._m

    @property
    def exponent(self) -> int:
        return self._e

    @classmethod
    def coerce(cls, x) -> "Dyadic":
        if isinstance(x, Dyadic):
            return x
        if isinstance(x, int):
            return cls(x, 0)
        if isinstance(x, Fraction):
            d = x.denominator
            if d & (d - 1):
                raise ValueError(f"{x} is not dyadic")
            return cls(x.numerator, d.bit_length() - 1)
        raise TypeError(f"cannot convert {type(x).__name__} to Dyadic")

    @classmethod
    def parse(cls, text: str) -> "Dyadic":
        """Parse ``"m/2^e"``, ``"m/d"`` with ``d`` a power of two, or ``"m"``."""
        text = text.strip()
        if "/" not in text:
            return cls(int(text))
        num, den = text.split("/", 1)
        den = den.strip()
        if den.startswith("2^"):
            return cls(int(num), int(den[2:]))
        return cls.coerce(Fraction(int(num), int(den)))

    def _align(self, other: "Dyadic"):
        e = max(self._e, other._e)
        return self._m << (e - self._e), other._m << (e - other._e), e

    def __add__(self, other):
        try:
            other = Dyadic.coerce(other)
        except TypeError:
            return NotImplemented
        a, b, e = self._align(other)
        return Dyadic(a + b, e)

    __radd__ = __add__

    def __neg__(self):
        return Dyadic(-self._m, self._e)

    def __sub__(self, other):
        try:
            other = Dyadic.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            other = Dyadic.coerce(other)
        except TypeError:
            return NotImplemented
        return Dyadic(self._m * other._m, self._e + other._e)

    __rmul__ = __mul__

    def __abs__(self):
        return Dyadic(abs(self._m), self._e)

    def shift(self, k: int) -> "Dyadic":
        """Multiply by ``2**k`` (``k`` may be negative)."""
        return Dyadic(self._m, self._e - k)

    def __eq__(self, other):
        try:
            other = Dyadic.coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self._m == other._m and self._e == other._e

    def __lt__(self, other):
        try:
            other = Dyadic.coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        a, b, _ = self._align(other)
        return a < b

    def __hash__(self):
        return hash(self.to_fraction())

    def __bool__(self):
        return self._m != 0

    def to_fraction(self) -> Fraction:
        return Fraction(self._m, 1 << self._e)

    def __float__(self):
        return float(self.to_fraction())

    def to_decimal(self, digits: int = 12) -> decimal.Decimal:
        ctx = decimal.Context(prec=digits, rounding=decimal.ROUND_HALF_EVEN)
        return ctx.divide(decimal.Decimal(self._m), decimal.Decimal(1 << self._e))

    def is_integer(self) -> bool:
        return self._e == 0

    def __str__(self):
        return f"{self._m}/2^{self._e}"

    def __repr__(self):
        return f"Dyadic({self._m}, {self._e})"


class GaussianInt:
    """Exact ``re + im*i`` with unbounded integer parts."""

    __slots__ = ("re", "im")

    def __init__(self, re: int = 0, im: int = 0):
        self.re = re
        self.im = im

    @classmethod
    def unit(cls, k: int) -> "GaussianInt":
        """``i**k``."""
        return _UNITS[k % 4]

    @classmethod
    def _coerce(cls, x):
        if isinstance(x, GaussianInt):
            return x
        if isinstance(x, int):
            return cls(x, 0)
        raise TypeError

    def __add__(self, other):
        try:
            other = GaussianInt._coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianInt(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianInt(-self.re, -self.im)

    def __sub__(self, other):
        try:
            other = GaussianInt._coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianInt(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            other = GaussianInt._coerce(other)
        except TypeError:
            return NotImplemented
        a, b, c, d = self.re, self.im, other.re, other.im
        return GaussianInt(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers leave the Gaussian integers")
        result = GaussianInt(1, 0)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self) -> "GaussianInt":
        return GaussianInt(self.re, -self.im)

    def norm(self) -> int:
        return self.re * self.re + self.im * self.im

    def __eq__(self, other):
        try:
            other = GaussianInt._coerce(other)
        except TypeError:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __complex__(self):
        return complex(self.re, self.im)

    def __repr__(self):
        return f"GaussianInt({self.re}, {self.im})"

    def __str__(self):
        sign = "-" if self.im < 0 else "+"
        return f"{self.re} {sign} {abs(self.im)}i"


_UNITS = (GaussianInt(1, 0), GaussianInt(0, 1), GaussianInt(-1, 0), GaussianInt(0, -1))


def gauss_pow_1pi(n: int) -> GaussianInt:
    """Return ``(1 + i)**n`` exactly.

    The real and imaginary parts are the integers ``2**(n/2) cos(n pi/4)`` and
    ``2**(n/2) sin(n pi/4)``.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    return GaussianInt(1, 1) ** n
