"""Exact scalars: half-integers, rationals and rational multiples of powers of pi.

Rationals are plain :class:`fractions.Fraction` values; ``Rat`` is an alias
kept for readability in signatures.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from math import factorial, pi
from numbers import Rational

from .errors import DomainError

Rat = Fraction


def as_fraction(value) -> Fraction:
    """Coerce int, Fraction, HalfInt or a string such as ``"-3/2"`` to Fraction."""
    if isinstance(value, HalfInt):
        return value.to_fraction()
    if isinstance(value, bool):
        raise TypeError("booleans are not numbers here")
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


@total_ordering
@dataclass(frozen=True)
class HalfInt:
    """An element of ½ℤ stored as twice its value."""

    twice: int

    def __post_init__(self):
        if isinstance(self.twice, bool) or not isinstance(self.twice, int):
            raise TypeError("HalfInt.twice must be an int")

    @classmethod
    def of(cls, value) -> HalfInt:
        if isinstance(value, HalfInt):
            return value
        frac = as_fraction(value) * 2
        if frac.denominator != 1:
            raise DomainError(f"{value!r} is not a half-integer")
        return cls(int(frac))

    def to_fraction(self) -> Fraction:
        return Fraction(self.twice, 2)

    @property
    def is_integral(self) -> bool:
        return self.twice % 2 == 0

    def __add__(self, other):
        if isinstance(other, HalfInt):
            return HalfInt(self.twice + other.twice)
        if isinstance(other, int) and not isinstance(other, bool):
            return HalfInt(self.twice + 2 * other)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return HalfInt(-self.twice)

    def __sub__(self, other):
        if isinstance(other, (HalfInt, int)) and not isinstance(other, bool):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            return HalfInt(self.twice * other)
        return NotImplemented

    __rmul__ = __mul__

    def __lt__(self, other):
        if isinstance(other, HalfInt):
            return self.twice < other.twice
        return NotImplemented

    def __abs__(self):
        return HalfInt(abs(self.twice))

    def __str__(self):
        if self.is_integral:
            return str(self.twice // 2)
        return f"{self.twice}/2"

    def to_json(self) -> dict:
        return {"twice": self.twice}

    @classmethod
    def from_json(cls, data: dict) -> HalfInt:
        return cls(int(data["twice"]))


@dataclass(frozen=True)
class PiPower:
    """The exact number ``coeff * pi**(pi_exp_twice / 2)``."""

    coeff: Fraction
    pi_exp_twice: int = 0

    def __post_init__(self):
        coeff = as_fraction(self.coeff)
        object.__setattr__(self, "coeff", coeff)
        if coeff == 0:
            object.__setattr__(self, "pi_exp_twice", 0)

    @classmethod
    def _lift(cls, value) -> PiPower:
        if isinstance(value, PiPower):
            return value
        return cls(as_fraction(value), 0)

    def __mul__(self, other):
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        return PiPower(self.coeff * other.coeff, self.pi_exp_twice + other.pi_exp_twice)

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        if other.coeff == 0:
            raise ZeroDivisionError("division by zero PiPower")
        return PiPower(self.coeff / other.coeff, self.pi_exp_twice - other.pi_exp_twice)

    def __rtruediv__(self, other):
        return self._lift(other) / self

    def __add__(self, other):
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        if self.coeff == 0:
            return other
        if other.coeff == 0:
            return self
        if self.pi_exp_twice != other.pi_exp_twice:
            raise DomainError("cannot add PiPower values with different pi exponents")
        return PiPower(self.coeff + other.coeff, self.pi_exp_twice)

    __radd__ = __add__

    def __neg__(self):
        return PiPower(-self.coeff, self.pi_exp_twice)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __float__(self):
        return float(self.coeff) * pi ** (self.pi_exp_twice / 2)

    def to_float(self) -> float:
        return float(self)

    def decimal(self, digits: int = 12) -> str:
        """Display-only decimal rendering with ``digits`` significant digits."""
        return f"{float(self):.{digits}g}"

    def __str__(self):
        if self.pi_exp_twice == 0:
            return str(self.coeff)
        exp = HalfInt(self.pi_exp_twice)
        power = "π" if exp.twice == 2 else f"π^{exp}" if exp.is_integral else f"π^({exp})"
        if self.coeff == 1:
            return power
        coeff = str(self.coeff) if self.coeff.denominator == 1 else f"({self.coeff})"
        return f"{coeff}·{power}"

    def to_json(self) -> dict:
        return {"coeff": [self.coeff.numerator, self.coeff.denominator], "pi_exp_twice": self.pi_exp_twice}

    @classmethod
    def from_json(cls, data: dict) -> PiPower:
        num, den = data["coeff"]
        return cls(Fraction(int(num), int(den)), int(data["pi_exp_twice"]))


def gamma_half(twice_arg: int) -> PiPower:
    """Γ(twice_arg / 2) for positive integer ``twice_arg``."""
    if twice_arg < 1:
        raise DomainError("gamma_half needs a positive argument")
    if twice_arg % 2 == 0:
        return PiPower(factorial(twice_arg // 2 - 1))
    m = (twice_arg - 1) // 2
    # Γ(m + 1/2) = (2m)! √π / (4^m m!)
    return PiPower(Fraction(factorial(2 * m), 4**m * factorial(m)), 1)


def sphere_volume(n: int) -> PiPower:
    """Volume of the unit sphere S^(n-1) in R^n, i.e. 2 π^(n/2) / Γ(n/2)."""
    if n < 1:
        raise DomainError("sphere_volume needs n >= 1")
    return PiPower(2, n) / gamma_half(n)
