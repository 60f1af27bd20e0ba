"""Exact scalars.

Rationals are plain :class:`fractions.Fraction` values, which are always kept
in lowest terms with a positive denominator.  :class:`ModP` is a residue in a
prime field, offered for fast randomized runs.  Every other module only uses
``+ - * /`` and ``==`` on scalars, and freely mixes them with Python ints.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

Scalar = Fraction

_RATIONAL_RE = re.compile(r"^\s*(-?\d+)(?:/(\d+))?\s*$")


def scalar_parse(text: str) -> Fraction:
    """Parse ``-?digits(/digits)?`` into a reduced rational."""
    match = _RATIONAL_RE.match(text)
    if match is None:
        raise ValueError(f"malformed rational {text!r}")
    num = int(match.group(1))
    den = int(match.group(2)) if match.group(2) is not None else 1
    if den == 0:
        raise ZeroDivisionError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def scalar_format(value) -> str:
    """Inverse of :func:`scalar_parse` (``"3/2"``, ``"-4"``)."""
    if isinstance(value, ModP):
        return str(value.value)
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def binomial(n: int, k: int) -> int:
    """C(n, k), and 0 whenever k < 0, k > n or n < 0."""
    if n < 0 or k < 0 or k > n:
        return 0
    return math.comb(n, k)


def is_probable_prime(p: int) -> bool:
    if p < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    for q in small:
        if p % q == 0:
            return p == q
    d, s = p - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    # deterministic for p < 3.3e24
    for a in small:
        x = pow(a, d, p)
        if x in (1, p - 1):
            continue
        for _ in range(s - 1):
            x = x * x % p
            if x == p - 1:
                break
        else:
            return False
    return True


DEFAULT_PRIME = 2**61 - 1


class ModP:
    """Element of GF(p).  Ints and rationals coerce on contact."""

    __slots__ = ("value", "p")

    def __init__(self, value, p: int = DEFAULT_PRIME):
        if isinstance(value, ModP):
            if value.p != p:
                raise ValueError("mixed moduli")
            value = value.value
        elif isinstance(value, Fraction):
            if value.denominator % p == 0:
                raise ZeroDivisionError("denominator vanishes mod p")
            value = value.numerator * pow(value.denominator, -1, p)
        self.value = int(value) % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, ModP):
            if other.p != self.p:
                raise ValueError(f"mixed moduli {self.p} and {other.p}")
            return other
        if isinstance(other, (int, Fraction)):
            return ModP(other, self.p)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return ModP(self.value + other.value, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return ModP(self.value - other.value, self.p)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return ModP(other.value - self.value, self.p)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return ModP(self.value * other.value, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.value == 0:
            raise ZeroDivisionError("division by zero in GF(p)")
        return ModP(self.value * pow(other.value, -1, self.p), self.p)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other / self

    def __neg__(self):
        return ModP(-self.value, self.p)

    def __pos__(self):
        return self

    def __pow__(self, e: int):
        if e < 0:
            return ModP(1, self.p) / ModP(pow(self.value, -e, self.p), self.p)
        return ModP(pow(self.value, e, self.p), self.p)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        return self.value == other.value

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"ModP({self.value}, {self.p})"


class PrimeField:
    """Factory that lifts parsed rationals into GF(p)."""

    def __init__(self, p: int = DEFAULT_PRIME):
        if p <= 2**30 or not is_probable_prime(p):
            raise ValueError(f"modulus must be a prime above 2^30, got {p}")
        self.p = p

    def __call__(self, value) -> ModP:
        return ModP(value, self.p)

    def __repr__(self):
        return f"PrimeField({self.p})"


def rationals(value) -> Fraction:
    """The default field: lift ints/strings/rationals into Fraction."""
    if isinstance(value, str):
        return scalar_parse(value)
    return Fraction(value)


def lift(value):
    """Bring ints and rational text into the rationals; field elements pass through."""
    if isinstance(value, (Fraction, ModP)):
        return value
    if isinstance(value, str):
        return scalar_parse(value)
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"not a scalar: {value!r}")


def lift_all(values) -> tuple:
    return tuple(lift(v) for v in values)


def div(a, b):
    """Exact quotient; never falls back to float for int operands."""
    if isinstance(a, int) and isinstance(b, int):
        return Fraction(a, b)
    return a / b
