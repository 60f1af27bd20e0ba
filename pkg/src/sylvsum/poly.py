"""Dense univariate polynomials over an exact field."""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, Sequence

from .field import div, scalar_format, scalar_parse

NEG_INF = float("-inf")


def _trim(coeffs) -> tuple:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class Poly:
    """Immutable polynomial; ``coeffs[i]`` is the coefficient of x**i.

    The zero polynomial has no coefficients and degree ``-inf``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        object.__setattr__(self, "coeffs", _trim(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    def __reduce__(self):
        return (Poly, (self.coeffs,))

    @classmethod
    def constant(cls, c) -> "Poly":
        return cls((c,))

    @classmethod
    def x(cls) -> "Poly":
        return cls((0, 1))

    @classmethod
    def monomial(cls, e: int, c=1) -> "Poly":
        return cls([0] * e + [c])

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else 0

    def coeff(self, i: int):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __call__(self, t):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def __eq__(self, other):
        if not isinstance(other, Poly):
            if isinstance(other, (int, Fraction)):
                other = Poly.constant(other)
            else:
                return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __neg__(self):
        return Poly(-c for c in self.coeffs)

    def __add__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(out)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if not isinstance(other, Poly):
            if isinstance(other, (int, Fraction)) or hasattr(other, "p"):
                return self.scale(other)
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                out[i + j] = out[i + j] + ca * cb
        return Poly(out)

    def __rmul__(self, other):
        return self * other

    def __pow__(self, e: int):
        out = Poly.constant(1)
        for _ in range(e):
            out = out * self
        return out

    def scale(self, c) -> "Poly":
        if c == 0:
            return Poly()
        return Poly(c * a for a in self.coeffs)

    def shift(self, e: int) -> "Poly":
        """Multiply by x**e."""
        if not self.coeffs:
            return self
        return Poly([0] * e + list(self.coeffs))

    def __divmod__(self, other: "Poly"):
        return poly_divmod(self, other)

    def __repr__(self):
        return f"Poly({render(self)!r})"

    def __str__(self):
        return render(self)


def _as_poly(obj):
    if isinstance(obj, Poly):
        return obj
    if isinstance(obj, (int, Fraction)) or hasattr(obj, "p"):
        return Poly.constant(obj)
    return NotImplemented


def poly_from_roots(roots: Sequence) -> Poly:
    """Monic polynomial prod (x - r) over ``roots``; 1 for no roots."""
    coeffs = [1]
    for r in roots:
        # multiply by (x - r) in place
        nxt = [0] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            nxt[i + 1] = nxt[i + 1] + c
            nxt[i] = nxt[i] - r * c
        coeffs = nxt
    return Poly(coeffs)


def poly_eval(p: Poly, t):
    return p(t)


def poly_arith(a: Poly, b, op: str) -> Poly:
    """``op`` is one of add, sub, mul, scale (``b`` is a scalar for scale)."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "scale":
        return a.scale(b)
    raise ValueError(f"unknown op {op!r}")


def poly_divmod(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a.coeffs)
    db = len(b.coeffs) - 1
    if len(rem) - 1 < db:
        return Poly(), a
    quo = [0] * (len(rem) - db)
    lead = b.coeffs[-1]
    for i in range(len(rem) - 1, db - 1, -1):
        c = rem[i]
        if c == 0:
            continue
        c = div(c, lead)
        quo[i - db] = c
        for j, cb in enumerate(b.coeffs):
            rem[i - db + j] = rem[i - db + j] - c * cb
    return Poly(quo), Poly(rem[:db])


def poly_exact_div(a: Poly, b: Poly) -> Poly:
    q, r = poly_divmod(a, b)
    if not r.is_zero():
        raise ArithmeticError(f"{a} is not divisible by {b}")
    return q


def poly_interpolate(xs: Sequence, ys: Sequence) -> Poly:
    """Lagrange interpolation through (xs[i], ys[i]); xs pairwise distinct."""
    if len(xs) != len(ys):
        raise ValueError("xs and ys differ in length")
    out = Poly()
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        others = [xj for j, xj in enumerate(xs) if j != i]
        denom = 1
        for xj in others:
            denom = denom * (xi - xj)
        out = out + poly_from_roots(others).scale(div(yi, denom))
    return out


def render(p: Poly, var: str = "x") -> str:
    """Descending powers with explicit signs, e.g. ``-4x + 10``."""
    if p.is_zero():
        return "0"
    parts = []
    for e in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[e]
        if c == 0:
            continue
        neg = _is_negative(c)
        mag = -c if neg else c
        text = scalar_format(mag)
        if "/" in text and e > 0:
            text = f"({text})"
        if e > 0:
            mono = var if e == 1 else f"{var}^{e}"
            term = mono if text == "1" else f"{text}{mono}"
        else:
            term = text
        if not parts:
            parts.append(f"-{term}" if neg else term)
        else:
            parts.append(f"- {term}" if neg else f"+ {term}")
    return " ".join(parts)


def _is_negative(c) -> bool:
    if hasattr(c, "p"):
        return False
    return c < 0


def to_json_obj(p: Poly) -> dict:
    return {"coeffs": [scalar_format(c) for c in p.coeffs]}


def from_json_obj(obj: dict, field=None) -> Poly:
    lift = field or (lambda v: v)
    return Poly(lift(scalar_parse(c)) for c in obj["coeffs"])


def to_json(p: Poly) -> str:
    return json.dumps(to_json_obj(p))


def from_json(text: str, field=None) -> Poly:
    return from_json_obj(json.loads(text), field)
