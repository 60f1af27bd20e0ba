"""Root-side objects: R(Y, Z), Sylvester double sums and the multivariate sum.

Multivariate polynomials are never expanded.  They are evaluated at scalar
tuples, where one slot may hold the symbolic variable :data:`x` so that the
result is a univariate polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Sequence

from .field import div, lift, lift_all
from .linalg import det_exact, vandermonde_det
from .poly import Poly, poly_from_roots


@dataclass(frozen=True)
class Var:
    name: str = "x"

    def __repr__(self):
        return self.name


x = Var("x")


def sign(e: int) -> int:
    return -1 if e % 2 else 1


@dataclass(frozen=True)
class SubsetSelector:
    """A subset of ``range(size)`` stored as a bitmask."""

    mask: int
    size: int

    def __post_init__(self):
        if self.mask < 0 or self.mask >> self.size:
            raise ValueError(f"mask {self.mask:#b} does not fit {self.size} elements")

    @property
    def cardinality(self) -> int:
        return bin(self.mask).count("1")

    def indices(self) -> list[int]:
        return [i for i in range(self.size) if self.mask >> i & 1]

    def pick(self, seq: Sequence) -> tuple:
        return tuple(v for i, v in enumerate(seq) if self.mask >> i & 1)

    def rest(self, seq: Sequence) -> tuple:
        return tuple(v for i, v in enumerate(seq) if not self.mask >> i & 1)

    def complement(self) -> "SubsetSelector":
        return SubsetSelector(((1 << self.size) - 1) ^ self.mask, self.size)


def subsets(size: int, k: int) -> Iterator[SubsetSelector]:
    """All k-subsets of range(size) in increasing bitmask order."""
    if k < 0 or k > size:
        return
    masks = sorted(sum(1 << i for i in c) for c in combinations(range(size), k))
    for m in masks:
        yield SubsetSelector(m, size)


def split(seq: Sequence, k: int) -> Iterator[tuple[tuple, tuple]]:
    """(chosen, remaining) pairs over all k-subsets of ``seq``."""
    for s in subsets(len(seq), k):
        yield s.pick(seq), s.rest(seq)


def check_distinct(values: Sequence, what: str = "roots") -> None:
    for i in range(len(values)):
        for j in range(i + 1, len(values)):
            if values[i] == values[j]:
                raise ValueError(f"{what} must be pairwise distinct, got repeated {values[i]}")


def rscalar(Y: Sequence, Z: Sequence):
    """prod (y - z) for purely scalar Y, Z."""
    out = 1
    for y in Y:
        for z in Z:
            out = out * (y - z)
    return out


def rprod(Y: Sequence, Z: Sequence) -> Poly:
    """prod_{y in Y, z in Z} (y - z) as a polynomial in the single variable."""
    variables = {v for v in (*Y, *Z) if isinstance(v, Var)}
    if len(variables) > 1:
        raise ValueError(f"at most one variable allowed, got {sorted(map(str, variables))}")
    scalar = 1
    roots = []
    for y in Y:
        for z in Z:
            yv, zv = isinstance(y, Var), isinstance(z, Var)
            if yv and zv:
                return Poly()
            if yv:
                roots.append(z)
            elif zv:
                # y - x = -(x - y)
                scalar = -scalar
                roots.append(y)
            else:
                scalar = scalar * (y - z)
    return poly_from_roots(roots).scale(scalar)


def syl_double(A: Sequence, B: Sequence, p: int, q: int) -> Poly:
    """Sylvester's double sum Syl_{p,q}(A, B)(x)."""
    A, B = lift_all(A), lift_all(B)
    m, n = len(A), len(B)
    if not (0 <= p <= m and 0 <= q <= n):
        raise ValueError(f"need 0 <= p <= {m} and 0 <= q <= {n}, got p={p}, q={q}")
    a_side = [(Ap, Ar, rscalar(Ap, Ar)) for Ap, Ar in split(A, p)]
    b_side = [(Bp, Br, rscalar(Bp, Br)) for Bp, Br in split(B, q)]
    out = Poly()
    for Ap, Ar, da in a_side:
        for Bp, Br, db in b_side:
            c = rscalar(Ap, Bp) * rscalar(Ar, Br)
            if c == 0:
                continue
            out = out + poly_from_roots(Ap + Bp).scale(div(c, da * db))
    return out


def _sizes_msyl(A, B, d, point):
    m, n = len(A), len(B)
    if not 0 <= d <= n - 1:
        raise ValueError(f"need 0 <= d <= {n - 1}, got d={d}")
    if len(point) != n - d:
        raise ValueError(f"point must have {n - d} entries, got {len(point)}")
    return m, n


def msyl_eval(A: Sequence, B: Sequence, d: int, point: Sequence):
    """MSyl_{0,d}(A, B) evaluated at ``point`` via its subset-sum definition."""
    A, B, point = lift_all(A), lift_all(B), lift_all(point)
    m, n = _sizes_msyl(A, B, d, point)
    f = poly_from_roots(A)
    total = 0
    for Bp, Br in split(B, d):
        num = 1
        for beta in Br:
            num = num * f(beta)
        if num == 0:
            continue
        total = total + div(num * rscalar(point, Bp), rscalar(Br, Bp))
    return sign((m - d) * (n - d)) * total


def _row_coeff(p: Poly, top: int, j: int, s: int):
    """Entry in column j of the row x^s * p, columns listing x^top, x^(top-1), ..."""
    return p.coeff(top - j - s)


def msyl_det_eval(A: Sequence, B: Sequence, d: int, point: Sequence):
    """MSyl_{0,d}(A, B) at ``point`` via the coefficient/Vandermonde determinant ratio."""
    A, B, point = lift_all(A), lift_all(B), lift_all(point)
    m, n = _sizes_msyl(A, B, d, point)
    if d > m:
        raise ValueError(f"determinantal form needs d <= m = {m}, got d={d}")
    check_distinct(point, "point entries")
    f, g = poly_from_roots(A), poly_from_roots(B)
    top = m + n - d - 1
    rows = []
    for poly, shifts in ((f, n - d), (g, m - d)):
        for s in range(shifts - 1, -1, -1):
            row = [_row_coeff(poly, top, j, s) for j in range(m - d)]
            row += [t**s * poly(t) for t in point]
            rows.append(row)
    return div(det_exact(rows), vandermonde_det(point))


def exchange_sides(
    A: Sequence, B: Sequence, p: int, X: Sequence, orientation: str = "body"
) -> tuple[Poly, Poly]:
    """Both sides of the Exchange identity for the variables X.

    ``body``: sum over A' with denominator R(A\\A', A') against the sum over
    B' with denominator R(B', B\\B'); no sign.
    ``intro``: denominator R(A', A\\A') on the left, and the right-hand side
    carries (-1)^(p(m-p)).
    """
    A, B = lift_all(A), lift_all(B)
    X = tuple(v if isinstance(v, Var) else lift(v) for v in X)
    m = len(A)
    if not 0 <= p <= m:
        raise ValueError(f"need 0 <= p <= {m}, got p={p}")
    if len(B) < p:
        raise ValueError(f"need |B| >= p = {p}, got |B| = {len(B)}")
    if len(X) > m - p:
        raise ValueError(f"need |X| <= m - p = {m - p}, got |X| = {len(X)}")
    if orientation not in ("body", "intro"):
        raise ValueError(f"unknown orientation {orientation!r}")
    lhs = Poly()
    for Ap, Ar in split(A, p):
        den = rscalar(Ar, Ap) if orientation == "body" else rscalar(Ap, Ar)
        lhs = lhs + rprod(X, Ap).scale(div(rscalar(Ar, B), den))
    rhs = Poly()
    for Bp, Br in split(B, p):
        rhs = rhs + rprod(X, Bp).scale(div(rscalar(A, Br), rscalar(Bp, Br)))
    if orientation == "intro":
        rhs = rhs.scale(sign(p * (m - p)))
    return lhs, rhs
