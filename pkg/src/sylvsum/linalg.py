"""Exact dense determinants, Vandermonde matrices, polynomial-column determinants.

Matrices are plain lists of rows.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .field import div
from .poly import Poly

Matrix = list


def shape(M: Sequence[Sequence]) -> tuple[int, int]:
    rows = len(M)
    cols = len(M[0]) if rows else 0
    if any(len(r) != cols for r in M):
        raise ValueError("ragged matrix")
    return rows, cols


def _is_rational(M) -> bool:
    return all(isinstance(v, (int, Fraction)) for row in M for v in row)


def _bareiss_int(M: list[list[int]]) -> int:
    n = len(M)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k] != 0:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = M[k][k]
        rk = M[k]
        for i in range(k + 1, n):
            ri = M[i]
            a = ri[k]
            for j in range(k + 1, n):
                ri[j] = (pivot * ri[j] - a * rk[j]) // prev
            ri[k] = 0
        prev = pivot
    return sign * M[n - 1][n - 1]


def _gauss(M: list[list]):
    n = len(M)
    det = 1
    for k in range(n):
        piv = next((i for i in range(k, n) if M[i][k] != 0), None)
        if piv is None:
            return 0 * M[0][0]
        if piv != k:
            M[k], M[piv] = M[piv], M[k]
            det = -det
        pivot = M[k][k]
        det = det * pivot
        inv = div(1, pivot)
        for i in range(k + 1, n):
            factor = M[i][k] * inv
            if factor == 0:
                continue
            for j in range(k + 1, n):
                M[i][j] = M[i][j] - factor * M[k][j]
    return det


def det_exact(M: Sequence[Sequence]):
    """Exact determinant; 1 for the empty matrix.

    Rational input is scaled row-wise to integers and run through Bareiss
    fraction-free elimination.  Other field elements (GF(p)) use Gaussian
    elimination.
    """
    rows, cols = shape(M)
    if rows != cols:
        raise ValueError(f"det of non-square {rows}x{cols} matrix")
    if rows == 0:
        return Fraction(1)
    if _is_rational(M):
        scale = 1
        work = []
        for row in M:
            den = math.lcm(*(Fraction(v).denominator for v in row))
            scale *= den
            work.append([int(Fraction(v) * den) for v in row])
        return Fraction(_bareiss_int(work), scale)
    return _gauss([list(r) for r in M])


@dataclass(frozen=True)
class PolyColumnMatrix:
    """Square matrix whose last column holds polynomials.

    ``block`` is r x (r-1) scalars, ``column`` the r polynomial entries.
    """

    block: tuple
    column: tuple

    def __post_init__(self):
        r = len(self.column)
        object.__setattr__(self, "block", tuple(tuple(row) for row in self.block))
        object.__setattr__(self, "column", tuple(self.column))
        if len(self.block) != r or any(len(row) != r - 1 for row in self.block):
            raise ValueError(f"block must be {r}x{r - 1} for a {r}-entry column")

    @property
    def size(self) -> int:
        return len(self.column)

    def evaluate(self, t) -> list[list]:
        return [list(row) + [p(t)] for row, p in zip(self.block, self.column)]


def det_poly_last_col(M: PolyColumnMatrix) -> Poly:
    """Laplace expansion along the polynomial column."""
    r = M.size
    out = Poly()
    for i, p in enumerate(M.column):
        if p.is_zero():
            continue
        minor = [row for j, row in enumerate(M.block) if j != i]
        c = det_exact(minor)
        if c == 0:
            continue
        if (i + r - 1) % 2:
            c = -c
        out = out + p.scale(c)
    return out


def vandermonde(X: Sequence, ell: int) -> Matrix:
    """ell x |X| matrix, row of exponent ell-1 on top down to exponent 0."""
    if ell < 0:
        raise ValueError("negative row count")
    return [[x**e for x in X] for e in range(ell - 1, -1, -1)]


def vandermonde_det(X: Sequence):
    """prod_{i<j} (x_i - x_j)."""
    out = 1
    for i in range(len(X)):
        for j in range(i + 1, len(X)):
            out = out * (X[i] - X[j])
    return out


def matmul(A: Sequence[Sequence], B: Sequence[Sequence]) -> Matrix:
    ra, ca = shape(A)
    rb, cb = shape(B)
    if ca != rb:
        raise ValueError(f"cannot multiply {ra}x{ca} by {rb}x{cb}")
    return [[sum((A[i][k] * B[k][j] for k in range(ca)), 0) for j in range(cb)] for i in range(ra)]


def identity(n: int) -> Matrix:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def transpose(M: Sequence[Sequence]) -> Matrix:
    return [list(col) for col in zip(*M)]
