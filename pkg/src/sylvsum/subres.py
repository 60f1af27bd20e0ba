"""Coefficient-side objects: subresultants, the resultant, Bezout cofactors."""

from __future__ import annotations

from typing import Sequence

from .field import div, lift_all
from .linalg import PolyColumnMatrix, det_poly_last_col
from .poly import Poly, poly_exact_div, poly_from_roots
from .sylvester import Var, rprod, rscalar, sign, split

ONE = Poly.constant(1)


def _degrees(f: Poly, g: Poly) -> tuple[int, int]:
    if f.is_zero() or g.is_zero():
        raise ValueError("f and g must be nonzero")
    return f.degree, g.degree


def sres_admissible(m: int, n: int, d: int) -> bool:
    if d < 0 or d > min(m, n):
        return False
    return not (d == m == n)


def _block(f: Poly, g: Poly, d: int) -> list[list]:
    """The m+n-2d rows of numeric coefficients shared by Sres_d, F_d and G_d."""
    m, n = f.degree, g.degree
    top = m + n - d - 1
    width = m + n - 2 * d - 1
    rows = []
    for poly, count in ((f, n - d), (g, m - d)):
        for s in range(count - 1, -1, -1):
            rows.append([poly.coeff(top - j - s) for j in range(width)])
    return rows


def _shifts(count: int, poly: Poly) -> list[Poly]:
    return [poly.shift(s) for s in range(count - 1, -1, -1)]


def sres(f: Poly, g: Poly, d: int) -> Poly:
    """Subresultant Sres_d(f, g) as a determinant with polynomial last column."""
    m, n = _degrees(f, g)
    if not sres_admissible(m, n, d):
        raise ValueError(f"Sres_{d} undefined for deg f = {m}, deg g = {n}")
    column = _shifts(n - d, f) + _shifts(m - d, g)
    return det_poly_last_col(PolyColumnMatrix(_block(f, g, d), column))


def resultant(f: Poly, g: Poly):
    m, n = _degrees(f, g)
    if m < 1 and n < 1:
        raise ValueError("resultant needs deg f >= 1 or deg g >= 1")
    return sres(f, g, 0).coeff(0)


def _check_k(m: int, n: int, k: int) -> None:
    if not 0 <= k <= min(m - 1, n - 1):
        raise ValueError(f"need 0 <= k <= {min(m - 1, n - 1)}, got k={k}")


def bezout_cofactors_det(f: Poly, g: Poly, k: int) -> tuple[Poly, Poly]:
    """(F_k, G_k) with Sres_k = F_k f + G_k g, from their determinant forms."""
    m, n = _degrees(f, g)
    _check_k(m, n, k)
    block = _block(f, g, k)
    zero = Poly()
    f_col = _shifts(n - k, ONE) + [zero] * (m - k)
    g_col = [zero] * (n - k) + _shifts(m - k, ONE)
    F = det_poly_last_col(PolyColumnMatrix(block, f_col))
    G = det_poly_last_col(PolyColumnMatrix(block, g_col))
    return F, G


def cofactors_from_roots(A: Sequence, B: Sequence, k: int) -> tuple[Poly, Poly]:
    """F_k, G_k as subset sums over the roots of f and g."""
    A, B = lift_all(A), lift_all(B)
    m, n = len(A), len(B)
    _check_k(m, n, k)
    F = Poly()
    for Bp, Br in split(B, k + 1):
        F = F + poly_from_roots(Br).scale(div(rscalar(A, Br), rscalar(Bp, Br)))
    G = Poly()
    for Ap, Ar in split(A, k + 1):
        G = G + poly_from_roots(Ar).scale(div(rscalar(Ar, B), rscalar(Ar, Ap)))
    return F.scale(sign(m - k)), G.scale(sign(m - k + 1))


def _rational_subset_sum(C: tuple, other: tuple, size: int, common: Poly) -> Poly:
    """sum over C' of R(C \\ C', other) / R(C', C \\ C'), times ``common``.

    C may contain the variable, so each term is rational in x; ``common``
    must clear every denominator.  The result is exact or this raises.
    """
    total = Poly()
    for Cp, Cr in split(C, size):
        num = rprod(Cr, other)
        den = rprod(Cp, Cr)
        total = total + poly_exact_div(num * common, den)
    return total


def cofactors_exchange_form(A: Sequence, B: Sequence, k: int) -> tuple[Poly, Poly]:
    """F_k, G_k as sums over (k+1)-subsets of A u {x} and B u {x}."""
    A, B = lift_all(A), lift_all(B)
    m, n = len(A), len(B)
    _check_k(m, n, k)
    xv = Var("x")
    f, g = poly_from_roots(A), poly_from_roots(B)
    F = poly_exact_div(_rational_subset_sum(A + (xv,), B, k + 1, f), f)
    G = poly_exact_div(_rational_subset_sum(B + (xv,), A, k + 1, g), g)
    return F.scale(sign(k * (m - k))), G.scale(sign(m * (n - k)))
