"""Schur polynomials by bialternant evaluation, and the Schur forms of F_k, G_k."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .field import div, lift, lift_all
from .linalg import det_exact, matmul, shape, vandermonde, vandermonde_det
from .poly import Poly, poly_from_roots
from .subres import bezout_cofactors_det
from .sylvester import check_distinct, sign


@dataclass(frozen=True)
class Partition:
    parts: tuple

    def __post_init__(self):
        parts = tuple(int(v) for v in self.parts)
        object.__setattr__(self, "parts", parts)
        if any(v < 0 for v in parts):
            raise ValueError(f"negative part in {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts must be weakly decreasing: {parts}")

    def __len__(self):
        return len(self.parts)

    def exponents(self) -> list[int]:
        """lambda_j + l - j for j = 1..l."""
        ell = len(self.parts)
        return [lam + ell - 1 - j for j, lam in enumerate(self.parts)]

    @classmethod
    def rectangle(cls, width: int, height: int, length: int) -> "Partition":
        """(width^height; 0^(length-height))."""
        return cls((width,) * height + (0,) * (length - height))


def schur_eval(lam: Partition, X: Sequence):
    """s_lambda(X) as det(x_i^(lambda_j + l - j)) / det V(X)."""
    X = lift_all(X)
    if len(X) != len(lam):
        raise ValueError(f"{len(lam)} parts but {len(X)} variables")
    check_distinct(X, "Schur variables")
    numerator = [[x_i**e for x_i in X] for e in lam.exponents()]
    return div(det_exact(numerator), vandermonde_det(X))


def _weighted_vandermonde(points: Sequence, weight: Poly, k: int, m: int) -> list[list]:
    """Rows weight(c) c^e for e = m-k-1..0, then c^e for e = k..0; one column per point."""
    rows = [[weight(c) * c**e for c in points] for e in range(m - k - 1, -1, -1)]
    rows += [[c**e for c in points] for e in range(k, -1, -1)]
    return rows


def cofactor_schur_det_eval(roots: Sequence, other_poly: Poly, k: int, t, which: str = "F"):
    """Evaluate F_k(f, g)(t) or G_k(f, g)(t) as a ratio of determinants.

    For ``which="F"`` pass roots = A and other_poly = g; for ``"G"`` pass
    roots = B and other_poly = f.
    """
    roots, t = lift_all(roots), lift(t)
    size = len(roots)
    other_deg = other_poly.degree
    if which == "F":
        m, n = size, other_deg
    elif which == "G":
        m, n = other_deg, size
    else:
        raise ValueError(f"which must be 'F' or 'G', got {which!r}")
    if not 0 <= k <= min(m - 1, n - 1):
        raise ValueError(f"need 0 <= k <= {min(m - 1, n - 1)}, got k={k}")
    if t in roots:
        raise ValueError(f"evaluation point {t} collides with a root")
    points = roots + (t,)
    check_distinct(points, "roots")
    # size - k - 1 weighted rows then k + 1 plain rows
    M = _weighted_vandermonde(points, other_poly, k, size)
    ratio = div(det_exact(M), vandermonde_det(points))
    s = sign(m - k) if which == "F" else sign((m - k - 1) * (n - k))
    return s * ratio


def schur_special_case(A: Sequence, n: int, k: int, t) -> tuple:
    """(F_k(f, x^n)(t), (-1)^(m-k) s_lambda(A u {t})) for lambda = ((n-k-1)^(m-k); 0^(k+1))."""
    A, t = lift_all(A), lift(t)
    m = len(A)
    if not 0 <= k <= min(m - 1, n - 1):
        raise ValueError(f"need 0 <= k <= {min(m - 1, n - 1)}, got k={k}")
    points = A + (t,)
    check_distinct(points, "A u {t}")
    f = poly_from_roots(A)
    F, _ = bezout_cofactors_det(f, Poly.monomial(n), k)
    lam = Partition.rectangle(n - k - 1, m - k, m + 1)
    return F(t), sign(m - k) * schur_eval(lam, points)


def banded_factor(g: Poly, m: int, k: int) -> list[list]:
    """(m+1) x (m+n-k): m-k shifted rows g_n..g_0 over [0 | Id_{k+1}]."""
    n = g.degree
    width = m + n - k
    rows = []
    for i in range(m - k):
        row = [0] * width
        for j in range(n + 1):
            row[i + j] = g.coeff(n - j)
        rows.append(row)
    for i in range(k + 1):
        row = [0] * width
        row[width - k - 1 + i] = 1
        rows.append(row)
    return rows


def cauchy_binet_factorization_check(A: Sequence, g: Poly, k: int, t) -> bool:
    """Check the weighted Vandermonde matrix factors as banded(g) . V_{m+n-k}(A u {t}).

    Also checks the determinant against the Cauchy-Binet sum of maximal minors.
    """
    A, t = lift_all(A), lift(t)
    m, n = len(A), g.degree
    if not 0 <= k <= min(m - 1, n - 1):
        raise ValueError(f"need 0 <= k <= {min(m - 1, n - 1)}, got k={k}")
    points = A + (t,)
    check_distinct(points, "A u {t}")
    lhs = _weighted_vandermonde(points, g, k, m)
    band = banded_factor(g, m, k)
    V = vandermonde(points, m + n - k)
    rhs = matmul(band, V)
    if shape(lhs) != shape(rhs):
        raise AssertionError(f"shape mismatch {shape(lhs)} vs {shape(rhs)}")
    if lhs != rhs:
        return False
    total = 0
    for cols in combinations(range(m + n - k), m + 1):
        minor_b = [[row[c] for c in cols] for row in band]
        db = det_exact(minor_b)
        if db == 0:
            continue
        total = total + db * det_exact([V[c] for c in cols])
    return total == det_exact(lhs)


def cofactor_schur_expansion(A: Sequence, g: Poly, k: int):
    """F_k(f, g) as a list of (coefficient, Partition) pairs over s_lambda(A u {x}).

    Each maximal minor of the banded factor picks Vandermonde rows whose
    exponents e_1 > ... > e_{m+1} give lambda_j = e_j - (m+1-j).
    """
    A = lift_all(A)
    m, n = len(A), g.degree
    if not 0 <= k <= min(m - 1, n - 1):
        raise ValueError(f"need 0 <= k <= {min(m - 1, n - 1)}, got k={k}")
    width = m + n - k
    band = banded_factor(g, m, k)
    terms = []
    for cols in combinations(range(width), m + 1):
        db = det_exact([[row[c] for c in cols] for row in band])
        if db == 0:
            continue
        exps = [width - 1 - c for c in cols]
        lam = Partition(tuple(e - (m - j) for j, e in enumerate(exps)))
        terms.append((sign(m - k) * db, lam))
    return terms
