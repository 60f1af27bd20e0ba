"""Exact verification of the identities linking double sums, subresultants and cofactors.

Every check compares exact values.  Multivariate identities are certified on
product grids with (degree bound + 1) abscissae per variable, which proves
them over Q when both sides have that degree bound.
"""

from __future__ import annotations

import itertools
import logging
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Callable, Iterable, Iterator, Sequence

from .field import ModP, PrimeField, binomial, div, lift_all
from .poly import Poly, poly_from_roots, poly_interpolate, render, to_json_obj
from .schur import (
    cauchy_binet_factorization_check,
    cofactor_schur_det_eval,
    schur_special_case,
)
from .subres import (
    bezout_cofactors_det,
    cofactors_exchange_form,
    cofactors_from_roots,
    resultant,
    sres,
    sres_admissible,
)
from .sylvester import exchange_sides, msyl_det_eval, msyl_eval, rscalar, sign, split, syl_double, x
from .syminterp import (
    basis_independence_check,
    node_masks,
    sym_dim,
    sym_eval,
    sym_interpolate,
)

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Instance:
    seed: int
    A: tuple
    B: tuple
    disjoint: bool = False

    @property
    def m(self) -> int:
        return len(self.A)

    @property
    def n(self) -> int:
        return len(self.B)

    @cached_property
    def f(self) -> Poly:
        return poly_from_roots(self.A)

    @cached_property
    def g(self) -> Poly:
        return poly_from_roots(self.B)

    def swapped(self) -> "Instance":
        return Instance(self.seed, self.B, self.A, self.disjoint)

    def describe(self) -> str:
        return f"seed={self.seed} A={list(map(str, self.A))} B={list(map(str, self.B))}"


def gen_instance(
    seed: int, m: int, n: int, range_: int = 20, disjoint: bool = False, field=None
) -> Instance:
    """Pairwise-distinct integer roots in [-range_, range_], reproducible from ``seed``.

    With a :class:`PrimeField` the roots are uniform residues instead.
    """
    if m < 1 or n < 1:
        raise ValueError(f"need m, n >= 1, got m={m}, n={n}")
    rng = random.Random(seed)
    if isinstance(field, PrimeField):
        draw = lambda: rng.randrange(field.p)  # noqa: E731
        lift = field
    else:
        values = 2 * range_ + 1
        needed = m + n if disjoint else max(m, n)
        if values < needed:
            raise ValueError(f"range {range_} admits only {values} values, need {needed}")
        draw = lambda: rng.randint(-range_, range_)  # noqa: E731
        lift = Fraction
    A: list = []
    while len(A) < m:
        v = draw()
        if v not in A:
            A.append(v)
    B: list = []
    while len(B) < n:
        v = draw()
        if v in B or (disjoint and v in A):
            continue
        B.append(v)
    return Instance(seed, tuple(lift(v) for v in A), tuple(lift(v) for v in B), disjoint)


class _Cache:
    """Per-instance memo of subresultants and cofactors."""

    def __init__(self, inst: Instance):
        self.inst = inst
        self._sres: dict = {}
        self._cof: dict = {}

    def sres(self, d: int) -> Poly:
        if d not in self._sres:
            self._sres[d] = sres(self.inst.f, self.inst.g, d)
        return self._sres[d]

    def cof(self, k: int) -> tuple[Poly, Poly]:
        if k not in self._cof:
            self._cof[k] = bezout_cofactors_det(self.inst.f, self.inst.g, k)
        return self._cof[k]


# --------------------------------------------------------------------------
# Theorem on all double sums


@dataclass
class BranchReport:
    m: int
    n: int
    p: int
    q: int
    d: int
    k: int
    sigma: int
    c: int
    e: int
    seed: int
    branch: str
    expected: Poly
    computed: Poly
    passed: bool
    forms_agree: bool = True
    conditions_agree: bool = True
    roots: tuple = ()

    def to_json_obj(self) -> dict:
        out = {key: getattr(self, key) for key in ("m", "n", "p", "q", "d", "k", "sigma", "c", "e", "seed")}
        out["branch"] = self.branch
        out["pass"] = self.passed
        out["expected"] = to_json_obj(self.expected)
        out["computed"] = to_json_obj(self.computed)
        out["forms_agree"] = self.forms_agree
        out["conditions_agree"] = self.conditions_agree
        out["A"], out["B"] = [list(map(str, r)) for r in self.roots] or ([], [])
        return out


def theorem1_branch(m: int, n: int, p: int, q: int) -> str:
    """Branch label for 1 <= m <= n."""
    d = p + q
    if d < m or m == d < n:
        return "sres"
    if m < d < n - 1:
        return "zero"
    if m < d == n - 1:
        return "f"
    if n <= d <= m + n - 1:
        return "bezout"
    if d == m + n:
        return "res_fg"
    raise AssertionError(f"no branch for m={m}, n={n}, p={p}, q={q}")


def single_sum_branch(m: int, n: int, d: int) -> str:
    """Branch label of the closing single-sum table, 0 <= d <= n, any m."""
    if d <= min(m - 1, n) or d == m < n:
        return "sres"
    if m < d < n - 1:
        return "zero"
    if m < d == n - 1:
        return "f"
    if m <= d == n:
        return "g"
    raise AssertionError(f"no table branch for m={m}, n={n}, d={d}")


def branch_conditions_agree(m: int, n: int, d: int) -> bool:
    """Do the theorem's first-branch condition and the table's Sres condition coincide at p = 0?"""
    return (theorem1_branch(m, n, 0, d) == "sres") == (single_sum_branch(m, n, d) == "sres")


def _signs(m: int, n: int, p: int, q: int) -> tuple[int, int, int, int, int]:
    d = p + q
    k = m + n - d - 1
    sigma = (d - m) * (n - q) + d - n - 1
    c = (d - m) * (n - q) + d - n
    e = (d - m) * (q + 1)
    return d, k, sigma, c, e


def _theorem1_forms(inst: Instance, p: int, q: int, cache: _Cache) -> tuple[str, list[Poly]]:
    m, n = inst.m, inst.n
    f, g = inst.f, inst.g
    d, k, sigma, _, _ = _signs(m, n, p, q)
    branch = theorem1_branch(m, n, p, q)
    if branch == "sres":
        return branch, [cache.sres(d).scale(sign(p * (m - d)) * binomial(d, p))]
    if branch == "zero":
        return branch, [Poly()]
    if branch == "f":
        return branch, [f.scale(sign((p + 1) * (m + n - 1)) * binomial(m, p))]
    if branch == "bezout":
        F, G = cache.cof(k)
        first = (F * f).scale(binomial(k, m - p)) - (G * g).scale(binomial(k, n - q))
        second = cache.sres(k).scale(binomial(k, n - q)) - (F * f).scale(binomial(k + 1, m - p))
        return branch, [first.scale(sign(sigma)), second.scale(sign(sigma + 1))]
    return branch, [(f * g).scale(resultant(f, g))]


def theorem1_expected(inst: Instance, p: int, q: int) -> Poly:
    """Right-hand side of the matching branch; m > n goes through the swap symmetry."""
    return _expected_with_forms(inst, p, q, _Cache(inst))[1][0]


def _expected_with_forms(inst: Instance, p: int, q: int, cache: _Cache) -> tuple[str, list[Poly]]:
    m, n = inst.m, inst.n
    if not (0 <= p <= m and 0 <= q <= n):
        raise ValueError(f"need 0 <= p <= {m}, 0 <= q <= {n}")
    if m <= n:
        return _theorem1_forms(inst, p, q, cache)
    s = sign(p * q + (m - p) * (n - q))
    branch, forms = _theorem1_forms(inst.swapped(), q, p, cache)
    return f"swap:{branch}", [P.scale(s) for P in forms]


def check_theorem1(inst: Instance) -> list[BranchReport]:
    m, n = inst.m, inst.n
    cache = _Cache(inst) if m <= n else _Cache(inst.swapped())
    reports = []
    for p in range(m + 1):
        for q in range(n + 1):
            d, k, sigma, c, e = _signs(m, n, p, q)
            branch, forms = _expected_with_forms(inst, p, q, cache)
            computed = syl_double(inst.A, inst.B, p, q)
            agree = all(F == forms[0] for F in forms[1:])
            mm, nn = min(m, n), max(m, n)
            cond = branch_conditions_agree(mm, nn, d) if d <= nn else True
            passed = agree and computed == forms[0] and computed.degree <= d
            if not passed:
                log.warning("theorem mismatch %s p=%d q=%d branch=%s", inst.describe(), p, q, branch)
            reports.append(
                BranchReport(
                    m, n, p, q, d, k, sigma, c, e, inst.seed, branch, forms[0], computed,
                    passed, agree, cond, (inst.A, inst.B),
                )
            )
    return reports


# --------------------------------------------------------------------------
# Generic check records


@dataclass
class Check:
    name: str
    params: dict
    passed: bool
    detail: str = ""
    seed: int | None = None

    def to_json_obj(self) -> dict:
        return {
            "name": self.name,
            "params": {k: str(v) for k, v in self.params.items()},
            "pass": self.passed,
            "detail": self.detail,
            "seed": self.seed,
        }


def _poly_check(name: str, params: dict, lhs: Poly, rhs: Poly, seed=None) -> Check:
    ok = lhs == rhs
    detail = "" if ok else f"{render(lhs)} != {render(rhs)}"
    return Check(name, params, ok, detail, seed)


def certification_grid(nvars: int, deg: int, avoid: Iterable = (), lift=Fraction) -> Iterator[tuple]:
    """Product grid, deg+1 abscissae per variable, disjoint across variables.

    Abscissae start above every |value| in ``avoid`` so no grid point hits a root.
    """
    axes = grid_axes(nvars, deg, avoid, lift)
    return itertools.product(*axes)


def grid_axes(nvars: int, deg: int, avoid: Iterable = (), lift=Fraction) -> list[list]:
    base = 1
    for v in avoid:
        if not isinstance(v, ModP):
            base = max(base, int(abs(Fraction(v))) + 1)
    return [[lift(base + i * (deg + 1) + j) for j in range(deg + 1)] for i in range(nvars)]


def _lift_of(inst: Instance) -> Callable:
    sample = inst.A[0]
    if isinstance(sample, ModP):
        p = sample.p
        return lambda v: ModP(v, p)
    return Fraction


def _leading_weights(axis: Sequence) -> list:
    """1 / prod_{v != u} (u - v): weight of each node in the top Lagrange coefficient."""
    out = []
    for u in axis:
        w = 1
        for v in axis:
            if v != u:
                w = w * (u - v)
        out.append(div(1, w))
    return out


def top_coefficient_poly(func: Callable[[tuple], object], axes: Sequence[Sequence], last_axis: Sequence) -> Poly:
    """Coefficient of prod x_i^{deg} over the first variables, as a polynomial in the last.

    ``func`` has degree <= len(axis) - 1 in each of the leading variables and
    degree <= len(last_axis) - 1 in the last one.
    """
    weights = [_leading_weights(ax) for ax in axes]
    values = []
    for t in last_axis:
        total = 0
        for idx in itertools.product(*(range(len(ax)) for ax in axes)):
            w = 1
            for axis_no, i in enumerate(idx):
                w = w * weights[axis_no][i]
            pt = tuple(axes[a][i] for a, i in enumerate(idx)) + (t,)
            total = total + w * func(pt)
        values.append(total)
    return poly_interpolate(list(last_axis), values)


# --------------------------------------------------------------------------
# Structural identities


def check_section_props(inst: Instance) -> list[Check]:
    m, n, f = inst.m, inst.n, inst.f
    out: list[Check] = []
    cache = _Cache(inst)
    syl = {}

    def S(p, q):
        if (p, q) not in syl:
            syl[p, q] = syl_double(inst.A, inst.B, p, q)
        return syl[p, q]

    for p in range(m + 1):
        for q in range(n + 1):
            d = p + q
            params = {"m": m, "n": n, "p": p, "q": q}
            # (a) small d reduces to the single sum
            if d <= min(m - 1, n - 1):
                rhs = S(0, d).scale(sign(p * (m - d)) * binomial(d, p))
                out.append(_poly_check("dsmall_single", params, S(p, q), rhs, inst.seed))
                out.append(_poly_check("dsmall_sres", params, S(p, q), cache.sres(d).scale(sign(p * (m - d)) * binomial(d, p)), inst.seed))
            # (b) the three cases with d <= n - 1
            if d <= n - 1:
                if d <= min(m, n - 1):
                    rhs = cache.sres(d).scale(sign(p * (m - d)) * binomial(d, p))
                elif m < d < n - 1:
                    rhs = Poly()
                else:
                    rhs = f.scale(sign((p + 1) * (m + n - 1)) * binomial(m, p))
                out.append(_poly_check("d_le_n_minus_1", params, S(p, q), rhs, inst.seed))
            # (c), (d) large d
            if max(m, n) <= d <= m + n - 1:
                k = m + n - d - 1
                c = (d - m) * (n - q) + d - n
                e = (d - m) * (q + 1)
                rhs = S(0, k).scale(sign(c) * binomial(k, n - q)) + S(m, d - m).scale(sign(e) * binomial(k + 1, m - p))
                out.append(_poly_check("dbig_decomposition", params, S(p, q), rhs, inst.seed))
                F, _ = cache.cof(k)
                out.append(_poly_check("dbig_sres_form", params, S(p, q), (cache.sres(k).scale(binomial(k, n - q)) - (F * f).scale(binomial(k + 1, m - p))).scale(sign(c)), inst.seed))
                if p == m:
                    rhs = (F * f).scale(sign((d - m) * n + m + n - 1))
                    out.append(_poly_check("syl_m_q_cofactor", params, S(m, d - m), rhs, inst.seed))
            # (e) H_{A'} factors when m <= d <= n - 1
            if m <= d <= n - 1:
                out.append(_check_H(inst, p, q))

    # single sums: interpolation corollary and the subresultant identity
    for d in range(n):
        params = {"m": m, "n": n, "d": d}
        if d <= m:
            out.append(_poly_check("single_sum_is_sres", params, S(0, d), cache.sres(d), inst.seed))
        if m <= d:
            if m < d < n - 1:
                rhs = Poly()
            else:
                rhs = f.scale(sign((m - d) * (n - d)))
            out.append(_poly_check("single_sum_cases", params, S(0, d), rhs, inst.seed))
    return out


def H_eval(inst: Instance, Ap: tuple, q: int, point: Sequence):
    """H_{A'}(X) = sum_{B'} R(B \\ B', A \\ A') R(X, B') / R(B \\ B', B')."""
    Ar = tuple(a for a in inst.A if a not in Ap)
    total = 0
    for Bp, Br in split(inst.B, q):
        total = total + div(rscalar(Br, Ar) * rscalar(point, Bp), rscalar(Br, Bp))
    return total


def _check_H(inst: Instance, p: int, q: int) -> Check:
    n = inst.n
    lift = _lift_of(inst)
    bad = None
    count = 0
    for Ap, Ar in split(inst.A, p):
        fa = poly_from_roots(Ar)
        for pt in certification_grid(n - q, q, inst.A + inst.B, lift):
            count += 1
            lhs = H_eval(inst, Ap, q, pt)
            rhs = 1
            for t in pt:
                rhs = rhs * fa(t)
            if lhs != rhs:
                bad = (Ap, pt, lhs, rhs)
                break
        if bad:
            break
    params = {"m": inst.m, "n": n, "p": p, "q": q, "points": count}
    return Check("H_factorization", params, bad is None, "" if bad is None else repr(bad), inst.seed)


def check_single_sum_table(inst: Instance) -> list[Check]:
    m, n = inst.m, inst.n
    cache = _Cache(inst)
    out = []
    for d in range(n + 1):
        branch = single_sum_branch(m, n, d)
        if branch == "sres":
            rhs = cache.sres(d)
        elif branch == "zero":
            rhs = Poly()
        elif branch == "f":
            rhs = inst.f.scale(sign(m + n - 1))
        else:
            rhs = inst.g
        out.append(_poly_check(f"single_sum_table:{branch}", {"m": m, "n": n, "d": d}, syl_double(inst.A, inst.B, 0, d), rhs, inst.seed))
    return out


def check_cofactors(inst: Instance) -> list[Check]:
    """Bezout identity and agreement of the three cofactor constructions."""
    m, n = inst.m, inst.n
    out = []
    for k in range(min(m, n)):
        params = {"m": m, "n": n, "k": k}
        F, G = bezout_cofactors_det(inst.f, inst.g, k)
        out.append(_poly_check("bezout_identity", params, sres(inst.f, inst.g, k), F * inst.f + G * inst.g, inst.seed))
        ok = F.degree <= n - k - 1 and G.degree <= m - k - 1
        out.append(Check("cofactor_degrees", params, ok, "" if ok else f"deg F={F.degree}, deg G={G.degree}", inst.seed))
        Fr, Gr = cofactors_from_roots(inst.A, inst.B, k)
        Fx, Gx = cofactors_exchange_form(inst.A, inst.B, k)
        out.append(_poly_check("F_roots", params, F, Fr, inst.seed))
        out.append(_poly_check("G_roots", params, G, Gr, inst.seed))
        out.append(_poly_check("F_exchange", params, F, Fx, inst.seed))
        out.append(_poly_check("G_exchange", params, G, Gx, inst.seed))
        Fs, _ = bezout_cofactors_det(inst.g, inst.f, k)
        out.append(_poly_check("cofactor_symmetry", params, G, Fs.scale(sign((m - k) * (n - k))), inst.seed))
    return out


def check_exchange(inst: Instance) -> list[Check]:
    """Exchange identity for every p and every number r of variables.

    The first variable is symbolic; the other r - 1 range over a certification
    grid of degree p.
    """
    m = inst.m
    lift = _lift_of(inst)
    out = []
    for p in range(min(m, inst.n) + 1):
        for r in range(m - p + 1):
            params = {"m": m, "n": inst.n, "p": p, "r": r}
            ok, detail = True, ""
            if r == 0:
                points = [()]
            else:
                points = [(x,) + pt for pt in certification_grid(r - 1, p, inst.A + inst.B, lift)]
            for X in points:
                lhs, rhs = exchange_sides(inst.A, inst.B, p, X)
                ilhs, irhs = exchange_sides(inst.A, inst.B, p, X, orientation="intro")
                if lhs != rhs:
                    ok, detail = False, f"body sides differ at {X}: {render(lhs)} vs {render(rhs)}"
                elif ilhs != irhs:
                    ok, detail = False, f"intro sides differ at {X}"
                elif ilhs != lhs.scale(sign(p * (m - p))):
                    ok, detail = False, f"intro/body sign reconciliation fails at {X}"
                if not ok:
                    break
            out.append(Check("exchange", params, ok, detail, inst.seed))
    return out


def intro_identity_check(A: Sequence, d: int, points: Iterable[Sequence]) -> bool:
    """x_1...x_{m-d} equals its symmetric interpolant on the nodes A, at each point."""
    A = lift_all(A)
    m = len(A)
    if not 1 <= d <= m - 1:
        raise ValueError(f"need 1 <= d <= {m - 1}, got d={d}")

    def prod(t):
        out = 1
        for v in t:
            out = out * v
        return out

    h = sym_interpolate(A, d, prod)
    return all(sym_eval(h, pt) == prod(lift_all(pt)) for pt in points)


def check_misc(inst: Instance, random_points: int = 5) -> list[Check]:
    m, n = inst.m, inst.n
    A, B = inst.A, inst.B
    lift = _lift_of(inst)
    rng = random.Random(inst.seed * 7919 + 13)
    out = []

    for d in range(min(m, n) + 1):
        if d == m == n:
            # Syl_{m,0} = f and Syl_{0,n} = g here; the sign law needs d < m or m < n
            continue
        out.append(_poly_check("single_sum_sign", {"m": m, "n": n, "d": d}, syl_double(A, B, d, 0), syl_double(A, B, 0, d).scale(sign(d * (m - d))), inst.seed))
    for p in range(m + 1):
        for q in range(n + 1):
            rhs = syl_double(B, A, q, p).scale(sign(p * q + (m - p) * (n - q)))
            out.append(_poly_check("syl_symmetry", {"m": m, "n": n, "p": p, "q": q}, syl_double(A, B, p, q), rhs, inst.seed))
    for d in range(min(m, n) + 1):
        if sres_admissible(m, n, d):
            rhs = sres(inst.g, inst.f, d).scale(sign((m - d) * (n - d)))
            out.append(_poly_check("sres_symmetry", {"m": m, "n": n, "d": d}, sres(inst.f, inst.g, d), rhs, inst.seed))

    for d in range(1, m):
        pts = [tuple(lift(rng.randint(-50, 50)) for _ in range(m - d)) for _ in range(random_points)]
        out.append(Check("intro_identity", {"m": m, "d": d}, intro_identity_check(A, d, pts), "", inst.seed))

    for d in range(min(n - 1, m) + 1):
        out.append(check_matrixforms_grid(inst, d))
    for d in range(n):
        out.append(check_coeff_extraction(inst, d))
    return out


def check_matrixforms_grid(inst: Instance, d: int) -> Check:
    n = inst.n
    lift = _lift_of(inst)
    count = 0
    for pt in certification_grid(n - d, d, inst.A + inst.B, lift):
        count += 1
        a, b = msyl_eval(inst.A, inst.B, d, pt), msyl_det_eval(inst.A, inst.B, d, pt)
        if a != b:
            return Check("matrixforms_grid", {"m": inst.m, "n": n, "d": d}, False, f"{pt}: {a} != {b}", inst.seed)
    return Check("matrixforms_grid", {"m": inst.m, "n": n, "d": d, "points": count}, True, "", inst.seed)


def check_matrixforms_random(inst: Instance, d: int, npoints: int, rng: random.Random, spread: int = 1000) -> Check:
    n = inst.n
    lift = _lift_of(inst)
    for _ in range(npoints):
        while True:
            vals = [rng.randint(-spread, spread) for _ in range(n - d)]
            if len(set(vals)) == len(vals):
                break
        pt = tuple(lift(v) for v in vals)
        a, b = msyl_eval(inst.A, inst.B, d, pt), msyl_det_eval(inst.A, inst.B, d, pt)
        if a != b:
            return Check("matrixforms_random", {"m": inst.m, "n": n, "d": d}, False, f"{pt}: {a} != {b}", inst.seed)
    return Check("matrixforms_random", {"m": inst.m, "n": n, "d": d, "points": npoints}, True, "", inst.seed)


def check_coeff_extraction(inst: Instance, d: int) -> Check:
    """The x_1^d...x_{n-d-1}^d coefficient of MSyl_{0,d}, as a polynomial in x_{n-d}, is Syl_{0,d}."""
    n = inst.n
    lift = _lift_of(inst)
    axes = grid_axes(n - d, d, inst.A + inst.B, lift)
    coeff = top_coefficient_poly(lambda pt: msyl_eval(inst.A, inst.B, d, pt), axes[:-1], axes[-1])
    return _poly_check("coeff_extraction", {"m": inst.m, "n": n, "d": d}, coeff, syl_double(inst.A, inst.B, 0, d), inst.seed)


def check_syminterp(B: Sequence, rng: random.Random, seed=None) -> list[Check]:
    """Round trip, Kronecker property, basis count and independence for every d."""
    B = lift_all(B)
    n = len(B)
    out = []
    for d in range(n):
        params = {"n": n, "d": d}
        values = {mask: B[0] * 0 + rng.randint(-100, 100) for mask in node_masks(n, d)}
        h = sym_interpolate(B, d, values)
        ok = all(
            sym_eval(h, tuple(b for i, b in enumerate(B) if mask >> i & 1)) == v
            for mask, v in values.items()
        )
        out.append(Check("interp_round_trip", params, ok, "", seed))
        kron = True
        for mask in h.coeffs:
            Bp = tuple(b for i, b in enumerate(B) if mask >> i & 1)
            e = sym_interpolate(B, d, lambda node: rscalar(node, Bp))
            kron &= all((c == 1) if other == mask else (c == 0) for other, c in e.coeffs.items())
        out.append(Check("interp_kronecker", params, kron, "", seed))
        out.append(Check("basis_count", params, len(h.coeffs) == sym_dim(n - d, d) == binomial(n, d), "", seed))
        out.append(Check("basis_independent", params, basis_independence_check(B, d), "", seed))
    return out


def check_schur(inst: Instance, rng: random.Random, npoints: int = 3) -> list[Check]:
    m, n = inst.m, inst.n
    lift = _lift_of(inst)
    roots = set(inst.A) | set(inst.B)
    out = []

    def fresh():
        while True:
            t = lift(rng.randint(-200, 200))
            if t not in roots:
                return t

    for k in range(min(m, n)):
        F, G = bezout_cofactors_det(inst.f, inst.g, k)
        for _ in range(npoints):
            t = fresh()
            okF = cofactor_schur_det_eval(inst.A, inst.g, k, t, "F") == F(t)
            okG = cofactor_schur_det_eval(inst.B, inst.f, k, t, "G") == G(t)
            out.append(Check("schur_det_F", {"m": m, "n": n, "k": k, "t": t}, okF, "", inst.seed))
            out.append(Check("schur_det_G", {"m": m, "n": n, "k": k, "t": t}, okG, "", inst.seed))
        t = fresh()
        out.append(Check("cauchy_binet", {"m": m, "n": n, "k": k, "t": t}, cauchy_binet_factorization_check(inst.A, inst.g, k, t), "", inst.seed))
        t = fresh()
        a, b = schur_special_case(inst.A, n, k, t)
        out.append(Check("schur_special_case", {"m": m, "n": n, "k": k, "t": t}, a == b, "" if a == b else f"{a} != {b}", inst.seed))
    return out


# --------------------------------------------------------------------------
# Suite


@dataclass
class SuiteResult:
    reports: list = field(default_factory=list)
    checks: list = field(default_factory=list)

    @property
    def failures(self) -> list:
        return [r for r in self.reports if not r.passed] + [c for c in self.checks if not c.passed]

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json_obj(self) -> dict:
        return {
            "reports": [r.to_json_obj() for r in self.reports],
            "checks": [c.to_json_obj() for c in self.checks],
            "pass": self.ok,
        }


@dataclass(frozen=True)
class SuiteConfig:
    max_m: int = 5
    max_n: int = 5
    seeds: int = 5
    range_: int = 20
    m_le_n: bool = True
    full: bool = False
    prime: int | None = None


def _run_one(args) -> SuiteResult:
    cfg, seed, m, n = args
    field = PrimeField(cfg.prime) if cfg.prime else None
    inst = gen_instance(seed, m, n, cfg.range_, field=field)
    res = SuiteResult(reports=check_theorem1(inst))
    if cfg.full:
        rng = random.Random(seed * 1_000_003 + 31 * m + n)
        res.checks += check_section_props(inst)
        res.checks += check_single_sum_table(inst)
        res.checks += check_cofactors(inst)
        res.checks += check_exchange(inst)
        res.checks += check_misc(inst)
        res.checks += check_schur(inst, rng)
        if m == 1:
            res.checks += check_syminterp(inst.B, rng, seed)
    return res


def suite_jobs(cfg: SuiteConfig) -> list[tuple]:
    jobs = []
    for m in range(1, cfg.max_m + 1):
        for n in range(1, cfg.max_n + 1):
            if cfg.m_le_n and m > n:
                continue
            for seed in range(cfg.seeds):
                jobs.append((cfg, seed, m, n))
    return jobs


def run_suite(cfg: SuiteConfig, workers: int = 1) -> SuiteResult:
    """Run every instance; results are merged in (m, n, seed) order regardless of workers."""
    jobs = suite_jobs(cfg)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_run_one, jobs))
    else:
        parts = [_run_one(j) for j in jobs]
    out = SuiteResult()
    for part in parts:
        out.reports += part.reports
        out.checks += part.checks
    return out
