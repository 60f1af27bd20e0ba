from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from sylvsum.field import ModP
from sylvsum.poly import Poly, poly_from_roots
from sylvsum.subres import (
    bezout_cofactors_det,
    cofactors_exchange_form,
    cofactors_from_roots,
    resultant,
    sres,
    sres_admissible,
)
from sylvsum.sylvester import rprod, syl_double

from conftest import P, roots

sympy = pytest.importorskip("sympy")


def pairs(max_m=5, max_n=5):
    return st.tuples(roots(1, max_m), roots(1, max_n))


def test_sres_examples(f, g):
    assert sres(f, g, 1) == P(10, -4)
    assert sres(f, g, 0) == P(12)


def test_sres_d_equals_m(f):
    g = poly_from_roots((3, 4, 5))
    assert sres(f, g, 2) == f


def test_sres_inadmissible(f, g):
    with pytest.raises(ValueError):
        sres(f, g, 2)  # d = m = n
    with pytest.raises(ValueError):
        sres(f, poly_from_roots((3, 4, 5)), 3)
    assert not sres_admissible(2, 2, 2)
    assert sres_admissible(2, 3, 2)


def test_resultant_examples(f, g):
    assert resultant(f, g) == 12
    assert resultant(poly_from_roots((1, 2)), poly_from_roots((2, 5))) == 0
    a, b = Fraction(7), Fraction(-3, 2)
    assert resultant(P(-a, 1), Poly([-b, 1])) == a - b


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(-9, 9), min_size=2, max_size=6), st.lists(st.integers(-9, 9), min_size=2, max_size=6))
def test_resultant_against_sympy(fc, gc):
    f, g = P(*fc), P(*gc)
    if f.degree < 1 or g.degree < 1:
        return
    xs = sympy.Symbol("x")
    fs = sum(c * xs**i for i, c in enumerate(fc))
    gs = sum(c * xs**i for i, c in enumerate(gc))
    # sympy.resultant mis-signs some inputs (e.g. x + 1 vs x^3); the Sylvester determinant does not
    from sympy.polys.subresultants_qq_zz import sylvester

    assert resultant(f, g) == Fraction(int(sylvester(fs, gs, xs).det()))


@settings(max_examples=40, deadline=None)
@given(pairs())
def test_poisson_formula(AB):
    A, B = AB
    f, g = poly_from_roots(A), poly_from_roots(B)
    prod = Fraction(1)
    for a in A:
        prod *= g(a)
    assert resultant(f, g) == prod == rprod(A, B).coeff(0)


def test_cofactor_examples(f, g):
    F0, G0 = bezout_cofactors_det(f, g, 0)
    assert F0 == P(18, -4) and G0 == P(-2, 4)
    assert F0 * f + G0 * g == P(12)
    F1, _ = bezout_cofactors_det(f, g, 1)
    assert F1 == P(-1)


@given(roots(2, 2), roots(2, 2))
def test_F1_monic_quadratics(A, B):
    F1, _ = bezout_cofactors_det(poly_from_roots(A), poly_from_roots(B), 1)
    assert F1 == P(-1)


def test_cofactor_range(f, g):
    with pytest.raises(ValueError):
        bezout_cofactors_det(f, g, 2)
    with pytest.raises(ValueError):
        cofactors_from_roots((1, 2), (3, 4), -1)


def test_cofactor_forms_on_fixture(A, B):
    assert cofactors_from_roots(A, B, 0) == (P(18, -4), P(-2, 4))
    assert cofactors_exchange_form(A, B, 0) == (P(18, -4), P(-2, 4))
    assert cofactors_exchange_form(A, B, 1)[0] == P(-1)


@settings(max_examples=40, deadline=None)
@given(pairs(6, 6))
def test_bezout_identity(AB):
    A, B = AB
    f, g = poly_from_roots(A), poly_from_roots(B)
    m, n = len(A), len(B)
    for k in range(min(m, n)):
        F, G = bezout_cofactors_det(f, g, k)
        assert sres(f, g, k) == F * f + G * g
        assert F.degree <= n - k - 1 and G.degree <= m - k - 1


@settings(max_examples=40, deadline=None)
@given(pairs())
def test_three_cofactor_forms_agree(AB):
    A, B = AB
    f, g = poly_from_roots(A), poly_from_roots(B)
    for k in range(min(len(A), len(B))):
        det = bezout_cofactors_det(f, g, k)
        assert cofactors_from_roots(A, B, k) == det
        assert cofactors_exchange_form(A, B, k) == det


@settings(max_examples=40, deadline=None)
@given(pairs(6, 6))
def test_symmetries(AB):
    A, B = AB
    f, g = poly_from_roots(A), poly_from_roots(B)
    m, n = len(A), len(B)
    for d in range(min(m, n) + 1):
        if sres_admissible(m, n, d):
            s = -1 if (m - d) * (n - d) % 2 else 1
            assert sres(f, g, d) == sres(g, f, d).scale(s)
    for k in range(min(m, n)):
        s = -1 if (m - k) * (n - k) % 2 else 1
        assert bezout_cofactors_det(f, g, k)[1] == bezout_cofactors_det(g, f, k)[0].scale(s)


@settings(max_examples=40, deadline=None)
@given(pairs(6, 6))
def test_single_sum_is_subresultant(AB):
    A, B = AB
    f, g = poly_from_roots(A), poly_from_roots(B)
    m, n = len(A), len(B)
    for d in range(min(m, n - 1) + 1):
        assert syl_double(A, B, 0, d) == sres(f, g, d)


def test_non_monic_general_coefficients():
    f, g = P(1, 0, 3), P(-2, 5, 0, 2)
    for k in range(2):
        F, G = bezout_cofactors_det(f, g, k)
        assert F * f + G * g == sres(f, g, k)


def test_prime_field_cofactors():
    A = tuple(ModP(v) for v in (3, 10, 2**40))
    B = tuple(ModP(v) for v in (5, 7))
    f, g = poly_from_roots(A), poly_from_roots(B)
    for k in range(2):
        det = bezout_cofactors_det(f, g, k)
        assert cofactors_from_roots(A, B, k) == det == cofactors_exchange_form(A, B, k)
        assert det[0] * f + det[1] * g == sres(f, g, k)
