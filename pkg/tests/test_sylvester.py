from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from sylvsum.poly import poly_from_roots
from sylvsum.sylvester import (
    SubsetSelector,
    Var,
    exchange_sides,
    msyl_det_eval,
    msyl_eval,
    rprod,
    subsets,
    syl_double,
    x,
)

from conftest import P, roots


def naive_syl_at(A, B, p, q, t):
    """Independent oracle: the double sum evaluated at a scalar, straight from the definition."""

    def R(Y, Z):
        out = Fraction(1)
        for y in Y:
            for z in Z:
                out *= y - z
        return out

    total = Fraction(0)
    for Ap in combinations(A, p):
        Ar = [a for a in A if a not in Ap]
        for Bp in combinations(B, q):
            Br = [b for b in B if b not in Bp]
            total += R(Ap, Bp) * R(Ar, Br) * R([t], Ap) * R([t], Bp) / (R(Ap, Ar) * R(Bp, Br))
    return total


def pairs(max_m=4, max_n=4):
    return st.tuples(roots(1, max_m), roots(1, max_n))


def test_subsets_order():
    assert [s.mask for s in subsets(4, 2)] == [0b0011, 0b0101, 0b0110, 0b1001, 0b1010, 0b1100]
    assert list(subsets(3, 4)) == []
    sel = SubsetSelector(0b101, 3)
    assert sel.cardinality == 2
    assert sel.pick("abc") == ("a", "c") and sel.rest("abc") == ("b",)
    assert sel.complement().mask == 0b010
    with pytest.raises(ValueError):
        SubsetSelector(0b1000, 3)


def test_rprod_examples():
    assert rprod((x,), (3,)) == P(-3, 1)
    assert rprod((), (3, 4)) == P(1)
    assert rprod((1, 2), ()) == P(1)
    assert rprod((1, 2), (3, 4)) == P(12)


def test_rprod_variable_on_right():
    # (2 - x)(5 - x)
    assert rprod((2, 5), (x,)) == P(10, -7, 1)
    assert rprod((x, 1), (x,)) == P()


def test_rprod_rejects_two_variables():
    with pytest.raises(ValueError):
        rprod((x,), (Var("y"),))


def test_syl_double_examples(A, B, f):
    assert syl_double(A, B, 0, 1) == P(10, -4)
    assert syl_double(A, B, 1, 0) == P(-10, 4)
    assert syl_double(A, B, 2, 0) == f


def test_syl_double_range_errors(A, B):
    with pytest.raises(ValueError):
        syl_double(A, B, 3, 0)
    with pytest.raises(ValueError):
        syl_double(A, B, 0, -1)


@settings(max_examples=60, deadline=None)
@given(pairs(), st.data())
def test_syl_double_matches_naive_oracle(AB, data):
    A, B = AB
    p = data.draw(st.integers(0, len(A)))
    q = data.draw(st.integers(0, len(B)))
    S = syl_double(A, B, p, q)
    assert S.degree <= p + q
    for t in (Fraction(-7, 3), Fraction(0), Fraction(11)):
        assert S(t) == naive_syl_at(A, B, p, q, t)


@settings(max_examples=40, deadline=None)
@given(pairs())
def test_extremal_sums(AB):
    A, B = AB
    m, n = len(A), len(B)
    res = rprod(A, B)
    f, g = poly_from_roots(A), poly_from_roots(B)
    assert syl_double(A, B, 0, 0) == res
    assert syl_double(A, B, m, n) == res * f * g
    assert syl_double(A, B, m, 0) == f
    assert syl_double(A, B, 0, n) == g


@settings(max_examples=40, deadline=None)
@given(pairs(), st.data())
def test_swap_symmetry(AB, data):
    A, B = AB
    m, n = len(A), len(B)
    p = data.draw(st.integers(0, m))
    q = data.draw(st.integers(0, n))
    s = -1 if (p * q + (m - p) * (n - q)) % 2 else 1
    assert syl_double(A, B, p, q) == syl_double(B, A, q, p).scale(s)


@settings(max_examples=40, deadline=None)
@given(pairs(), st.data())
def test_single_sum_sign_law(AB, data):
    A, B = AB
    m, n = len(A), len(B)
    d = data.draw(st.integers(0, min(m, n)))
    if d == m == n:
        return
    s = -1 if d * (m - d) % 2 else 1
    assert syl_double(A, B, d, 0) == syl_double(A, B, 0, d).scale(s)


def test_msyl_eval_examples(A, B):
    # node {4} is B \ {3}; the surviving term is f(4) = 6
    assert msyl_eval(A, B, 1, (4,)) == -6
    assert msyl_eval(A, B, 1, (3,)) == -2
    assert msyl_eval((5,), (1, 2, 3), 1, (0, 0)) == 25


@settings(max_examples=30, deadline=None)
@given(pairs(3, 5), st.data())
def test_msyl_at_nodes(AB, data):
    A, B = AB
    m, n = len(A), len(B)
    d = data.draw(st.integers(0, n - 1))
    f = poly_from_roots(A)
    s = -1 if (m - d) * (n - d) % 2 else 1
    for sel in subsets(n, d):
        node = sel.rest(B)
        expected = s
        for beta in node:
            expected *= f(beta)
        assert msyl_eval(A, B, d, node) == expected


@settings(max_examples=30, deadline=None)
@given(pairs(3, 4), st.data())
def test_msyl_small_degree_factorizes(AB, data):
    A, B = AB
    m, n = len(A), len(B)
    if m > n - 1:
        return
    d = data.draw(st.integers(m, n - 1))
    pt = tuple(Fraction(v) for v in data.draw(st.lists(st.integers(-9, 9), min_size=n - d, max_size=n - d)))
    f = poly_from_roots(A)
    expected = -1 if (m - d) * (n - d) % 2 else 1
    for t in pt:
        expected *= f(t)
    assert msyl_eval(A, B, d, pt) == expected


def test_msyl_det_eval_examples(A, B):
    # oracle: the subset-sum value at 0 is (-1) * (6 * (0 - 3) / 1 + 2 * (0 - 4) / (-1)) = 10
    assert msyl_eval(A, B, 1, (0,)) == 10
    assert msyl_det_eval(A, B, 1, (0,)) == 10
    t = Fraction(17, 5)
    assert msyl_det_eval(A, B, 1, (t,)) == syl_double(A, B, 0, 1)(t)


@settings(max_examples=50, deadline=None)
@given(pairs(5, 5), st.data())
def test_msyl_det_matches_subset_sum(AB, data):
    A, B = AB
    m, n = len(A), len(B)
    d = data.draw(st.integers(0, min(n - 1, m)))
    pt = data.draw(st.lists(st.integers(-30, 30), min_size=n - d, max_size=n - d, unique=True))
    pt = tuple(Fraction(v) for v in pt)
    assert msyl_det_eval(A, B, d, pt) == msyl_eval(A, B, d, pt)


def test_msyl_errors(A, B):
    with pytest.raises(ValueError):
        msyl_eval(A, B, 2, ())
    with pytest.raises(ValueError):
        msyl_eval(A, B, 1, (1, 2))
    with pytest.raises(ValueError):
        msyl_det_eval((1,), (2, 3, 4), 2, (0,))  # d > m
    with pytest.raises(ValueError):
        msyl_det_eval(A, (3, 4, 5), 1, (0, 0))  # repeated point


def test_exchange_examples(A, B):
    lhs, rhs = exchange_sides(A, B, 1, (x,))
    assert lhs == rhs == P(10, -4)
    lhs, rhs = exchange_sides(A, B, 1, ())
    assert lhs == rhs
    lhs, rhs = exchange_sides(A, B, 0, (x, 5))
    assert lhs == rhs == rprod(A, B)


def test_exchange_errors(A, B):
    with pytest.raises(ValueError):
        exchange_sides(A, B, 1, (x, 1))  # |X| > m - p
    with pytest.raises(ValueError):
        exchange_sides(A, (3,), 2, ())  # |B| < p
    with pytest.raises(ValueError):
        exchange_sides(A, B, 0, (), orientation="sideways")


@settings(max_examples=40, deadline=None)
@given(st.tuples(roots(1, 6), roots(0, 6)), st.data())
def test_exchange_identity(AB, data):
    A, B = AB
    m = len(A)
    p = data.draw(st.integers(0, min(m, len(B))))
    r = data.draw(st.integers(0, m - p))
    X = (x,) + tuple(Fraction(v) for v in data.draw(st.lists(st.integers(-9, 9), min_size=max(r - 1, 0), max_size=max(r - 1, 0))))
    X = X[:r]
    lhs, rhs = exchange_sides(A, B, p, X)
    assert lhs == rhs
    ilhs, irhs = exchange_sides(A, B, p, X, orientation="intro")
    assert ilhs == irhs
    assert ilhs == lhs.scale(-1 if p * (m - p) % 2 else 1)


@given(roots(1, 5))
def test_exchange_with_B_of_size_p(A):
    # |B| = p collapses the right-hand side to R(X, B)
    m = len(A)
    p = m // 2
    B = tuple(Fraction(100 + i) for i in range(p))
    X = (x,) if m - p >= 1 else ()
    lhs, rhs = exchange_sides(A, B, p, X)
    assert lhs == rhs == rprod(X, B)
