from fractions import Fraction

import pytest
from hypothesis import strategies as st

from sylvsum.poly import Poly, poly_from_roots


def roots(min_size=1, max_size=5, lo=-20, hi=20):
    return st.lists(st.integers(lo, hi), min_size=min_size, max_size=max_size, unique=True).map(
        lambda xs: tuple(Fraction(v) for v in xs)
    )


fractions = st.fractions(min_value=-50, max_value=50, max_denominator=20)


@pytest.fixture
def A():
    return (Fraction(1), Fraction(2))


@pytest.fixture
def B():
    return (Fraction(3), Fraction(4))


@pytest.fixture
def f(A):
    return poly_from_roots(A)


@pytest.fixture
def g(B):
    return poly_from_roots(B)


def P(*coeffs):
    """Poly from ascending integer coefficients."""
    return Poly(Fraction(c) for c in coeffs)
