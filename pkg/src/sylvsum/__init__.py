"""Exact Sylvester sums, subresultants, Bezout cofactors and symmetric interpolation."""

from .field import ModP, PrimeField, binomial, scalar_parse
from .poly import Poly, poly_from_roots
from .subres import (
    bezout_cofactors_det,
    cofactors_exchange_form,
    cofactors_from_roots,
    resultant,
    sres,
)
from .sylvester import exchange_sides, msyl_det_eval, msyl_eval, rprod, syl_double, x

__all__ = [
    "ModP",
    "PrimeField",
    "Poly",
    "bezout_cofactors_det",
    "binomial",
    "cofactors_exchange_form",
    "cofactors_from_roots",
    "exchange_sides",
    "msyl_det_eval",
    "msyl_eval",
    "poly_from_roots",
    "resultant",
    "rprod",
    "scalar_parse",
    "sres",
    "syl_double",
    "x",
]
