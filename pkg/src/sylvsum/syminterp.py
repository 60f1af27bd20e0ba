"""Symmetric multivariate Lagrange interpolation on the basis {R(X, B')}.

A symmetric polynomial in |B| - d variables of degree <= d in each variable is
stored by its coordinates c_{B'} over the products R(X, B'), |B'| = d, and is
only ever evaluated.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Callable, Mapping, Sequence, Union

from .field import binomial, div, lift_all, scalar_format, scalar_parse
from .linalg import det_exact
from .sylvester import SubsetSelector, check_distinct, rscalar, subsets


def sym_dim(ell: int, d: int) -> int:
    """Dimension of the symmetric polynomials in ell variables of degree <= d in each."""
    if ell < 1 or d < 0:
        raise ValueError(f"need ell >= 1 and d >= 0, got ell={ell}, d={d}")
    return binomial(ell + d, d)


@dataclass(frozen=True)
class SymPolyInBasis:
    B: tuple
    d: int
    coeffs: Mapping[int, object] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "B", lift_all(self.B))
        n = len(self.B)
        if not 0 <= self.d <= n - 1:
            raise ValueError(f"need 0 <= d <= {n - 1}, got d={self.d}")
        ordered = {}
        for mask in sorted(self.coeffs):
            sel = SubsetSelector(mask, n)
            if sel.cardinality != self.d:
                raise ValueError(f"basis index {mask:#b} does not have {self.d} elements")
            ordered[mask] = self.coeffs[mask]
        object.__setattr__(self, "coeffs", ordered)

    @property
    def nvars(self) -> int:
        return len(self.B) - self.d

    def __call__(self, point: Sequence):
        return sym_eval(self, point)

    def to_json_obj(self) -> dict:
        return {
            "B": [scalar_format(b) for b in self.B],
            "d": self.d,
            "coeffs": {str(mask): scalar_format(c) for mask, c in self.coeffs.items()},
        }

    @classmethod
    def from_json_obj(cls, obj: dict, lift=None) -> "SymPolyInBasis":
        lift = lift or (lambda v: v)
        B = tuple(lift(scalar_parse(b)) for b in obj["B"])
        coeffs = {int(k): lift(scalar_parse(v)) for k, v in obj["coeffs"].items()}
        return cls(B, int(obj["d"]), coeffs)

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json(cls, text: str, lift=None) -> "SymPolyInBasis":
        return cls.from_json_obj(json.loads(text), lift)


Values = Union[Mapping[int, object], Callable[[tuple], object]]


def node_masks(n: int, d: int) -> list[int]:
    """Bitmasks of the node subsets B \\ B' (size n - d), in increasing order."""
    return [s.mask for s in subsets(n, n - d)]


def sym_interpolate(B: Sequence, d: int, values: Values) -> SymPolyInBasis:
    """Coordinates c_{B'} = h(B \\ B') / R(B \\ B', B').

    ``values`` maps the bitmask of each node subset B \\ B' to h there, or is
    a callable taking the node tuple.
    """
    B = lift_all(B)
    n = len(B)
    if not 0 <= d <= n - 1:
        raise ValueError(f"need 0 <= d <= {n - 1}, got d={d}")
    check_distinct(B, "interpolation nodes")
    coeffs = {}
    for sel in subsets(n, d):
        node = sel.rest(B)
        node_mask = sel.complement().mask
        if callable(values):
            h = values(node)
        else:
            if node_mask not in values:
                raise KeyError(f"missing value at node {node}")
            h = values[node_mask]
        coeffs[sel.mask] = div(h, rscalar(node, sel.pick(B)))
    return SymPolyInBasis(B, d, coeffs)


def sym_eval(h: SymPolyInBasis, point: Sequence):
    """sum c_{B'} prod_{t in point, beta in B'} (t - beta)."""
    point = lift_all(point)
    if len(point) != h.nvars:
        raise ValueError(f"point must have {h.nvars} entries, got {len(point)}")
    n = len(h.B)
    total = 0
    for mask, c in h.coeffs.items():
        if c == 0:
            continue
        total = total + c * rscalar(point, SubsetSelector(mask, n).pick(h.B))
    return total


def evaluation_matrix(B: Sequence, d: int) -> list[list]:
    """Entry (B'', B') is R(B \\ B'', B'): basis element B' at node B \\ B''."""
    B = lift_all(B)
    sels = list(subsets(len(B), d))
    return [[rscalar(row.rest(B), col.pick(B)) for col in sels] for row in sels]


def basis_independence_check(B: Sequence, d: int) -> bool:
    n = len(B)
    if not 0 <= d <= n - 1:
        raise ValueError(f"need 0 <= d <= {n - 1}, got d={d}")
    check_distinct(lift_all(B), "interpolation nodes")
    return det_exact(evaluation_matrix(B, d)) != 0
