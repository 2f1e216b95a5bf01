"""Structures induced by an operator R: the pre-Lie product and the deformed bracket.

    x |> y  = [R(x), y]
    {x, y}  = x |> y - y |> x + [x, y]

Closed forms for single-line operators are evaluated literally so they can be
compared against the compositions above.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import List

import pandas as pd

from blockrb.algebra import AlgebraParams, GradedElement, basis, bracket, zero
from blockrb.kernel import Window
from blockrb.operators import OperatorSpec, Profile1D, apply_operator, canonical_line
from blockrb.scalars import as_scalar


def prelie_product(params: AlgebraParams, R: OperatorSpec, u: GradedElement, v: GradedElement) -> GradedElement:
    return bracket(params, apply_operator(R, u), v)


def prelie_closed_form(g: Profile1D, k: int, kprime: int, q, m: int, i: int, n: int, j: int) -> GradedElement:
    if m != canonical_line(k):
        return zero()
    return basis(n, i + j + kprime).scale(g(i) * n * (i + kprime + as_scalar(q)))


def associator(params: AlgebraParams, R: OperatorSpec, x: GradedElement, y: GradedElement, z: GradedElement) -> GradedElement:
    """(x |> y) |> z - x |> (y |> z)"""
    return prelie_product(params, R, prelie_product(params, R, x, y), z) - prelie_product(
        params, R, x, prelie_product(params, R, y, z)
    )


def left_symmetry_defect(
    params: AlgebraParams, R: OperatorSpec, u: GradedElement, v: GradedElement, w: GradedElement
) -> GradedElement:
    return associator(params, R, u, v, w) - associator(params, R, v, u, w)


def subadjacent_bracket(params: AlgebraParams, R: OperatorSpec, u: GradedElement, v: GradedElement) -> GradedElement:
    """x |> y - y |> x, a Lie bracket whenever R is Rota-Baxter."""
    return prelie_product(params, R, u, v) - prelie_product(params, R, v, u)


def deformed_bracket(params: AlgebraParams, R: OperatorSpec, u: GradedElement, v: GradedElement) -> GradedElement:
    return subadjacent_bracket(params, R, u, v) + bracket(params, u, v)


def delta_term(g: Profile1D, k: int, kprime: int, q, m: int, i: int, n: int, j: int) -> GradedElement:
    q = as_scalar(q)
    line = canonical_line(k)
    out = zero()
    if m == line:
        out = out + basis(n, i + j + kprime).scale(g(i) * n * (i + kprime + q))
    if n == line:
        out = out - basis(m, i + j + kprime).scale(g(j) * m * (j + kprime + q))
    return out


def deformed_jacobi_defect(
    params: AlgebraParams, R: OperatorSpec, x: GradedElement, y: GradedElement, z: GradedElement
) -> GradedElement:
    def br(u, v):
        return deformed_bracket(params, R, u, v)

    return br(x, br(y, z)) + br(y, br(z, x)) + br(z, br(x, y))


def subadjacent_jacobi_defect(
    params: AlgebraParams, R: OperatorSpec, x: GradedElement, y: GradedElement, z: GradedElement
) -> GradedElement:
    def br(u, v):
        return subadjacent_bracket(params, R, u, v)

    return br(x, br(y, z)) + br(y, br(z, x)) + br(z, br(x, y))


def cyclic_operator_term(
    params: AlgebraParams, R: OperatorSpec, x: GradedElement, y: GradedElement, z: GradedElement
) -> GradedElement:
    """Sum over cyclic permutations of [R([x, y]), z].

    For Rota-Baxter R the Jacobi defect of the deformed bracket equals minus this sum.
    """

    def term(u, v, w):
        return bracket(params, apply_operator(R, bracket(params, u, v)), w)

    return term(x, y, z) + term(y, z, x) + term(z, x, y)


@dataclass(frozen=True)
class DeformedBracketConfig:
    params: AlgebraParams
    R: OperatorSpec

    def __call__(self, u: GradedElement, v: GradedElement) -> GradedElement:
        return deformed_bracket(self.params, self.R, u, v)

    def delta(self, u: GradedElement, v: GradedElement) -> GradedElement:
        return subadjacent_bracket(self.params, self.R, u, v)

    def jacobi_defect(self, x: GradedElement, y: GradedElement, z: GradedElement) -> GradedElement:
        return deformed_jacobi_defect(self.params, self.R, x, y, z)


class Product(str, Enum):
    PRELIE = "prelie"
    DEFORMED = "deformed"
    DELTA = "delta"


_PRODUCTS = {
    Product.PRELIE: prelie_product,
    Product.DEFORMED: deformed_bracket,
    Product.DELTA: subadjacent_bracket,
}


def structure_constants(params: AlgebraParams, R: OperatorSpec, window: Window, product: Product) -> pd.DataFrame:
    """Nonzero products of window basis pairs, one row per ordered pair."""
    multiply = _PRODUCTS[product]
    rows: List[dict] = []
    for (m, i), (n, j) in window.pairs():
        value = multiply(params, R, basis(m, i), basis(n, j))
        if value:
            rows.append({"m": m, "i": i, "n": n, "j": j, "terms": value.to_json()})
    return pd.DataFrame(rows, columns=["m", "i", "n", "j", "terms"])


def structure_constants_to_json(frame: pd.DataFrame) -> List[dict]:
    return [
        {"inputs": [[int(row.m), int(row.i)], [int(row.n), int(row.j)]], "terms": row.terms}
        for row in frame.itertuples(index=False)
    ]
