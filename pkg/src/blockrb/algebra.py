"""The Block-type Lie algebras B(alpha, beta) and their bracket.

Elements are finite linear combinations of basis vectors L(m, i) indexed by
a bidegree (m, i) in Z x Z. The bracket on basis vectors is

    [L(m, i), L(n, j)] = (n (i + alpha) - m (j + beta)) L(m + n, i + j)

and B(q) is the special case alpha = beta = q.
"""

from __future__ import annotations

from dataclasses import dataclass
from types import MappingProxyType
from typing import Dict, Iterator, List, Mapping, NamedTuple, Optional, Tuple, Union

from blockrb.scalars import (
    ALPHA,
    BETA,
    ONE,
    ZERO,
    Q,
    Scalar,
    as_scalar,
    scalar_from_json,
    scalar_to_json,
)


class Bidegree(NamedTuple):
    m: int
    i: int


@dataclass(frozen=True)
class AlgebraParams:
    alpha: Scalar
    beta: Scalar

    @classmethod
    def block(cls, q) -> AlgebraParams:
        """Parameters of B(q)."""
        q = as_scalar(q)
        return cls(q, q)

    @classmethod
    def symbolic(cls) -> AlgebraParams:
        """B(alpha, beta) with both offsets left as symbols."""
        return cls(ALPHA, BETA)

    @classmethod
    def symbolic_block(cls) -> AlgebraParams:
        return cls(Q, Q)

    @property
    def is_block(self) -> bool:
        return self.alpha == self.beta

    @property
    def q(self) -> Scalar:
        if not self.is_block:
            raise ValueError("q is only defined when alpha = beta")
        return self.alpha

    def structure_constant(self, m: int, i: int, n: int, j: int) -> Scalar:
        """Coefficient of L(m + n, i + j) in [L(m, i), L(n, j)]."""
        return n * (i + self.alpha) - m * (j + self.beta)


Terms = Mapping[Bidegree, Scalar]


class GradedElement:
    """A finitely supported element of B(alpha, beta).

    Zero coefficients are never stored, so two elements are equal exactly
    when their term maps are equal.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Mapping[Tuple[int, int], Scalar]] = None):
        self._terms: Dict[Bidegree, Scalar] = {}
        for key, coeff in (terms or {}).items():
            coeff = as_scalar(coeff)
            if coeff:
                self._terms[Bidegree(*key)] = coeff

    @classmethod
    def _wrap(cls, terms: Dict[Bidegree, Scalar]) -> GradedElement:
        element = cls.__new__(cls)
        element._terms = {key: coeff for key, coeff in terms.items() if coeff}
        return element

    @property
    def terms(self) -> Terms:
        return MappingProxyType(self._terms)

    def items(self) -> Iterator[Tuple[Bidegree, Scalar]]:
        return iter(sorted(self._terms.items()))

    def support(self) -> List[Bidegree]:
        return sorted(self._terms)

    def coefficient(self, m: int, i: int) -> Scalar:
        return self._terms.get(Bidegree(m, i), ZERO)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GradedElement):
            return NotImplemented
        return self._terms == other._terms

    __hash__ = None

    def __add__(self, other: GradedElement) -> GradedElement:
        terms = dict(self._terms)
        for key, coeff in other._terms.items():
            terms[key] = terms.get(key, ZERO) + coeff
        return GradedElement._wrap(terms)

    def __neg__(self) -> GradedElement:
        return GradedElement._wrap({key: -coeff for key, coeff in self._terms.items()})

    def __sub__(self, other: GradedElement) -> GradedElement:
        return self + (-other)

    def scale(self, factor: Union[Scalar, int]) -> GradedElement:
        factor = as_scalar(factor)
        return GradedElement._wrap({key: factor * coeff for key, coeff in self._terms.items()})

    def to_json(self) -> List[list]:
        return [[m, i, scalar_to_json(coeff)] for (m, i), coeff in self.items()]

    @classmethod
    def from_json(cls, payload: List[list]) -> GradedElement:
        return cls({(m, i): scalar_from_json(coeff) for m, i, coeff in payload})

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"({coeff.as_expr()})*L({m},{i})" for (m, i), coeff in self.items())


def zero() -> GradedElement:
    return GradedElement()


def basis(m: int, i: int) -> GradedElement:
    return GradedElement._wrap({Bidegree(m, i): ONE})


def bracket(params: AlgebraParams, u: GradedElement, v: GradedElement) -> GradedElement:
    out: Dict[Bidegree, Scalar] = {}
    for (m, i), x in u._terms.items():
        shifted_i = i + params.alpha
        for (n, j), y in v._terms.items():
            coeff = n * shifted_i - m * (j + params.beta)
            if not coeff:
                continue
            key = Bidegree(m + n, i + j)
            out[key] = out.get(key, ZERO) + coeff * x * y
    return GradedElement._wrap(out)


def antisymmetry_defect(params: AlgebraParams, u: GradedElement, v: GradedElement) -> GradedElement:
    """[u, v] + [v, u]; identically zero exactly when alpha = beta."""
    return bracket(params, u, v) + bracket(params, v, u)


def jacobi_defect(
    params: AlgebraParams, u: GradedElement, v: GradedElement, w: GradedElement
) -> GradedElement:
    return (
        bracket(params, u, bracket(params, v, w))
        + bracket(params, v, bracket(params, w, u))
        + bracket(params, w, bracket(params, u, v))
    )
