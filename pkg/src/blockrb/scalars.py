"""Exact scalars: rationals and polynomials over the rationals.

Every coefficient in blockrb lives in the sparse polynomial ring
QQ[q, a, b, c]. ``q`` is the parameter of B(q), ``a`` and ``b`` are the
offsets alpha and beta of the generalized bracket, and ``c`` is a free
profile parameter used for "symbolic in c" identities. Concrete numbers are
constant polynomials, so one type covers both numeric and symbolic runs.

Rationals at the boundary (evaluation results, exponential bases, search
values) are ``fractions.Fraction``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Dict, Mapping, Tuple, Union

from sympy import Symbol, sympify
from sympy.core.sympify import SympifyError
from sympy.polys.domains import QQ
from sympy.polys.rings import PolyElement, ring

SCALARS, Q, ALPHA, BETA, C = ring("q,a,b,c", QQ)
SYMBOL_NAMES: Tuple[str, ...] = tuple(str(s) for s in SCALARS.symbols)

Rational = Fraction
Scalar = PolyElement
Monomial = Tuple[int, ...]

ZERO: Scalar = SCALARS.zero
ONE: Scalar = SCALARS.one

# Names accepted when parsing scalar text
_PARSE_LOCALS = {
    **{name: Symbol(name) for name in SYMBOL_NAMES},
    "alpha": Symbol("a"),
    "beta": Symbol("b"),
}

_MONOMIAL_KEY = re.compile(r"(?:[%s](?:\^\d+)?)+" % "".join(SYMBOL_NAMES))
_MONOMIAL_FACTOR = re.compile(r"([%s])(?:\^(\d+))?" % "".join(SYMBOL_NAMES))


class MissingSymbolError(KeyError):
    """A symbol occurring in a scalar has no value in the assignment."""


def as_scalar(value: Union[Scalar, Fraction, int, str]) -> Scalar:
    """Lift an int, Fraction or rational text like '1/2' into the ring."""
    if isinstance(value, PolyElement):
        return value
    value = Fraction(value)
    return SCALARS.ground_new(QQ(value.numerator, value.denominator))


def to_fraction(coeff) -> Fraction:
    """Convert a ground-domain coefficient to a Fraction."""
    return Fraction(int(QQ.numer(coeff)), int(QQ.denom(coeff)))


def scalar_add(a: Scalar, b: Scalar) -> Scalar:
    return a + b


def scalar_sub(a: Scalar, b: Scalar) -> Scalar:
    return a - b


def scalar_neg(a: Scalar) -> Scalar:
    return -a


def scalar_mul(a: Scalar, b: Scalar) -> Scalar:
    return a * b


def scalar_eval(a: Scalar, assignment: Mapping[str, Union[Fraction, int]]) -> Fraction:
    """Evaluate ``a`` exactly at a rational point.

    Only symbols that occur in ``a`` need a value. Raises MissingSymbolError
    naming the first symbol without one.
    """
    total = Fraction(0)
    for monom, coeff in a.items():
        term = to_fraction(coeff)
        for name, exp in zip(SYMBOL_NAMES, monom):
            if not exp:
                continue
            try:
                term *= Fraction(assignment[name]) ** exp
            except KeyError:
                raise MissingSymbolError(name) from None
        total += term
    return total


def is_constant(a: Scalar) -> bool:
    return a.is_ground


def constant_value(a: Scalar) -> Fraction:
    """The value of a constant scalar. Raises ValueError for symbolic ones."""
    if not a.is_ground:
        raise ValueError(f"{a} is not a constant")
    return to_fraction(a.coeff(1)) if a else Fraction(0)


def monomial_key(monom: Monomial) -> str:
    """'1', 'q', 'q^2' for single symbols, 'a^1b^2' for mixed monomials."""
    present = [(name, exp) for name, exp in zip(SYMBOL_NAMES, monom) if exp]
    if not present:
        return "1"
    if len(present) == 1:
        name, exp = present[0]
        return name if exp == 1 else f"{name}^{exp}"
    return "".join(f"{name}^{exp}" for name, exp in present)


def parse_monomial_key(key: str) -> Monomial:
    exps = [0] * len(SYMBOL_NAMES)
    if key == "1":
        return tuple(exps)
    if not _MONOMIAL_KEY.fullmatch(key):
        raise ValueError(f"not a monomial key: {key!r}")
    for name, exp in _MONOMIAL_FACTOR.findall(key):
        exps[SYMBOL_NAMES.index(name)] += int(exp) if exp else 1
    return tuple(exps)


def scalar_to_json(a: Scalar) -> Dict[str, str]:
    return {monomial_key(monom): str(to_fraction(coeff)) for monom, coeff in sorted(a.items())}


def scalar_from_json(payload: Mapping[str, str]) -> Scalar:
    terms = {}
    for key, text in payload.items():
        value = Fraction(text)
        terms[parse_monomial_key(key)] = QQ(value.numerator, value.denominator)
    return SCALARS.from_dict(terms)


def parse_scalar(text: str) -> Scalar:
    """Parse polynomial text such as '1/2', 'q - 3' or '2*c^2 + q'."""
    try:
        expr = sympify(text.strip(), locals=_PARSE_LOCALS)
        return SCALARS.from_expr(expr)
    except (SympifyError, ValueError, TypeError, AttributeError) as e:
        raise ValueError(f"{text!r} is not a polynomial in {', '.join(SYMBOL_NAMES)}") from e
