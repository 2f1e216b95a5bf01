from dataclasses import MISSING, fields
from fractions import Fraction

import pytest
from blockrb.algebra import basis, zero
from blockrb.operators import (
    Constant,
    Exponential,
    FiniteTable,
    Kronecker,
    OperatorSpec,
    Periodic,
    Polynomial,
    ProfileError,
    ProfileSpec,
    apply_operator,
    canonical_line,
    profile1d_from_json,
    profile_eval,
    support_lines,
    zero_profile,
)
from blockrb.scalars import ONE, ZERO, C, Q, as_scalar

from hypothesis import given

from .shared_info import families, graded_elements


@pytest.mark.parametrize(
    "g, i, expected",
    [
        (Constant(3), -7, 3),
        (Kronecker(2, 5), 2, 5),
        (Kronecker(2, 5), 3, 0),
        (FiniteTable.from_mapping({0: 1, 1: 4}), 1, 4),
        (FiniteTable.from_mapping({0: 1, 1: 4}), 2, 0),
        (Exponential(Fraction(2)), -2, Fraction(1, 4)),
        (Exponential(Fraction(-1, 3)), 3, Fraction(-1, 27)),
        (Polynomial((1, 0, 2)), -3, 19),
        (Periodic((1, 2, 3)), -1, 3),
        (Periodic((1, 2, 3)), 4, 2),
    ],
)
def test_family_values(g, i, expected):
    assert g(i) == as_scalar(expected)


@pytest.mark.parametrize("family", [Constant, Kronecker])
def test_family_default_coefficient(family):
    # ring elements are dicts, so the default has to come from a factory
    (c,) = [f for f in fields(family) if f.name == "c"]
    assert c.default is MISSING
    assert family().c == ONE
    assert family() == family()


def test_symbolic_family_values():
    assert Constant(C)(10) == C
    assert Kronecker(2, Q)(2) == Q
    assert Polynomial((C, 1))(2) == C + 2


def test_finite_table_drops_zeros():
    table = FiniteTable.from_mapping({3: 0, -1: 2, 0: 1})
    assert table.support() == [-1, 0]
    with pytest.raises(ProfileError):
        FiniteTable(((0, 0),))
    with pytest.raises(ProfileError):
        FiniteTable(((0, 1), (0, 2)))


@pytest.mark.parametrize(
    "build",
    [
        lambda: Exponential(0),
        lambda: Polynomial(()),
        lambda: Periodic(()),
        lambda: ProfileSpec(((0, Constant(1)), (0, Constant(2)))),
    ],
)
def test_invalid_profiles(build):
    with pytest.raises(ProfileError):
        build()


def test_periodic_is_constant():
    assert Periodic((2, 2)).is_constant()
    assert not Periodic((1, 2)).is_constant()


@pytest.mark.parametrize("g", families)
def test_family_json(g):
    assert profile1d_from_json(g.to_json()) == g


def test_unknown_kind():
    with pytest.raises(ProfileError):
        profile1d_from_json({"kind": "gaussian"})


def test_profile_spec_lookup():
    spec = ProfileSpec(
        ((2, Constant(1)), (-1, Kronecker(0, 3))),
        extra=(((5, 5), 7), ((2, 0), 1)),
    )
    assert [m0 for m0, _ in spec.lines] == [-1, 2]
    assert profile_eval(spec, -1, 0) == as_scalar(3)
    assert profile_eval(spec, -1, 1) == ZERO
    assert profile_eval(spec, 2, 0) == as_scalar(2)
    assert profile_eval(spec, 5, 5) == as_scalar(7)
    assert profile_eval(spec, 4, 0) == ZERO
    assert spec.line(2) == Constant(1)
    assert spec.line(0) is None
    assert ProfileSpec.from_json(spec.to_json()) == spec


def test_apply_operator():
    R = OperatorSpec(1, 2, ProfileSpec.single_line(-1, Polynomial((0, 1))))
    assert apply_operator(R, basis(-1, 3)) == basis(0, 5).scale(3)
    assert apply_operator(R, basis(-1, 0)) == zero()
    assert apply_operator(R, basis(0, 3)) == zero()
    u = basis(-1, 1) + basis(-1, 2).scale(Q)
    assert apply_operator(R, u) == basis(0, 3) + basis(0, 4).scale(2 * Q)
    assert R.degree == (1, 2)


@given(graded_elements(), graded_elements())
def test_apply_operator_is_linear(u, v):
    R = OperatorSpec(0, 1, ProfileSpec.single_line(0, Exponential(Fraction(1, 2))))
    assert apply_operator(R, u + v.scale(Q)) == apply_operator(R, u) + apply_operator(R, v).scale(Q)


def test_canonical_line():
    assert canonical_line(2) == -2
    assert canonical_line(0) == 0


def test_support_lines():
    spec = ProfileSpec(
        ((0, Constant(0)), (1, Kronecker(5, 1)), (3, Periodic((0, 0))), (4, Exponential(2))),
        extra=(((-2, 0), 1),),
    )
    assert support_lines(spec) == [-2, 1, 4]
    assert support_lines(spec, range(-2, 3)) == [-2, 4]
    assert support_lines(ProfileSpec.single_line(0, zero_profile())) == []
