from fractions import Fraction

import pytest
from blockrb.algebra import AlgebraParams
from blockrb.kernel import Status, Window
from blockrb.operators import (
    Constant,
    Exponential,
    FiniteTable,
    Kronecker,
    OperatorSpec,
    Periodic,
    Polynomial,
    ProfileSpec,
)
from blockrb.printed import (
    Agreement,
    EquationId,
    abstract_rb_residual,
    abstract_sweep,
    agreement,
    constraint_value,
    cross_check,
    feq_plus_residual,
    feq_residual,
    line_kernel_residual,
    line_residual,
    line_sweep,
    origin_substitution,
    printed_rb_residual,
    printed_sweep,
)
from blockrb.scalars import ALPHA, BETA, ZERO, C, Q, as_scalar

from .shared_info import families, independent_feq, rational_qs

half = Fraction(1, 2)


@pytest.mark.parametrize("g", families)
def test_abstract_specializes_to_printed(g):
    f = ProfileSpec.single_line(-1, g)
    for m in (-1, 0):
        for n in (-1, 1):
            for i in range(-2, 3):
                for j in range(-2, 3):
                    assert abstract_rb_residual(f, m, i, n, j, Q, Q, 1, 1) == printed_rb_residual(
                        f, m, i, n, j, Q, 1, 1
                    )


@pytest.mark.parametrize("g", families)
@pytest.mark.parametrize("k, kprime", [(1, 0), (2, -1), (-1, 2)])
def test_printed_on_line_is_plus_variant(g, k, kprime):
    f = ProfileSpec.single_line(-k, g)
    for i in range(-3, 4):
        for j in range(-3, 4):
            printed = printed_rb_residual(f, -k, i, -k, j, Q, k, kprime)
            assert printed == -k * feq_plus_residual(g, i, j, Q, kprime)


@pytest.mark.parametrize("g", families)
def test_line_kernel_residual(g):
    k, kprime = 1, 1
    for i in range(-2, 3):
        for j in range(-2, 3):
            s = i + j + kprime
            expected = k * g(s) * ((i + kprime + Q) * g(i) - (j + kprime + Q) * g(j))
            assert line_kernel_residual(g, i, j, Q, k, kprime) == expected


def test_constant_profile_on_line():
    # -k (i - j) c^2 + k c^2 [(i + k' + q) + (j + k' + q)] for g = c
    f = ProfileSpec.single_line(-1, Constant(C))
    kprime = 1
    for i in range(-10, 11):
        for j in range(-10, 11):
            expected = -(i - j) * C**2 + C**2 * ((i + kprime + Q) + (j + kprime + Q))
            assert printed_rb_residual(f, -1, i, -1, j, Q, 1, kprime) == expected


@pytest.mark.parametrize(
    "g, expected",
    [
        (Exponential(2), -3),
        (Polynomial((0, 1)), Fraction(-3, 2)),
        (Periodic((1, 2)), -3),
    ],
)
def test_feq_values_at_one_zero(g, expected):
    assert feq_residual(g, 1, 0, half, 0) == as_scalar(expected)


@pytest.mark.parametrize("kprime", [-2, -1, 0, 1, 2])
def test_polynomial_profile_symbolically(kprime):
    assert feq_residual(Polynomial((0, 1)), 1, 0, Q, kprime) == -(1 + kprime) * (1 + kprime + Q)


@pytest.mark.parametrize("q", rational_qs)
def test_feq_matches_independent_transcription(q):
    g = FiniteTable.from_mapping({-1: 2, 0: 1, 2: Fraction(1, 3)})
    values = {i: Fraction(0) for i in range(-10, 11)}
    values.update({-1: Fraction(2), 0: Fraction(1), 2: Fraction(1, 3)})
    for kprime in (0, 1):
        for i in range(-3, 4):
            for j in range(-3, 4):
                for plus, residual in ((False, feq_residual), (True, feq_plus_residual)):
                    expected = independent_feq(values, i, j, q, kprime, plus)
                    assert residual(g, i, j, q, kprime) == as_scalar(expected)


def test_kronecker_at_zero_shift_holds():
    verdict = line_sweep(EquationId.FEQ_NONRES, Kronecker(0, 1), Q, 1, 0, Window.square(4))
    assert verdict.status is Status.HOLDS


def test_kronecker_with_shift():
    verdict = line_sweep(EquationId.FEQ_NONRES, Kronecker(0, 1), 5, 1, 1, Window.square(3))
    assert verdict.status is Status.FAILS
    assert [w.inputs for w in verdict.witnesses] == [(-1, 0), (0, -1)]
    assert [w.residual for w in verdict.witnesses] == [as_scalar(6), as_scalar(-6)]


def test_finite_table_first_witness():
    g = FiniteTable.from_mapping({0: 1, 1: 1})
    verdict = line_sweep(EquationId.FEQ_NONRES, g, half, 1, 0, Window.square(4))
    assert verdict.witnesses[0].inputs == (-1, 1)
    assert verdict.witnesses[0].residual == as_scalar(Fraction(3, 2))


@pytest.mark.parametrize("n", [4, 6])
def test_polynomial_witness_is_kept(n):
    verdict = line_sweep(EquationId.FEQ_NONRES, Polynomial((0, 1)), half, 1, 0, Window.square(n), cap=100)
    assert (1, 0) in [w.inputs for w in verdict.witnesses]


@pytest.mark.parametrize("g", families)
def test_feq_antisymmetry(g):
    # the minus variant changes sign under i <-> j
    for i in range(-3, 4):
        for j in range(-3, 4):
            assert feq_residual(g, i, j, Q, 1) == -feq_residual(g, j, i, Q, 1)
            assert feq_plus_residual(g, i, j, Q, 1) == feq_plus_residual(g, j, i, Q, 1) + 2 * (i - j) * g(i) * g(j)


@pytest.mark.parametrize("g", families)
def test_feq_vanishes_on_diagonal(g):
    for i in range(-4, 5):
        assert not feq_residual(g, i, i, Q, 2)


def test_line_residual_dispatch():
    g = Exponential(2)
    assert line_residual(EquationId.FEQ_NONRES, g, 1, 0, half, 1, 0) == feq_residual(g, 1, 0, half, 0)
    assert line_residual(EquationId.FEQ_PLUS, g, 1, 0, half, 1, 0) == feq_plus_residual(g, 1, 0, half, 0)
    assert line_residual(EquationId.KERNEL, g, 1, 0, half, 1, 0) == line_kernel_residual(g, 1, 0, half, 1, 0)
    with pytest.raises(ValueError):
        line_residual(EquationId.RB_PRINTED, g, 1, 0, half, 1, 0)


def test_constraint_values():
    f = ProfileSpec.single_line(0, Constant(1))
    assert constraint_value(f, 0, 0, Q, 1, 0) == Q
    assert constraint_value(f, 0, 0, Q, 0, 0) == ZERO
    assert constraint_value(f, 0, 3, 2, 1, 2) == ZERO
    assert constraint_value(f, 1, 0, Q, 1, 0) == ZERO


def test_origin_substitution():
    f = ProfileSpec.single_line(-1, Constant(1))
    value = origin_substitution(f, -1, 2, ALPHA, BETA, 1, 0)
    assert value == abstract_rb_residual(f, -1, 2, 0, 0, ALPHA, BETA, 1, 0)


def test_printed_sweep_at_degree_zero():
    f = ProfileSpec.single_line(0, Exponential(3))
    verdict = printed_sweep(f, Q, 0, 1, Window.square(2))
    assert verdict.status is Status.HOLDS
    assert verdict.config["variant"] == "RB_PRINTED"


def test_abstract_sweep_fails_on_resonant_line():
    f = ProfileSpec.single_line(-1, Constant(1))
    verdict = abstract_sweep(f, AlgebraParams.block(0), 1, 0, Window.square(2))
    assert verdict.status is Status.FAILS
    assert verdict.config["alpha"] == {}


def test_agreement():
    assert agreement(ZERO, ZERO) is Agreement.BOTH_ZERO
    assert agreement(Q, as_scalar(2)) is Agreement.BOTH_NONZERO
    assert agreement(ZERO, Q) is Agreement.MISMATCH


def test_cross_check_counts(resonant_operator):
    params = AlgebraParams.block(0)
    report = cross_check(params, resonant_operator, Window.square(3))
    assert report.pairs_checked == 2401
    assert report.counts() == {"both-zero": 2353, "both-nonzero": 36, "mismatch": 12}
    payload = report.to_json()
    assert payload["equation"] == "RB_PRINTED"
    assert len(payload["mismatches"]) == 12
    assert payload["notes"] == ""


def test_cross_check_mismatches_reevaluate(resonant_operator):
    params = AlgebraParams.block(0)
    report = cross_check(params, resonant_operator, Window.square(3))
    f = resonant_operator.profile
    for row in report.mismatches.itertuples(index=False):
        assert row.m == row.n == -1
        m, i, n, j = int(row.m), int(row.i), int(row.n), int(row.j)
        printed = printed_rb_residual(f, m, i, n, j, 0, 1, 0)
        # on the line the printed value is 2j and the kernel coefficient is i - j
        assert printed == as_scalar(2 * j)
        assert row.kernel == as_scalar(i - j)
        assert bool(printed) != bool(row.kernel)


def test_cross_check_is_deterministic(resonant_operator):
    params = AlgebraParams.block(0)
    first = cross_check(params, resonant_operator, Window.square(2)).to_json()
    second = cross_check(params, resonant_operator, Window.square(2)).to_json()
    assert first == second


def test_cross_check_notes_general_params():
    R = OperatorSpec(0, 0, ProfileSpec.single_line(0, Constant(1)))
    report = cross_check(AlgebraParams.symbolic(), R, Window.square(1))
    assert "alpha != beta" in report.notes
