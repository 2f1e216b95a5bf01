from fractions import Fraction

import pytest
from blockrb.printed import EquationId
from blockrb.search import SearchSpaceError, feq_solution_search

from .shared_info import exhaustive_feq_filter

window = range(-2, 3)


@pytest.mark.parametrize("q", [Fraction(0), Fraction(1, 2), Fraction(-3)])
@pytest.mark.parametrize("kprime", [0, 1])
@pytest.mark.parametrize("boundary", ["skip", "zero"])
def test_search_matches_exhaustive_filter(q, kprime, boundary):
    values = (-1, 0, 1, 2)
    result = feq_solution_search(window, values, q, kprime, boundary=boundary)
    assert result.assignments() == exhaustive_feq_filter(window, values, q, kprime, boundary)


@pytest.mark.parametrize("boundary", ["skip", "zero"])
def test_plus_variant_matches_exhaustive_filter(boundary):
    values = (0, 1, 2)
    q = Fraction(1, 2)
    result = feq_solution_search(window, values, q, 0, EquationId.FEQ_PLUS, boundary)
    assert result.assignments() == exhaustive_feq_filter(window, values, q, 0, boundary, plus=True)
    assert result.variant is EquationId.FEQ_PLUS


def test_constants_are_solutions():
    result = feq_solution_search(window, (0, 1, 3), Fraction(1, 2), 1)
    assignments = result.assignments()
    for c in (0, 1, 3):
        assert (Fraction(c),) * 5 in assignments


def test_only_zero_for_zero_values():
    result = feq_solution_search(window, (0,), 5, 0)
    assert result.assignments() == [(0,) * 5]
    assert result.solutions[0].entries == ()


def test_solutions_are_closed_under_negation():
    result = feq_solution_search(range(-1, 3), (-1, 0, 1), Fraction(1, 3), 0)
    assignments = set(result.assignments())
    assert assignments == {tuple(-v for v in sol) for sol in assignments}


def test_solutions_are_in_lexicographic_order():
    result = feq_solution_search(window, (1, 0, -1), 0, 0)
    assignments = result.assignments()
    assert assignments == sorted(assignments)
    assert result.values == (-1, 0, 1)


def test_result_json():
    result = feq_solution_search(range(0, 2), (0, 1), Fraction(1, 2), 0)
    payload = result.to_json()
    assert payload["window"] == [0, 1]
    assert payload["values"] == ["0", "1"]
    assert payload["q"] == "1/2"
    assert payload["variant"] == "FEQ_NONRES"
    assert payload["boundary"] == "skip"
    assert payload["solution_count"] == len(payload["solutions"])
    assert result.nodes_visited > 0


def test_oversized_search():
    with pytest.raises(SearchSpaceError):
        feq_solution_search(range(9), range(5), 0, 0)


def test_empty_search():
    with pytest.raises(SearchSpaceError):
        feq_solution_search([], (0, 1), 0, 0)
    with pytest.raises(SearchSpaceError):
        feq_solution_search(window, (), 0, 0)


def test_kernel_variant_rejected():
    with pytest.raises(ValueError):
        feq_solution_search(window, (0, 1), 0, 0, EquationId.KERNEL)


def test_unknown_boundary():
    with pytest.raises(ValueError):
        feq_solution_search(window, (0, 1), 0, 0, boundary="wrap")


def test_search_on_seven_indices():
    window_i = range(-3, 4)
    result = feq_solution_search(window_i, (0, 1), Fraction(1, 2), 0, EquationId.FEQ_NONRES)
    assignments = result.assignments()
    assert assignments == exhaustive_feq_filter(window_i, (0, 1), Fraction(1, 2), 0)
    assert (0,) * 7 in assignments
    assert (1,) * 7 in assignments
    assert result.window == tuple(window_i)
