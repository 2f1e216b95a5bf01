from fractions import Fraction
from itertools import product

from blockrb.algebra import GradedElement
from blockrb.operators import (
    Constant,
    Exponential,
    FiniteTable,
    Kronecker,
    Periodic,
    Polynomial,
)
from blockrb.scalars import C, Q
from hypothesis import strategies as st

# One-line families used across the tests, symbolic entries included
families = [
    Constant(1),
    Constant(C),
    Kronecker(0, 1),
    Kronecker(2, Q),
    FiniteTable.from_mapping({0: 1, 1: 1}),
    FiniteTable.from_mapping({-1: Fraction(1, 2), 2: 3}),
    Exponential(Fraction(2)),
    Exponential(Fraction(-1, 3)),
    Polynomial((0, 1)),
    Polynomial((1, 0, 2)),
    Periodic((1, 2)),
    Periodic((0, 1, C)),
]

rational_qs = [Fraction(0), Fraction(1, 2), Fraction(-3), Fraction(5), Fraction(7, 3)]

small_fractions = st.fractions(min_value=-5, max_value=5, max_denominator=6)


@st.composite
def graded_elements(draw, n=2):
    """Up to three basis vectors of the square window of half-width n."""
    index = st.integers(min_value=-n, max_value=n)
    return GradedElement(draw(st.dictionaries(st.tuples(index, index), small_fractions, max_size=3)))


def independent_feq(g, i, j, q, kprime, plus=False):
    """The functional equation written out on plain Fractions; g maps index to value."""
    s = i + j + kprime
    first = (i + kprime + q) * g[i]
    second = (j + kprime + q) * g[j]
    bracket = first + second if plus else first - second
    return (i - j) * g[i] * g[j] - g[s] * bracket


def exhaustive_feq_filter(window, values, q, kprime, boundary="skip", plus=False):
    """Every assignment window -> values, kept when all checked pairs vanish."""
    window = list(window)
    solutions = []
    for assigned in product(sorted(values), repeat=len(window)):
        g = dict(zip(window, assigned))
        ok = True
        for i in window:
            for j in window:
                if i + j + kprime not in g:
                    if boundary == "skip":
                        continue
                    g_outside = dict(g)
                    g_outside[i + j + kprime] = Fraction(0)
                    residual = independent_feq(g_outside, i, j, q, kprime, plus)
                else:
                    residual = independent_feq(g, i, j, q, kprime, plus)
                if residual != 0:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            solutions.append(assigned)
    return solutions
