"""Brute-force search for solutions of the one-line functional equations.

Assignments g: window -> values are enumerated by backtracking. A pair
(i, j) is checked as soon as every value it references is assigned, which
prunes most of the tree for small value sets.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from blockrb.operators import FiniteTable
from blockrb.printed import SEARCH_VARIANTS, EquationId, feq_value
from blockrb.scalars import constant_value

logger = logging.getLogger(__name__)

MAX_ASSIGNMENTS = 4**9
BOUNDARY_MODES = ("skip", "zero")

_BOUNDARY_NOTES = {
    "skip": "pairs whose i+j+k' leaves the window are skipped",
    "zero": "g is taken to be 0 outside the window",
}


class SearchSpaceError(ValueError):
    """The requested search has more assignments than a desk-scale run allows."""


@dataclass(frozen=True)
class FeqSearchResult:
    window: Tuple[int, ...]
    values: Tuple[Fraction, ...]
    q: Fraction
    kprime: int
    variant: EquationId
    boundary: str
    solutions: Tuple[FiniteTable, ...]
    nodes_visited: int

    def assignments(self) -> List[Tuple[Fraction, ...]]:
        """Solutions as value tuples aligned with ``window``."""
        return [tuple(constant_value(sol(i)) for i in self.window) for sol in self.solutions]

    def to_json(self) -> dict:
        return {
            "window": list(self.window),
            "values": [str(v) for v in self.values],
            "q": str(self.q),
            "kprime": self.kprime,
            "variant": self.variant.value,
            "boundary": self.boundary,
            "boundary_convention": _BOUNDARY_NOTES[self.boundary],
            "solution_count": len(self.solutions),
            "solutions": [sol.to_json() for sol in self.solutions],
        }


def _checks_by_position(
    indices: Sequence[int], kprime: int, boundary: str
) -> List[List[Tuple[int, int, Optional[int]]]]:
    position = {i: p for p, i in enumerate(indices)}
    checks: List[List[Tuple[int, int, Optional[int]]]] = [[] for _ in indices]
    for i in indices:
        for j in indices:
            s = i + j + kprime
            if s in position:
                last = max(position[i], position[j], position[s])
            elif boundary == "skip":
                continue
            else:
                s, last = None, max(position[i], position[j])
            checks[last].append((i, j, s))
    return checks


def feq_solution_search(
    window_i: Iterable[int],
    values: Iterable,
    q,
    kprime: int,
    variant: EquationId = EquationId.FEQ_NONRES,
    boundary: str = "skip",
) -> FeqSearchResult:
    indices = sorted(set(window_i))
    values = tuple(sorted({Fraction(v) for v in values}))
    q = Fraction(q)
    if variant not in SEARCH_VARIANTS:
        raise ValueError(f"search supports {', '.join(v.value for v in SEARCH_VARIANTS)}, not {variant.value}")
    if boundary not in BOUNDARY_MODES:
        raise ValueError(f"unknown boundary mode {boundary!r}")
    if not indices or not values:
        raise SearchSpaceError("search window and value set must be non-empty")
    if len(values) ** len(indices) > MAX_ASSIGNMENTS:
        raise SearchSpaceError(
            f"{len(values)}^{len(indices)} assignments exceeds the limit of 4^9"
        )

    checks = _checks_by_position(indices, kprime, boundary)
    shift = q + kprime
    plus = variant is EquationId.FEQ_PLUS
    assignment: Dict[int, Fraction] = {}
    found: List[Tuple[Fraction, ...]] = []
    visited = 0
    logger.info(
        "searching %d^%d assignments for %s (q=%s, k'=%d, boundary=%s)",
        len(values), len(indices), variant.value, q, kprime, boundary,
    )

    def consistent(p: int) -> bool:
        for i, j, s in checks[p]:
            gs = assignment[s] if s is not None else Fraction(0)
            if feq_value(assignment[i], assignment[j], gs, i, j, shift, plus):
                return False
        return True

    def extend(p: int) -> None:
        nonlocal visited
        if p == len(indices):
            found.append(tuple(assignment[i] for i in indices))
            return
        for value in values:
            visited += 1
            assignment[indices[p]] = value
            if consistent(p):
                extend(p + 1)
        del assignment[indices[p]]

    extend(0)
    logger.info("search finished: %d solutions, %d nodes", len(found), visited)
    solutions = tuple(
        FiniteTable.from_mapping(dict(zip(indices, assigned))) for assigned in found
    )
    return FeqSearchResult(
        window=tuple(indices),
        values=values,
        q=q,
        kprime=kprime,
        variant=variant,
        boundary=boundary,
        solutions=solutions,
        nodes_visited=visited,
    )
