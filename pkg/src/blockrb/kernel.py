"""Rota-Baxter residuals computed directly from the bracket, and window sweeps.

The residual of an operator R on a pair (u, v) is

    [R(u), R(v)] - R([R(u), v] + [u, R(v)])

and R is Rota-Baxter of weight zero exactly when it vanishes for all pairs.
Nothing here depends on a printed formula, so these results act as the
ground truth for every other check in the package.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from itertools import chain, islice
from typing import Any, Dict, Iterable, Iterator, List, Optional, Tuple, Union

import numpy as np

from blockrb.algebra import AlgebraParams, Bidegree, GradedElement, basis, bracket
from blockrb.operators import OperatorSpec, apply_operator
from blockrb.scalars import ZERO, Scalar, as_scalar, scalar_to_json

logger = logging.getLogger(__name__)

DEFAULT_WITNESS_CAP = 100


@dataclass(frozen=True)
class Window:
    """A finite box of bidegrees, bounds inclusive."""

    m_min: int
    m_max: int
    i_min: int
    i_max: int

    def __post_init__(self):
        if self.m_min > self.m_max or self.i_min > self.i_max:
            raise ValueError(f"empty window {self}")

    @classmethod
    def square(cls, n: int) -> Window:
        if n < 0:
            raise ValueError("window half-width must be non-negative")
        return cls(-n, n, -n, n)

    @property
    def m_range(self) -> range:
        return range(self.m_min, self.m_max + 1)

    @property
    def i_range(self) -> range:
        return range(self.i_min, self.i_max + 1)

    def __contains__(self, key: Tuple[int, int]) -> bool:
        m, i = key
        return self.m_min <= m <= self.m_max and self.i_min <= i <= self.i_max

    def basis(self) -> List[Bidegree]:
        return [Bidegree(m, i) for m in self.m_range for i in self.i_range]

    def pairs(self) -> Iterator[Tuple[Bidegree, Bidegree]]:
        """Ordered pairs of basis bidegrees, lexicographic."""
        keys = self.basis()
        for u in keys:
            for v in keys:
                yield u, v

    def i_pairs(self) -> Iterator[Tuple[int, int]]:
        for i in self.i_range:
            for j in self.i_range:
                yield i, j

    def to_json(self) -> Dict[str, int]:
        return {"m_min": self.m_min, "m_max": self.m_max, "i_min": self.i_min, "i_max": self.i_max}


class Status(str, Enum):
    HOLDS = "holds-on-window"
    FAILS = "fails"
    MIXED = "mixed"


Residual = Union[Scalar, GradedElement]


@dataclass(frozen=True)
class Witness:
    """A concrete input where an identity fails.

    ``inputs`` is (m, i, n, j) for operator pairs and (i, j) for
    one-dimensional equations.
    """

    inputs: Tuple[int, ...]
    residual: Residual

    def to_json(self) -> dict:
        if isinstance(self.residual, GradedElement):
            residual = {"element": self.residual.to_json()}
        else:
            residual = {"scalar": scalar_to_json(self.residual)}
        return {"inputs": list(self.inputs), "residual": residual}


@dataclass(frozen=True)
class Verdict:
    claim: str
    window: Optional[Window]
    status: Status
    witnesses: Tuple[Witness, ...] = ()
    witness_count: int = 0
    truncated: bool = False
    config: Dict[str, Any] = field(default_factory=dict)
    notes: str = ""

    @property
    def passed(self) -> bool:
        return self.status is Status.HOLDS

    def to_json(self) -> dict:
        return {
            "claim": self.claim,
            "config": self.config,
            "window": self.window.to_json() if self.window is not None else None,
            "status": self.status.value,
            "witnesses": [w.to_json() for w in self.witnesses],
            "witness_count": self.witness_count,
            "truncated": self.truncated,
            "notes": self.notes,
        }


def collect_verdict(
    claim: str,
    window: Optional[Window],
    witnesses: Iterable[Witness],
    cap: int = DEFAULT_WITNESS_CAP,
    config: Optional[Dict[str, Any]] = None,
    notes: str = "",
) -> Verdict:
    """Drain a witness stream into a Verdict, keeping the first ``cap``."""
    kept: List[Witness] = []
    count = 0
    for witness in witnesses:
        count += 1
        if len(kept) < cap:
            kept.append(witness)
    return Verdict(
        claim=claim,
        window=window,
        status=Status.FAILS if count else Status.HOLDS,
        witnesses=tuple(kept),
        witness_count=count,
        truncated=count > cap,
        config=dict(config or {}),
        notes=notes,
    )


def combine_verdicts(
    claim: str,
    verdicts: Iterable[Verdict],
    cap: int = DEFAULT_WITNESS_CAP,
    config: Optional[Dict[str, Any]] = None,
    notes: str = "",
) -> Verdict:
    """One verdict over several sweeps of the same window.

    Mixed when some of the sweeps hold and others fail.
    """
    verdicts = list(verdicts)
    outcomes = {verdict.passed for verdict in verdicts}
    if outcomes == {False}:
        status = Status.FAILS
    elif False in outcomes:
        status = Status.MIXED
    else:
        status = Status.HOLDS
    witnesses = tuple(islice(chain.from_iterable(verdict.witnesses for verdict in verdicts), cap))
    count = sum(verdict.witness_count for verdict in verdicts)
    return Verdict(
        claim=claim,
        window=verdicts[0].window if verdicts else None,
        status=status,
        witnesses=witnesses,
        witness_count=count,
        truncated=count > len(witnesses),
        config=dict(config or {}),
        notes=notes,
    )


def rb_residual(params: AlgebraParams, R: OperatorSpec, u: GradedElement, v: GradedElement) -> GradedElement:
    Ru = apply_operator(R, u)
    Rv = apply_operator(R, v)
    inner = bracket(params, Ru, v) + bracket(params, u, Rv)
    return bracket(params, Ru, Rv) - apply_operator(R, inner)


def residual_coefficient(
    params: AlgebraParams, R: OperatorSpec, u: Tuple[int, int], v: Tuple[int, int]
) -> Scalar:
    """The residual on basis vectors, read off at its only possible bidegree.

    For L(m, i) and L(n, j) every term of the residual sits at
    (m + n + 2k, i + j + 2k').
    """
    (m, i), (n, j) = u, v
    residual = rb_residual(params, R, basis(m, i), basis(n, j))
    return residual.coefficient(m + n + 2 * R.k, i + j + 2 * R.kprime)


def operator_config(params: AlgebraParams, R: OperatorSpec) -> Dict[str, Any]:
    return {
        "alpha": scalar_to_json(params.alpha),
        "beta": scalar_to_json(params.beta),
        "operator": R.to_json(),
    }


def kernel_witnesses(params: AlgebraParams, R: OperatorSpec, window: Window) -> Iterator[Witness]:
    profile = R.profile
    for (m, i), (n, j) in window.pairs():
        # R vanishes on both inputs, so every term of the residual does too
        if not profile(m, i) and not profile(n, j):
            continue
        residual = rb_residual(params, R, basis(m, i), basis(n, j))
        if residual:
            yield Witness((m, i, n, j), residual)


def window_sweep(
    params: AlgebraParams,
    R: OperatorSpec,
    window: Window,
    cap: int = DEFAULT_WITNESS_CAP,
    claim: str = "KERNEL_SWEEP",
    notes: str = "",
) -> Verdict:
    """Evaluate the residual on every ordered pair of basis vectors in ``window``."""
    config = {**operator_config(params, R), "variant": "KERNEL"}
    logger.info("sweeping %s over %s", R.degree, window)
    verdict = collect_verdict(claim, window, kernel_witnesses(params, R, window), cap, config, notes)
    logger.info("%s: %s with %d witnesses", claim, verdict.status.value, verdict.witness_count)
    return verdict


def random_coefficient(rng: np.random.Generator) -> Scalar:
    numerator = int(rng.integers(-5, 6))
    denominator = int(rng.integers(1, 5))
    return as_scalar(Fraction(numerator, denominator))


def random_element(rng: np.random.Generator, window: Window, terms: int = 3) -> GradedElement:
    """A random element with up to ``terms`` basis vectors drawn from ``window``."""
    out: Dict[Tuple[int, int], Scalar] = {}
    for _ in range(terms):
        key = (int(rng.integers(window.m_min, window.m_max + 1)), int(rng.integers(window.i_min, window.i_max + 1)))
        out[key] = out.get(key, ZERO) + random_coefficient(rng)
    return GradedElement(out)


def random_basis_triples(
    rng: np.random.Generator, window: Window, count: int
) -> List[Tuple[Bidegree, Bidegree, Bidegree]]:
    ms = rng.integers(window.m_min, window.m_max + 1, size=(count, 3))
    is_ = rng.integers(window.i_min, window.i_max + 1, size=(count, 3))
    return [
        tuple(Bidegree(int(m), int(i)) for m, i in zip(row_m, row_i))
        for row_m, row_i in zip(ms, is_)
    ]
