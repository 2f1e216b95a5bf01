"""Scalar equations transcribed as printed, and their cross-check against the kernel.

Every function here evaluates one printed formula literally, including
suspected sign or shift slips. Corrected or alternative readings appear only
as separately named variants (FEQ_PLUS, KERNEL), so that the audit can say
which reading a claim actually satisfies.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Any, Callable, Dict, Iterable, Iterator, List, Optional, TypeVar

import pandas as pd

from blockrb.algebra import AlgebraParams
from blockrb.kernel import (
    DEFAULT_WITNESS_CAP,
    Verdict,
    Window,
    Witness,
    collect_verdict,
    residual_coefficient,
)
from blockrb.operators import OperatorSpec, Profile1D, ProfileSpec, canonical_line
from blockrb.scalars import ZERO, Scalar, as_scalar, scalar_to_json

logger = logging.getLogger(__name__)


class EquationId(str, Enum):
    RB_PRINTED = "RB_PRINTED"
    RB_ABSTRACT = "RB_ABSTRACT"
    CONSTRAINT = "CONSTRAINT"
    CONSTRAINT_ABSTRACT = "CONSTRAINT_ABSTRACT"
    FEQ_NONRES = "FEQ_NONRES"
    FEQ_ABSTRACT = "FEQ_ABSTRACT"
    FEQ_PLUS = "FEQ_PLUS"
    KERNEL = "KERNEL"


# Equations a one-line profile g can be tested against
LINE_VARIANTS = (EquationId.FEQ_NONRES, EquationId.FEQ_PLUS, EquationId.KERNEL)
SEARCH_VARIANTS = (EquationId.FEQ_NONRES, EquationId.FEQ_PLUS)

Number = TypeVar("Number", Scalar, Fraction)


def feq_value(gi: Number, gj: Number, gs: Number, i: int, j: int, shift: Number, plus: bool = False) -> Number:
    """(i - j) g(i) g(j) - g(s) [(i + shift) g(i) -+ (j + shift) g(j)].

    ``gs`` is g(i + j + k') and ``shift`` is k' + q. Works on Fractions as
    well as Scalars as long as all arguments share one type.
    """
    right = (i + shift) * gi + (j + shift) * gj if plus else (i + shift) * gi - (j + shift) * gj
    return (i - j) * gi * gj - gs * right


def printed_rb_residual(f: ProfileSpec, m: int, i: int, n: int, j: int, q, k: int, kprime: int) -> Scalar:
    q = as_scalar(q)
    f1, f2, f3 = f(m, i), f(n, j), f(m + n + k, i + j + kprime)
    if not (f1 or f2) or (not f3 and not (f1 and f2)):
        return ZERO
    lhs = f1 * f2 * (n * (i + q) - m * (j + q))
    rhs = f3 * (f1 * (n * (i + kprime + q) - (m + k) * (j + q)) - f2 * ((n + k) * (i + q) - m * (j + kprime + q)))
    return lhs - rhs


def abstract_rb_residual(
    f: ProfileSpec, m: int, i: int, n: int, j: int, alpha, beta, k: int, kprime: int
) -> Scalar:
    """The printed general-(alpha, beta) equation with a_i = i + alpha, b_j = j + beta."""
    alpha, beta = as_scalar(alpha), as_scalar(beta)
    f1, f2, f3 = f(m, i), f(n, j), f(m + n + k, i + j + kprime)
    if not (f1 or f2) or (not f3 and not (f1 and f2)):
        return ZERO
    lhs = f1 * f2 * (n * (i + alpha) - m * (j + beta))
    rhs = f3 * (
        f1 * (n * (i + kprime + alpha) - (m + k) * (j + beta))
        - f2 * ((n + k) * (i + alpha) - m * (j + kprime + beta))
    )
    return lhs - rhs


def origin_substitution(f: ProfileSpec, m: int, i: int, alpha, beta, k: int, kprime: int) -> Scalar:
    """The general equation at (n, j) = (0, 0), kept as a raw Scalar."""
    return abstract_rb_residual(f, m, i, 0, 0, alpha, beta, k, kprime)


def constraint_value(f: ProfileSpec, m: int, i: int, q, k: int, kprime: int) -> Scalar:
    value = f(m, i)
    return (as_scalar(q) - kprime) * (m + k) * value * value


def abstract_constraint_value(f: ProfileSpec, m: int, i: int, beta, k: int, kprime: int) -> Scalar:
    return constraint_value(f, m, i, beta, k, kprime)


def feq_residual(g: Profile1D, i: int, j: int, q, kprime: int) -> Scalar:
    return feq_value(g(i), g(j), g(i + j + kprime), i, j, as_scalar(q) + kprime)


def feq_plus_residual(g: Profile1D, i: int, j: int, q, kprime: int) -> Scalar:
    """The same equation with '+' between the two bracketed terms."""
    return feq_value(g(i), g(j), g(i + j + kprime), i, j, as_scalar(q) + kprime, plus=True)


def feq_abstract_residual(g: Profile1D, i: int, j: int, alpha, kprime: int) -> Scalar:
    return feq_residual(g, i, j, alpha, kprime)


def line_kernel_residual(g: Profile1D, i: int, j: int, q, k: int, kprime: int) -> Scalar:
    """Kernel residual of g placed on line -k, on the pair L(-k, i), L(-k, j)."""
    m0 = canonical_line(k)
    R = OperatorSpec(k, kprime, ProfileSpec.single_line(m0, g))
    return residual_coefficient(AlgebraParams.block(q), R, (m0, i), (m0, j))


def line_residual(variant: EquationId, g: Profile1D, i: int, j: int, q, k: int, kprime: int) -> Scalar:
    if variant is EquationId.FEQ_NONRES:
        return feq_residual(g, i, j, q, kprime)
    if variant is EquationId.FEQ_PLUS:
        return feq_plus_residual(g, i, j, q, kprime)
    if variant is EquationId.FEQ_ABSTRACT:
        return feq_abstract_residual(g, i, j, q, kprime)
    if variant is EquationId.KERNEL:
        return line_kernel_residual(g, i, j, q, k, kprime)
    raise ValueError(f"{variant.value} is not an equation on a single profile line")


def _scalar_witnesses(pairs: Iterable[tuple], residual: Callable[..., Scalar]) -> Iterator[Witness]:
    for inputs in pairs:
        value = residual(*inputs)
        if value:
            yield Witness(tuple(inputs), value)


def line_sweep(
    variant: EquationId,
    g: Profile1D,
    q,
    k: int,
    kprime: int,
    window: Window,
    cap: int = DEFAULT_WITNESS_CAP,
    claim: str = "LINE_SWEEP",
    config: Optional[Dict[str, Any]] = None,
    notes: str = "",
) -> Verdict:
    """Evaluate a one-line equation on every (i, j) of the window's i-range."""
    config = {
        "q": scalar_to_json(as_scalar(q)),
        "k": k,
        "kprime": kprime,
        "g": g.to_json(),
        "variant": variant.value,
        **(config or {}),
    }
    witnesses = _scalar_witnesses(
        window.i_pairs(), lambda i, j: line_residual(variant, g, i, j, q, k, kprime)
    )
    return collect_verdict(claim, window, witnesses, cap, config, notes)


def printed_sweep(
    f: ProfileSpec,
    q,
    k: int,
    kprime: int,
    window: Window,
    cap: int = DEFAULT_WITNESS_CAP,
    claim: str = "PRINTED_SWEEP",
    config: Optional[Dict[str, Any]] = None,
    notes: str = "",
) -> Verdict:
    config = {
        "q": scalar_to_json(as_scalar(q)),
        "k": k,
        "kprime": kprime,
        "profile": f.to_json(),
        "variant": EquationId.RB_PRINTED.value,
        **(config or {}),
    }
    pairs = ((m, i, n, j) for (m, i), (n, j) in window.pairs())
    witnesses = _scalar_witnesses(pairs, lambda m, i, n, j: printed_rb_residual(f, m, i, n, j, q, k, kprime))
    return collect_verdict(claim, window, witnesses, cap, config, notes)


def abstract_sweep(
    f: ProfileSpec,
    params: AlgebraParams,
    k: int,
    kprime: int,
    window: Window,
    cap: int = DEFAULT_WITNESS_CAP,
    claim: str = "ABSTRACT_SWEEP",
    config: Optional[Dict[str, Any]] = None,
    notes: str = "",
) -> Verdict:
    config = {
        "alpha": scalar_to_json(params.alpha),
        "beta": scalar_to_json(params.beta),
        "k": k,
        "kprime": kprime,
        "profile": f.to_json(),
        "variant": EquationId.RB_ABSTRACT.value,
        **(config or {}),
    }
    pairs = ((m, i, n, j) for (m, i), (n, j) in window.pairs())
    witnesses = _scalar_witnesses(
        pairs,
        lambda m, i, n, j: abstract_rb_residual(f, m, i, n, j, params.alpha, params.beta, k, kprime),
    )
    return collect_verdict(claim, window, witnesses, cap, config, notes)


class Agreement(str, Enum):
    BOTH_ZERO = "both-zero"
    BOTH_NONZERO = "both-nonzero"
    MISMATCH = "mismatch"


def agreement(printed: Scalar, kernel: Scalar) -> Agreement:
    if not printed and not kernel:
        return Agreement.BOTH_ZERO
    if printed and kernel:
        return Agreement.BOTH_NONZERO
    return Agreement.MISMATCH


@dataclass
class DiscrepancyReport:
    equation: EquationId
    window: Window
    frame: pd.DataFrame
    notes: str = ""

    @property
    def pairs_checked(self) -> int:
        return len(self.frame)

    @property
    def mismatches(self) -> pd.DataFrame:
        return self.frame[self.frame["agreement"] == Agreement.MISMATCH.value]

    def counts(self) -> Dict[str, int]:
        counts = self.frame["agreement"].value_counts()
        return {flag.value: int(counts.get(flag.value, 0)) for flag in Agreement}

    def to_json(self) -> dict:
        return {
            "equation": self.equation.value,
            "window": self.window.to_json(),
            "pairs_checked": self.pairs_checked,
            "agreement_counts": self.counts(),
            "mismatches": [
                {
                    "m": int(row.m),
                    "i": int(row.i),
                    "n": int(row.n),
                    "j": int(row.j),
                    "printed": scalar_to_json(row.printed),
                    "kernel_coefficient": scalar_to_json(row.kernel),
                }
                for row in self.mismatches.itertuples(index=False)
            ],
            "notes": self.notes,
        }


def cross_check(params: AlgebraParams, R: OperatorSpec, window: Window) -> DiscrepancyReport:
    """Compare the printed equation with the kernel on every ordered basis pair."""
    notes = ""
    if not params.is_block:
        notes = "alpha != beta; the printed equation is evaluated with q = alpha"
    q = params.alpha
    f, k, kprime = R.profile, R.k, R.kprime
    logger.info("cross-checking printed equation against kernel on %s", window)
    rows: List[Dict[str, Any]] = []
    for (m, i), (n, j) in window.pairs():
        if not f(m, i) and not f(n, j):
            printed = kernel = ZERO
        else:
            printed = printed_rb_residual(f, m, i, n, j, q, k, kprime)
            kernel = residual_coefficient(params, R, (m, i), (n, j))
        rows.append(
            {"m": m, "i": i, "n": n, "j": j, "printed": printed, "kernel": kernel,
             "agreement": agreement(printed, kernel).value}
        )
    frame = pd.DataFrame(rows, columns=["m", "i", "n", "j", "printed", "kernel", "agreement"])
    report = DiscrepancyReport(EquationId.RB_PRINTED, window, frame, notes)
    logger.info("cross-check done: %s", report.counts())
    return report
