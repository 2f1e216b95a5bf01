"""Claim registry: every checkable classification claim bound to a desk-scale checker.

A checker never marks a claim true or false outright. It returns one Verdict
per equation variant it evaluates, each relative to a finite window, and
the report shows which reading of a claim survives.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Callable, Dict, Iterable, Iterator, List, Optional, Tuple

import numpy as np
import pandas as pd

from blockrb.algebra import AlgebraParams, basis, bracket
from blockrb.derived import (
    DeformedBracketConfig,
    cyclic_operator_term,
    delta_term,
    left_symmetry_defect,
    prelie_closed_form,
    prelie_product,
    subadjacent_jacobi_defect,
)
from blockrb.kernel import (
    DEFAULT_WITNESS_CAP,
    Verdict,
    Window,
    Witness,
    collect_verdict,
    combine_verdicts,
    operator_config,
    random_basis_triples,
    rb_residual,
    window_sweep,
)
from blockrb.operators import (
    Constant,
    Exponential,
    FiniteTable,
    Kronecker,
    OperatorSpec,
    Periodic,
    Polynomial,
    Profile1D,
    ProfileSpec,
    canonical_line,
)
from blockrb.printed import (
    LINE_VARIANTS,
    EquationId,
    abstract_constraint_value,
    abstract_sweep,
    cross_check,
    feq_residual,
    line_sweep,
    origin_substitution,
    printed_sweep,
)
from blockrb.report import AuditReport
from blockrb.scalars import C, ONE, Q, Scalar, as_scalar, is_constant, scalar_to_json

logger = logging.getLogger(__name__)


class RegimeKind(str, Enum):
    REGIME_I = "Regime I"
    REGIME_II = "Regime II"


@dataclass(frozen=True)
class Regime:
    kind: RegimeKind
    q: Scalar
    k: int
    kprime: int
    generic: bool = False

    @property
    def notes(self) -> str:
        if self.generic:
            return "q is symbolic and assumed generic (q != k')"
        return ""


def classify_regime(q, k: int, kprime: int) -> Regime:
    q = as_scalar(q)
    if k == 0:
        return Regime(RegimeKind.REGIME_I, q, k, kprime)
    if is_constant(q):
        kind = RegimeKind.REGIME_I if not (q - kprime) else RegimeKind.REGIME_II
        return Regime(kind, q, k, kprime)
    return Regime(RegimeKind.REGIME_II, q, k, kprime, generic=True)


def is_resonant(q, kprime: int) -> bool:
    return not (as_scalar(q) - kprime)


class ClaimId(str, Enum):
    DICHOTOMY_2_1 = "DICHOTOMY_2_1"
    PROP_NONRES_4_1 = "PROP_NONRES_4_1"
    EXAMPLE_LINEAR_4_2 = "EXAMPLE_LINEAR_4_2"
    REMARK_SOLUTIONS_4_3 = "REMARK_SOLUTIONS_4_3"
    PROP_RESONANT_4_6 = "PROP_RESONANT_4_6"
    THM_TWO_LINE_4_4 = "THM_TWO_LINE_4_4"
    THM_RIGIDITY_4_5 = "THM_RIGIDITY_4_5"
    THM_COMPLETE_5_1 = "THM_COMPLETE_5_1"
    TABLE_1 = "TABLE_1"
    PRELIE_A1 = "PRELIE_A1"
    DEFORM_A2 = "DEFORM_A2"


class StructureCheck(str, Enum):
    CLOSED_FORM = "CLOSED_FORM"
    LEFT_SYMMETRY = "LEFT_SYMMETRY"
    DEFECT_RESIDUAL = "DEFECT_RESIDUAL"
    DELTA = "DELTA"
    SUBADJACENT_JACOBI = "SUBADJACENT_JACOBI"
    DEFORMED_JACOBI = "DEFORMED_JACOBI"
    JACOBI_IDENTITY = "JACOBI_IDENTITY"


@dataclass(frozen=True)
class AuditSettings:
    """Everything a claim checker needs, resolved from a RunConfig."""

    q: Scalar
    alpha: Scalar
    beta: Scalar
    k: int
    kprime: int
    window: Window
    g: Profile1D
    variants: Tuple[EquationId, ...] = LINE_VARIANTS
    witness_cap: int = DEFAULT_WITNESS_CAP
    seed: int = 0
    triples: int = 200

    @property
    def block(self) -> AlgebraParams:
        return AlgebraParams.block(self.q)

    def single_line(self, g: Optional[Profile1D] = None, k: Optional[int] = None) -> OperatorSpec:
        k = self.k if k is None else k
        return OperatorSpec(k, self.kprime, ProfileSpec.single_line(canonical_line(k), g or self.g))


Checker = Callable[[AuditSettings], List[Verdict]]


@dataclass(frozen=True)
class Claim:
    id: ClaimId
    statement: str
    check: Checker


CLAIMS: Dict[ClaimId, Claim] = {}


def register(claim_id: ClaimId, statement: str) -> Callable[[Checker], Checker]:
    def decorate(check: Checker) -> Checker:
        CLAIMS[claim_id] = Claim(claim_id, statement, check)
        return check

    return decorate


# Canonical families in published table order, with their published marks
CANONICAL_FAMILIES: Dict[str, Profile1D] = {
    "Constant": Constant(ONE),
    "Kronecker": Kronecker(0, ONE),
    "Finite support": FiniteTable.from_mapping({0: 1, 1: 1}),
    "Exponential": Exponential(Fraction(2)),
    "Polynomial": Polynomial((0, 1)),
    "Periodic": Periodic((1, 2)),
}
PUBLISHED_MARKS: Dict[str, Tuple[bool, bool]] = {
    "Constant": (True, True),
    "Kronecker": (True, True),
    "Finite support": (True, True),
    "Exponential": (True, False),
    "Polynomial": (True, False),
    "Periodic": (True, False),
}
REGIME_COLUMNS = (RegimeKind.REGIME_I, RegimeKind.REGIME_II)


def companion_config(column: RegimeKind, q, k: int, kprime: int) -> Tuple[Scalar, int]:
    """(q, k) used for a table column: the run config if it already sits in that regime."""
    q = as_scalar(q)
    if column is RegimeKind.REGIME_I:
        return as_scalar(kprime), k
    if classify_regime(q, k, kprime).kind is RegimeKind.REGIME_II:
        return q, k
    return as_scalar(Fraction(2 * kprime + 1, 2)), k if k != 0 else 1


@dataclass
class AdmissibilityMatrix:
    variant: EquationId
    window: Window
    verdicts: Dict[Tuple[str, RegimeKind], Verdict] = field(default_factory=dict)

    @property
    def frame(self) -> pd.DataFrame:
        cells = {
            column.value: [
                "pass" if self.verdicts[(family, column)].passed else "fail" for family in CANONICAL_FAMILIES
            ]
            for column in REGIME_COLUMNS
        }
        return pd.DataFrame(cells, index=pd.Index(list(CANONICAL_FAMILIES), name="family"))

    def status(self, family: str, column: RegimeKind) -> str:
        return self.frame.loc[family, column.value]


def admissibility_matrix(
    window: Window,
    q,
    k: int,
    kprime: int,
    variant: EquationId,
    cap: int = DEFAULT_WITNESS_CAP,
) -> AdmissibilityMatrix:
    if variant not in LINE_VARIANTS:
        raise ValueError(f"admissibility is tested against {', '.join(v.value for v in LINE_VARIANTS)}")
    matrix = AdmissibilityMatrix(variant, window)
    for column_index, column in enumerate(REGIME_COLUMNS):
        column_q, column_k = companion_config(column, q, k, kprime)
        regime = classify_regime(column_q, column_k, kprime)
        for family, g in CANONICAL_FAMILIES.items():
            published = PUBLISHED_MARKS[family][column_index]
            notes = [f"published mark: {'✓' if published else '✗'}"]
            if regime.notes:
                notes.append(regime.notes)
            matrix.verdicts[(family, column)] = line_sweep(
                variant,
                g,
                column_q,
                column_k,
                kprime,
                window,
                cap,
                claim=ClaimId.TABLE_1.value,
                config={"family": family, "regime": column.value},
                notes="; ".join(notes),
            )
    return matrix


def two_line_test(
    params: AlgebraParams,
    a: int,
    ga: Profile1D,
    b: int,
    gb: Profile1D,
    k: int,
    kprime: int,
    window: Window,
    cap: int = DEFAULT_WITNESS_CAP,
) -> Verdict:
    """Sweep g_a on line a superposed with g_b on line b; q is read from ``params``."""
    if a == b:
        raise ValueError("two-line test needs distinct lines")
    notes = []
    if not params.is_block or not is_resonant(params.alpha, kprime):
        notes.append("hypothesis q = k' not met")
    R = OperatorSpec(k, kprime, ProfileSpec.two_lines(a, ga, b, gb))
    verdict = window_sweep(params, R, window, cap, claim=ClaimId.THM_TWO_LINE_4_4.value)
    if params.is_block:
        report = cross_check(params, R, window)
        notes.append(f"printed cross-check: {len(report.mismatches)} mismatches in {report.pairs_checked} pairs")
    if not verdict.passed:
        for kept, g, dropped in ((a, ga, b), (b, gb, a)):
            alone = OperatorSpec(k, kprime, ProfileSpec.single_line(kept, g))
            if window_sweep(params, alone, window, cap=1).passed:
                notes.append(f"vanishing on line {dropped} rescues the sweep")
    return Verdict(
        claim=verdict.claim,
        window=verdict.window,
        status=verdict.status,
        witnesses=verdict.witnesses,
        witness_count=verdict.witness_count,
        truncated=verdict.truncated,
        config={**verdict.config, "lines": [a, b]},
        notes="; ".join(notes),
    )


def rigidity_support_scan(
    params: AlgebraParams,
    k: int,
    kprime: int,
    g: Profile1D,
    window: Window,
    lines: Optional[Iterable[int]] = None,
    cap: int = DEFAULT_WITNESS_CAP,
) -> Dict[int, Verdict]:
    """Place g on each candidate line and sweep; returns line -> Verdict."""
    scan: Dict[int, Verdict] = {}
    for a in window.m_range if lines is None else lines:
        R = OperatorSpec(k, kprime, ProfileSpec.single_line(a, g))
        notes = []
        if a not in window.m_range:
            notes.append("vacuous: no window basis element lies on this line")
        verdict = window_sweep(params, R, window, cap, claim=ClaimId.THM_RIGIDITY_4_5.value)
        notes.append("admits a holding sweep" if verdict.passed else "excluded by the sweep")
        if a == canonical_line(k):
            notes.append("canonical line m = -k")
        scan[a] = _annotated(verdict, {"line": a}, "; ".join(notes))
    return scan


def _annotated(verdict: Verdict, config: dict, notes: str) -> Verdict:
    return Verdict(
        claim=verdict.claim,
        window=verdict.window,
        status=verdict.status,
        witnesses=verdict.witnesses,
        witness_count=verdict.witness_count,
        truncated=verdict.truncated,
        config={**verdict.config, **config},
        notes="; ".join(part for part in (verdict.notes, notes) if part),
    )


def constraint_sweep(
    claim: ClaimId,
    f: ProfileSpec,
    alpha,
    beta,
    k: int,
    kprime: int,
    window: Window,
    cap: int,
    variant: EquationId,
) -> Verdict:
    """Witnesses where the constraint is nonzero although the (0, 0) substitution vanishes."""

    def witnesses() -> Iterator[Witness]:
        for m in window.m_range:
            for i in window.i_range:
                value = abstract_constraint_value(f, m, i, beta, k, kprime)
                if value and not origin_substitution(f, m, i, alpha, beta, k, kprime):
                    yield Witness((m, i), value)

    config = {
        "alpha": scalar_to_json(as_scalar(alpha)),
        "beta": scalar_to_json(as_scalar(beta)),
        "k": k,
        "kprime": kprime,
        "profile": f.to_json(),
        "variant": variant.value,
    }
    return collect_verdict(claim.value, window, witnesses(), cap, config)


@register(ClaimId.DICHOTOMY_2_1, "a homogeneous Rota-Baxter operator on a generalized Block algebra is supported on m = -k; off resonance its profile solves the abstract functional equation")
def check_dichotomy(s: AuditSettings) -> List[Verdict]:
    claim = ClaimId.DICHOTOMY_2_1
    params = AlgebraParams(s.alpha, s.beta)
    R = s.single_line()
    resonant = is_resonant(s.beta, s.kprime)
    notes = "beta = k' (resonant branch)" if resonant else "beta != k' (non-resonant branch)"
    if not is_constant(s.beta):
        notes = "beta is symbolic and assumed generic (non-resonant branch)"
    verdicts = [
        abstract_sweep(R.profile, params, s.k, s.kprime, s.window, s.witness_cap, claim.value, notes=notes),
        window_sweep(params, R, s.window, s.witness_cap, claim.value, notes=notes),
    ]
    if not resonant and s.k != 0:
        verdicts.append(
            line_sweep(EquationId.FEQ_ABSTRACT, s.g, s.alpha, s.k, s.kprime, s.window, s.witness_cap, claim.value)
        )
    verdicts.append(
        constraint_sweep(
            claim, R.profile, s.alpha, s.beta, s.k, s.kprime, s.window, s.witness_cap, EquationId.CONSTRAINT_ABSTRACT
        )
    )
    return verdicts


@register(ClaimId.PROP_NONRES_4_1, "for q != k' and k != 0 the operator lives on m = -k and solves the non-resonant functional equation; conversely every solution gives an operator")
def check_nonresonant(s: AuditSettings) -> List[Verdict]:
    claim = ClaimId.PROP_NONRES_4_1
    notes = []
    if is_resonant(s.q, s.kprime):
        notes.append("hypothesis q != k' not met")
    if s.k == 0:
        notes.append("hypothesis k != 0 not met")
    notes = "; ".join(notes)
    R = s.single_line()
    return [
        printed_sweep(R.profile, s.q, s.k, s.kprime, s.window, s.witness_cap, claim.value, notes=notes),
        window_sweep(s.block, R, s.window, s.witness_cap, claim.value, notes=notes),
        line_sweep(EquationId.FEQ_NONRES, s.g, s.q, s.k, s.kprime, s.window, s.witness_cap, claim.value, notes=notes),
        constraint_sweep(claim, R.profile, s.q, s.q, s.k, s.kprime, s.window, s.witness_cap, EquationId.CONSTRAINT),
    ]


@register(ClaimId.EXAMPLE_LINEAR_4_2, "g(i) = i fails the functional equation at (i, j) = (1, 0) with residual -(1+k')(1+k'+q)")
def check_linear_example(s: AuditSettings) -> List[Verdict]:
    claim = ClaimId.EXAMPLE_LINEAR_4_2
    g = Polynomial((0, 1))
    residual = feq_residual(g, 1, 0, s.q, s.kprime)
    symbolic = feq_residual(g, 1, 0, Q, s.kprime)
    expected = -(1 + s.kprime) * (1 + s.kprime + Q)
    notes = "symbolic residual at (1, 0) {} -(1+k')(1+k'+q)".format(
        "equals" if symbolic == expected else "differs from"
    )
    config = {
        "q": scalar_to_json(s.q),
        "kprime": s.kprime,
        "g": g.to_json(),
        "variant": EquationId.FEQ_NONRES.value,
    }
    witnesses = [Witness((1, 0), residual)] if residual else []
    return [collect_verdict(claim.value, None, witnesses, s.witness_cap, config, notes)]


@register(ClaimId.REMARK_SOLUTIONS_4_3, "constants, Kronecker deltas and finitely supported profiles solve the functional equation")
def check_solution_classes(s: AuditSettings) -> List[Verdict]:
    claim = ClaimId.REMARK_SOLUTIONS_4_3
    families = {
        "Constant": Constant(C),
        "Kronecker": CANONICAL_FAMILIES["Kronecker"],
        "Finite support": CANONICAL_FAMILIES["Finite support"],
    }
    verdicts = []
    for family, g in families.items():
        for variant in (EquationId.FEQ_NONRES, EquationId.FEQ_PLUS):
            verdicts.append(
                line_sweep(
                    variant, g, s.q, s.k, s.kprime, s.window, s.witness_cap, claim.value, config={"family": family}
                )
            )
    return verdicts


@register(ClaimId.PROP_RESONANT_4_6, "at resonance q = k' every profile on m = -k gives a Rota-Baxter operator")
def check_resonant(s: AuditSettings) -> List[Verdict]:
    claim = ClaimId.PROP_RESONANT_4_6
    q = as_scalar(s.kprime)
    R = s.single_line()
    notes = f"q set to k' = {s.kprime}"
    printed = printed_sweep(R.profile, q, s.k, s.kprime, s.window, s.witness_cap, claim.value, notes=notes)
    kernel = window_sweep(AlgebraParams.block(q), R, s.window, s.witness_cap, claim.value, notes=notes)
    agree = "agree" if printed.status is kernel.status else "disagree"
    combined = combine_verdicts(
        claim.value, [printed, kernel], s.witness_cap, {"variant": "RB_PRINTED+KERNEL"}, f"{notes}; printed and kernel {agree}"
    )
    return [printed, kernel, combined]


@register(ClaimId.THM_TWO_LINE_4_4, "at resonance no operator is supported on two distinct lines")
def check_two_line(s: AuditSettings) -> List[Verdict]:
    claim = ClaimId.THM_TWO_LINE_4_4
    params = AlgebraParams.block(s.kprime)
    a, b = canonical_line(s.k), canonical_line(s.k) + 1
    verdict = two_line_test(params, a, s.g, b, s.g, s.k, s.kprime, s.window, s.witness_cap)
    f = ProfileSpec.two_lines(a, s.g, b, s.g)
    return [
        verdict,
        printed_sweep(f, params.q, s.k, s.kprime, s.window, s.witness_cap, claim.value, config={"lines": [a, b]}),
    ]


@register(ClaimId.THM_RIGIDITY_4_5, "at resonance the support is exactly the line m = -k")
def check_rigidity(s: AuditSettings) -> List[Verdict]:
    claim = ClaimId.THM_RIGIDITY_4_5
    params = AlgebraParams.block(s.kprime)
    scan = rigidity_support_scan(params, s.k, s.kprime, s.g, s.window, cap=s.witness_cap)
    verdicts = []
    for a, verdict in scan.items():
        verdicts.append(verdict)
        f = ProfileSpec.single_line(a, s.g)
        verdicts.append(
            printed_sweep(f, params.q, s.k, s.kprime, s.window, s.witness_cap, claim.value, config={"line": a})
        )
    return verdicts


@register(ClaimId.THM_COMPLETE_5_1, "operators are exactly: FEQ solutions on m = -k (q != k', k != 0), any g on m = 0 (k = 0), any g on m = -k (q = k')")
def check_classification(s: AuditSettings) -> List[Verdict]:
    claim = ClaimId.THM_COMPLETE_5_1
    non_resonant_q, non_resonant_k = companion_config(RegimeKind.REGIME_II, s.q, s.k, s.kprime)
    q_k0 = s.q if not is_resonant(s.q, s.kprime) else as_scalar(Fraction(2 * s.kprime + 1, 2))
    cases = [
        ("non-resonant, k != 0", non_resonant_q, non_resonant_k, Constant(ONE)),
        ("k = 0", q_k0, 0, s.g),
        ("resonant", as_scalar(s.kprime), s.k, s.g),
    ]
    verdicts = []
    for case, q, k, g in cases:
        R = OperatorSpec(k, s.kprime, ProfileSpec.single_line(canonical_line(k), g))
        config = {"case": case}
        notes = classify_regime(q, k, s.kprime).notes
        verdicts.append(
            _annotated(window_sweep(AlgebraParams.block(q), R, s.window, s.witness_cap, claim.value), config, notes)
        )
        verdicts.append(
            printed_sweep(R.profile, q, k, s.kprime, s.window, s.witness_cap, claim.value, config=config, notes=notes)
        )
        if case == "non-resonant, k != 0":
            verdicts.append(
                line_sweep(EquationId.FEQ_NONRES, g, q, k, s.kprime, s.window, s.witness_cap, claim.value, config=config)
            )
    return verdicts


@register(ClaimId.TABLE_1, "admissibility of the six canonical profile families in both regimes")
def check_table(s: AuditSettings) -> List[Verdict]:
    verdicts = []
    for variant in s.variants:
        if variant not in LINE_VARIANTS:
            continue
        matrix = admissibility_matrix(s.window, s.q, s.k, s.kprime, variant, s.witness_cap)
        verdicts.extend(matrix.verdicts.values())
    return verdicts


def _structure_families(s: AuditSettings) -> Dict[str, Profile1D]:
    families = {"Constant": CANONICAL_FAMILIES["Constant"], "Kronecker": CANONICAL_FAMILIES["Kronecker"]}
    if s.g not in families.values():
        families = {"configured": s.g, **families}
    return families


def _triple_inputs(triple) -> Tuple[int, ...]:
    return tuple(index for key in triple for index in key)


def _pair_verdict(claim, check, window, cap, config, compare) -> Verdict:
    def witnesses() -> Iterator[Witness]:
        for (m, i), (n, j) in window.pairs():
            difference = compare(m, i, n, j)
            if difference:
                yield Witness((m, i, n, j), difference)

    return collect_verdict(claim.value, window, witnesses(), cap, {**config, "variant": check.value})


def _triple_verdict(claim, check, triples, window, cap, config, evaluate, notes="") -> Verdict:
    def witnesses() -> Iterator[Witness]:
        for triple in triples:
            value = evaluate(*(basis(*key) for key in triple))
            if value:
                yield Witness(_triple_inputs(triple), value)

    config = {**config, "variant": check.value, "triples": len(triples)}
    return collect_verdict(claim.value, window, witnesses(), cap, config, notes)


@register(ClaimId.PRELIE_A1, "x |> y = [R(x), y] is pre-Lie, with the closed form g(i) n(i+k'+q) L(n, i+j+k') on m = -k")
def check_prelie(s: AuditSettings) -> List[Verdict]:
    claim = ClaimId.PRELIE_A1
    params = s.block
    rng = np.random.default_rng(s.seed)
    triples = random_basis_triples(rng, s.window, s.triples)
    verdicts = []
    for family, g in _structure_families(s).items():
        R = s.single_line(g)
        config = {**operator_config(params, R), "family": family}

        def closed_form_gap(m, i, n, j, R=R, g=g):
            return prelie_product(params, R, basis(m, i), basis(n, j)) - prelie_closed_form(
                g, s.k, s.kprime, s.q, m, i, n, j
            )

        verdicts.append(_pair_verdict(claim, StructureCheck.CLOSED_FORM, s.window, s.witness_cap, config, closed_form_gap))
        verdicts.append(
            _triple_verdict(
                claim, StructureCheck.LEFT_SYMMETRY, triples, s.window, s.witness_cap, config,
                lambda u, v, w, R=R: left_symmetry_defect(params, R, u, v, w),
            )
        )
        verdicts.append(
            _triple_verdict(
                claim, StructureCheck.DEFECT_RESIDUAL, triples, s.window, s.witness_cap, config,
                lambda u, v, w, R=R: left_symmetry_defect(params, R, u, v, w)
                + bracket(params, rb_residual(params, R, u, v), w),
            )
        )
        verdicts.append(
            _triple_verdict(
                claim, StructureCheck.SUBADJACENT_JACOBI, triples, s.window, s.witness_cap, config,
                lambda u, v, w, R=R: subadjacent_jacobi_defect(params, R, u, v, w),
                notes="holds whenever the product is left-symmetric",
            )
        )
    return verdicts


@register(ClaimId.DEFORM_A2, "{x, y} = x |> y - y |> x + [x, y] deforms the bracket by the term Delta")
def check_deformation(s: AuditSettings) -> List[Verdict]:
    claim = ClaimId.DEFORM_A2
    params = s.block
    rng = np.random.default_rng(s.seed)
    triples = random_basis_triples(rng, s.window, s.triples)
    verdicts = []
    for family, g in _structure_families(s).items():
        R = s.single_line(g)
        deformed = DeformedBracketConfig(params, R)
        config = {**operator_config(params, R), "family": family}

        def delta_gap(m, i, n, j, deformed=deformed, g=g):
            u, v = basis(m, i), basis(n, j)
            return deformed.delta(u, v) - delta_term(g, s.k, s.kprime, s.q, m, i, n, j)

        verdicts.append(_pair_verdict(claim, StructureCheck.DELTA, s.window, s.witness_cap, config, delta_gap))
        verdicts.append(
            _triple_verdict(
                claim, StructureCheck.DEFORMED_JACOBI, triples, s.window, s.witness_cap, config,
                lambda x, y, z, deformed=deformed: deformed.jacobi_defect(x, y, z),
            )
        )
        verdicts.append(
            _triple_verdict(
                claim, StructureCheck.JACOBI_IDENTITY, triples, s.window, s.witness_cap, config,
                lambda x, y, z, deformed=deformed, R=R: deformed.jacobi_defect(x, y, z)
                + cyclic_operator_term(params, R, x, y, z),
                notes="holds whenever the operator is Rota-Baxter",
            )
        )
    return verdicts


def run_all(settings: AuditSettings, claims: Iterable[ClaimId], config_echo: dict) -> AuditReport:
    selected = sorted(set(claims), key=lambda claim: claim.value)
    verdicts: List[Verdict] = []
    for claim_id in selected:
        logger.info("checking %s", claim_id.value)
        found = CLAIMS[claim_id].check(settings)
        failed = sum(not verdict.passed for verdict in found)
        logger.info("%s: %d verdicts, %d failing", claim_id.value, len(found), failed)
        verdicts.extend(found)
    return AuditReport(config=config_echo, verdicts=verdicts)
