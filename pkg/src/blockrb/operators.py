"""Homogeneous operators R_f of bidegree (k, k').

An operator is fixed by its degree and a profile f: Z x Z -> scalars,

    R(L(m, i)) = f(m, i) L(m + k, i + k').

Profiles are built from one-dimensional families g: Z -> scalars placed on
support lines {m = m0}, plus an optional finite table of extra entries.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import ClassVar, Dict, Iterable, List, Mapping, Optional, Tuple, Union

from blockrb.algebra import Bidegree, GradedElement
from blockrb.scalars import ONE, ZERO, Scalar, as_scalar, scalar_from_json, scalar_to_json


class ProfileError(ValueError):
    """A profile or profile spec was constructed with invalid data."""


@dataclass(frozen=True)
class Constant:
    c: Scalar = field(default_factory=lambda: ONE)
    kind: ClassVar[str] = "constant"

    def __post_init__(self):
        object.__setattr__(self, "c", as_scalar(self.c))

    def __call__(self, i: int) -> Scalar:
        return self.c

    def to_json(self) -> dict:
        return {"kind": self.kind, "c": scalar_to_json(self.c)}


@dataclass(frozen=True)
class Kronecker:
    """c at i0, zero elsewhere."""

    i0: int = 0
    c: Scalar = field(default_factory=lambda: ONE)
    kind: ClassVar[str] = "kronecker"

    def __post_init__(self):
        object.__setattr__(self, "c", as_scalar(self.c))

    def __call__(self, i: int) -> Scalar:
        return self.c if i == self.i0 else ZERO

    def to_json(self) -> dict:
        return {"kind": self.kind, "i0": self.i0, "c": scalar_to_json(self.c)}


@dataclass(frozen=True)
class FiniteTable:
    """Finitely supported profile; entries are sorted and nonzero."""

    entries: Tuple[Tuple[int, Scalar], ...] = ()
    kind: ClassVar[str] = "table"

    def __post_init__(self):
        entries = tuple(sorted((int(i), as_scalar(v)) for i, v in self.entries))
        if any(not v for _, v in entries):
            raise ProfileError("finite table entries must be nonzero")
        if len({i for i, _ in entries}) != len(entries):
            raise ProfileError("finite table has a repeated index")
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "_lookup", dict(entries))

    @classmethod
    def from_mapping(cls, mapping: Mapping[int, Union[Scalar, Fraction, int]]) -> FiniteTable:
        """Build a table, silently dropping zero values."""
        return cls(tuple((i, as_scalar(v)) for i, v in mapping.items() if as_scalar(v)))

    def __call__(self, i: int) -> Scalar:
        return self._lookup.get(i, ZERO)

    def support(self) -> List[int]:
        return [i for i, _ in self.entries]

    def to_json(self) -> dict:
        return {"kind": self.kind, "entries": [[i, scalar_to_json(v)] for i, v in self.entries]}


@dataclass(frozen=True)
class Exponential:
    """g(i) = b^i for a nonzero rational b."""

    b: Fraction = Fraction(2)
    kind: ClassVar[str] = "exp"

    def __post_init__(self):
        b = Fraction(self.b)
        if b == 0:
            raise ProfileError("exponential base must be nonzero")
        object.__setattr__(self, "b", b)

    def __call__(self, i: int) -> Scalar:
        return as_scalar(self.b**i)

    def to_json(self) -> dict:
        return {"kind": self.kind, "b": str(self.b)}


@dataclass(frozen=True)
class Polynomial:
    """g(i) = c0 + c1 i + c2 i^2 + ..."""

    coeffs: Tuple[Scalar, ...] = (ZERO, ONE)
    kind: ClassVar[str] = "poly"

    def __post_init__(self):
        if not self.coeffs:
            raise ProfileError("polynomial profile needs at least one coefficient")
        object.__setattr__(self, "coeffs", tuple(as_scalar(c) for c in self.coeffs))

    def __call__(self, i: int) -> Scalar:
        value = ZERO
        for coeff in reversed(self.coeffs):
            value = value * i + coeff
        return value

    def to_json(self) -> dict:
        return {"kind": self.kind, "coeffs": [scalar_to_json(c) for c in self.coeffs]}


@dataclass(frozen=True)
class Periodic:
    """g(i) = table[i mod p]."""

    table: Tuple[Scalar, ...] = (ONE,)
    kind: ClassVar[str] = "periodic"

    def __post_init__(self):
        if not self.table:
            raise ProfileError("periodic profile needs a period of at least 1")
        object.__setattr__(self, "table", tuple(as_scalar(v) for v in self.table))

    @property
    def period(self) -> int:
        return len(self.table)

    def is_constant(self) -> bool:
        return len(set(self.table)) == 1

    def __call__(self, i: int) -> Scalar:
        return self.table[i % self.period]

    def to_json(self) -> dict:
        return {"kind": self.kind, "table": [scalar_to_json(v) for v in self.table]}


Profile1D = Union[Constant, Kronecker, FiniteTable, Exponential, Polynomial, Periodic]

_KINDS = {cls.kind: cls for cls in (Constant, Kronecker, FiniteTable, Exponential, Polynomial, Periodic)}


def profile1d_from_json(payload: dict) -> Profile1D:
    kind = payload.get("kind")
    if kind not in _KINDS:
        raise ProfileError(f"unknown profile kind {kind!r}")
    if kind == "constant":
        return Constant(scalar_from_json(payload["c"]))
    if kind == "kronecker":
        return Kronecker(int(payload["i0"]), scalar_from_json(payload["c"]))
    if kind == "table":
        return FiniteTable(tuple((i, scalar_from_json(v)) for i, v in payload["entries"]))
    if kind == "exp":
        return Exponential(Fraction(payload["b"]))
    if kind == "poly":
        return Polynomial(tuple(scalar_from_json(c) for c in payload["coeffs"]))
    return Periodic(tuple(scalar_from_json(v) for v in payload["table"]))


def zero_profile() -> FiniteTable:
    return FiniteTable()


@dataclass(frozen=True)
class ProfileSpec:
    """A full profile f(m, i): line families plus finitely many extra entries."""

    lines: Tuple[Tuple[int, Profile1D], ...] = ()
    extra: Tuple[Tuple[Bidegree, Scalar], ...] = field(default=())

    def __post_init__(self):
        m0s = [m0 for m0, _ in self.lines]
        if len(set(m0s)) != len(m0s):
            raise ProfileError("support lines must have distinct m0")
        extra = tuple(
            sorted((Bidegree(*key), as_scalar(v)) for key, v in self.extra if as_scalar(v))
        )
        if len({key for key, _ in extra}) != len(extra):
            raise ProfileError("extra entries must have distinct bidegrees")
        object.__setattr__(self, "lines", tuple(sorted(self.lines, key=lambda line: line[0])))
        object.__setattr__(self, "extra", extra)
        object.__setattr__(self, "_by_line", dict(self.lines))
        object.__setattr__(self, "_by_extra", dict(extra))

    @classmethod
    def single_line(cls, m0: int, g: Profile1D) -> ProfileSpec:
        return cls(((m0, g),))

    @classmethod
    def two_lines(cls, a: int, ga: Profile1D, b: int, gb: Profile1D) -> ProfileSpec:
        return cls(((a, ga), (b, gb)))

    def __call__(self, m: int, i: int) -> Scalar:
        g = self._by_line.get(m)
        value = g(i) if g is not None else ZERO
        if self._by_extra:
            value = value + self._by_extra.get((m, i), ZERO)
        return value

    def line(self, m0: int) -> Optional[Profile1D]:
        return self._by_line.get(m0)

    def to_json(self) -> dict:
        return {
            "lines": [{"m0": m0, "g": g.to_json()} for m0, g in self.lines],
            "extra": [[m, i, scalar_to_json(v)] for (m, i), v in self.extra],
        }

    @classmethod
    def from_json(cls, payload: dict) -> ProfileSpec:
        lines = tuple((int(line["m0"]), profile1d_from_json(line["g"])) for line in payload.get("lines", []))
        extra = tuple(((m, i), scalar_from_json(v)) for m, i, v in payload.get("extra", []))
        return cls(lines, extra)


@dataclass(frozen=True)
class OperatorSpec:
    k: int
    kprime: int
    profile: ProfileSpec

    @property
    def degree(self) -> Bidegree:
        return Bidegree(self.k, self.kprime)

    def to_json(self) -> dict:
        return {"k": self.k, "kprime": self.kprime, "profile": self.profile.to_json()}


def canonical_line(k: int) -> int:
    """The support line a homogeneous Rota-Baxter operator of degree k is forced onto."""
    return -k


def profile_eval(spec: ProfileSpec, m: int, i: int) -> Scalar:
    return spec(m, i)


def apply_operator(R: OperatorSpec, u: GradedElement) -> GradedElement:
    out: Dict[Bidegree, Scalar] = {}
    for (m, i), x in u.terms.items():
        f = R.profile(m, i)
        if f:
            out[Bidegree(m + R.k, i + R.kprime)] = f * x
    return GradedElement._wrap(out)


def support_lines(spec: ProfileSpec, i_range: Optional[Iterable[int]] = None) -> List[int]:
    """Line indices m0 on which f is not identically zero.

    Line families are tested on ``i_range`` when one is given, otherwise by
    their structure.
    """
    lines = set()
    for m0, g in spec.lines:
        if i_range is not None:
            if any(g(i) for i in i_range):
                lines.add(m0)
        elif not _is_zero_family(g):
            lines.add(m0)
    lines.update(key.m for key, _ in spec.extra)
    return sorted(lines)


def _is_zero_family(g: Profile1D) -> bool:
    if isinstance(g, (Constant, Kronecker)):
        return not g.c
    if isinstance(g, FiniteTable):
        return not g.entries
    if isinstance(g, Polynomial):
        return not any(g.coeffs)
    if isinstance(g, Periodic):
        return not any(g.table)
    return False
