"""Run configuration: defaults, then the JSON config file, then command-line flags."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable, Dict, Mapping, Optional, Tuple, Type, Union

from blockrb.algebra import AlgebraParams
from blockrb.audit import AuditSettings, ClaimId
from blockrb.config_file import ConfigFile
from blockrb.formatting import first_family, parse_profile_spec, parse_rational
from blockrb.kernel import DEFAULT_WITNESS_CAP, Window
from blockrb.operators import OperatorSpec, Profile1D, ProfileError
from blockrb.printed import LINE_VARIANTS, EquationId
from blockrb.scalars import ALPHA, BETA, Q, Scalar, as_scalar
from blockrb.validators import ConfigError, validate

SYMBOLIC = "symbolic"

Parameter = Union[Fraction, str]


@dataclass(frozen=True)
class RunConfig:
    q: Parameter = Fraction(1, 2)
    alpha: Optional[Parameter] = None
    beta: Optional[Parameter] = None
    k: int = 1
    kprime: int = 0
    window: int = 4
    profile: str = "constant:1"
    variants: Tuple[EquationId, ...] = LINE_VARIANTS
    claims: Tuple[ClaimId, ...] = tuple(ClaimId)
    values: Tuple[Fraction, ...] = (Fraction(0), Fraction(1))
    search_window: int = 3
    witness_cap: int = DEFAULT_WITNESS_CAP
    seed: int = 0
    feq_boundary: str = "skip"
    out: Optional[Path] = None
    verbose: bool = False

    @property
    def q_scalar(self) -> Scalar:
        return _parameter_scalar(self.q, Q)

    def params(self) -> AlgebraParams:
        alpha = self.q_scalar if self.alpha is None else _parameter_scalar(self.alpha, ALPHA)
        beta = self.q_scalar if self.beta is None else _parameter_scalar(self.beta, BETA)
        return AlgebraParams(alpha, beta)

    def operator(self) -> OperatorSpec:
        """The configured operator; unprefixed profile segments sit on line -k."""
        return OperatorSpec(self.k, self.kprime, parse_profile_spec(self.profile, -self.k))

    def family(self) -> Profile1D:
        return first_family(self.profile)

    def window_box(self) -> Window:
        return Window.square(self.window)

    def search_range(self) -> range:
        return range(-self.search_window, self.search_window + 1)

    def audit_settings(self) -> AuditSettings:
        params = self.params()
        return AuditSettings(
            q=self.q_scalar,
            alpha=params.alpha,
            beta=params.beta,
            k=self.k,
            kprime=self.kprime,
            window=self.window_box(),
            g=self.family(),
            variants=self.variants,
            witness_cap=self.witness_cap,
            seed=self.seed,
        )

    def to_options(self) -> Dict[str, Any]:
        """Flag values that parse back to this config."""
        return {
            "q": _parameter_text(self.q),
            "alpha": None if self.alpha is None else _parameter_text(self.alpha),
            "beta": None if self.beta is None else _parameter_text(self.beta),
            "k": self.k,
            "kprime": self.kprime,
            "window": self.window,
            "profile": self.profile,
            "variants": ",".join(v.value for v in self.variants),
            "claims": ",".join(c.value for c in self.claims),
            "values": ",".join(str(v) for v in self.values),
            "search_window": self.search_window,
            "witness_cap": self.witness_cap,
            "seed": self.seed,
            "feq_boundary": self.feq_boundary,
            "out": None if self.out is None else str(self.out),
            "verbose": self.verbose,
        }

    def to_json(self) -> Dict[str, Any]:
        """The config echo of a report: every field that influences results."""
        options = self.to_options()
        del options["out"], options["verbose"]
        options["variants"] = [v.value for v in self.variants]
        options["claims"] = [c.value for c in self.claims]
        options["values"] = [str(v) for v in self.values]
        return options


def _parameter_scalar(value: Parameter, symbol: Scalar) -> Scalar:
    return symbol if value == SYMBOLIC else as_scalar(value)


def _parameter_text(value: Parameter) -> str:
    return value if value == SYMBOLIC else str(value)


def _to_parameter(value) -> Parameter:
    if isinstance(value, (bool, float)):
        raise ValueError("write rational values as integers or 'p/q' text")
    if isinstance(value, str) and value.strip().lower() == SYMBOLIC:
        return SYMBOLIC
    return parse_rational(value)


def _to_int(value) -> int:
    if isinstance(value, (bool, float)):
        raise ValueError(f"{value!r} is not an integer")
    try:
        return int(str(value).strip())
    except ValueError:
        raise ValueError(f"{value!r} is not an integer") from None


def _to_bool(value) -> bool:
    if isinstance(value, bool):
        return value
    text = str(value).strip().lower()
    if text not in ("true", "false"):
        raise ValueError(f"{value!r} is not true or false")
    return text == "true"


def _split(value) -> Tuple[str, ...]:
    items = value.split(",") if isinstance(value, str) else [str(v) for v in value]
    return tuple(dict.fromkeys(item.strip() for item in items if str(item).strip()))


def _to_enum_names(enum: Type) -> Callable[[Any], tuple]:
    def convert(value) -> tuple:
        names = _split(value)
        if any(name.lower() == "all" for name in names):
            return tuple(enum)
        try:
            return tuple(enum(name.upper()) for name in names)
        except ValueError:
            known = ", ".join(member.value for member in enum)
            raise ValueError(f"unknown name in {', '.join(names)}; choose from {known}") from None

    return convert


def _to_variants(value) -> Tuple[EquationId, ...]:
    names = _split(value)
    if any(name.lower() == "all" for name in names):
        return LINE_VARIANTS
    try:
        return tuple(EquationId(name.upper()) for name in names)
    except ValueError:
        known = ", ".join(v.value for v in EquationId)
        raise ValueError(f"unknown equation in {', '.join(names)}; choose from {known}") from None


def _to_values(value) -> Tuple[Fraction, ...]:
    return tuple(dict.fromkeys(parse_rational(item) for item in _split(value)))


def _to_profile(value) -> str:
    text = str(value).strip()
    parse_profile_spec(text, 0)
    return text


def _to_boundary(value) -> str:
    return str(value).strip().lower()


CONVERTERS: Dict[str, Callable[[Any], Any]] = {
    "q": _to_parameter,
    "alpha": _to_parameter,
    "beta": _to_parameter,
    "k": _to_int,
    "kprime": _to_int,
    "window": _to_int,
    "profile": _to_profile,
    "variants": _to_variants,
    "claims": _to_enum_names(ClaimId),
    "values": _to_values,
    "search_window": _to_int,
    "witness_cap": _to_int,
    "seed": _to_int,
    "feq_boundary": _to_boundary,
    "out": Path,
    "verbose": _to_bool,
}


def parse_config(
    options: Optional[Mapping[str, Any]] = None,
    config_file: Optional[Union[str, Path]] = None,
) -> RunConfig:
    """Merge defaults, the config file and flag ``options`` (None means unset)."""
    file = ConfigFile(config_file)
    raw: Dict[str, Any] = {}
    for name in file.keys():
        if name not in CONVERTERS:
            raise ConfigError(name, "unknown configuration field")
        raw[name] = file[name]
    for name, value in (options or {}).items():
        if name not in CONVERTERS:
            raise ConfigError(name, "unknown configuration field")
        if value is not None:
            raw[name] = value
    converted = {}
    for name, value in raw.items():
        try:
            converted[name] = CONVERTERS[name](value)
        except (ValueError, TypeError) as e:
            raise ConfigError(name, str(e)) from None
    config = RunConfig(**converted)
    validate(config)
    # segments without a line prefix land on m = -k, which needs the final k
    try:
        config.operator()
    except ProfileError as e:
        raise ConfigError("profile", str(e)) from None
    return config
