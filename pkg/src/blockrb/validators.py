from __future__ import annotations

from typing import Any, Callable, NamedTuple


class ConfigError(ValueError):
    """A configuration value is invalid; ``field`` names the offending field."""

    def __init__(self, field: str, message: str):
        super().__init__(f"{field}: {message}")
        self.field = field
        self.message = message


class Check(NamedTuple):
    field: str
    predicate: Callable[[Any], bool]
    message: str


def positive(value: int) -> bool:
    return value >= 1


def non_negative(value: int) -> bool:
    return value >= 0


def within_search_limit(value: int) -> bool:
    """At most 9 indices in the search window {-N..N}."""
    return 0 <= value <= 4


def small_value_set(values: tuple) -> bool:
    return 1 <= len(values) <= 4


def not_empty(values: tuple) -> bool:
    return len(values) > 0


def known_boundary(value: str) -> bool:
    return value in ("skip", "zero")


run_config_checks = [
    Check("window", positive, "must be a positive integer"),
    Check("witness_cap", positive, "must be a positive integer"),
    Check("search_window", within_search_limit, "must be between 0 and 4"),
    Check("values", small_value_set, "must hold between 1 and 4 distinct values"),
    Check("variants", not_empty, "must name at least one equation variant"),
    Check("seed", non_negative, "must be a non-negative integer"),
    Check("feq_boundary", known_boundary, "must be 'skip' or 'zero'"),
]


def validate(config, checks=run_config_checks) -> None:
    """Raise ConfigError for the first check ``config`` fails."""
    for check in checks:
        if not check.predicate(getattr(config, check.field)):
            raise ConfigError(check.field, check.message)
