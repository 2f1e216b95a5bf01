from __future__ import annotations

import re
from fractions import Fraction

import pandas as pd
from rich.table import Table
from rich.text import Text

from blockrb.operators import (
    Constant,
    Exponential,
    FiniteTable,
    Kronecker,
    Periodic,
    Polynomial,
    Profile1D,
    ProfileError,
    ProfileSpec,
)
from blockrb.scalars import Scalar, parse_scalar

# Cells of the admissibility table
PASS_LABEL = Text("✓", style="bold green")
FAIL_LABEL = Text("✗", style="bold red")

STATUS_STYLES = {
    "holds-on-window": "green",
    "fails": "red",
    "mixed": "yellow",
}

_LINE_PREFIX = re.compile(r"^\s*(-?\d+)\s*@(.*)$")


def parse_rational(text: str) -> Fraction:
    """Parse '3', '-1/2' or '0.25' into an exact Fraction."""
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError) as e:
        raise ValueError(f"{text!r} is not a rational number") from e


def _scalar(text: str) -> Scalar:
    try:
        return parse_scalar(text)
    except ValueError as e:
        raise ProfileError(str(e)) from e


def _integer(text: str) -> int:
    try:
        return int(text.strip())
    except ValueError:
        raise ProfileError(f"{text!r} is not an integer") from None


def parse_profile_shorthand(text: str) -> Profile1D:
    """Parse one family from its shorthand.

    constant:c, kronecker:i0:c, exp:b, poly:c0,c1,..., periodic:v0;v1;...,
    table:i=v,...  and zero.
    """
    kind, _, body = text.strip().partition(":")
    kind = kind.strip().lower()
    if kind == "zero" and not body:
        return FiniteTable()
    if kind == "constant":
        return Constant(_scalar(body))
    if kind == "kronecker":
        i0, _, c = body.partition(":")
        return Kronecker(_integer(i0), _scalar(c) if c.strip() else 1)
    if kind in ("exp", "exponential"):
        try:
            return Exponential(parse_rational(body))
        except ValueError as e:
            raise ProfileError(str(e)) from e
    if kind in ("poly", "polynomial"):
        return Polynomial(tuple(_scalar(c) for c in body.split(",")))
    if kind == "periodic":
        return Periodic(tuple(_scalar(v) for v in body.split(";")))
    if kind == "table":
        entries = {}
        for item in filter(None, (part.strip() for part in body.split(","))):
            index, sep, value = item.partition("=")
            if not sep:
                raise ProfileError(f"table entry {item!r} is not of the form i=v")
            entries[_integer(index)] = _scalar(value)
        return FiniteTable.from_mapping(entries)
    raise ProfileError(f"unknown profile family {kind!r}")


def parse_profile_spec(text: str, default_line: int) -> ProfileSpec:
    """Parse 'm0@shorthand|m0@shorthand'; a segment without m0@ goes on ``default_line``."""
    lines = []
    for segment in text.split("|"):
        match = _LINE_PREFIX.match(segment)
        if match:
            lines.append((int(match.group(1)), parse_profile_shorthand(match.group(2))))
        else:
            lines.append((default_line, parse_profile_shorthand(segment)))
    return ProfileSpec(tuple(lines))


def first_family(text: str) -> Profile1D:
    """The family of the first segment of a profile string, without its line."""
    segment = text.split("|")[0]
    match = _LINE_PREFIX.match(segment)
    return parse_profile_shorthand(match.group(2) if match else segment)


def format_status(status: str) -> Text:
    return Text(status, style=STATUS_STYLES.get(status, ""))


def format_cell(result: str) -> Text:
    return PASS_LABEL if result == "pass" else FAIL_LABEL


def admissibility_table(frame: pd.DataFrame, title: str = "Admissibility") -> Table:
    table = Table(title=title)
    table.add_column("Profile g(i)")
    for column in frame.columns:
        table.add_column(str(column), justify="center")
    for family, row in frame.iterrows():
        table.add_row(str(family), *(format_cell(value) for value in row))
    return table


def summary_table(frame: pd.DataFrame, title: str = "Verdicts") -> Table:
    table = Table(title=title)
    for column in frame.columns:
        table.add_column(column, justify="right" if column == "witnesses" else "left")
    for row in frame.itertuples(index=False):
        cells = []
        for column, value in zip(frame.columns, row):
            cells.append(format_status(value) if column == "status" else str(value))
        table.add_row(*cells)
    return table
