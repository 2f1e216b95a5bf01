from __future__ import annotations

import json
import os
import tempfile
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Union

import pandas as pd
from rich.console import Console

from blockrb import __version__
from blockrb.formatting import admissibility_table
from blockrb.kernel import Verdict

SCHEMA_VERSION = "1"
GENERATED_BY = f"blockrb {__version__}"
TABLE_CLAIM = "TABLE_1"


class ReportWriteError(OSError):
    """The report could not be written to its destination."""


@dataclass
class AuditReport:
    config: dict
    verdicts: List[Verdict] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "config": self.config,
            "verdicts": [verdict.to_json() for verdict in self.verdicts],
            "generated_by": GENERATED_BY,
            "schema_version": SCHEMA_VERSION,
        }

    def summary_frame(self) -> pd.DataFrame:
        rows = [
            {
                "claim": verdict.claim,
                "variant": verdict.config.get("variant", ""),
                "family": verdict.config.get("family", verdict.config.get("case", "")),
                "status": verdict.status.value,
                "witnesses": verdict.witness_count,
                "notes": verdict.notes,
            }
            for verdict in self.verdicts
        ]
        return pd.DataFrame(rows, columns=["claim", "variant", "family", "status", "witnesses", "notes"])

    def admissibility_frames(self) -> Dict[str, pd.DataFrame]:
        """Per variant, the pass/fail grid of the admissibility verdicts."""
        rows = [
            {
                "variant": verdict.config["variant"],
                "family": verdict.config["family"],
                "regime": verdict.config["regime"],
                "result": "pass" if verdict.passed else "fail",
            }
            for verdict in self.verdicts
            if verdict.claim == TABLE_CLAIM
        ]
        if not rows:
            return {}
        frame = pd.DataFrame(rows)
        family_order = list(dict.fromkeys(frame["family"]))
        frames = {}
        for variant, group in frame.groupby("variant", sort=False):
            grid = group.pivot(index="family", columns="regime", values="result")
            frames[variant] = grid.reindex(family_order)
        return frames


def dumps(payload) -> str:
    return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def write_atomic(text: str, path: Union[str, Path]) -> None:
    """Write ``text`` to ``path`` through a temporary file in the same directory."""
    path = Path(path)
    try:
        fd, tmp_name = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as f:
                f.write(text)
            os.replace(tmp_name, path)
        except BaseException:
            if os.path.exists(tmp_name):
                os.unlink(tmp_name)
            raise
    except OSError as e:
        raise ReportWriteError(f"could not write {path}: {e.strerror or e}") from e


def emit_json(payload, path: Optional[Union[str, Path]], console: Optional[Console] = None) -> None:
    """Write ``payload`` to ``path``, or print it when no path is given."""
    text = dumps(payload)
    if path is None:
        (console or Console()).print(text, end="", markup=False, highlight=False, soft_wrap=True)
    else:
        write_atomic(text, path)


def emit_report(
    report: AuditReport,
    path: Optional[Union[str, Path]],
    console: Optional[Console] = None,
    table_console: Optional[Console] = None,
) -> None:
    """Emit the JSON report, then its admissibility tables.

    Without a path the JSON owns standard output, so the tables default to
    standard error.
    """
    console = console or Console()
    if table_console is None:
        table_console = console if path is not None else Console(stderr=True)
    emit_json(report.to_json(), path, console)
    for variant, frame in report.admissibility_frames().items():
        table_console.print(admissibility_table(frame, title=f"Admissibility ({variant})"))
