"""Tabular output with a reproducibility header.

Both writers are deterministic: floats are rendered with 17 significant
digits (enough to round-trip a double exactly), so identical inputs
produce byte-identical files.  The only admissible non-finite value is the
diverged-velocity sentinel, written as the string "inf"; anything else
non-finite is a bug and raises.
"""

from __future__ import annotations

import json
import math
import sys
from dataclasses import dataclass, field


@dataclass(frozen=True)
class OutputTable:
    """Rectangular table plus '#'-prefixed provenance lines."""

    columns: list[str]
    rows: list[list]
    provenance: dict[str, str] = field(default_factory=dict)

    def __post_init__(self):
        for row in self.rows:
            if len(row) != len(self.columns):
                raise ValueError(
                    f"row width {len(row)} does not match {len(self.columns)} columns")


def format_value(value) -> str:
    if isinstance(value, bool):
        return "1" if value else "0"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        if math.isinf(value):
            return "inf"
        if math.isnan(value):
            raise ValueError("refusing to write NaN to an output table")
        return format(value, ".17g")
    raise TypeError(f"unsupported table value {value!r}")


def _json_value(value):
    if isinstance(value, bool):
        return 1 if value else 0
    if isinstance(value, float):
        if math.isinf(value):
            return "inf"
        if math.isnan(value):
            raise ValueError("refusing to write NaN to an output table")
    return value


def to_csv(table: OutputTable) -> str:
    lines = [f"# {key} = {value}" for key, value in table.provenance.items()]
    lines.append(",".join(table.columns))
    for row in table.rows:
        lines.append(",".join(format_value(v) for v in row))
    return "\n".join(lines) + "\n"


def to_json(table: OutputTable) -> str:
    doc = {
        "provenance": dict(table.provenance),
        "columns": list(table.columns),
        "rows": [[_json_value(v) for v in row] for row in table.rows],
    }
    return json.dumps(doc, indent=1) + "\n"


def render_table(table: OutputTable, fmt: str = "csv") -> str:
    if fmt == "csv":
        return to_csv(table)
    if fmt == "json":
        return to_json(table)
    raise ValueError(f"unknown output format {fmt!r}")


def write_table(table: OutputTable, path: str | None, fmt: str = "csv") -> None:
    """Write to a file, or to stdout when path is None or '-'."""
    text = render_table(table, fmt)
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(text)
