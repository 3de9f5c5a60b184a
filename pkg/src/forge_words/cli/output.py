"""
Output - Rendering command results as json, csv or plain text.
"""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from typing import Any

from forge_words.domain.entities import OutputFormat
from forge_words.infrastructure.codecs import dumps


@dataclass(frozen=True)
class CommandResult:
    """
    Outcome of one command.

    Attributes:
        payload: Structured result (the JSON document)
        ok: False on a mathematical failure (no fit, mismatch); maps to exit code 3
        table: (n, value) rows for csv output, when the result is a coefficient table
    """

    payload: dict[str, Any]
    ok: bool = True
    table: list[tuple[int, str]] = field(default_factory=list)


def _plain_lines(data: Any, prefix: str = "") -> list[str]:
    if isinstance(data, dict):
        lines: list[str] = []
        for key in sorted(data):
            name = f"{prefix}.{key}" if prefix else str(key)
            lines.extend(_plain_lines(data[key], name))
        return lines
    if isinstance(data, list) and any(isinstance(item, dict | list) for item in data):
        lines = []
        for index, item in enumerate(data):
            lines.extend(_plain_lines(item, f"{prefix}[{index}]"))
        return lines
    if isinstance(data, list):
        return [f"{prefix}: {', '.join(str(item) for item in data)}"]
    return [f"{prefix}: {data}"]


def render(result: CommandResult, output_format: OutputFormat) -> str:
    """Text for stdout, newline-terminated."""
    if output_format is OutputFormat.CSV:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["n", "coefficient"])
        writer.writerows(result.table)
        return buffer.getvalue()
    if output_format is OutputFormat.PLAIN:
        return "\n".join(_plain_lines(result.payload)) + "\n"
    return dumps(result.payload) + "\n"
