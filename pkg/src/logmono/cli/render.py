# Rendering
# Deterministic text, JSON and CSV output for command results

import csv
import io
import json
from pathlib import Path

from .commands import CommandResult
from .run_config import OutputFormat


def render_json(result: CommandResult) -> str:
    return json.dumps(result.payload, sort_keys=True, indent=2) + "\n"


def render_csv(result: CommandResult) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerows(result.table)
    return buffer.getvalue()


def render_text(result: CommandResult) -> str:
    lines = list(result.summary)
    if result.table:
        widths = [max(len(row[i]) for row in result.table) for i in range(len(result.table[0]))]
        for row in result.table:
            lines.append("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())
    return "\n".join(lines) + "\n"


def render(result: CommandResult, fmt: OutputFormat) -> str:
    if fmt is OutputFormat.JSON:
        return render_json(result)
    if fmt is OutputFormat.CSV:
        return render_csv(result)
    return render_text(result)


def write_output(text: str, out_path: Path | None) -> None:
    """Write to out_path, or stdout when none is given."""
    if out_path is None:
        print(text, end="")
        return
    out_path.parent.mkdir(parents=True, exist_ok=True)
    out_path.write_text(text, encoding="utf-8")
