"""Deterministic CSV / JSON serialization of result tables."""

import io
import json
import math
from dataclasses import dataclass, field

from . import __version__


def format_value(value):
    """Locale-independent text for one cell: floats at 17 significant digits."""
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        if math.isinf(value):
            return "inf" if value > 0 else "-inf"
        return format(value, ".17g")
    return str(value)


def _json_value(value):
    if isinstance(value, float) and not math.isfinite(value):
        return format_value(value)
    return value


@dataclass
class Table:
    """Column-ordered rows plus metadata and an optional summary block."""

    columns: list
    rows: list
    metadata: dict = field(default_factory=dict)
    summary: dict = field(default_factory=dict)

    def to_csv(self):
        """CSV text: ``# key=value`` summary lines, header row, data rows, LF endings."""
        out = io.StringIO()
        for key, value in self.summary.items():
            out.write(f"# {key}={format_value(value)}\n")
        out.write(",".join(self.columns) + "\n")
        for row in self.rows:
            out.write(",".join(format_value(v) for v in row) + "\n")
        return out.getvalue()

    def to_json(self):
        """JSON text: metadata object, optional summary, and rows as records."""
        doc = {"metadata": {**self.metadata, "tool_version": __version__}}
        if self.summary:
            doc["summary"] = {k: _json_value(v) for k, v in self.summary.items()}
        doc["rows"] = [{c: _json_value(v) for c, v in zip(self.columns, row)} for row in self.rows]
        return json.dumps(doc, indent=2, allow_nan=False) + "\n"

    def render(self, fmt):
        if fmt == "csv":
            return self.to_csv()
        if fmt == "json":
            return self.to_json()
        raise ValueError(f"unknown output format {fmt!r}")


def write(table, fmt, path=None, stream=None):
    """Write ``table`` to ``path`` (LF line endings, UTF-8) or to ``stream``."""
    text = table.render(fmt)
    if path is None:
        stream.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
