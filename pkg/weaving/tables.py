"""Value and Jones tables for the two weaving families."""

from __future__ import annotations

import csv
import io
from typing import Literal

from pydantic import TypeAdapter

from weaving.config import settings
from weaving.models import OutputFormat, TableRow
from weaving.recurrences import (
    det_w3n,
    det_wp2,
    eval_w3n_at_w,
    eval_wp2_at_w,
    jones_wp2,
)
from weaving.report import KNOT_NAMES, family_label

TableKind = Literal["values", "jones"]

# "1" and "2" select the value table and the Jones table
TABLE_SELECTORS: dict[str, TableKind] = {"1": "values", "2": "jones", "values": "values", "jones": "jones"}

VALUE_P_RANGE = range(2, 16)
VALUE_N_RANGE = range(2, 16)
JONES_P_RANGE = range(2, 10)

_ROWS = TypeAdapter(list[TableRow])


def value_rows() -> list[TableRow]:
    """det and V(w) for W(p,2), p = 2..15, then W(3,n), n = 2..15."""
    rows = [
        TableRow(
            label=family_label(p, 2),
            knot_name=KNOT_NAMES.get((p, 2)),
            determinant=det_wp2(p),
            value=eval_wp2_at_w(p),
        )
        for p in VALUE_P_RANGE
    ]
    rows.extend(
        TableRow(
            label=family_label(3, n),
            knot_name=KNOT_NAMES.get((3, n)),
            determinant=det_w3n(n),
            value=eval_w3n_at_w(n),
        )
        for n in VALUE_N_RANGE
    )
    return rows


def jones_rows() -> list[TableRow]:
    """Jones polynomials of W(p,2) for p = 2..9."""
    return [
        TableRow(label=family_label(p, 2), knot_name=KNOT_NAMES.get((p, 2)), jones=jones_wp2(p))
        for p in JONES_P_RANGE
    ]


def _cells(row: TableRow, kind: TableKind) -> list[str]:
    name = row.knot_name or ""
    if kind == "values":
        value = "" if row.value is None else str(row.value)
        return [row.label, name, str(row.determinant), value]
    return [row.label, name, "" if row.jones is None else row.jones.to_text()]


def _header(kind: TableKind) -> list[str]:
    if kind == "values":
        return ["knot", "name", "det", "V(w)"]
    return ["knot", "name", "V(t)"]


def render_table(kind: TableKind, fmt: OutputFormat) -> str:
    """Render a whole table; rows keep family order."""
    rows = value_rows() if kind == "values" else jones_rows()
    if fmt == OutputFormat.JSON:
        indent = settings.json_indent or None
        return _ROWS.dump_json(rows, indent=indent).decode()
    header = _header(kind)
    body = [_cells(row, kind) for row in rows]
    if fmt == OutputFormat.CSV:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(body)
        return buffer.getvalue().rstrip("\n")
    if fmt == OutputFormat.MD:
        lines = [
            "| " + " | ".join(header) + " |",
            "|" + "|".join("---" for _ in header) + "|",
        ]
        lines.extend("| " + " | ".join(cells) + " |" for cells in body)
        return "\n".join(lines)
    widths = [max(len(line[i]) for line in [header, *body]) for i in range(len(header))]
    return "\n".join(
        "  ".join(cell.ljust(width) for cell, width in zip(line, widths, strict=True)).rstrip()
        for line in [header, *body]
    )


def parse_rows(payload: str) -> list[TableRow]:
    """Inverse of the JSON rendering."""
    return _ROWS.validate_json(payload)
