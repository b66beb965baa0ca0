"""CSV and JSON rendering of experiment rows.

Floats are written with 17 significant digits so that a CSV round-trips to
the same doubles; ``None`` becomes an empty CSV cell and JSON ``null``.
"""

from __future__ import annotations

import csv
import dataclasses
import io
import json
import math

from . import __version__
from .smoothness import c2_constant


def _cell(value):
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format(value, ".17g")
    return str(value)


def _json_value(value):
    if isinstance(value, float) and not math.isfinite(value):
        return format(value)  # "inf" / "nan": JSON has no literal for these
    return value


def as_dicts(rows) -> list[dict]:
    return [r if isinstance(r, dict) else dataclasses.asdict(r) for r in rows]


def to_csv(rows, columns=None) -> str:
    dicts = as_dicts(rows)
    if columns is None:
        columns = list(dicts[0]) if dicts else []
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for d in dicts:
        writer.writerow([_cell(d[c]) for c in columns])
    return buf.getvalue()


def to_json(rows, command: list[str], columns=None) -> str:
    dicts = as_dicts(rows)
    if columns is None:
        columns = list(dicts[0]) if dicts else []
    payload = {
        "meta": {
            "command": command,
            "version": __version__,
            "constants": {"c2": c2_constant()},
        },
        "rows": [{c: _json_value(d[c]) for c in columns} for d in dicts],
    }
    return json.dumps(payload, indent=2) + "\n"
