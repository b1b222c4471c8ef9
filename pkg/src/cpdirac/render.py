"""Deterministic table, CSV and JSON renderings.

JSON is canonical: sorted keys, no floats, multiplicities and rationals as
decimal strings.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import fields, is_dataclass
from enum import Enum
from fractions import Fraction
from typing import Any, Sequence

from cpdirac.core import Contribution, EmbeddingParams, Spectrum

FORMATS = ("table", "csv", "json")
SPECTRUM_COLUMNS = ("eigenvalue", "multiplicity", "family", "r", "s", "epsilon", "l")


def _scalar(value: Any) -> Any:
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, Enum):
        return value.value if isinstance(value.value, str) else value.name
    if isinstance(value, EmbeddingParams):
        return {"d": value.d, "n": value.n}
    return value


def canonical_json(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=True) + "\n"


def _cell(value: Any) -> str:
    return "" if value is None else str(value)


def table(headers: Sequence[str], rows: Sequence[Sequence[Any]], title: str = "") -> str:
    cells = [[str(h) for h in headers]] + [[_cell(v) for v in row] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(headers))]
    lines = [title] if title else []
    for k, row in enumerate(cells):
        lines.append("  ".join(c.rjust(w) for c, w in zip(row, widths)).rstrip())
        if k == 0:
            lines.append("  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


def _csv(rows: Sequence[Sequence[Any]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    for row in rows:
        writer.writerow([_cell(v) for v in row])
    return buf.getvalue()


def _contribution_json(c: Contribution) -> dict:
    idx = c.index
    return {
        "eigenvalue": c.eigenvalue,
        "multiplicity": str(c.multiplicity),
        "family": idx.family.name,
        "r": idx.r,
        "s": idx.s,
        "epsilon": idx.epsilon,
        "l": idx.l,
        "highest_weight": list(c.highest_weight),
    }


def _spectrum_title(spec: Spectrum) -> str:
    if spec.n is not None:
        return f"normal spinor twist: d={spec.d} n={spec.n} max-eig={spec.cutoff}"
    return f"line bundle twist: d={spec.d} m={spec.m} max-eig={spec.cutoff}"


def render_spectrum(spec: Spectrum, fmt: str) -> str:
    if fmt == "json":
        head = {"d": spec.d, "cutoff": spec.cutoff}
        if spec.n is not None:
            head["n"] = spec.n
        else:
            head["m"] = spec.m
        head["entries"] = {str(e.eigenvalue): str(e.multiplicity) for e in spec.entries}
        head["contributions"] = [_contribution_json(c) for c in spec.contributions()]
        return canonical_json(head)
    if fmt == "csv":
        rows: list[Sequence[Any]] = [SPECTRUM_COLUMNS]
        for e in spec.entries:
            for c in e.contributions:
                i = c.index
                rows.append((e.eigenvalue, c.multiplicity, i.family.name, i.r, i.s, i.epsilon, i.l))
            rows.append((e.eigenvalue, e.multiplicity, "TOTAL", None, None, None, None))
        return _csv(rows)
    rows = []
    for e in spec.entries:
        parts = "; ".join(f"{c.index.describe()} x{c.multiplicity}" for c in e.contributions)
        rows.append((e.eigenvalue, e.multiplicity, parts))
    if not rows:
        return _spectrum_title(spec) + "\n(no eigenvalues up to the cutoff)\n"
    return table(("eigenvalue", "multiplicity", "contributions"), rows, _spectrum_title(spec))


def render_record(record: Any, fmt: str, title: str = "") -> str:
    """Render a flat dataclass (or dict) of scalars as key/value pairs."""
    if is_dataclass(record):
        pairs = [(f.name, getattr(record, f.name)) for f in fields(record)]
    else:
        pairs = list(record.items())
    flat: list[tuple[str, Any]] = []
    for key, value in pairs:
        value = _scalar(value)
        if isinstance(value, dict):
            flat.extend(value.items())
        else:
            flat.append((key, value))
    if fmt == "json":
        return canonical_json(
            {k: str(v) if isinstance(v, int) and not isinstance(v, bool) and k in _BIG else v
             for k, v in flat}
        )
    if fmt == "csv":
        return _csv([("key", "value")] + flat)
    return table(("quantity", "value"), flat, title)


# integer fields that may exceed 64 bits; serialized as strings in JSON
_BIG = {"mu", "mult_zero", "mult_bound", "cumulative_below", "multiplicity", "total_rank"}


def render_rows(headers: Sequence[str], rows: Sequence[Sequence[Any]], fmt: str, title: str = "") -> str:
    if fmt == "json":
        return canonical_json(
            [
                {h: str(v) if h in _BIG else _scalar(v) for h, v in zip(headers, row)}
                for row in rows
            ]
        )
    if fmt == "csv":
        return _csv([headers] + [[_scalar(v) for v in row] for row in rows])
    return table(headers, rows, title)
