"""Input parsing and report-document serialization for the CLI.

Numbers are parsed with the decimal point only; comma decimals are a hard
error, as are missing cells -- silently dropping a row would change n and
with it every index. JSON output uses shortest round-trip float formatting
(15+ significant digits), text output is fixed to 6 decimals and says so.
"""

from __future__ import annotations

import csv
import hashlib
import json
import sys
from dataclasses import dataclass
from datetime import datetime, timezone

from .errors import ParseError
from .metrics import InequalityReport, LorenzCurve

SCHEMA_VERSION = "1"

_DELIMITERS = {"csv": ",", "tsv": "\t"}


@dataclass(frozen=True)
class InputSpec:
    """Where and how to read one column of numbers.

    ``column`` is a 1-based index or a header name; None selects the first
    numeric column of the first data row. ``path`` of "-" reads stdin.
    """

    path: str = "-"
    format: str = "csv"  # csv | tsv | whitespace
    column: int | str | None = None
    header: bool = False


def _read_raw(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    with open(path, "rb") as fh:
        return fh.read()


def _rows(text: str, fmt: str) -> list[tuple[int, list[str]]]:
    """Split into (1-based line number, cells); blank lines are dropped."""
    if fmt not in ("csv", "tsv", "whitespace"):
        raise ParseError(f"unknown input format {fmt!r}")
    out = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        if fmt == "whitespace":
            cells = line.split()
        else:
            cells = next(csv.reader([line], delimiter=_DELIMITERS[fmt]))
        out.append((lineno, cells))
    return out


def _parse_cell(cell: str, lineno: int, colno: int) -> float:
    text = cell.strip()
    if not text:
        raise ParseError(f"line {lineno}, column {colno}: missing value")
    try:
        return float(text)
    except ValueError:
        if "," in text:
            raise ParseError(
                f"line {lineno}, column {colno}: {cell!r} uses a comma "
                "decimal separator; use a decimal point"
            ) from None
        raise ParseError(
            f"line {lineno}, column {colno}: {cell!r} is not a number"
        ) from None


def _is_numeric(cell: str) -> bool:
    try:
        float(cell.strip())
        return True
    except ValueError:
        return False


def _resolve_column(
    spec: InputSpec, names: list[str] | None, first_row: tuple[int, list[str]]
) -> int:
    """Return the 0-based index of the selected column."""
    column = spec.column
    if isinstance(column, str) and column.lstrip("-").isdigit():
        column = int(column)
    if isinstance(column, int):
        if column < 1:
            raise ParseError(f"column index is 1-based, got {column}")
        return column - 1
    if isinstance(column, str):
        if names is None:
            raise ParseError(
                f"column selected by name {column!r} but no header row "
                "(pass --header)"
            )
        try:
            return names.index(column)
        except ValueError:
            raise ParseError(
                f"column {column!r} not found in header {names}"
            ) from None
    lineno, cells = first_row
    for idx, cell in enumerate(cells):
        if cell.strip() and _is_numeric(cell):
            return idx
    for idx, cell in enumerate(cells):
        if "," in cell and _is_numeric(cell.replace(",", ".")):
            raise ParseError(
                f"line {lineno}, column {idx + 1}: {cell!r} uses a comma "
                "decimal separator; use a decimal point"
            )
    raise ParseError(f"line {lineno}: no numeric column found")


def read_values(spec: InputSpec) -> tuple[list[float], str]:
    """Read one numeric column; returns (values, sha256 hex of raw bytes)."""
    raw = _read_raw(spec.path)
    digest = hashlib.sha256(raw).hexdigest()
    rows = _rows(raw.decode("utf-8"), spec.format)
    names: list[str] | None = None
    if spec.header:
        if not rows:
            raise ParseError("header requested but the input is empty")
        names = [cell.strip() for cell in rows[0][1]]
        rows = rows[1:]
    if not rows:
        return [], digest
    col = _resolve_column(spec, names, rows[0])
    values = []
    for lineno, cells in rows:
        if col >= len(cells):
            raise ParseError(
                f"line {lineno}: only {len(cells)} column(s), "
                f"need column {col + 1}"
            )
        values.append(_parse_cell(cells[col], lineno, col + 1))
    return values, digest


def read_lorenz_points(spec: InputSpec) -> tuple[list[tuple[float, float]], str]:
    """Read two-column (p, q) points; returns (points, sha256 hex)."""
    raw = _read_raw(spec.path)
    digest = hashlib.sha256(raw).hexdigest()
    rows = _rows(raw.decode("utf-8"), spec.format)
    if spec.header:
        rows = rows[1:]
    points = []
    for lineno, cells in rows:
        if len(cells) < 2:
            raise ParseError(
                f"line {lineno}: need two columns (p, q), got {len(cells)}"
            )
        p = _parse_cell(cells[0], lineno, 1)
        q = _parse_cell(cells[1], lineno, 2)
        points.append((p, q))
    return points, digest


def build_document(
    result: InequalityReport,
    curve: LorenzCurve,
    *,
    input_stats: dict[str, float] | None,
    digest: str | None,
    tool_version: str,
    with_provenance: bool = True,
) -> dict:
    """Assemble the report document (JSON-ready plain dict).

    ``input_stats`` supplies mean/min/max/total for raw-value input and is
    None for Lorenz-point input, where only n is known.
    """
    stats = input_stats or {}
    doc = {
        "schema_version": SCHEMA_VERSION,
        "input": {
            "n": result.n,
            "mean": stats.get("mean"),
            "min": stats.get("min"),
            "max": stats.get("max"),
            "total": stats.get("total"),
        },
        "indices": {
            "gini": result.gini,
            "g_right": result.g_right,
            "g_left": result.g_left,
            "sag": result.sag,
            "skew_direction": result.skew_direction,
            "convex": result.convex,
        },
        "lorenz": {
            "p": [float(v) for v in curve.p],
            "q": [float(v) for v in curve.q],
        },
    }
    if with_provenance:
        doc["provenance"] = {
            "tool_version": tool_version,
            "generated_at": datetime.now(timezone.utc).isoformat(),
            "input_digest": f"sha256:{digest}" if digest else None,
        }
    return doc


def document_to_json(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"


def document_to_csv(doc: dict) -> str:
    lines = ["key,value"]
    flat = {
        "schema_version": doc["schema_version"],
        "n": doc["input"]["n"],
        "mean": doc["input"]["mean"],
        "min": doc["input"]["min"],
        "max": doc["input"]["max"],
        "total": doc["input"]["total"],
        **{k: v for k, v in doc["indices"].items()},
    }
    for key, value in flat.items():
        lines.append(f"{key},{_csv_value(value)}")
    lines.append("i,p,q")
    for i, (p, q) in enumerate(zip(doc["lorenz"]["p"], doc["lorenz"]["q"]), start=1):
        lines.append(f"{i},{p!r},{q!r}")
    return "\n".join(lines) + "\n"


def _csv_value(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def document_to_text(doc: dict) -> str:
    def fmt(value) -> str:
        return "n/a" if value is None else f"{value:.6f}"

    inp = doc["input"]
    idx = doc["indices"]
    lines = [
        f"observations (n): {inp['n']}",
        f"mean:             {fmt(inp['mean'])}",
        f"min:              {fmt(inp['min'])}",
        f"max:              {fmt(inp['max'])}",
        f"total:            {fmt(inp['total'])}",
        f"gini:             {idx['gini']:.6f}",
        f"g_right:          {idx['g_right']:.6f}",
        f"g_left:           {idx['g_left']:.6f}",
        f"sag:              {idx['sag']:.6f}",
        f"skew direction:   {idx['skew_direction']}",
        f"convex curve:     {'yes' if idx['convex'] else 'no'}",
        "",
        "(6-decimal display; the JSON output is authoritative)",
    ]
    return "\n".join(lines) + "\n"


def values_stats(values: list[float], total: float) -> dict[str, float]:
    return {
        "mean": total / len(values),
        "min": min(values),
        "max": max(values),
        "total": total,
    }


def sweep_to_json(result) -> str:
    doc = {
        "config": {
            "family": result.config.family,
            "sample_size": result.config.sample_size,
            "replications": result.config.replications,
            "seed": result.config.seed,
            "params": dict(sorted(result.config.params.items())),
        },
        "rows": [
            {
                "rep_index": row.rep_index,
                "gini": row.gini,
                "g_right": row.g_right,
                "g_left": row.g_left,
                "sag": row.sag,
                "sag_minus_gini": row.sag_minus_gini,
                "skew_direction": row.skew_direction,
            }
            for row in result.rows
        ],
        "summary": result.summary,
    }
    return json.dumps(doc, indent=2) + "\n"


def sweep_to_csv(result) -> str:
    lines = ["rep_index,gini,g_right,g_left,sag,sag_minus_gini,skew_direction"]
    for row in result.rows:
        lines.append(
            f"{row.rep_index},{row.gini!r},{row.g_right!r},{row.g_left!r},"
            f"{row.sag!r},{row.sag_minus_gini!r},{row.skew_direction}"
        )
    for metric, stats in result.summary.items():
        for stat, value in stats.items():
            lines.append(f"summary,{metric},{stat},{value!r}")
    return "\n".join(lines) + "\n"
