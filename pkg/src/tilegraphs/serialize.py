"""JSON and CSV formats.

Basic data::

    { "alphabet": ["0", "1"],
      "tile": [[0, 0], [1, 0], [0, 1]],
      "bijections": { "<pattern-key>": ["<image of symbol 0>", ...], ... } }

The pattern key lists the symbols at the reduced-set points in lexicographic
point order, joined by commas (the empty string when the reduced set is
empty).  The degenerate one-cell tile instead carries a single
``"distinguished"`` symbol and no bijection table.

Modular-rule parameters::

    { "tile": [[0, 0], ...], "q": 2, "t": 0, "w": { "<x>,<y>": 1, ... } }
"""

from __future__ import annotations

import csv
import io
import json
from typing import Any

from .data import BasicData, PrwParams, Vertex, pattern_key, validate_prw
from .dynamics import SimplicityReport
from .errors import ValidationError
from .lattice import Point, parse_tile
from .limits import DEFAULT_LIMITS, Limits
from .shifts import BlockCensus


def _point_key(p: Point) -> str:
    return f"{p[0]},{p[1]}"


def _parse_point_key(key: str) -> Point:
    try:
        x, y = key.split(",")
        return (int(x), int(y))
    except ValueError:
        raise ValidationError(f"bad point key {key!r}, expected 'x,y'") from None


def basic_data_from_dict(doc: dict, limits: Limits = DEFAULT_LIMITS) -> BasicData:
    from .data import validate_basic_data

    if not isinstance(doc, dict):
        raise ValidationError("basic data document must be a JSON object")
    for field in ("alphabet", "tile"):
        if field not in doc:
            raise ValidationError(f"basic data document is missing {field!r}")
    tile = parse_tile((tuple(p) for p in doc["tile"]), limits=limits)
    return validate_basic_data(
        tile,
        doc["alphabet"],
        doc.get("bijections"),
        distinguished=doc.get("distinguished"),
        limits=limits,
    )


def basic_data_to_dict(bd: BasicData) -> dict:
    doc: dict[str, Any] = {
        "alphabet": list(bd.alphabet.symbols),
        "tile": [list(p) for p in bd.tile.sorted_points],
    }
    if bd.degenerate:
        doc["distinguished"] = bd.distinguished
    else:
        doc["bijections"] = {
            pattern_key(pat): list(bd.bijections[pat])
            for pat in sorted(bd.bijections)
        }
    return doc


def prw_from_dict(doc: dict, limits: Limits = DEFAULT_LIMITS) -> PrwParams:
    if not isinstance(doc, dict):
        raise ValidationError("rule document must be a JSON object")
    for field in ("tile", "q", "t", "w"):
        if field not in doc:
            raise ValidationError(f"rule document is missing {field!r}")
    tile = parse_tile((tuple(p) for p in doc["tile"]), limits=limits)
    w = {_parse_point_key(k): int(v) for k, v in doc["w"].items()}
    return validate_prw(tile, int(doc["q"]), int(doc["t"]), w)


def load_json(path: str) -> dict:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            return json.load(fh)
        except json.JSONDecodeError as err:
            raise ValidationError(f"{path}: not valid JSON ({err})") from None


def vertex_to_dict(v: Vertex) -> dict[str, str]:
    return {_point_key(p): s for p, s in v.labels}


def report_to_dict(report: SimplicityReport) -> dict:
    cert = report.verdict.certificate
    return {
        "verdict": report.verdict.status.value,
        "certificate": None
        if cert is None
        else {
            "colour": cert.colour,
            "symbol": cert.symbol,
            "kind": cert.kind,
            "vertices": [vertex_to_dict(v) for v in cert.vertices],
        },
        "witness_note": report.verdict.witness_note,
        "strongly_connected": report.strongly_connected,
        "k": report.connectivity_degree,
        "cofinal": report.cofinal,
        "flags": dict(report.flags),
        "justifications": dict(report.justifications),
        "notes": list(report.notes),
    }


def census_to_rows(census: list[BlockCensus]) -> list[dict]:
    return [
        {
            "d": row.d,
            "count": None if row.count is None else str(row.count),
            "log_count": row.log_count,
            "entropy_term": row.entropy_term,
        }
        for row in census
    ]


def census_to_csv(census: list[BlockCensus]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["d", "count", "log_count", "entropy_term"])
    for row in census_to_rows(census):
        writer.writerow(
            [
                row["d"],
                "" if row["count"] is None else row["count"],
                f"{row['log_count']:.12g}",
                f"{row['entropy_term']:.12g}",
            ]
        )
    return buf.getvalue()


def dumps(doc: Any) -> str:
    """Deterministic JSON: sorted keys, stable float formatting."""
    return json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n"
