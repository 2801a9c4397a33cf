"""JSON/CSV encodings of the package's value types.

Rationals travel as "p/q" strings, lengths as JSON numbers; the two are
never mixed in one field.
"""
from __future__ import annotations

import csv
import io
import json
from typing import Iterable, Mapping

from .arcs import parse_triple
from .foliation import ChartCoords, FoliationClass, as_fraction

__all__ = [
    "foliation_to_json",
    "foliation_from_json",
    "chart_to_json",
    "chart_from_json",
    "parse_weights",
    "parse_rationals",
    "parse_lengths",
    "dumps",
    "csv_text",
]


def foliation_to_json(F: FoliationClass) -> dict:
    return {"weights": {x.value: str(w) for x, w in F.weights.items()}}


def foliation_from_json(data: Mapping) -> FoliationClass:
    return FoliationClass({k: as_fraction(v) for k, v in data["weights"].items()})


def chart_to_json(cc: ChartCoords) -> dict:
    return {"triple": cc.triple.names, "coords": [str(x) for x in cc.coords], "region": cc.region}


def chart_from_json(data: Mapping) -> ChartCoords:
    return ChartCoords(parse_triple(data["triple"]), tuple(as_fraction(x) for x in data["coords"]),
                       data.get("region"))


def parse_rationals(text: str) -> tuple:
    """``"1,1/2,3"`` -> Fractions."""
    return tuple(as_fraction(s) for s in text.split(",") if s.strip())


def parse_lengths(text: str) -> tuple:
    return tuple(float(s) for s in text.split(",") if s.strip())


def parse_weights(text: str) -> FoliationClass:
    """``"alpha=1,B=1/2"`` -> FoliationClass."""
    weights = {}
    for part in (p.strip() for p in text.split(",")):
        if not part:
            continue
        name, eq, value = part.partition("=")
        if not eq:
            raise ValueError(f"expected name=weight, got {part!r}")
        weights[name.strip()] = as_fraction(value)
    return FoliationClass(weights)


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=True, allow_nan=False) + "\n"


def csv_text(header: Iterable, rows: Iterable) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()
