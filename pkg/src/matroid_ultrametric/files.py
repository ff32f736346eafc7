"""Readers and writers for matroid specs, weight CSVs and distance matrices."""

import csv
import io
import json

from .matroid import Matroid, MatroidError
from .rational import ParseError, format_rational, parse_rational


def matroid_from_spec(spec):
    """Build a matroid from a decoded JSON spec object."""
    if not isinstance(spec, dict) or "type" not in spec:
        raise ParseError("matroid spec must be an object with a 'type' field")
    kind = spec["type"]
    try:
        if kind == "uniform":
            return Matroid.uniform(_str_list(spec["elements"]), int(spec["rank"]))
        if kind == "graphic":
            edges = [(e["id"], e["u"], e["v"]) for e in spec["edges"]]
            return Matroid.graphic(_str_list(spec["vertices"]), edges)
        if kind == "bases":
            return Matroid.from_bases(_str_list(spec["elements"]), [_str_list(b) for b in spec["bases"]])
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, MatroidError):
            raise
        raise ParseError(f"malformed {kind!r} matroid spec: {exc}") from None
    raise ParseError(f"unknown matroid type {kind!r}")


def matroid_to_spec(matroid):
    if matroid.kind == "uniform":
        return {"type": "uniform", "elements": list(matroid.elements), "rank": matroid.params["rank"]}
    if matroid.kind == "graphic":
        return {
            "type": "graphic",
            "vertices": list(matroid.params["vertices"]),
            "edges": [{"id": i, "u": u, "v": v} for i, u, v in matroid.params["edges"]],
        }
    return {
        "type": "bases",
        "elements": list(matroid.elements),
        "bases": [list(matroid.labels(b)) for b in matroid.bases],
    }


def _str_list(items):
    if not isinstance(items, list):
        raise ParseError(f"expected a list, got {type(items).__name__}")
    return [str(x) for x in items]


def read_matroid(path):
    try:
        with open(path, encoding="utf-8") as fh:
            spec = json.load(fh)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON: {exc}") from None
    return matroid_from_spec(spec)


def parse_weights(text, matroid):
    """Parse an ``element,weight`` CSV into a weight vector for ``matroid``."""
    rows = list(csv.reader(io.StringIO(text)))
    rows = [r for r in rows if r and any(cell.strip() for cell in r)]
    if not rows or [c.strip() for c in rows[0]] != ["element", "weight"]:
        raise ParseError("weight file must start with header 'element,weight'")
    values = {}
    for r in rows[1:]:
        if len(r) != 2:
            raise ParseError(f"bad weight row {r!r}")
        name = r[0].strip()
        if name in values:
            raise ParseError(f"element {name!r} weighted twice")
        if name not in matroid.elements:
            raise ParseError(f"unknown element {name!r}")
        values[name] = parse_rational(r[1])
    missing = [e for e in matroid.elements if e not in values]
    if missing:
        raise ParseError(f"no weight for elements {missing}")
    return tuple(values[e] for e in matroid.elements)


def read_weights(path, matroid):
    with open(path, encoding="utf-8") as fh:
        return parse_weights(fh.read(), matroid)


def format_weights(matroid, weights, extra=None):
    """CSV text of a weight vector in element order.

    ``extra`` optionally maps a column name to one string per element.
    """
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    extra = extra or {}
    writer.writerow(["element", "weight", *extra])
    for i, e in enumerate(matroid.elements):
        writer.writerow([e, format_rational(weights[i]), *(col[i] for col in extra.values())])
    return buf.getvalue()
