"""Canonical JSON forms for every object kind.

Rationals travel as strings in lowest terms ("1/3", "2"); JSON numbers
appear only for genuinely integer-valued objects (sign matrices and the
two 0/1 triangle kinds).  Field order is fixed, so serialize -> parse ->
serialize is byte-identical.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .core import BooleanTriangle, MagogTriangle, SignMatrix
from .polytope import ConvexDecomposition, NotInHull, RationalMatrixPoint, RationalTrianglePoint, as_fraction


def _rat(v: Fraction) -> str:
    return str(v)


def to_document(obj) -> dict:
    """Canonical dict form, ready for json.dumps."""
    if isinstance(obj, SignMatrix):
        return {"kind": "matrix", "n": obj.n, "entries": [list(r) for r in obj.entries]}
    if isinstance(obj, RationalMatrixPoint):
        return {"kind": "matrix", "n": obj.n, "entries": [[_rat(v) for v in r] for r in obj.entries]}
    if isinstance(obj, MagogTriangle):
        return {"kind": "magog-triangle", "n": obj.n, "rows": [list(r) for r in obj.rows]}
    if isinstance(obj, BooleanTriangle):
        return {"kind": "boolean-triangle", "n": obj.n, "rows": [list(r) for r in obj.rows]}
    if isinstance(obj, RationalTrianglePoint):
        return {"kind": "rational-triangle", "n": obj.n, "rows": [[_rat(v) for v in r] for r in obj.rows]}
    if isinstance(obj, ConvexDecomposition):
        return {"terms": [{"weight": _rat(w), "vertex": to_document(v)} for w, v in obj.terms]}
    if isinstance(obj, NotInHull):
        return {
            "kind": "not-in-hull",
            "coefficients": [_rat(c) for c in obj.coefficients],
            "offset": _rat(obj.offset),
        }
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(obj) -> str:
    return json.dumps(to_document(obj), separators=(",", ":"))


def _entries_integral(rows) -> bool:
    return all(isinstance(v, int) for row in rows for v in row)


def from_document(doc: dict):
    """Inverse of to_document.  Integer payloads come back as the typed
    integer objects; any string entry promotes the whole object to its
    rational form."""
    if "terms" in doc:
        terms = tuple(
            (as_fraction(t["weight"]), from_document(t["vertex"])) for t in doc["terms"]
        )
        return ConvexDecomposition(terms)
    kind = doc.get("kind")
    if kind == "matrix":
        rows = doc["entries"]
        if _entries_integral(rows):
            return SignMatrix.from_rows(rows)
        return RationalMatrixPoint.from_rows(rows)
    if kind == "magog-triangle":
        return MagogTriangle.from_rows(doc["rows"])
    if kind == "boolean-triangle":
        return BooleanTriangle.from_rows(doc["n"], doc["rows"])
    if kind == "rational-triangle":
        return RationalTrianglePoint.from_rows(doc["n"], doc["rows"])
    if kind == "not-in-hull":
        return NotInHull(
            coefficients=tuple(as_fraction(c) for c in doc["coefficients"]),
            offset=as_fraction(doc["offset"]),
        )
    raise ValueError(f"unrecognized document kind {kind!r}")


def loads(text: str):
    return from_document(json.loads(text))


def load_path(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        return from_document(json.load(fh))
