"""JSON file formats for fields, elements and matrices.

All integers travel as decimal strings so arbitrary precision survives any
JSON parser.  Field::

    {"min_poly": ["-2", "0"], "interval": ["1", "2"]}

Matrix or basis (``field`` may also be a path relative to the file)::

    {"field": {...}, "rows": [[["1", "1"], ["0"]], ...]}
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Any

from .bareiss import MatrixZA
from .field import AlgebraicInt, FieldDescriptor, field_new


def _frac_str(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_rational(s) -> Fraction:
    if isinstance(s, bool):
        raise ValueError(f"not a rational: {s!r}")
    if isinstance(s, int):
        return Fraction(s)
    if not isinstance(s, str):
        raise ValueError(f"expected a decimal string, got {s!r}")
    return Fraction("".join(s.split()))


def parse_int(s) -> int:
    x = parse_rational(s)
    if x.denominator != 1:
        raise ValueError(f"expected an integer, got {s!r}")
    return x.numerator


def field_to_json(F: FieldDescriptor) -> dict:
    return {
        "min_poly": [str(c) for c in F.min_poly],
        "interval": [_frac_str(F.interval[0]), _frac_str(F.interval[1])],
    }


def field_from_json(obj: Any, base: Path | None = None) -> FieldDescriptor:
    if isinstance(obj, str):
        path = Path(obj)
        if base is not None and not path.is_absolute():
            path = base / path
        return field_from_json(load_json(path), path.parent)
    if not isinstance(obj, dict) or "min_poly" not in obj or "interval" not in obj:
        raise ValueError("field object needs 'min_poly' and 'interval'")
    interval = obj["interval"]
    if len(interval) != 2:
        raise ValueError("interval must have two endpoints")
    return field_new([parse_int(c) for c in obj["min_poly"]], tuple(parse_rational(x) for x in interval))


def element_to_json(a: AlgebraicInt) -> list[str]:
    return [str(c) for c in a.coeffs]


def coeffs_from_json(F: FieldDescriptor, obj) -> list[Fraction]:
    """Coefficient vector (rationals allowed); a bare scalar means a rational constant."""
    if not isinstance(obj, list):
        obj = [obj]
    if len(obj) > F.degree:
        raise ValueError(f"element has {len(obj)} coefficients, field degree is {F.degree}")
    vals = [parse_rational(c) for c in obj]
    return vals + [Fraction(0)] * (F.degree - len(vals))


def element_from_json(F: FieldDescriptor, obj) -> AlgebraicInt:
    vals = coeffs_from_json(F, obj)
    if any(v.denominator != 1 for v in vals):
        raise ValueError(f"element {obj!r} is not in Z[alpha]")
    return F.element(int(v) for v in vals)


def matrix_to_json(M: MatrixZA, field_ref: Any = None) -> dict:
    return {
        "field": field_to_json(M.field) if field_ref is None else field_ref,
        "rows": [[element_to_json(x) for x in r] for r in M.rows],
    }


def rational_rows_from_json(obj: dict, base: Path | None = None, field: FieldDescriptor | None = None):
    """(field, rows of rational coefficient vectors) from a matrix object."""
    if not isinstance(obj, dict) or "rows" not in obj:
        raise ValueError("matrix object needs 'rows'")
    if field is None:
        if "field" not in obj:
            raise ValueError("matrix object needs 'field' (or pass --field)")
        field = field_from_json(obj["field"], base)
    rows = obj["rows"]
    if not isinstance(rows, list) or not rows or not all(isinstance(r, list) for r in rows):
        raise ValueError("'rows' must be a non-empty list of lists")
    return field, [[coeffs_from_json(field, x) for x in r] for r in rows]


def matrix_from_json(obj: dict, base: Path | None = None, field: FieldDescriptor | None = None) -> MatrixZA:
    F, rows = rational_rows_from_json(obj, base, field)
    out = []
    for r in rows:
        row = []
        for vals in r:
            if any(v.denominator != 1 for v in vals):
                raise ValueError("matrix entries must lie in Z[alpha]")
            row.append(F.element(int(v) for v in vals))
        out.append(tuple(row))
    return MatrixZA(F, tuple(out))


def load_json(path) -> Any:
    with open(path) as fh:
        return json.load(fh)


def dump_json(obj, path=None) -> str:
    text = json.dumps(obj, indent=1)
    if path is not None:
        Path(path).write_text(text + "\n")
    return text
