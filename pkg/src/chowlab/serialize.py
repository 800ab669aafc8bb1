"""JSON encoding of exact values and matroids, and parsing of matroid specs."""

from __future__ import annotations

import json
import os
from fractions import Fraction
from pathlib import Path

from . import errors
from .gf import field_params
from .matroid import Matroid, from_bases, make_boolean, make_projective_geometry, make_uniform
from .poly import UniPoly

DEFAULT_MAX_N = 18


class SpecParseError(errors.ChowlabError):
    kind = "parse-error"

    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


def rational(x):
    """Integers stay integers; other rationals become "p/q" strings."""
    if isinstance(x, bool):
        return x
    if isinstance(x, int):
        return x
    x = Fraction(x)
    if x.denominator == 1:
        return x.numerator
    return f"{x.numerator}/{x.denominator}"


def to_jsonable(obj):
    if isinstance(obj, (Fraction, int)) and not isinstance(obj, bool):
        return rational(obj)
    if isinstance(obj, UniPoly):
        return [rational(c) for c in obj.coeffs]
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    return obj


def dumps(obj) -> str:
    return json.dumps(to_jsonable(obj), indent=2, sort_keys=False)


def matroid_to_dict(m: Matroid) -> dict:
    return {"n": m.n, "bases": m.canonical_bases()}


def matroid_from_dict(data: dict) -> Matroid:
    if not isinstance(data, dict) or "n" not in data or "bases" not in data:
        raise SpecParseError('matroid JSON needs keys "n" and "bases"')
    return from_bases(int(data["n"]), [list(b) for b in data["bases"]])


def write_matroid(m: Matroid, path) -> None:
    Path(path).write_text(json.dumps(matroid_to_dict(m)) + "\n")


def read_matroid(path) -> Matroid:
    text = Path(path).read_text()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecParseError(exc.msg, exc.lineno, exc.colno) from None
    return matroid_from_dict(data)


def max_n() -> int:
    return int(os.environ.get("CHOWLAB_MAX_N", DEFAULT_MAX_N))


def _ints(spec: str, body: str, count: int) -> list:
    parts = body.split(",")
    if len(parts) != count:
        raise SpecParseError(f"expected {count} integers in {spec!r}", 1, spec.index(":") + 2)
    out = []
    col = spec.index(":") + 2
    for p in parts:
        try:
            out.append(int(p))
        except ValueError:
            raise SpecParseError(f"not an integer: {p!r}", 1, col) from None
        col += len(p) + 1
    return out


def parse_spec(spec: str) -> Matroid:
    """Parse "uniform:r,n", "boolean:n", "pg:d,q" or a path to a JSON matroid file."""
    if ":" in spec and not os.path.exists(spec):
        family, body = spec.split(":", 1)
        if family == "uniform":
            r, n = _ints(spec, body, 2)
            _check_size(n)
            return make_uniform(r, n)
        if family == "boolean":
            (n,) = _ints(spec, body, 1)
            _check_size(n)
            return make_boolean(n)
        if family == "pg":
            d, q = _ints(spec, body, 2)
            field_params(q)  # reject unsupported q before sizing
            _check_size((q ** (d + 1) - 1) // (q - 1))
            return make_projective_geometry(d, q)
        raise SpecParseError(f"unknown family {family!r}", 1, 1)
    if not os.path.exists(spec):
        raise SpecParseError(f"no such matroid file or family spec: {spec!r}", 1, 1)
    m = read_matroid(spec)
    _check_size(m.n)
    return m


def _check_size(n: int) -> None:
    cap = max_n()
    if n > cap:
        raise errors.InvalidParameters(f"ground set of size {n} exceeds CHOWLAB_MAX_N={cap}")
