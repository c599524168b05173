"""JSON and plain-text readers/writers for matrices, polynomials and roots."""
from __future__ import annotations

import enum
import json
from fractions import Fraction
from typing import Any, Optional

from .charpoly import CornerRoot, Polynomial
from .errors import KindMismatch, ParseError, TropalgError
from .matrix import Matrix
from .semiring import NEG_INF, Element, SemiringKind, format_element, format_magnitude, parse_element


def _parse_kind(name: Any) -> SemiringKind:
    if not isinstance(name, str):
        raise ParseError("'semiring' must be a string")
    return SemiringKind.parse(name)


def _token(x: Any, kind: SemiringKind, line: Optional[int] = None, column: Optional[int] = None) -> Element:
    if isinstance(x, bool) or not isinstance(x, (str, int)):
        raise ParseError(f"element tokens must be strings, got {x!r}", line, column)
    try:
        return parse_element(str(x), kind)
    except ParseError as e:
        raise ParseError(str(e), line, column) from None


def matrix_from_obj(obj: Any) -> Matrix:
    if not isinstance(obj, dict) or "semiring" not in obj or "entries" not in obj:
        raise ParseError("matrix document needs 'semiring' and 'entries'")
    kind = _parse_kind(obj["semiring"])
    rows = obj["entries"]
    if not isinstance(rows, list) or not rows or not all(isinstance(r, list) for r in rows):
        raise ParseError("'entries' must be a non-empty list of rows")
    n = len(rows)
    for i, r in enumerate(rows):
        if len(r) != n:
            raise ParseError(f"row {i + 1} has {len(r)} entries, expected {n}", line=i + 1)
    elems = [[_token(x, kind, i + 1, j + 1) for j, x in enumerate(r)] for i, r in enumerate(rows)]
    return Matrix.from_elements(elems, kind)


def matrix_to_obj(A: Matrix) -> dict[str, Any]:
    return {"semiring": A.kind.value, "entries": A.tokens()}


def parse_matrix_text(text: str) -> Matrix:
    """Plain-text grid: a semiring line, then whitespace-separated rows."""
    lines = [(no, ln.split("#", 1)[0].strip()) for no, ln in enumerate(text.splitlines(), start=1)]
    lines = [(no, ln) for no, ln in lines if ln]
    if not lines:
        raise ParseError("empty matrix text")
    kind_line, head = lines[0]
    try:
        kind = SemiringKind.parse(head)
    except ParseError:
        raise ParseError(f"first line must name the semiring, got {head!r}", line=kind_line) from None
    rows = []
    for no, ln in lines[1:]:
        toks = ln.split()
        row = []
        col = 1
        rest = ln
        for tok in toks:
            pos = rest.index(tok)
            col += pos
            row.append(_token(tok, kind, no, col))
            col += len(tok)
            rest = rest[pos + len(tok):]
        rows.append((no, row))
    n = len(rows)
    if n == 0:
        raise ParseError("matrix has no rows", line=kind_line)
    for no, r in rows:
        if len(r) != n:
            raise ParseError(f"row has {len(r)} entries, expected {n}", line=no)
    return Matrix.from_elements([r for _, r in rows], kind)


def matrix_to_text(A: Matrix) -> str:
    return A.kind.value + "\n" + str(A) + "\n"


def parse_matrix(source: str) -> Matrix:
    """JSON document or plain-text grid."""
    stripped = source.lstrip()
    if stripped.startswith("{"):
        try:
            obj = json.loads(source)
        except json.JSONDecodeError as e:
            raise ParseError(f"invalid JSON: {e.msg}", e.lineno, e.colno) from None
        return matrix_from_obj(obj)
    return parse_matrix_text(source)


def print_matrix(A: Matrix) -> str:
    return json.dumps(matrix_to_obj(A), ensure_ascii=False)


def polynomial_from_obj(obj: Any) -> Polynomial:
    if not isinstance(obj, dict) or "semiring" not in obj or "coeffs" not in obj:
        raise ParseError("polynomial document needs 'semiring' and 'coeffs'")
    kind = _parse_kind(obj["semiring"])
    cs = obj["coeffs"]
    if not isinstance(cs, list) or not cs:
        raise ParseError("'coeffs' must be a non-empty list")
    return Polynomial(kind, [_token(x, kind, None, i + 1) for i, x in enumerate(cs)])


def polynomial_to_obj(f: Polynomial) -> dict[str, Any]:
    return {"semiring": f.kind.value, "coeffs": [format_element(c) for c in f.coeffs]}


def parse_polynomial(source: str) -> Polynomial:
    try:
        obj = json.loads(source)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e.msg}", e.lineno, e.colno) from None
    return polynomial_from_obj(obj)


def print_polynomial(f: Polynomial) -> str:
    return json.dumps(polynomial_to_obj(f), ensure_ascii=False)


def roots_to_obj(kind: SemiringKind, roots: list[CornerRoot]) -> dict[str, Any]:
    out = []
    for r in roots:
        d: dict[str, Any] = {"value": format_element(r.value)}
        if kind is SemiringKind.RMAX:
            d["multiplicity"] = r.multiplicity
        out.append(d)
    return {"semiring": kind.value, "roots": out}


def error_obj(err: Exception) -> dict[str, Any]:
    d: dict[str, Any] = {"error": type(err).__name__, "message": str(err)}
    if isinstance(err, ParseError):
        if err.line is not None:
            d["line"] = err.line
        if err.column is not None:
            d["column"] = err.column
    return d


def to_jsonable(x: Any) -> Any:
    """Recursively turn library values into JSON-friendly data."""
    if isinstance(x, Matrix):
        return matrix_to_obj(x)
    if isinstance(x, Polynomial):
        return polynomial_to_obj(x)
    if isinstance(x, Element):
        return format_element(x)
    if isinstance(x, CornerRoot):
        return str(x)
    if isinstance(x, Fraction) or (isinstance(x, float) and x == NEG_INF):
        return format_magnitude(x)
    if isinstance(x, enum.Enum):
        return x.value
    if isinstance(x, dict):
        return {str(k): to_jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [to_jsonable(v) for v in x]
    if hasattr(x, "members"):
        return list(x.members)
    return x


__all__ = [
    "parse_matrix",
    "print_matrix",
    "parse_matrix_text",
    "matrix_to_text",
    "matrix_from_obj",
    "matrix_to_obj",
    "parse_polynomial",
    "print_polynomial",
    "polynomial_from_obj",
    "polynomial_to_obj",
    "roots_to_obj",
    "error_obj",
    "to_jsonable",
    "KindMismatch",
    "TropalgError",
]
