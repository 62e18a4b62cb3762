"""Line-oriented text formats.

Field elements are written in the tower encoding of :meth:`FieldCtx.encode`
(for e = 1 this is the plain integer representation).  Every object starts
with a header line naming its kind and the field parameters.
"""

from __future__ import annotations

import re

from .bel import BelConfig
from .gf import FieldCtx, FieldError
from .gtf import GtfParams
from .isotopy import Isotopism
from .linpoly import LinPoly
from .rank2 import Rank2Pair, StabElement
from .semifield import CubicalMult


class FormatError(ValueError):
    pass


_KV = re.compile(r"(\w+)=(\S+)")


def _header(line: str) -> tuple[str, dict]:
    parts = line.split(None, 1)
    if not parts:
        raise FormatError("empty header")
    fields = dict(_KV.findall(parts[1])) if len(parts) > 1 else {}
    return parts[0], fields


def _int(fields: dict, key: str) -> int:
    try:
        return int(fields[key])
    except KeyError:
        raise FormatError(f"missing field {key!r}") from None
    except ValueError:
        raise FormatError(f"field {key!r} is not an integer: {fields[key]!r}") from None


def _ctx(fields: dict) -> FieldCtx:
    if _int(fields, "n") < 2:
        raise FormatError("n must be at least 2")
    try:
        return FieldCtx.from_q(_int(fields, "q"), _int(fields, "n"))
    except FieldError as exc:
        raise FormatError(str(exc)) from None


def parse_element(F: FieldCtx, text: str) -> int:
    try:
        k = int(text)
    except ValueError:
        raise FormatError(f"malformed element encoding {text!r}") from None
    if not 0 <= k < F.order:
        raise FormatError(f"element encoding {k} out of range for order {F.order}")
    return F.decode(k)


def dump_linpoly(f: LinPoly) -> str:
    F = f.ctx
    return "[" + ",".join(str(F.encode(c)) for c in f.coeffs) + "]"


def parse_linpoly(F: FieldCtx, line: str) -> LinPoly:
    line = line.strip()
    if not (line.startswith("[") and line.endswith("]")):
        raise FormatError(f"malformed polynomial line {line!r}")
    body = line[1:-1].strip()
    items = [s.strip() for s in body.split(",")] if body else []
    if len(items) != F.n:
        raise FormatError(f"expected {F.n} coefficients, got {len(items)}")
    return LinPoly(F, tuple(parse_element(F, s) for s in items))


def _rows_line(F: FieldCtx, row) -> str:
    return "[" + ",".join(str(F.encode(c)) for c in row) + "]"


def dumps(obj) -> str:
    """Serialize any supported object to text (trailing newline included)."""
    if isinstance(obj, CubicalMult):
        F = obj.ctx
        lines = [f"semifield q={F.q} n={F.n}"] + [_rows_line(F, r) for r in obj.c]
    elif isinstance(obj, GtfParams):
        F = obj.ctx
        lines = [f"gtf q={F.q} n={F.n} c={F.encode(obj.c)} a={obj.a} b={obj.b}"]
    elif isinstance(obj, BelConfig):
        F = obj.ctx
        lines = [f"bel q={F.q} n={F.n} r={obj.r}"]
        lines += [dump_linpoly(f) for f in obj.f] + [dump_linpoly(g) for g in obj.g]
    elif isinstance(obj, Rank2Pair):
        F = obj.ctx
        lines = [f"rank2 q={F.q} n={F.n}", dump_linpoly(obj.a), dump_linpoly(obj.b)]
    elif isinstance(obj, Isotopism):
        F = obj.A.ctx
        lines = [f"isotopism q={F.q} n={F.n}"] + [dump_linpoly(m) for m in (obj.A, obj.B, obj.C)]
    elif isinstance(obj, StabElement):
        raise FormatError("stabilizer elements need a field; use dump_stab")
    elif isinstance(obj, LinPoly):
        return dump_linpoly(obj) + "\n"
    else:
        raise FormatError(f"cannot serialize {type(obj).__name__}")
    return "\n".join(lines) + "\n"


def dump_stab(F: FieldCtx, s: StabElement) -> str:
    return f"stab kind={s.kind} k={F.encode(s.k)} m={F.encode(s.m)} gamma={s.gamma} delta={s.delta}\n"


def parse_stab(F: FieldCtx, line: str) -> StabElement:
    kind, fields = _header(line)
    if kind != "stab":
        raise FormatError(f"expected a stab line, got {kind!r}")
    try:
        return StabElement(
            fields.get("kind", ""),
            parse_element(F, fields.get("k", "")),
            parse_element(F, fields.get("m", "")),
            _int(fields, "gamma"),
            _int(fields, "delta"),
        )
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def loads(text: str):
    """Parse the text produced by :func:`dumps`."""
    lines = [ln for ln in (s.strip() for s in text.splitlines()) if ln and not ln.startswith("#")]
    if not lines:
        raise FormatError("empty input")
    kind, fields = _header(lines[0])
    body = lines[1:]
    if kind == "gtf":
        F = _ctx(fields)
        return GtfParams(F, parse_element(F, fields.get("c", "")), _int(fields, "a"), _int(fields, "b"))
    F = _ctx(fields)
    if kind == "semifield":
        _need(body, F.n, kind)
        return CubicalMult(F, tuple(parse_linpoly(F, ln).coeffs for ln in body))
    if kind == "bel":
        r = _int(fields, "r")
        _need(body, 2 * r, kind)
        polys = [parse_linpoly(F, ln) for ln in body]
        try:
            return BelConfig(F, tuple(polys[:r]), tuple(polys[r:]))
        except ValueError as exc:
            raise FormatError(str(exc)) from None
    if kind == "rank2":
        _need(body, 2, kind)
        return Rank2Pair(parse_linpoly(F, body[0]), parse_linpoly(F, body[1]))
    if kind == "isotopism":
        _need(body, 3, kind)
        return Isotopism(*(parse_linpoly(F, ln) for ln in body))
    raise FormatError(f"unknown object kind {kind!r}")


def _need(body, count: int, kind: str):
    if len(body) != count:
        raise FormatError(f"{kind}: expected {count} lines after the header, got {len(body)}")
