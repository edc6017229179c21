"""Canonical JSON forms. Rationals are always written as exact "p/q" strings."""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .calculus import GaussianSection
from .clifford import CRational, MultiVector, grade_of, indices_from_mask, mask_from_indices
from .fischer import FischerParts
from .hermite import HermiteCoeffs
from .kernels import ZonalTable
from .polynomial import BiPoly, CliffPoly, _add_into


class ParseError(ValueError):
    """Input JSON does not match the expected schema."""


def rational_str(q: Fraction) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(v: Any) -> Fraction:
    if isinstance(v, bool) or not isinstance(v, (str, int)):
        raise ParseError(f"expected an exact rational string 'p/q', got {v!r}")
    try:
        return Fraction(v)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad rational {v!r}") from exc


def _blade_key(mask: int):
    return (grade_of(mask), indices_from_mask(mask))


def _coeff_entries(m: int, blades: dict) -> list:
    return [
        {"blade": list(indices_from_mask(b)), "re": rational_str(c.re), "im": rational_str(c.im)}
        for b, c in sorted(blades.items(), key=lambda kv: _blade_key(kv[0]))
    ]


def multivector_to_json(a: MultiVector) -> list:
    return _coeff_entries(a.m, dict(a.items()))


def _parse_blades(data: Any, m: int) -> dict:
    if not isinstance(data, list):
        raise ParseError("multivector must be a list of blade entries")
    out: dict = {}
    for entry in data:
        if not isinstance(entry, dict) or "blade" not in entry:
            raise ParseError(f"bad blade entry {entry!r}")
        try:
            mask = mask_from_indices(entry["blade"], m)
        except (TypeError, ValueError) as exc:
            raise ParseError(str(exc)) from exc
        c = CRational._make(parse_rational(entry.get("re", "0")), parse_rational(entry.get("im", "0")))
        if c:
            _add_into(out, mask, c)
    return out


def multivector_from_json(data: Any, m: int) -> MultiVector:
    return MultiVector._raw(m, _parse_blades(data, m))


def _grouped(p) -> dict:
    grouped: dict = {}
    for (exp, mask), c in p.sorted_terms():
        grouped.setdefault(exp, {})[mask] = c
    return grouped


def cliffpoly_to_json(p: CliffPoly) -> dict:
    return {
        "m": p.m,
        "role": p.role,
        "terms": [{"exp": list(exp), "coeff": _coeff_entries(p.m, b)} for exp, b in _grouped(p).items()],
    }


def bipoly_to_json(p: BiPoly) -> dict:
    m = p.m
    return {
        "m": m,
        "roles": list(p.roles),
        "terms": [
            {"exp": list(exp[:m]), "exp_u": list(exp[m:]), "coeff": _coeff_entries(m, b)}
            for exp, b in _grouped(p).items()
        ],
    }


def _parse_m(data: dict) -> int:
    m = data.get("m")
    if not isinstance(m, int) or isinstance(m, bool) or not 1 <= m <= 8:
        raise ParseError(f"'m' must be an integer in [1, 8], got {m!r}")
    return m


def _parse_exp(e: Any, m: int) -> tuple:
    if not isinstance(e, list) or len(e) != m or not all(isinstance(v, int) and v >= 0 for v in e):
        raise ParseError(f"exponent must be a list of {m} nonnegative integers, got {e!r}")
    return tuple(e)


def cliffpoly_from_json(data: Any) -> CliffPoly:
    if not isinstance(data, dict) or "terms" not in data:
        raise ParseError("CliffPoly JSON needs 'm' and 'terms'")
    m = _parse_m(data)
    role = data.get("role", "x")
    if role not in ("x", "u", "z"):
        raise ParseError(f"unknown role {role!r}")
    flat: dict = {}
    for t in data["terms"]:
        if not isinstance(t, dict):
            raise ParseError(f"bad term {t!r}")
        exp = _parse_exp(t.get("exp"), m)
        for mask, c in _parse_blades(t.get("coeff", []), m).items():
            _add_into(flat, (exp, mask), c)
    return CliffPoly._raw(m, (role,), flat)


def bipoly_from_json(data: Any) -> BiPoly:
    if not isinstance(data, dict) or "terms" not in data:
        raise ParseError("BiPoly JSON needs 'm' and 'terms'")
    m = _parse_m(data)
    roles = tuple(data.get("roles", ("x", "u")))
    flat: dict = {}
    for t in data["terms"]:
        exp = _parse_exp(t.get("exp"), m) + _parse_exp(t.get("exp_u"), m)
        for mask, c in _parse_blades(t.get("coeff", []), m).items():
            _add_into(flat, (exp, mask), c)
    try:
        return BiPoly._raw(m, BiPoly(m, roles).roles, flat)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def section_to_json(g: GaussianSection) -> dict:
    return {"c": rational_str(g.c), "poly": cliffpoly_to_json(g.poly)}


def section_from_json(data: Any) -> GaussianSection:
    if not isinstance(data, dict) or "c" not in data or "poly" not in data:
        raise ParseError("GaussianSection JSON needs 'c' and 'poly'")
    c = parse_rational(data["c"])
    if c <= 0:
        raise ParseError("Gaussian weight c must be positive")
    return GaussianSection(cliffpoly_from_json(data["poly"]), c)


def fischer_parts_to_json(fp: FischerParts) -> dict:
    return {"k": fp.k, "parts": [cliffpoly_to_json(p) for p in fp.parts]}


def hermite_to_json(h: HermiteCoeffs) -> dict:
    return {"s": h.s, "k": h.k, "m": h.m, "coeffs": [rational_str(c) for c in h.coeffs]}


def zonal_table_to_json(t: ZonalTable) -> dict:
    return {
        "m": t.m,
        "K": t.K,
        "route": t.route,
        "entries": [
            {"k": k, "s": s, "value": bipoly_to_json(v)} for (k, s), v in sorted(t.entries.items())
        ],
    }


def zonal_table_from_json(data: Any) -> ZonalTable:
    try:
        entries = {(e["k"], e["s"]): bipoly_from_json(e["value"]) for e in data["entries"]}
        return ZonalTable(_parse_m(data), int(data["K"]), str(data["route"]), entries)
    except (KeyError, TypeError) as exc:
        raise ParseError(f"bad zonal table JSON: {exc}") from exc


def dumps(obj: Any) -> str:
    """Canonical text: sorted keys, fixed separators, trailing newline."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def to_json(value: Any) -> Any:
    """Best-effort conversion of library values for reports."""
    if isinstance(value, MultiVector):
        return multivector_to_json(value)
    if isinstance(value, CliffPoly):
        return cliffpoly_to_json(value)
    if isinstance(value, BiPoly):
        return bipoly_to_json(value)
    if isinstance(value, GaussianSection):
        return section_to_json(value)
    if isinstance(value, FischerParts):
        return fischer_parts_to_json(value)
    if isinstance(value, HermiteCoeffs):
        return hermite_to_json(value)
    if isinstance(value, Fraction):
        return rational_str(value)
    if isinstance(value, CRational):
        return {"re": rational_str(value.re), "im": rational_str(value.im)}
    if isinstance(value, (list, tuple)):
        return [to_json(v) for v in value]
    if isinstance(value, dict):
        return {str(k): to_json(v) for k, v in value.items()}
    return value
