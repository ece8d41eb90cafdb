"""JSON wire formats for fields, points and group elements.

Scalars are exact strings: ``"num/den"`` over Q, the residue ``"r"`` over F_p.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .cubealg import CubicAlgebra, make_algebra, parse_field
from .scalars import PrimeField
from .space import GroupElement, Point


def scalar_to_str(alg: CubicAlgebra, x) -> str:
    return alg.field.format(x)


def parse_coeffs(text: str):
    """``"c0,c1,c2"`` -> three Fractions."""
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 3:
        raise ValueError(f"expected three comma-separated coefficients, got {text!r}")
    return [Fraction(p) for p in parts]


def field_from_config(cfg: dict) -> CubicAlgebra:
    if "f" not in cfg:
        raise ValueError("field config needs an 'f' entry")
    field = parse_field(cfg.get("base", "Q"))
    coeffs = [Fraction(str(c)) for c in cfg["f"]]
    if len(coeffs) != 3:
        raise ValueError("'f' must list [c0, c1, c2]")
    return make_algebra(coeffs, field)


def field_to_config(alg: CubicAlgebra) -> dict:
    base = "Q" if not isinstance(alg.field, PrimeField) else {"Fp": alg.field.p}
    return {"base": base, "f": [scalar_to_str(alg, c) for c in alg.coeffs]}


def _algebra_element(alg: CubicAlgebra, raw):
    if isinstance(raw, (list, tuple)):
        if len(raw) != 3:
            raise ValueError(f"algebra element needs three coordinates, got {raw!r}")
        return alg.element([Fraction(str(c)) for c in raw])
    return alg.scalar(Fraction(str(raw)))


def point_from_json(alg: CubicAlgebra, raw) -> Point:
    if isinstance(raw, str):
        raw = json.loads(raw)
    missing = {"x111", "x211", "x122", "x222"} - set(raw)
    if missing:
        raise ValueError(f"point is missing {sorted(missing)}")
    return Point(
        alg.field(Fraction(str(raw["x111"]))),
        _algebra_element(alg, raw["x211"]),
        _algebra_element(alg, raw["x122"]),
        alg.field(Fraction(str(raw["x222"]))),
    )


def point_to_json(x: Point) -> dict:
    alg = x.alg
    return {
        "x111": scalar_to_str(alg, x.x111),
        "x211": [scalar_to_str(alg, c) for c in x.x211.c],
        "x122": [scalar_to_str(alg, c) for c in x.x122.c],
        "x222": scalar_to_str(alg, x.x222),
    }


def group_from_json(alg: CubicAlgebra, raw) -> GroupElement:
    if isinstance(raw, str):
        raw = json.loads(raw)
    rows = raw["g2"]
    if len(rows) != 2 or any(len(r) != 2 for r in rows):
        raise ValueError("g2 must be a 2x2 matrix")
    g2 = tuple(tuple(_algebra_element(alg, e) for e in row) for row in rows)
    g = GroupElement(alg.field(Fraction(str(raw.get("t1", "1")))), g2)
    if not g.is_invertible():
        raise ValueError("group element is not invertible")
    return g


def group_to_json(g: GroupElement) -> dict:
    alg = g.alg
    return {
        "t1": scalar_to_str(alg, g.t1),
        "g2": [[[scalar_to_str(alg, c) for c in e.c] for e in row] for row in g.g2],
    }


def quadform_to_json(alg: CubicAlgebra, q) -> dict:
    """Coefficients in B as ``{"p": [...], "q": [...]}`` for ``p + q delta``."""

    def enc(b):
        return {"p": [scalar_to_str(alg, c) for c in b.p.c], "q": [scalar_to_str(alg, c) for c in b.q.c]}

    return {"a": enc(q.a), "b": enc(q.b), "c": enc(q.c)}
