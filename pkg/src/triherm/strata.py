"""Constructive stratification of V_F into 0, semistable points, S1 and S2.

Every unstable point comes with a witness ``g`` such that ``g x`` lies in
``Y1^ss`` (label S1) or ``Y2^ss`` (label S2).

Normalization works with the slot-one form ``B(x) v1^2 + A(x) v1 v2 + C(x) v2^2``,
whose coefficients lie in ``A`` and whose image under ``s3`` is ``F_x``.  Its
double root lies in ``P^1(A)``, so the normalizing element is taken in
``GL(2, A)``.  The double root of ``F_x`` itself is generally only defined over
``s3(A)``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .cubealg import AlgebraElement, CubicAlgebra, ResolventElement
from .errors import DescentFailure, InvariantViolation, IrrationalRoot, NonUnit, SplitAlgebra
from .invariant import QuadForm, discriminant_fast, quad_form, slot_one_form
from .space import GroupElement, Point, act_fast, act_n, act_tau, tau, unipotent


class Label(str, enum.Enum):
    SEMISTABLE = "SemiStable"
    S1 = "S1"
    S2 = "S2"
    ZERO = "Zero"

    @property
    def exit_code(self) -> int:
        return {"SemiStable": 0, "S1": 1, "S2": 2, "Zero": 3}[self.value]

    @property
    def code(self) -> int:
        # compact encoding for label tables
        return self.exit_code


LABELS_BY_CODE = {lab.code: lab for lab in Label}


@dataclass(frozen=True)
class ProjPoint:
    """A point of P^1 with coordinates in ``A``, scaled so the first nonzero one is 1."""

    r1: AlgebraElement
    r2: AlgebraElement

    @classmethod
    def canonical(cls, r1: AlgebraElement, r2: AlgebraElement) -> ProjPoint:
        if not r1.is_zero():
            inv = r1.inverse()
            return cls(r1.alg.one, r2 * inv)
        if r2.is_zero():
            raise ValueError("(0 : 0) is not a projective point")
        return cls(r1.alg.zero, r1.alg.one)


@dataclass
class StratumReport:
    label: Label
    witness: GroupElement
    normalized: Point
    transcript: list = field(default_factory=list)


def _as_A(c) -> AlgebraElement:
    if isinstance(c, ResolventElement):
        try:
            return c.descend_to_A()
        except DescentFailure as exc:
            raise IrrationalRoot(f"coefficient {c} does not lie in A") from exc
    return c


def double_root(q: QuadForm) -> ProjPoint | None:
    """The double root of a form with vanishing discriminant; ``None`` for the zero form."""
    a, b, c = _as_A(q.a), _as_A(q.b), _as_A(q.c)
    alg = a.alg
    if a.is_zero() and b.is_zero() and c.is_zero():
        return None
    if not (b * b - a * c.scale(4)).is_zero():
        raise ValueError("form has nonzero discriminant")
    if a.is_zero():
        return ProjPoint(alg.one, alg.zero)
    try:
        r = -(b * a.scale(2).inverse())
    except NonUnit as exc:
        raise IrrationalRoot(f"leading coefficient {a} is not invertible") from exc
    return ProjPoint.canonical(r, alg.one)


def _root_normalizer(alg: CubicAlgebra, root: ProjPoint) -> GroupElement:
    """``h`` in GL(2, A) with ``h (r2, -r1)^T`` proportional to ``(0, 1)^T``."""
    one, zero = alg.one, alg.zero
    if root.r2.is_zero():
        return GroupElement.identity(alg)
    if root.r1.is_zero():
        return tau(alg)
    s = root.r2
    return GroupElement(alg.field.one, ((one, s), (s.inverse(), zero)))


def _normal_form_ok(y: Point) -> bool:
    q1 = slot_one_form(y)
    if not (q1.a.is_zero() and q1.b.is_zero()):
        return False
    q = quad_form(y)
    return q.a.is_zero() and q.b.is_zero()


def _check(cond: bool, message: str):
    if not cond:
        raise InvariantViolation(message)


def _require_field(alg: CubicAlgebra):
    ok = getattr(alg, "_irreducible_cache", None)
    if ok is None:
        ok = alg.is_irreducible()
        alg._irreducible_cache = ok
    if not ok:
        raise SplitAlgebra(f"{alg.poly_str()} is reducible; classification needs a field")


def classify(x: Point) -> StratumReport:
    alg = x.alg
    _require_field(alg)
    ident = GroupElement.identity(alg)
    if x.is_zero():
        return StratumReport(Label.ZERO, ident, x, ["x = 0"])
    if discriminant_fast(x):
        return StratumReport(Label.SEMISTABLE, ident, x, ["discriminant nonzero"])

    transcript = ["discriminant zero"]
    q1 = slot_one_form(x)
    root = double_root(q1)
    if root is None:
        h = ident
        transcript.append("F_x identically zero; no normalization")
        xn = x
    else:
        base = _root_normalizer(alg, root)
        candidates = [base, base.inverse().transpose(), base.transpose(), base.inverse()]
        for h in candidates:
            xn = act_fast(h, x)
            if _normal_form_ok(xn):
                break
        else:
            raise InvariantViolation(f"no normalizer found for root {root}")
        transcript.append(f"double root ({root.r1} : {root.r2}); moved to v2^2 by {h}")

    if not xn.x111:
        _check(xn.x211.is_zero(), "x111 = 0 must force x211 = 0")
        if not xn.x122.is_zero():
            transcript.append("lands in Y1^ss")
            return StratumReport(Label.S1, h, xn, transcript)
        _check(bool(xn.x222), "a nonzero point of Y1 with x122 = 0 must have x222 != 0")
        transcript.append("lands in Y2^ss")
        return StratumReport(Label.S2, h, xn, transcript)

    u = -(xn.x211 / xn.x111)
    y = act_n(u, xn)
    _check(y.x211.is_zero(), "n(u) must kill x211")
    _check(y.x122.is_zero(), "x122 is forced to vanish")
    _check(not y.x222, "x222 is forced to vanish")
    normalized = act_tau(y)
    witness = tau(alg) * unipotent(u) * h
    transcript.append(f"n({u}) clears x211; tau moves to Y2^ss")
    return StratumReport(Label.S2, witness, normalized, transcript)


def stratum_membership(x: Point, label: str) -> bool:
    """Coordinate predicates for Y1, Y1ss, Z1, Z1ss, Y2 (= Z2), Y2ss (= Z2ss)."""
    a = not x.x111 and x.x211.is_zero()
    if label == "Y1":
        return a
    if label == "Y1ss":
        return a and not x.x122.is_zero()
    if label == "Z1":
        return a and not x.x222
    if label == "Z1ss":
        return a and not x.x222 and not x.x122.is_zero()
    if label in ("Y2", "Z2"):
        return a and x.x122.is_zero()
    if label in ("Y2ss", "Z2ss"):
        return a and x.x122.is_zero() and bool(x.x222)
    raise ValueError(f"unknown stratum {label!r}")


def normalized_in_stratum(report: StratumReport) -> bool:
    if report.label is Label.S1:
        return stratum_membership(report.normalized, "Y1ss")
    if report.label is Label.S2:
        return stratum_membership(report.normalized, "Y2ss")
    return True
