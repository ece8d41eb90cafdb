"""The pencil M_x(v), its determinant F_x(v), the relative invariant and the pairing."""

from __future__ import annotations

from dataclasses import dataclass

from .cubealg import CubicAlgebra, other_conjugates_product
from .errors import DescentFailure, InvariantViolation
from .space import GroupElement, Point, lift, tau


@dataclass(frozen=True)
class QuadForm:
    """``a v1^2 + b v1 v2 + c v2^2``; coefficients in ``B`` (or ``A`` for the slot-one form)."""

    a: object
    b: object
    c: object

    def discriminant(self):
        return self.b * self.b - self.a * self.c * 4

    def is_zero(self) -> bool:
        return not (self.a or self.b or self.c)

    def __call__(self, v1, v2):
        return self.a * v1 * v1 + self.b * v1 * v2 + self.c * v2 * v2


def pencil(x: Point):
    """``(X1, X2)`` with ``M_x(v) = v1 X1 + v2 X2`` and ``(X_k)_ij = x_ijk``."""
    h = lift(x)
    return tuple(
        ((h[1, 1, k], h[1, 2, k]), (h[2, 1, k], h[2, 2, k])) for k in (1, 2)
    )


def quad_form(x: Point) -> QuadForm:
    alg = x.alg
    e = alg.embed
    x211, x122 = x.x211, x.x122
    s2_211, s3_211 = e(2, x211), e(3, x211)
    s2_122, s3_122 = e(2, x122), e(3, x122)
    a = s3_122 * x.x111 - s2_211 * x211
    b = s3_211 * s3_122 - s2_211 * s2_122 + alg.lift(x.x111 * x.x222) - alg.lift(x211 * x122)
    c = s3_211 * x.x222 - s2_122 * x122
    return QuadForm(a, b, c)


def discriminant(x: Point):
    """Relative invariant: discriminant of ``F_x`` computed in ``B`` and descended."""
    try:
        return quad_form(x).discriminant().descend_to_base()
    except DescentFailure as exc:
        raise InvariantViolation(f"discriminant did not descend: {exc}") from exc


def middle_affine(x: Point):
    """``(A(x), B(x))``: the middle coefficient of ``F_{n(u)x}`` is ``s3(A + 2 B u)``."""
    x211, x122 = x.x211, x.x122
    p = x211 * x122
    a_x = p.scale(2) - p.trace() + x.x111 * x.x222
    b_x = x122.scale(x.x111) - other_conjugates_product(x211)
    return a_x, b_x


def slot_one_form(x: Point) -> QuadForm:
    """Determinant of the pencil along the first tensor slot; all coefficients lie in ``A``.

    Its coefficients are ``(B(x), A(x), C(x))`` and its image under ``s3`` is ``F_x``.
    """
    a_x, b_x = middle_affine(x)
    c_x = x.x211.scale(x.x222) - other_conjugates_product(x.x122)
    return QuadForm(b_x, a_x, c_x)


def discriminant_fast(x: Point):
    """Same value as :func:`discriminant`, via the slot-one form over ``A``."""
    d = slot_one_form(x).discriminant()
    if not d.is_scalar():
        raise InvariantViolation(f"slot-one discriminant {d} is not a scalar")
    return d.c[0]


def covariance_factor(g: GroupElement):
    t1 = g.t1
    chi = g.det().norm()
    return t1 * t1 * t1 * t1 * chi * chi


def pair_prime(x: Point, y: Point):
    return (
        x.x111 * y.x111
        + (x.x211 * y.x211 + x.x122 * y.x122).trace()
        + x.x222 * y.x222
    )


def pair(x: Point, y: Point):
    """``[x, y] = [x, tau y]'``."""
    return (
        x.x111 * y.x222
        + (x.x211 * y.x122 + x.x122 * y.x211).trace()
        + x.x222 * y.x111
    )


def basis(alg: CubicAlgebra):
    """The eight coordinate points, ordered like :meth:`Point.coords`."""
    out = []
    for i in range(8):
        coords = [0] * 8
        coords[i] = 1
        out.append(Point.from_coords(alg, coords))
    return out


def gram_matrix(alg: CubicAlgebra, twisted: bool = False):
    """Gram matrix of ``[.,.]'`` (or ``[.,.]`` if ``twisted``) in the coordinate basis."""
    form = pair if twisted else pair_prime
    pts = basis(alg)
    return [[form(p, q) for q in pts] for p in pts]


def dual_involution(g: GroupElement) -> GroupElement:
    """``g' = (t1^{-1}, tau  transpose(g2)^{-1} tau)``."""
    t = tau(g.alg)
    inv = g.inverse()
    return GroupElement(inv.t1, (t * inv.transpose() * t).g2)
