"""Exact arithmetic in a cubic etale algebra and its quadratic resolvent.

``A = F[t]/(f)`` with ``f = t^3 + c2 t^2 + c1 t + c0`` and
``B = A[delta]/(delta^2 - D)``, ``D = disc(f)``.  The three embeddings of ``A``
into ``B`` send ``theta`` to ``theta`` and to
``((e1 - theta) +- delta / f'(theta)) / 2``.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Iterator, Sequence

from .errors import BadCharacteristic, DescentFailure, NonUnit, ZeroDiscriminant
from .scalars import QQ, ModInt, PrimeField, RationalField, Scalar


def cubic_discriminant(c0, c1, c2):
    e1, e2, e3 = -c2, c1, -c0
    return (
        e1 * e1 * e2 * e2
        - 4 * e2 * e2 * e2
        - 4 * e1 * e1 * e1 * e3
        + 18 * e1 * e2 * e3
        - 27 * e3 * e3
    )


class CubicAlgebra:
    """Descriptor for ``A = F[t]/(f)`` together with its resolvent ``B``."""

    def __init__(self, field, coeffs: Sequence):
        if len(coeffs) != 3:
            raise ValueError("expected (c0, c1, c2) for t^3 + c2 t^2 + c1 t + c0")
        if field.characteristic == 2:
            raise BadCharacteristic("characteristic 2 is not supported")
        raw = [Fraction(c) if not isinstance(c, ModInt) else c for c in coeffs]
        self.field = field
        c0, c1, c2 = (field(c) for c in raw)
        self.coeffs = (c0, c1, c2)
        self.e1, self.e2, self.e3 = -c2, c1, -c0
        self.D = cubic_discriminant(c0, c1, c2)
        if not self.D:
            if isinstance(field, PrimeField) and all(isinstance(c, Fraction) for c in raw):
                if cubic_discriminant(*raw) != 0:
                    raise BadCharacteristic(
                        f"characteristic {field.p} divides the discriminant {cubic_discriminant(*raw)}"
                    )
            raise ZeroDiscriminant(f"f = {self.poly_str()} has a repeated root")

        zero, one = field.zero, field.one
        self._zero = zero
        self._one = one
        # theta^3 and theta^4 reduced mod f
        self._r3 = (-c0, -c1, -c2)
        self._r4 = (c2 * c0, -c0 + c2 * c1, -c1 + c2 * c2)
        self._tr = (3 * one, self.e1, self.e1 * self.e1 - 2 * self.e2)
        self._inv2 = one / 2

        theta = AlgebraElement(self, (zero, one, zero))
        fprime = AlgebraElement(self, (c1, 2 * c2, 3 * one))
        fprime_inv = fprime.inverse()
        half = self._inv2
        base = (self.scalar(self.e1) - theta).scale(half)
        delta_part = fprime_inv.scale(half)
        t1 = ResolventElement(self, theta, self.zero)
        t2 = ResolventElement(self, base, delta_part)
        t3 = ResolventElement(self, base, -delta_part)
        # (theta_i, theta_i^2) for i = 1, 2, 3
        self._roots = {i: (t, t * t) for i, t in ((1, t1), (2, t2), (3, t3))}

    # constructors -------------------------------------------------------

    def element(self, coeffs) -> AlgebraElement:
        coeffs = list(coeffs)
        if len(coeffs) > 3:
            raise ValueError("algebra elements have three coordinates")
        coeffs += [0] * (3 - len(coeffs))
        return AlgebraElement(self, tuple(self.field(c) for c in coeffs))

    def scalar(self, c) -> AlgebraElement:
        return AlgebraElement(self, (self.field(c), self._zero, self._zero))

    @property
    def zero(self) -> AlgebraElement:
        return AlgebraElement(self, (self._zero,) * 3)

    @property
    def one(self) -> AlgebraElement:
        return AlgebraElement(self, (self._one, self._zero, self._zero))

    @property
    def theta(self) -> AlgebraElement:
        return AlgebraElement(self, (self._zero, self._one, self._zero))

    @property
    def delta(self) -> ResolventElement:
        return ResolventElement(self, self.zero, self.one)

    def lift(self, a) -> ResolventElement:
        """View a scalar or an element of A inside B."""
        if isinstance(a, ResolventElement):
            return a
        if not isinstance(a, AlgebraElement):
            a = self.scalar(a)
        return ResolventElement(self, a, self.zero)

    def elements(self) -> Iterator[AlgebraElement]:
        """All q^3 elements, lexicographic in (a0, a1, a2). Finite fields only."""
        if not isinstance(self.field, PrimeField):
            raise TypeError("only finite algebras can be enumerated")
        els = list(self.field.elements())
        for a0 in els:
            for a1 in els:
                for a2 in els:
                    yield AlgebraElement(self, (a0, a1, a2))

    def random_element(self, rng: random.Random, height: int = 10) -> AlgebraElement:
        return AlgebraElement(self, tuple(self.field.random(rng, height) for _ in range(3)))

    def random_unit(self, rng: random.Random, height: int = 10) -> AlgebraElement:
        while True:
            a = self.random_element(rng, height)
            if a.norm():
                return a

    # structure ----------------------------------------------------------

    @property
    def base_tag(self):
        return self.field.tag

    def is_irreducible(self) -> bool:
        c0, c1, c2 = self.coeffs
        if isinstance(self.field, PrimeField):
            from . import _polyp

            p = self.field.p
            return not _polyp.roots([c0.v, c1.v, c2.v, 1], p)
        import sympy

        t = sympy.Symbol("t")
        poly = sympy.Poly(t**3 + sympy.Rational(c2) * t**2 + sympy.Rational(c1) * t + sympy.Rational(c0), t, domain="QQ")
        return poly.is_irreducible

    def embed(self, i: int, a: AlgebraElement) -> ResolventElement:
        """Image of ``a`` under the i-th embedding sigma_i: A -> B."""
        if i == 1:
            return ResolventElement(self, a, self.zero)
        t, t2 = self._roots[i]
        a0, a1, a2 = a.c
        p = t.p.scale(a1) + t2.p.scale(a2)
        p = AlgebraElement(self, (p.c[0] + a0, p.c[1], p.c[2]))
        q = t.q.scale(a1) + t2.q.scale(a2)
        return ResolventElement(self, p, q)

    def root(self, i: int) -> ResolventElement:
        return self._roots[i][0]

    def poly_str(self) -> str:
        c0, c1, c2 = self.coeffs
        return f"t^3 + ({c2})t^2 + ({c1})t + ({c0})"

    def __eq__(self, other):
        return isinstance(other, CubicAlgebra) and self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __repr__(self):
        return f"CubicAlgebra({self.field!r}, {self.poly_str()})"


def make_algebra(coeffs: Sequence, field=QQ) -> CubicAlgebra:
    """Build the descriptor for ``t^3 + c2 t^2 + c1 t + c0``; ``coeffs = (c0, c1, c2)``."""
    return CubicAlgebra(field, coeffs)


class AlgebraElement:
    """``a0 + a1 theta + a2 theta^2`` in ``A``. Immutable."""

    __slots__ = ("alg", "c")

    def __init__(self, alg: CubicAlgebra, c: tuple):
        self.alg = alg
        self.c = c

    def _other(self, other) -> AlgebraElement | None:
        if isinstance(other, AlgebraElement):
            return other
        if isinstance(other, (int, Fraction, ModInt)):
            return self.alg.scalar(other)
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        a, b = self.c, o.c
        return AlgebraElement(self.alg, (a[0] + b[0], a[1] + b[1], a[2] + b[2]))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        a, b = self.c, o.c
        return AlgebraElement(self.alg, (a[0] - b[0], a[1] - b[1], a[2] - b[2]))

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        a = self.c
        return AlgebraElement(self.alg, (-a[0], -a[1], -a[2]))

    def scale(self, s) -> AlgebraElement:
        a = self.c
        return AlgebraElement(self.alg, (a[0] * s, a[1] * s, a[2] * s))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, ModInt)):
            return self.scale(other)
        if isinstance(other, ResolventElement):
            return NotImplemented
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        a0, a1, a2 = self.c
        b0, b1, b2 = other.c
        d3 = a1 * b2 + a2 * b1
        d4 = a2 * b2
        r3 = self.alg._r3
        r4 = self.alg._r4
        return AlgebraElement(
            self.alg,
            (
                a0 * b0 + d3 * r3[0] + d4 * r4[0],
                a0 * b1 + a1 * b0 + d3 * r3[1] + d4 * r4[1],
                a0 * b2 + a1 * b1 + a2 * b0 + d3 * r3[2] + d4 * r4[2],
            ),
        )

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, ModInt)):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, ModInt)):
            return self.scale(self.alg.field.one / other)
        return self * other.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = self.alg.one
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def times_theta(self) -> AlgebraElement:
        a0, a1, a2 = self.c
        r3 = self.alg._r3
        return AlgebraElement(self.alg, (a2 * r3[0], a0 + a2 * r3[1], a1 + a2 * r3[2]))

    def matrix_columns(self):
        """Coordinates of ``a``, ``a theta``, ``a theta^2`` (the multiplication matrix)."""
        at = self.times_theta()
        return self.c, at.c, at.times_theta().c

    def trace(self):
        t = self.alg._tr
        a = self.c
        return t[0] * a[0] + t[1] * a[1] + t[2] * a[2]

    def norm(self):
        (m00, m10, m20), (m01, m11, m21), (m02, m12, m22) = self.matrix_columns()
        return (
            m00 * (m11 * m22 - m12 * m21)
            - m01 * (m10 * m22 - m12 * m20)
            + m02 * (m10 * m21 - m11 * m20)
        )

    def s2(self):
        tr = self.trace()
        return (tr * tr - (self * self).trace()) * self.alg._inv2

    def inverse(self) -> AlgebraElement:
        (m00, m10, m20), (m01, m11, m21), (m02, m12, m22) = self.matrix_columns()
        det = m00 * (m11 * m22 - m12 * m21) - m01 * (m10 * m22 - m12 * m20) + m02 * (m10 * m21 - m11 * m20)
        if not det:
            raise NonUnit(f"{self} is not a unit (norm 0)")
        inv = self.alg.field.one / det
        # first column of adj(M) / det
        return AlgebraElement(
            self.alg,
            (
                (m11 * m22 - m12 * m21) * inv,
                -(m10 * m22 - m12 * m20) * inv,
                (m10 * m21 - m11 * m20) * inv,
            ),
        )

    def is_zero(self) -> bool:
        a = self.c
        return not (a[0] or a[1] or a[2])

    def is_scalar(self) -> bool:
        return not (self.c[1] or self.c[2])

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, AlgebraElement):
            return self.c == other.c
        if isinstance(other, (int, Fraction, ModInt)):
            return self.c[0] == other and not self.c[1] and not self.c[2]
        return NotImplemented

    def __hash__(self):
        return hash(self.c)

    def __repr__(self):
        return f"AlgebraElement({', '.join(str(x) for x in self.c)})"


class ResolventElement:
    """``p + q delta`` in ``B`` with ``p, q`` in ``A`` and ``delta^2 = D``."""

    __slots__ = ("alg", "p", "q")

    def __init__(self, alg: CubicAlgebra, p: AlgebraElement, q: AlgebraElement):
        self.alg = alg
        self.p = p
        self.q = q

    def _other(self, other):
        if isinstance(other, ResolventElement):
            return other
        if isinstance(other, (AlgebraElement, int, Fraction, ModInt)):
            return self.alg.lift(other)
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return ResolventElement(self.alg, self.p + o.p, self.q + o.q)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return ResolventElement(self.alg, self.p - o.p, self.q - o.q)

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return ResolventElement(self.alg, -self.p, -self.q)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, ModInt)):
            return ResolventElement(self.alg, self.p.scale(other), self.q.scale(other))
        if isinstance(other, AlgebraElement):
            return ResolventElement(self.alg, self.p * other, self.q * other)
        if not isinstance(other, ResolventElement):
            return NotImplemented
        pp = self.p * other.p
        qq = self.q * other.q
        cross = (self.p + self.q) * (other.p + other.q) - pp - qq
        return ResolventElement(self.alg, pp + qq.scale(self.alg.D), cross)

    __rmul__ = __mul__

    def conj_nu(self) -> ResolventElement:
        return ResolventElement(self.alg, self.p, -self.q)

    def is_zero(self) -> bool:
        return self.p.is_zero() and self.q.is_zero()

    def __bool__(self):
        return not self.is_zero()

    def descend_to_A(self) -> AlgebraElement:
        if not self.q.is_zero():
            raise DescentFailure(f"delta-component {self.q} is nonzero", self.q)
        return self.p

    def descend_to_base(self) -> Scalar:
        a = self.descend_to_A()
        if a.c[1] or a.c[2]:
            raise DescentFailure(f"theta-components of {a} are nonzero", a)
        return a.c[0]

    def __eq__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self.p == o.p and self.q == o.q

    def __hash__(self):
        return hash((self.p.c, self.q.c))

    def __repr__(self):
        return f"ResolventElement({self.p!r} + {self.q!r}*delta)"


# free-function surface -----------------------------------------------------


def trace(a: AlgebraElement):
    return a.trace()


def norm(a: AlgebraElement):
    return a.norm()


def s2(a: AlgebraElement):
    return a.s2()


def invert(a: AlgebraElement) -> AlgebraElement:
    return a.inverse()


def embed(i: int, a: AlgebraElement) -> ResolventElement:
    return a.alg.embed(i, a)


def conj_nu(b: ResolventElement) -> ResolventElement:
    return b.conj_nu()


def descend_to_base(b: ResolventElement) -> Scalar:
    return b.descend_to_base()


def descend_to_A(b: ResolventElement) -> AlgebraElement:
    return b.descend_to_A()


def other_conjugates_product(u: AlgebraElement) -> AlgebraElement:
    """``sigma_2(u) sigma_3(u)`` computed inside ``A`` as ``u^2 - tr(u) u + s2(u)``."""
    tr = u.trace()
    sq = u * u
    s = (tr * tr - sq.trace()) * u.alg._inv2
    r = sq - u.scale(tr)
    return AlgebraElement(u.alg, (r.c[0] + s, r.c[1], r.c[2]))


def conjugate_cross(u: AlgebraElement, w: AlgebraElement) -> AlgebraElement:
    """``sigma_2(u) sigma_3(w) + sigma_3(u) sigma_2(w)`` computed inside ``A``."""
    uw = u * w
    tu, tw = u.trace(), w.trace()
    r = uw + uw - u.scale(tw) - w.scale(tu)
    return AlgebraElement(u.alg, (r.c[0] + tu * tw - uw.trace(), r.c[1], r.c[2]))


def parse_field(base) -> RationalField | PrimeField:
    if base in ("Q", "QQ", None):
        return QQ
    if isinstance(base, dict) and "Fp" in base:
        return PrimeField(int(base["Fp"]))
    if isinstance(base, int):
        return PrimeField(base)
    raise ValueError(f"unknown base field {base!r}")
