"""The eight-dimensional space V of binary tri-Hermitian forms and the action of G.

A point is stored by its free coordinates ``(x111, x211, x122, x222)`` with
``x111, x222`` in the base field and ``x211, x122`` in ``A``.  The remaining
four hypermatrix entries are the conjugates dictated by descent:

    x121 = s2(x211), x112 = s3(x211), x212 = s2(x122), x221 = s3(x122)

``G = GL(1, F) x GL(2, A)`` acts by ``t1 * s1(g) (x) s2(g) (x) s3(g)`` with
``s_i(g)`` acting on tensor slot ``i``.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterator

from .cubealg import (
    AlgebraElement,
    CubicAlgebra,
    ResolventElement,
    conjugate_cross,
    other_conjugates_product,
)
from .errors import DescentFailure, InvariantViolation, NonUnit

INDICES = list(itertools.product((1, 2), repeat=3))


@dataclass(frozen=True)
class Point:
    x111: object
    x211: AlgebraElement
    x122: AlgebraElement
    x222: object

    @property
    def alg(self) -> CubicAlgebra:
        return self.x211.alg

    @classmethod
    def make(cls, alg: CubicAlgebra, x111=0, x211=0, x122=0, x222=0) -> Point:
        def a_elt(v):
            if isinstance(v, AlgebraElement):
                return v
            if isinstance(v, (list, tuple)):
                return alg.element(v)
            return alg.scalar(v)

        return cls(alg.field(x111), a_elt(x211), a_elt(x122), alg.field(x222))

    @classmethod
    def zero(cls, alg: CubicAlgebra) -> Point:
        return cls.make(alg)

    @classmethod
    def from_coords(cls, alg: CubicAlgebra, coords) -> Point:
        """From the 8 base-field coordinates ``(x111, x211[0..2], x122[0..2], x222)``."""
        c = [alg.field(v) for v in coords]
        return cls(c[0], alg.element(c[1:4]), alg.element(c[4:7]), c[7])

    def coords(self) -> tuple:
        return (self.x111, *self.x211.c, *self.x122.c, self.x222)

    def is_zero(self) -> bool:
        return not self.x111 and self.x211.is_zero() and self.x122.is_zero() and not self.x222

    def __add__(self, other: Point) -> Point:
        return Point(self.x111 + other.x111, self.x211 + other.x211, self.x122 + other.x122, self.x222 + other.x222)

    def __sub__(self, other: Point) -> Point:
        return Point(self.x111 - other.x111, self.x211 - other.x211, self.x122 - other.x122, self.x222 - other.x222)

    def __neg__(self) -> Point:
        return Point(-self.x111, -self.x211, -self.x122, -self.x222)

    def scale(self, s) -> Point:
        return Point(self.x111 * s, self.x211.scale(s), self.x122.scale(s), self.x222 * s)

    def __hash__(self):
        return hash(self.coords())

    def __repr__(self):
        return f"Point({self.x111}, {list(map(str, self.x211.c))}, {list(map(str, self.x122.c))}, {self.x222})"


class HyperMatrix:
    """Eight entries ``x_ijk`` of ``B``, indexed by ``(i, j, k)`` in ``{1, 2}^3``."""

    __slots__ = ("alg", "entries")

    def __init__(self, alg: CubicAlgebra, entries: dict):
        self.alg = alg
        self.entries = entries

    def __getitem__(self, ijk) -> ResolventElement:
        return self.entries[ijk]

    def replace(self, ijk, value) -> HyperMatrix:
        entries = dict(self.entries)
        entries[ijk] = value
        return HyperMatrix(self.alg, entries)

    def __eq__(self, other):
        return isinstance(other, HyperMatrix) and all(self[i] == other[i] for i in INDICES)

    @classmethod
    def zero(cls, alg: CubicAlgebra) -> HyperMatrix:
        return cls(alg, {ijk: alg.lift(0) for ijk in INDICES})


def lift(x: Point) -> HyperMatrix:
    alg = x.alg
    e = alg.embed
    return HyperMatrix(
        alg,
        {
            (1, 1, 1): alg.lift(x.x111),
            (2, 1, 1): e(1, x.x211),
            (1, 2, 1): e(2, x.x211),
            (1, 1, 2): e(3, x.x211),
            (1, 2, 2): e(1, x.x122),
            (2, 1, 2): e(2, x.x122),
            (2, 2, 1): e(3, x.x122),
            (2, 2, 2): alg.lift(x.x222),
        },
    )


def descend(h: HyperMatrix) -> Point:
    alg = h.alg
    try:
        x111 = h[1, 1, 1].descend_to_base()
        x222 = h[2, 2, 2].descend_to_base()
    except DescentFailure as exc:
        raise DescentFailure(f"x111/x222 not in the base field: {exc}", exc.component) from None
    try:
        x211 = h[2, 1, 1].descend_to_A()
        x122 = h[1, 2, 2].descend_to_A()
    except DescentFailure as exc:
        raise DescentFailure(f"x211/x122 not in A: {exc}", exc.component) from None
    checks = (
        ("x121 = s2(x211)", (1, 2, 1), 2, x211),
        ("x112 = s3(x211)", (1, 1, 2), 3, x211),
        ("x212 = s2(x122)", (2, 1, 2), 2, x122),
        ("x221 = s3(x122)", (2, 2, 1), 3, x122),
    )
    for name, ijk, i, a in checks:
        if h[ijk] != alg.embed(i, a):
            raise DescentFailure(f"descent relation {name} violated", h[ijk] - alg.embed(i, a))
    return Point(x111, x211, x122, x222)


class GroupElement:
    """``(t1, g2)`` with ``t1`` a nonzero scalar and ``g2`` a 2x2 matrix over ``A``."""

    __slots__ = ("t1", "g2")

    def __init__(self, t1, g2):
        self.t1 = t1
        self.g2 = (tuple(g2[0]), tuple(g2[1]))

    @property
    def alg(self) -> CubicAlgebra:
        return self.g2[0][0].alg

    @classmethod
    def identity(cls, alg: CubicAlgebra) -> GroupElement:
        return cls(alg.field.one, ((alg.one, alg.zero), (alg.zero, alg.one)))

    def det(self) -> AlgebraElement:
        (a, b), (c, d) = self.g2
        return a * d - b * c

    def is_invertible(self) -> bool:
        return bool(self.t1) and bool(self.det().norm())

    def __mul__(self, other: GroupElement) -> GroupElement:
        (a, b), (c, d) = self.g2
        (e, f), (g, h) = other.g2
        return GroupElement(
            self.t1 * other.t1,
            ((a * e + b * g, a * f + b * h), (c * e + d * g, c * f + d * h)),
        )

    def inverse(self) -> GroupElement:
        (a, b), (c, d) = self.g2
        det = a * d - b * c
        try:
            inv = det.inverse()
        except NonUnit:
            raise NonUnit("group element is not invertible") from None
        return GroupElement(self.alg.field.one / self.t1, ((d * inv, -b * inv), (-c * inv, a * inv)))

    def transpose(self) -> GroupElement:
        (a, b), (c, d) = self.g2
        return GroupElement(self.t1, ((a, c), (b, d)))

    def __eq__(self, other):
        return isinstance(other, GroupElement) and self.t1 == other.t1 and self.g2 == other.g2

    def __hash__(self):
        return hash((self.t1, self.g2))

    def __repr__(self):
        (a, b), (c, d) = self.g2
        return f"GroupElement(t1={self.t1}, g2=[[{a}, {b}], [{c}, {d}]])"


def diag(alg: CubicAlgebra, t21, t22, t1=1) -> GroupElement:
    """The torus element ``(t1, a(t21, t22))``."""
    t21 = t21 if isinstance(t21, AlgebraElement) else alg.scalar(t21)
    t22 = t22 if isinstance(t22, AlgebraElement) else alg.scalar(t22)
    return GroupElement(alg.field(t1), ((t21, alg.zero), (alg.zero, t22)))


def unipotent(u: AlgebraElement) -> GroupElement:
    """``n(u)``: lower triangular with unit diagonal."""
    alg = u.alg
    return GroupElement(alg.field.one, ((alg.one, alg.zero), (u, alg.one)))


def tau(alg: CubicAlgebra) -> GroupElement:
    return GroupElement(alg.field.one, ((alg.zero, alg.one), (alg.one, alg.zero)))


def scalar(alg: CubicAlgebra, t1) -> GroupElement:
    return GroupElement(alg.field(t1), ((alg.one, alg.zero), (alg.zero, alg.one)))


def _mode_product(entries: dict, slot: int, m) -> dict:
    out = {}
    for ijk in INDICES:
        r = ijk[slot] - 1
        src = list(ijk)
        src[slot] = 1
        s1 = entries[tuple(src)]
        src[slot] = 2
        s2 = entries[tuple(src)]
        out[ijk] = m[r][0] * s1 + m[r][1] * s2
    return out


def act_hyper(g: GroupElement, h: HyperMatrix) -> HyperMatrix:
    """Apply ``t1 * s1(g) (x) s2(g) (x) s3(g)`` to a hypermatrix."""
    alg = h.alg
    entries = h.entries
    for slot in range(3):
        m = [[alg.embed(slot + 1, g.g2[r][c]) for c in range(2)] for r in range(2)]
        entries = _mode_product(entries, slot, m)
    t1 = g.t1
    return HyperMatrix(alg, {ijk: v * t1 for ijk, v in entries.items()})


def act(g: GroupElement, x: Point) -> Point:
    try:
        return descend(act_hyper(g, lift(x)))
    except DescentFailure as exc:
        raise InvariantViolation(f"action left V: {exc}") from exc


def act_n(u: AlgebraElement, x: Point) -> Point:
    """Closed form of ``n(u) x``."""
    y211 = x.x211 + u.scale(x.x111)
    ocp = other_conjugates_product(u)
    y122 = x.x122 + ocp.scale(x.x111) + conjugate_cross(u, x.x211)
    y222 = x.x222 + u.norm() * x.x111 + (ocp * x.x211).trace() + (u * x.x122).trace()
    return Point(x.x111, y211, y122, y222)


def act_diag(t1, t21: AlgebraElement, t22: AlgebraElement, x: Point) -> Point:
    """Closed form of ``(t1, a(t21, t22)) x``."""
    return Point(
        t1 * t21.norm() * x.x111,
        (t22 * other_conjugates_product(t21) * x.x211).scale(t1),
        (t21 * other_conjugates_product(t22) * x.x122).scale(t1),
        t1 * t22.norm() * x.x222,
    )


def act_tau(x: Point) -> Point:
    return Point(x.x222, x.x122, x.x211, x.x111)


def act_fast(g: GroupElement, x: Point) -> Point:
    """Same as :func:`act`, through the generator closed forms.

    Uses ``g2 = n(d/b) tau a(-det/b, b) n(a/b)`` when the upper-right entry ``b``
    is a unit and ``g2 = a(a, d) n(c/d)`` when ``b = 0``; anything else goes
    through the hypermatrix.
    """
    (a, b), (c, d) = g.g2
    one = x.alg.field.one
    try:
        if b.is_zero():
            y = act_n(c * d.inverse(), x)
            return act_diag(g.t1, a, d, y)
        binv = b.inverse()
        det = a * d - b * c
        y = act_n(a * binv, x)
        y = act_diag(one, -(det * binv), b, y)
        y = act_tau(y)
        y = act_n(d * binv, y)
        return y.scale(g.t1)
    except NonUnit:
        return act(g, x)


def chi(g: GroupElement):
    return g.det().norm()


def random_group_element(alg: CubicAlgebra, seed=None, length: int | None = None, height: int = 3) -> GroupElement:
    """A reproducible product of random generators ``a(t21, t22)``, ``n(u)``, ``tau``.

    ``seed`` may be an int or a :class:`random.Random`. ``length=0`` gives the identity.
    """
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    if length is None:
        length = rng.randint(1, 5)
    g = GroupElement.identity(alg)
    if length == 0:
        return g
    g = scalar(alg, alg.field.random_nonzero(rng, height))
    for _ in range(length):
        kind = rng.choice("ant")
        if kind == "a":
            h = diag(alg, alg.random_unit(rng, height), alg.random_unit(rng, height))
        elif kind == "n":
            h = unipotent(alg.random_element(rng, height))
        else:
            h = tau(alg)
        g = g * h
    return g


def random_point(alg: CubicAlgebra, rng: random.Random, height: int = 10) -> Point:
    f = alg.field
    return Point(f.random(rng, height), alg.random_element(rng, height), alg.random_element(rng, height), f.random(rng, height))


def all_points(alg: CubicAlgebra) -> Iterator[Point]:
    """Every point of a finite model, lexicographic in the 8 coordinates."""
    els = list(alg.elements())
    base = list(alg.field.elements())
    for x111 in base:
        for x211 in els:
            for x122 in els:
                for x222 in base:
                    yield Point(x111, x211, x122, x222)
