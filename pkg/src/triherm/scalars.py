"""Base fields: the rationals and prime fields F_p.

Rational scalars are plain :class:`fractions.Fraction` values. Prime-field
scalars are :class:`ModInt` instances holding the canonical residue.
"""

from __future__ import annotations

from random import Random
from fractions import Fraction
from typing import Iterator, Union


_new = object.__new__


class ModInt:
    """Residue class modulo an odd prime, always reduced to ``[0, p)``."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _coerce(self, other):
        if type(other) is ModInt:
            if other.p != self.p:
                raise ValueError(f"mixing F_{self.p} and F_{other.p}")
            return other.v
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            return other.numerator * pow(other.denominator, -1, self.p)
        return NotImplemented

    def __add__(self, other):
        if type(other) is ModInt:
            r = _new(ModInt)
            r.p = p = self.p
            r.v = (self.v + other.v) % p
            return r
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModInt(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        if type(other) is ModInt:
            r = _new(ModInt)
            r.p = p = self.p
            r.v = (self.v - other.v) % p
            return r
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModInt(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModInt(o - self.v, self.p)

    def __mul__(self, other):
        if type(other) is ModInt:
            r = _new(ModInt)
            r.p = p = self.p
            r.v = self.v * other.v % p
            return r
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModInt(self.v * o, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        r = _new(ModInt)
        r.p = p = self.p
        r.v = -self.v % p
        return r

    def __pos__(self):
        return self

    def inverse(self) -> ModInt:
        if self.v == 0:
            raise ZeroDivisionError(f"0 has no inverse in F_{self.p}")
        return ModInt(pow(self.v, -1, self.p), self.p)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if o % self.p == 0:
            raise ZeroDivisionError(f"division by 0 in F_{self.p}")
        return ModInt(self.v * pow(o, -1, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModInt(o, self.p) / self

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return ModInt(pow(self.v, e, self.p), self.p)

    def __eq__(self, other):
        if type(other) is ModInt:
            return self.p == other.p and self.v == other.v
        if isinstance(other, (int, Fraction)):
            return self.v == self._coerce(other) % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __int__(self):
        return self.v

    def __repr__(self):
        return f"ModInt({self.v}, {self.p})"

    def __str__(self):
        return str(self.v)


Scalar = Union[Fraction, ModInt]


class RationalField:
    characteristic = 0
    tag = "Q"

    def __call__(self, x) -> Fraction:
        if isinstance(x, str):
            return Fraction(x)
        return Fraction(x)

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    def random(self, rng: Random, height: int = 10) -> Fraction:
        num = rng.randint(-height, height)
        return Fraction(num, rng.randint(1, height))

    def random_nonzero(self, rng: Random, height: int = 10) -> Fraction:
        while True:
            x = self.random(rng, height)
            if x:
                return x

    def format(self, x: Fraction) -> str:
        return f"{x.numerator}/{x.denominator}"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "QQ"


class PrimeField:
    def __init__(self, p: int):
        if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.characteristic = p

    @property
    def tag(self):
        return {"Fp": self.p}

    def __call__(self, x) -> ModInt:
        if isinstance(x, ModInt):
            if x.p != self.p:
                raise ValueError(f"element of F_{x.p} given to F_{self.p}")
            return x
        if isinstance(x, str):
            x = Fraction(x)
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError(f"denominator of {x} vanishes mod {self.p}")
            return ModInt(x.numerator * pow(x.denominator, -1, self.p), self.p)
        return ModInt(int(x), self.p)

    @property
    def zero(self) -> ModInt:
        return ModInt(0, self.p)

    @property
    def one(self) -> ModInt:
        return ModInt(1, self.p)

    def elements(self) -> Iterator[ModInt]:
        for v in range(self.p):
            yield ModInt(v, self.p)

    def random(self, rng: Random, height: int = 10) -> ModInt:
        return ModInt(rng.randrange(self.p), self.p)

    def random_nonzero(self, rng: Random, height: int = 10) -> ModInt:
        return ModInt(rng.randrange(1, self.p), self.p)

    def format(self, x: ModInt) -> str:
        return str(x.v)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))

    def __repr__(self):
        return f"GF({self.p})"


QQ = RationalField()


def GF(p: int) -> PrimeField:
    return PrimeField(p)
