"""Dedekind zeta numerics for a cubic field ``Q[t]/(f)`` and the derived constants.

Gamma-factor convention for the completed zeta function::

    Z(s) = |d|^(s/2) (pi^(-s/2) Gamma(s/2))^r1 ((2 pi)^(1-s) Gamma(s))^r2 zeta_k(s)
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import mpmath
import numpy as np

from . import _polyp
from .cubealg import cubic_discriminant
from .errors import NonMaximalOrder

GAMMA_CONVENTION = "|d|^(s/2) (pi^(-s/2) Gamma(s/2))^r1 ((2pi)^(1-s) Gamma(s))^r2 zeta_k(s)"


def primes_up_to(n: int) -> np.ndarray:
    if n < 2:
        return np.array([], dtype=np.int64)
    sieve = np.ones(n + 1, dtype=bool)
    sieve[:2] = False
    for p in range(2, int(n**0.5) + 1):
        if sieve[p]:
            sieve[p * p :: p] = False
    return np.nonzero(sieve)[0]


@dataclass(frozen=True)
class LocalFactor:
    p: int
    factors: tuple  # (residue degree, ramification index) per prime above p

    @property
    def splitting_type(self) -> str:
        parts = []
        for deg, e in sorted(self.factors, key=lambda t: (-t[1], t[0])):
            parts.append(f"({deg}^{e})" if e > 1 and deg > 1 else f"({deg}{'²³'[e - 2] if e > 1 else ''})")
        return "".join(parts)

    @property
    def degrees(self) -> tuple:
        return tuple(sorted(deg for deg, _ in self.factors))

    def euler_factor(self, s):
        out = 1.0
        for deg, _ in self.factors:
            out /= 1.0 - float(self.p) ** (-deg * s)
        return out

    def ideal_counts(self, kmax: int) -> list[int]:
        """Number of ideals of norm ``p^k`` for ``k = 0..kmax``."""
        counts = [1] + [0] * kmax
        for deg, _ in self.factors:
            for k in range(deg, kmax + 1):
                counts[k] += counts[k - deg]
        return counts


def _cubic_pow_x(p: int, c0: int, c1: int, c2: int):
    """``x^p mod (x^3 + c2 x^2 + c1 x + c0)`` over F_p as ``(a0, a1, a2)``."""
    r0, r1, r2 = (-c0) % p, (-c1) % p, (-c2) % p  # x^3 = r0 + r1 x + r2 x^2

    def mulmod(a, b):
        a0, a1, a2 = a
        b0, b1, b2 = b
        d0 = a0 * b0
        d1 = a0 * b1 + a1 * b0
        d2 = a0 * b2 + a1 * b1 + a2 * b0
        d3 = a1 * b2 + a2 * b1
        d4 = a2 * b2
        # x^4 = r0 x + r1 x^2 + r2 x^3
        d3 += d4 * r2
        d1 += d4 * r0
        d2 += d4 * r1
        return ((d0 + d3 * r0) % p, (d1 + d3 * r1) % p, (d2 + d3 * r2) % p)

    result = (1, 0, 0)
    base = (0, 1, 0)
    e = p
    while e:
        if e & 1:
            result = mulmod(result, base)
        base = mulmod(base, base)
        e >>= 1
    return result


def local_factor(p: int, coeffs) -> LocalFactor:
    """Splitting of ``p`` in ``Q[t]/(f)``, read off from the factorization of ``f`` mod ``p``."""
    c0, c1, c2 = (int(c) for c in coeffs)
    disc = cubic_discriminant(c0, c1, c2)
    if disc % (p * p) == 0:
        raise NonMaximalOrder(f"p = {p}: p^2 divides disc(f) = {disc}; Z[theta] may not be maximal at p")
    f = [c0 % p, c1 % p, c2 % p, 1]
    if disc % p:
        h = _cubic_pow_x(p, c0, c1, c2)
        h = (h[0], (h[1] - 1) % p, h[2])
        if h == (0, 0, 0):
            return LocalFactor(p, ((1, 1),) * 3)
        g = _polyp.gcd(f, list(h), p)
        nroots = len(g) - 1
        if nroots == 1:
            return LocalFactor(p, ((1, 1), (2, 1)))
        if nroots == 0:
            return LocalFactor(p, ((3, 1),))
        raise AssertionError("a squarefree cubic cannot have exactly two roots")
    rep = _polyp.gcd(f, _polyp.derivative(f, p), p)
    if len(rep) == 3:
        # (t - a)^3
        return LocalFactor(p, ((1, 3),))
    return LocalFactor(p, ((1, 2), (1, 1)))


@dataclass(frozen=True)
class ZetaEstimate:
    s: float
    euler: mpmath.mpf
    dirichlet: mpmath.mpf
    tail_bound: float
    prime_bound: int

    @property
    def value(self):
        return self.euler

    @property
    def discrepancy(self) -> float:
        return float(abs(self.euler - self.dirichlet))


def ideal_counts(coeffs, n: int, factors: dict | None = None) -> np.ndarray:
    """``a[m]`` = number of ideals of norm ``m`` for ``m <= n`` (``a[0] = 0``)."""
    a = np.ones(n + 1, dtype=np.int64)
    a[0] = 0
    for p in primes_up_to(n):
        p = int(p)
        lf = factors[p] if factors and p in factors else local_factor(p, coeffs)
        if p * p > n:
            a[p::p] *= lf.ideal_counts(1)[1]
            continue
        kmax = int(math.log(n, p)) + 1
        while p**kmax > n:
            kmax -= 1
        counts = lf.ideal_counts(kmax)
        val = np.zeros(n + 1, dtype=np.int64)
        pk = p
        while pk <= n:
            val[pk::pk] += 1
            pk *= p
        mult = np.array(counts, dtype=np.int64)[val[p::p]]
        a[p::p] *= mult
    return a


def dedekind_zeta(s: float, coeffs, prime_bound: int = 10**6, dps: int = 40) -> ZetaEstimate:
    """``zeta_k(s)`` by a truncated Euler product and by Dirichlet partial sums of ideal counts."""
    if s <= 1:
        raise ValueError("series only converge for s > 1")
    factors = {}
    log_sum = 0.0
    for p in primes_up_to(prime_bound):
        p = int(p)
        lf = local_factor(p, coeffs)
        factors[p] = lf
        for deg, _ in lf.factors:
            log_sum -= math.log1p(-(float(p) ** (-deg * s)))
    a = ideal_counts(coeffs, prime_bound, factors)
    m = np.arange(2, prime_bound + 1, dtype=np.float64)
    excess = float(np.sum(a[2:] * m ** (-float(s))))
    with mpmath.workdps(dps):
        euler = mpmath.mpf(1) + mpmath.mpf(math.expm1(log_sum))
        dirichlet = mpmath.mpf(1) + mpmath.mpf(excess)
        tail = 3 * mpmath.zeta(s, prime_bound + 1)
    return ZetaEstimate(float(s), euler, dirichlet, float(tail), prime_bound)


def riemann_zeta(s: float) -> float:
    return float(mpmath.zeta(s))


@dataclass(frozen=True)
class FieldInvariants:
    r1: int
    r2: int
    h: int
    R: float
    w: int
    d_abs: int

    def __post_init__(self):
        if (self.r1, self.r2) not in ((3, 0), (1, 1)):
            raise ValueError("a cubic field has signature (3, 0) or (1, 1)")
        if self.h < 1 or self.w < 1 or self.R <= 0 or self.d_abs < 1:
            raise ValueError("h, w, |d| must be positive integers and R > 0")


def gamma_factor(s, inv: FieldInvariants):
    s = mpmath.mpf(s)
    real = mpmath.pi ** (-s / 2) * mpmath.gamma(s / 2)
    cplx = (2 * mpmath.pi) ** (1 - s) * mpmath.gamma(s)
    return mpmath.mpf(inv.d_abs) ** (s / 2) * real**inv.r1 * cplx**inv.r2


def completed_zeta(s, inv: FieldInvariants, value):
    """``Z_k(s)`` from the plain value ``zeta_k(s)``."""
    return gamma_factor(s, inv) * value


def residue_kappa(inv: FieldInvariants):
    """Residue of the plain Dedekind zeta function at ``s = 1``."""
    return (
        mpmath.mpf(2) ** inv.r1 * (2 * mpmath.pi) ** inv.r2 * inv.h * mpmath.mpf(inv.R)
        / (inv.w * mpmath.sqrt(inv.d_abs))
    )


def residue_completed(inv: FieldInvariants):
    """Residue of ``Z_k`` at ``s = 1``; the Gamma factor is regular there."""
    return gamma_factor(1, inv) * residue_kappa(inv)


def phi_ratio(s, inv: FieldInvariants, zeta_s, zeta_s_plus_1):
    """``Z_k(s) / Z_k(s + 1)``."""
    return completed_zeta(s, inv, zeta_s) / completed_zeta(s + 1, inv, zeta_s_plus_1)


def constants(inv: FieldInvariants, zeta2):
    """``(rho, vol)``: ``rho = Res Z_k / Z_k(2)`` and ``vol = 1 / rho``."""
    rho = residue_completed(inv) / completed_zeta(2, inv, zeta2)
    return rho, 1 / rho
