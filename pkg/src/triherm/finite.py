"""Brute-force models over prime fields F_q.

Points of ``V(F_q)`` are indexed lexicographically by their eight coordinates
``(x111, x211[0..2], x122[0..2], x222)``: ``index = sum c_i q^(7 - i)``.
"""

from __future__ import annotations

import math
import os
import time
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .cubealg import AlgebraElement, CubicAlgebra, make_algebra
from .errors import CapExceeded, InvariantViolation
from .invariant import pair
from .scalars import PrimeField
from .space import GroupElement, Point, act, act_diag, act_n, act_tau
from .strata import LABELS_BY_CODE, Label, classify

DIM = 8


def finite_algebra(q: int, coeffs) -> CubicAlgebra:
    if q == 2:
        raise ValueError("q must be odd")
    return make_algebra([int(c) for c in coeffs], PrimeField(q))


def point_from_index(alg: CubicAlgebra, index: int) -> Point:
    q = alg.field.p
    coords = []
    for _ in range(DIM):
        index, r = divmod(index, q)
        coords.append(r)
    return Point.from_coords(alg, coords[::-1])


def point_index(x: Point) -> int:
    q = x.alg.field.p
    idx = 0
    for c in x.coords():
        idx = idx * q + c.v
    return idx


def coordinate_array(q: int) -> np.ndarray:
    """``(q^8, 8)`` integer array of coordinates in index order."""
    grids = np.indices((q,) * DIM).reshape(DIM, -1).T
    return grids.astype(np.int64)


# census ------------------------------------------------------------------


@dataclass
class CensusRecord:
    q: int
    f: tuple
    n_total: int
    n_zero: int
    n_ss: int
    n_s1: int
    n_s2: int
    elapsed: float = 0.0

    def csv_row(self) -> list:
        return [self.q, ",".join(str(c) for c in self.f), self.n_total, self.n_zero, self.n_ss, self.n_s1, self.n_s2]


CSV_HEADER = ["q", "f", "n_total", "n_zero", "n_ss", "n_s1", "n_s2"]


class _ArrayAlgebra:
    """Vectorized arithmetic in ``A`` over F_q on triples of integer arrays."""

    def __init__(self, alg: CubicAlgebra):
        self.q = alg.field.p
        self.r3 = [int(c) for c in alg._r3]
        self.r4 = [int(c) for c in alg._r4]
        self.tr = [int(c) for c in alg._tr]
        self.half = pow(2, -1, self.q)

    def mul(self, a, b):
        q = self.q
        d0 = a[0] * b[0]
        d1 = a[0] * b[1] + a[1] * b[0]
        d2 = a[0] * b[2] + a[1] * b[1] + a[2] * b[0]
        d3 = (a[1] * b[2] + a[2] * b[1]) % q
        d4 = (a[2] * b[2]) % q
        return tuple((d + d3 * self.r3[i] + d4 * self.r4[i]) % q for i, d in enumerate((d0, d1, d2)))

    def trace(self, a):
        return (a[0] * self.tr[0] + a[1] * self.tr[1] + a[2] * self.tr[2]) % self.q

    def ocp(self, u):
        """``u^2 - tr(u) u + s2(u)``."""
        q = self.q
        sq = self.mul(u, u)
        t = self.trace(u)
        s2 = ((t * t - self.trace(sq)) * self.half) % q
        out = [(sq[i] - t * u[i]) % q for i in range(3)]
        out[0] = (out[0] + s2) % q
        return tuple(out)


def discriminant_table(alg: CubicAlgebra) -> np.ndarray:
    """The invariant at every point of ``V(F_q)`` in index order, as residues."""
    q = alg.field.p
    ar = _ArrayAlgebra(alg)
    c = coordinate_array(q).T
    x111, x222 = c[0], c[7]
    x211, x122 = (c[1], c[2], c[3]), (c[4], c[5], c[6])
    p = ar.mul(x211, x122)
    tp = ar.trace(p)
    a_x = [(2 * p[i]) % q for i in range(3)]
    a_x[0] = (a_x[0] - tp + x111 * x222) % q
    o211, o122 = ar.ocp(x211), ar.ocp(x122)
    b_x = tuple((x111 * x122[i] - o211[i]) % q for i in range(3))
    c_x = tuple((x211[i] * x222 - o122[i]) % q for i in range(3))
    sq = ar.mul(a_x, a_x)
    bc = ar.mul(b_x, c_x)
    delta = [(sq[i] - 4 * bc[i]) % q for i in range(3)]
    if np.any(delta[1]) or np.any(delta[2]):
        raise InvariantViolation("vectorized invariant left the base field")
    return delta[0]


def _label_block(args) -> bytes:
    q, coeffs, indices = args
    alg = finite_algebra(q, coeffs)
    return bytes(classify(point_from_index(alg, int(i))).label.code for i in indices)


def default_jobs() -> int:
    return int(os.environ.get("TRIHERM_JOBS", "1"))


def label_table(q: int, coeffs, jobs: int | None = None, chunks: int = 64) -> np.ndarray:
    """Label code of every point, in index order.

    Points with nonzero invariant are semistable outright; the rest are classified
    exactly, in fixed chunks so the result does not depend on ``jobs``.
    """
    alg = finite_algebra(q, coeffs)  # validate before forking
    jobs = default_jobs() if jobs is None else jobs
    labels = np.full(q**DIM, Label.SEMISTABLE.code, dtype=np.uint8)
    todo = np.flatnonzero(discriminant_table(alg) == 0)
    blocks = [(q, tuple(coeffs), part.tolist()) for part in np.array_split(todo, chunks) if part.size]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_label_block, blocks))
    else:
        parts = [_label_block(b) for b in blocks]
    labels[todo] = np.frombuffer(b"".join(parts), dtype=np.uint8)
    return labels


def census(q: int, coeffs, jobs: int | None = None, labels: np.ndarray | None = None) -> CensusRecord:
    start = time.perf_counter()
    alg = finite_algebra(q, coeffs)
    if not alg.is_irreducible():
        raise ValueError(f"f = {alg.poly_str()} is reducible over F_{q}")
    if labels is None:
        labels = label_table(q, coeffs, jobs)
    counts = np.bincount(labels, minlength=4)
    rec = CensusRecord(
        q=q,
        f=tuple(int(c) for c in coeffs),
        n_total=int(labels.size),
        n_zero=int(counts[Label.ZERO.code]),
        n_ss=int(counts[Label.SEMISTABLE.code]),
        n_s1=int(counts[Label.S1.code]),
        n_s2=int(counts[Label.S2.code]),
        elapsed=time.perf_counter() - start,
    )
    assert rec.n_total == q**DIM
    assert rec.n_zero + rec.n_ss + rec.n_s1 + rec.n_s2 == rec.n_total
    return rec


def predicted_unstable_counts(q: int) -> tuple[int, int]:
    """``(|S1|, |S2|)`` from the induced-space structure ``G x_B Y_i^ss``."""
    n_s1 = (q**3 + 1) * (q**3 - 1) * q
    n_s2 = (q**3 + 1) * (q - 1)
    return n_s1, n_s2


# orbits ------------------------------------------------------------------


def _prime_factors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def primitive_element(alg: CubicAlgebra) -> AlgebraElement:
    """A generator of the cyclic group ``A^x`` (``A`` a finite field)."""
    order = alg.field.p**3 - 1
    factors = _prime_factors(order)
    for a in alg.elements():
        if a.is_zero():
            continue
        if all(a ** (order // ell) != alg.one for ell in factors):
            return a
    raise ValueError("A is not a field")


def primitive_root(p: int) -> int:
    factors = _prime_factors(p - 1)
    for g in range(2, p):
        if all(pow(g, (p - 1) // ell, p) != 1 for ell in factors):
            return g
    return 1


def orbit_bfs(x: Point, cap: int = 10**6) -> int:
    """Exact size of ``G x`` via closure under ``tau``, all ``n(u)``, torus and scalar generators."""
    return len(orbit(x, cap))


def orbit(x: Point, cap: int = 10**6) -> set:
    """Coordinate tuples of every point in ``G x``."""
    alg = x.alg
    f = alg.field
    gen = primitive_element(alg)
    t1 = f(primitive_root(f.p))
    one = alg.one
    us = list(alg.elements())
    moves = [act_tau, lambda y: act_diag(f.one, gen, one, y), lambda y: act_diag(f.one, one, gen, y)]
    moves.append(lambda y: y.scale(t1))
    moves += [lambda y, u=u: act_n(u, y) for u in us if not u.is_zero()]
    seen = {x.coords()}
    queue = deque([x])
    while queue:
        y = queue.popleft()
        for move in moves:
            z = move(y)
            key = z.coords()
            if key not in seen:
                seen.add(key)
                if len(seen) > cap:
                    raise CapExceeded(f"orbit exceeds cap {cap}")
                queue.append(z)
    return seen


# functions on V(F_q) -------------------------------------------------------


@dataclass
class FiniteFunction:
    """Complex values on all ``q^8`` points, stored in index order."""

    alg: CubicAlgebra
    values: np.ndarray

    @property
    def q(self) -> int:
        return self.alg.field.p

    @classmethod
    def from_callable(cls, alg: CubicAlgebra, fn) -> FiniteFunction:
        q = alg.field.p
        vals = np.array([fn(point_from_index(alg, i)) for i in range(q**DIM)], dtype=complex)
        return cls(alg, vals)

    @classmethod
    def constant(cls, alg: CubicAlgebra, c: complex = 1.0) -> FiniteFunction:
        return cls(alg, np.full(alg.field.p**DIM, c, dtype=complex))

    @classmethod
    def delta_at(cls, alg: CubicAlgebra, x: Point) -> FiniteFunction:
        vals = np.zeros(alg.field.p**DIM, dtype=complex)
        vals[point_index(x)] = 1.0
        return cls(alg, vals)

    @classmethod
    def random(cls, alg: CubicAlgebra, rng: np.random.Generator) -> FiniteFunction:
        n = alg.field.p**DIM
        return cls(alg, rng.standard_normal(n) + 1j * rng.standard_normal(n))

    def __call__(self, x: Point) -> complex:
        return complex(self.values[point_index(x)])

    def pullback(self, g: GroupElement) -> FiniteFunction:
        """``x -> Phi(g x)``."""
        return FiniteFunction(self.alg, self.values[action_permutation(g)])

    def negate_argument(self) -> FiniteFunction:
        q = self.q
        coords = coordinate_array(q)
        return FiniteFunction(self.alg, self.values[_indices((-coords) % q, q)])


def _indices(coords: np.ndarray, q: int) -> np.ndarray:
    weights = q ** np.arange(DIM - 1, -1, -1, dtype=np.int64)
    return coords @ weights


def action_matrix(g: GroupElement) -> np.ndarray:
    """The F_q-linear map ``x -> g x`` as an 8x8 integer matrix on coordinate columns."""
    alg = g.alg
    cols = []
    for i in range(DIM):
        e = [0] * DIM
        e[i] = 1
        cols.append([c.v for c in act(g, Point.from_coords(alg, e)).coords()])
    return np.array(cols, dtype=np.int64).T


def action_permutation(g: GroupElement) -> np.ndarray:
    """``perm[i] = index(g * point_i)``."""
    q = g.alg.field.p
    coords = coordinate_array(q)
    return _indices((coords @ action_matrix(g).T) % q, q)


def pairing_matrix(alg: CubicAlgebra) -> np.ndarray:
    """Integer Gram matrix of ``[x, y] = [x, tau y]'`` in the coordinate basis."""
    pts = [Point.from_coords(alg, [int(i == j) for j in range(DIM)]) for i in range(DIM)]
    return np.array([[pair(a, b).v for b in pts] for a in pts], dtype=np.int64)


def finite_fourier(phi: FiniteFunction) -> FiniteFunction:
    """``Phi^(x) = q^-4 sum_y Phi(y) exp(2 pi i [x, y] / q)``."""
    q = phi.q
    n = q**DIM
    cube = phi.values.reshape((q,) * DIM)
    # ifftn carries exp(+2 pi i k.y / q) / q^8
    spectrum = np.fft.ifftn(cube).reshape(-1) * n
    coords = coordinate_array(q)
    k = (coords @ pairing_matrix(phi.alg).T) % q
    return FiniteFunction(phi.alg, spectrum[_indices(k, q)] * q ** (-DIM / 2))


def finite_fourier_direct(phi: FiniteFunction, indices) -> np.ndarray:
    """Naive character sum at selected points; reference for :func:`finite_fourier`."""
    q = phi.q
    coords = coordinate_array(q)
    pm = pairing_matrix(phi.alg)
    out = []
    for i in indices:
        x = coords[i]
        phase = (coords @ (pm @ x)) % q
        out.append(np.sum(phi.values * np.exp(2j * math.pi * phase / q)) * q ** (-DIM / 2))
    return np.array(out)


def theta_census(phi: FiniteFunction, g: GroupElement, label: Label | str, labels: np.ndarray) -> complex:
    """Sum of ``Phi(g x)`` over the points ``x`` carrying ``label``."""
    label = Label(label)
    mask = labels == label.code
    return complex(np.sum(phi.pullback(g).values[mask]))


def label_of(labels: np.ndarray, x: Point) -> Label:
    return LABELS_BY_CODE[int(labels[point_index(x)])]
