"""Box counts of integral points of V, bucketed by the relative invariant."""

from __future__ import annotations

import itertools
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .cubealg import CubicAlgebra, make_algebra
from .invariant import discriminant_fast
from .scalars import QQ
from .space import Point
from .strata import Label, classify


@dataclass(frozen=True)
class IntegralModel:
    """Lattice ``x111, x222 in Z``, ``x211, x122 in Z[theta]`` for integral monic ``f``."""

    coeffs: tuple

    def __post_init__(self):
        for c in self.coeffs:
            if Fraction(c).denominator != 1:
                raise ValueError("integral model needs integer coefficients")

    @property
    def alg(self) -> CubicAlgebra:
        return make_algebra([int(c) for c in self.coeffs], QQ)


@dataclass
class BoxCount:
    height: int
    histogram: Counter = field(default_factory=Counter)
    tallies: Counter = field(default_factory=Counter)

    def merge(self, other: BoxCount) -> BoxCount:
        self.histogram.update(other.histogram)
        self.tallies.update(other.tallies)
        return self

    def rows(self):
        return sorted(self.histogram.items())


def _count_block(args) -> BoxCount:
    coeffs, height, first = args
    alg = IntegralModel(coeffs).alg
    rng = range(-height, height + 1)
    out = BoxCount(height)
    for rest in itertools.product(rng, repeat=7):
        x = Point.from_coords(alg, (first, *rest))
        delta = discriminant_fast(x)
        out.histogram[delta] += 1
        label = Label.SEMISTABLE if delta else classify(x).label
        out.tallies[label.value] += 1
    return out


def box_count(model: IntegralModel, height: int, jobs: int = 1) -> BoxCount:
    """Histogram of the invariant over all ``(2H+1)^8`` points with coordinates in ``[-H, H]``."""
    if height < 0:
        raise ValueError("height must be nonnegative")
    model.alg  # validate
    blocks = [(tuple(int(c) for c in model.coeffs), height, first) for first in range(-height, height + 1)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_count_block, blocks))
    else:
        parts = [_count_block(b) for b in blocks]
    total = BoxCount(height)
    for part in parts:
        total.merge(part)
    return total
