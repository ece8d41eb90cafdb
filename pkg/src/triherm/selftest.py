"""Quick randomized property sweep over the reference fields."""

from __future__ import annotations

import random
import sys

from .cubealg import make_algebra
from .invariant import (
    covariance_factor,
    discriminant,
    discriminant_fast,
    dual_involution,
    middle_affine,
    pair,
    quad_form,
)
from .principal import Flags, fe_symmetry_check, principal_part
from .scalars import QQ, PrimeField
from .space import Point, act, act_diag, act_n, act_tau, diag, random_group_element, random_point, tau, unipotent
from .strata import Label, classify, normalized_in_stratum

FIELDS = [
    ("Q[t]/(t^3-2)", (-2, 0, 0), QQ),
    ("Q[t]/(t^3-t-1)", (-1, -1, 0), QQ),
    ("F_7[t]/(t^3-2)", (-2, 0, 0), PrimeField(7)),
]


def _unstable(alg, rng):
    """A random unstable point: a normal form moved by a random group element."""
    f = alg.field
    if rng.random() < 0.5:
        x122 = alg.random_element(rng, 5)
        y = Point(f.zero, alg.zero, x122 if not x122.is_zero() else alg.one, f.random(rng, 5))
    else:
        y = Point(f.zero, alg.zero, alg.zero, f.random_nonzero(rng, 5))
    return act(random_group_element(alg, rng), y)


def _checks(alg, rng):
    g = random_group_element(alg, rng)
    x = random_point(alg, rng, 5)
    y = random_point(alg, rng, 5)
    u = alg.random_element(rng, 5)
    t21, t22 = alg.random_unit(rng, 5), alg.random_unit(rng, 5)
    t1 = alg.field.random_nonzero(rng, 5)
    a_x, b_x = middle_affine(x)
    yield "covariance", discriminant(act(g, x)) == covariance_factor(g) * discriminant(x)
    yield "fast invariant", discriminant_fast(x) == discriminant(x)
    yield "n(u) closed form", act_n(u, x) == act(unipotent(u), x)
    yield "a(t) closed form", act_diag(t1, t21, t22, x) == act(diag(alg, t21, t22, t1), x)
    yield "tau closed form", act_tau(x) == act(tau(alg), x)
    yield "duality", pair(act(g, x), y) == pair(x, act(dual_involution(g).inverse(), y))
    yield "involution", dual_involution(dual_involution(g)) == g
    yield "middle affine", quad_form(act_n(u, x)).b == alg.embed(3, a_x + b_x.scale(2) * u)
    z = _unstable(alg, rng)
    rep = classify(z)
    yield "witness", rep.label in (Label.S1, Label.S2) and act(rep.witness, z) == rep.normalized and normalized_in_stratum(rep)


def run(seed: int = 0, trials: int = 25, stream=sys.stdout) -> bool:
    rng = random.Random(seed)
    failures = 0
    for name, coeffs, field in FIELDS:
        alg = make_algebra(coeffs, field)
        tally: dict = {}
        for _ in range(trials):
            for check, ok in _checks(alg, rng):
                tally.setdefault(check, [0, 0])
                tally[check][0 if ok else 1] += 1
        for check, (good, bad) in tally.items():
            failures += bad
            print(f"{'ok  ' if not bad else 'FAIL'} {name:16s} {check:18s} {good}/{good + bad}", file=stream)
    pp = principal_part(Flags(True, True, True))
    fe = fe_symmetry_check(pp)
    print(f"{'ok  ' if fe else 'FAIL'} principal part symmetric under s -> 8 - s", file=stream)
    failures += not fe
    print("selftest passed" if not failures else f"selftest: {failures} failures", file=stream)
    return failures == 0
