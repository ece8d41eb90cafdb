import cmath
import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from triherm.cubealg import make_algebra
from triherm.errors import DescentFailure
from triherm.scalars import QQ
from triherm.space import (
    GroupElement,
    Point,
    act,
    act_diag,
    act_n,
    act_tau,
    all_points,
    descend,
    diag,
    lift,
    random_group_element,
    random_point,
    tau,
    unipotent,
)


class NumericEmbedding:
    """Evaluate B at a real root of f and a chosen sqrt(D): an independent complex model."""

    def __init__(self, alg):
        c0, c1, c2 = (float(c) for c in alg.coeffs)
        roots = np.roots([1, c2, c1, c0])
        self.theta = float(min(roots, key=lambda r: abs(r.imag)).real)
        self.delta = cmath.sqrt(float(alg.D))
        self.alg = alg
        # pick the sign of delta making sigma_1 the identity on this root
        if abs(self.b(alg.root(1)) - self.theta) > 1e-9:
            raise AssertionError("theta_1 should be theta itself")

    def a(self, x):
        return sum(float(c) * self.theta**i for i, c in enumerate(x.c))

    def b(self, y):
        return self.a(y.p) + self.delta * self.a(y.q)

    def sigma(self, i, x):
        return self.b(self.alg.embed(i, x))

    def tensor(self, x: Point):
        h = lift(x)
        out = np.zeros((2, 2, 2), dtype=complex)
        for (i, j, k), v in h.entries.items():
            out[i - 1, j - 1, k - 1] = self.b(v)
        return out

    def act(self, g, x):
        ms = [np.array([[self.sigma(s, g.g2[r][c]) for c in range(2)] for r in range(2)]) for s in (1, 2, 3)]
        return float(g.t1) * np.einsum("ia,jb,kc,abc->ijk", *ms, self.tensor(x))


@pytest.fixture(params=[(-1, -1, 0), (-2, 0, 0)])
def qalg(request):
    return make_algebra(request.param, QQ)


def test_action_matches_numeric_oracle(qalg, rng):
    num = NumericEmbedding(qalg)
    for _ in range(40):
        g = random_group_element(qalg, rng)
        x = random_point(qalg, rng, 5)
        assert np.allclose(num.act(g, x), num.tensor(act(g, x)), atol=1e-7, rtol=1e-9)


def test_lift_descend_roundtrip(alg, rng):
    for _ in range(20):
        x = random_point(alg, rng, 7)
        assert descend(lift(x)) == x


def test_descend_names_violated_relation(ref):
    h = lift(Point.make(ref, 1, [0, 1, 0], 0, 0))
    bad = h.replace((1, 2, 1), ref.lift(ref.theta))
    with pytest.raises(DescentFailure, match="x121"):
        descend(bad)


def test_examples(cbrt2):
    th = cbrt2.theta
    assert act(diag(cbrt2, th, 1), Point.make(cbrt2, 1, 0, 0, 1)) == Point.make(cbrt2, 2, 0, 0, 1)
    assert act(unipotent(th), Point.make(cbrt2, 1, 0, 0, 0)) == Point.make(cbrt2, 1, th, th * th, 2)
    x = Point.make(cbrt2, 1, [1, 2, 3], [4, 5, 6], 7)
    assert act(tau(cbrt2), x) == Point.make(cbrt2, 7, [4, 5, 6], [1, 2, 3], 1)


def test_closed_forms(alg, rng):
    for _ in range(40):
        x = random_point(alg, rng, 6)
        u = alg.random_element(rng, 6)
        t21, t22 = alg.random_unit(rng, 4), alg.random_unit(rng, 4)
        t1 = alg.field.random_nonzero(rng, 4)
        assert act_n(u, x) == act(unipotent(u), x)
        assert act_diag(t1, t21, t22, x) == act(diag(alg, t21, t22, t1), x)
        assert act_tau(x) == act(tau(alg), x)


def test_group_law(alg, rng):
    for _ in range(20):
        g, h = random_group_element(alg, rng), random_group_element(alg, rng)
        x = random_point(alg, rng, 5)
        assert act(g * h, x) == act(g, act(h, x))
        assert act(g.inverse(), act(g, x)) == x
        assert g * g.inverse() == GroupElement.identity(alg)


def test_linearity(alg, rng):
    g = random_group_element(alg, rng)
    x, y = random_point(alg, rng, 5), random_point(alg, rng, 5)
    c = alg.field.random(rng, 5)
    assert act(g, x + y.scale(c)) == act(g, x) + act(g, y).scale(c)


def test_random_group_element_reproducible(ref):
    assert random_group_element(ref, 7) == random_group_element(ref, 7)
    assert random_group_element(ref, 7, length=0) == GroupElement.identity(ref)


def test_random_words_cover_both_bruhat_cells(ref):
    r = random.Random(3)
    upper = [random_group_element(ref, r).g2[0][1].is_zero() for _ in range(200)]
    assert any(upper) and not all(upper)


def test_all_points_order(f3):
    pts = list(all_points(f3))
    assert len(pts) == 3**8
    assert pts[0].is_zero()
    assert pts[1] == Point.make(f3, 0, 0, 0, 1)


@given(st.lists(st.integers(-9, 9), min_size=8, max_size=8))
@settings(max_examples=50, deadline=None)
def test_coords_roundtrip(coords):
    alg = make_algebra((-1, -1, 0), QQ)
    x = Point.from_coords(alg, coords)
    assert [int(c) for c in x.coords()] == coords


def test_fast_action_matches_hypermatrix(alg, rng):
    from triherm.space import act_fast

    for _ in range(60):
        g = random_group_element(alg, rng)
        x = random_point(alg, rng, 5)
        assert act_fast(g, x) == act(g, x)


def test_fast_action_falls_back_on_split_algebra(rng):
    from triherm.space import act_fast

    split = make_algebra((0, -1, 0), QQ)
    th = split.theta
    g = GroupElement(QQ(2), ((split.one, th - split.one), (split.zero, split.one + th)))
    x = random_point(split, rng, 5)
    assert act_fast(g, x) == act(g, x)
