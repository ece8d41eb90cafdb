import numpy as np

from triherm.cubealg import make_algebra
from triherm.invariant import (
    covariance_factor,
    discriminant,
    discriminant_fast,
    dual_involution,
    gram_matrix,
    middle_affine,
    pair,
    pair_prime,
    quad_form,
    slot_one_form,
)
from triherm.scalars import QQ
from triherm.space import Point, act, diag, random_group_element, random_point, tau, unipotent

from test_space import NumericEmbedding


def hyperdeterminant(a):
    """Cayley's 2x2x2 hyperdeterminant, written out monomially."""
    return (
        a[0, 0, 0] ** 2 * a[1, 1, 1] ** 2
        + a[0, 0, 1] ** 2 * a[1, 1, 0] ** 2
        + a[0, 1, 0] ** 2 * a[1, 0, 1] ** 2
        + a[1, 0, 0] ** 2 * a[0, 1, 1] ** 2
        - 2 * a[0, 0, 0] * a[0, 0, 1] * a[1, 1, 0] * a[1, 1, 1]
        - 2 * a[0, 0, 0] * a[0, 1, 0] * a[1, 0, 1] * a[1, 1, 1]
        - 2 * a[0, 0, 0] * a[0, 1, 1] * a[1, 0, 0] * a[1, 1, 1]
        - 2 * a[0, 0, 1] * a[0, 1, 0] * a[1, 0, 1] * a[1, 1, 0]
        - 2 * a[0, 0, 1] * a[0, 1, 1] * a[1, 1, 0] * a[1, 0, 0]
        - 2 * a[0, 1, 0] * a[0, 1, 1] * a[1, 0, 1] * a[1, 0, 0]
        + 4 * a[0, 0, 0] * a[0, 1, 1] * a[1, 0, 1] * a[1, 1, 0]
        + 4 * a[0, 0, 1] * a[0, 1, 0] * a[1, 0, 0] * a[1, 1, 1]
    )


def test_examples(cbrt2):
    th = cbrt2.theta
    assert discriminant(Point.make(cbrt2, 1, 0, 0, 1)) == 1
    assert discriminant(Point.make(cbrt2, 0, 1, 1, 0)) == -3
    assert discriminant(Point.make(cbrt2, 1, th, th * th, 2)) == 0
    assert discriminant(Point.make(cbrt2, 0, 0, 0, 1)) == 0


def test_discriminant_is_cayley_hyperdeterminant(rng):
    for coeffs in ((-1, -1, 0), (-2, 0, 0)):
        alg = make_algebra(coeffs, QQ)
        num = NumericEmbedding(alg)
        for _ in range(30):
            x = random_point(alg, rng, 4)
            det = hyperdeterminant(num.tensor(x))
            assert abs(det - float(discriminant(x))) < 1e-6 * max(1.0, abs(det))


def test_covariance(alg, rng):
    for _ in range(40):
        g = random_group_element(alg, rng)
        x = random_point(alg, rng, 5)
        assert discriminant(act(g, x)) == covariance_factor(g) * discriminant(x)


def test_fast_route_agrees(alg, rng):
    for _ in range(60):
        x = random_point(alg, rng, 8)
        assert discriminant_fast(x) == discriminant(x)


def test_slot_one_form_maps_to_quad_form(alg, rng):
    for _ in range(20):
        x = random_point(alg, rng, 6)
        s1, q = slot_one_form(x), quad_form(x)
        assert (alg.embed(3, s1.a), alg.embed(3, s1.b), alg.embed(3, s1.c)) == (q.a, q.b, q.c)


def test_middle_affine(alg, rng):
    for _ in range(40):
        x = random_point(alg, rng, 6)
        u = alg.random_element(rng, 6)
        a_x, b_x = middle_affine(x)
        assert quad_form(act(unipotent(u), x)).b == alg.embed(3, a_x + b_x.scale(2) * u)


def test_pairing_duality(alg, rng):
    for _ in range(40):
        g = random_group_element(alg, rng)
        x, y = random_point(alg, rng, 5), random_point(alg, rng, 5)
        assert pair(act(g, x), y) == pair(x, act(dual_involution(g).inverse(), y))
        assert pair_prime(act(g, x), y) == pair_prime(x, act(g.transpose(), y))
        assert dual_involution(dual_involution(g)) == g


def test_pairing_symmetric_and_nondegenerate(ref, rng):
    for _ in range(20):
        x, y = random_point(ref, rng, 5), random_point(ref, rng, 5)
        assert pair(x, y) == pair(y, x)
        assert pair(x, y) == pair_prime(x, act(tau(ref), y))
    gram = np.array([[float(v) for v in row] for row in gram_matrix(ref, twisted=True)])
    assert abs(np.linalg.det(gram)) > 1e-9


def test_double_root_iff_zero_discriminant(cbrt2):
    th = cbrt2.theta
    x = Point.make(cbrt2, 1, th, th * th, 2)
    assert quad_form(x).discriminant().is_zero()
    y = act(diag(cbrt2, th, cbrt2.one + th), Point.make(cbrt2, 1, 0, 0, 1))
    assert not quad_form(y).discriminant().is_zero()


def test_zero_form_has_zero_discriminant(cbrt2):
    q = quad_form(Point.make(cbrt2, 0, 0, 0, 1))
    assert q.is_zero()
