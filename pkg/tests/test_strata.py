import pytest

from triherm.cubealg import make_algebra
from triherm.errors import IrrationalRoot, SplitAlgebra
from triherm.invariant import QuadForm, discriminant, quad_form
from triherm.scalars import QQ
from triherm.space import GroupElement, Point, act, random_group_element, random_point, tau, unipotent
from triherm.strata import Label, ProjPoint, classify, double_root, normalized_in_stratum, stratum_membership


def check_report(x, rep):
    assert act(rep.witness, x) == rep.normalized
    assert normalized_in_stratum(rep)


def test_semistable_and_zero(cbrt2):
    rep = classify(Point.make(cbrt2, 1, 0, 0, 1))
    assert rep.label is Label.SEMISTABLE and rep.label.exit_code == 0
    assert classify(Point.zero(cbrt2)).label is Label.ZERO


def test_s2_example(cbrt2):
    th = cbrt2.theta
    x = Point.make(cbrt2, 1, th, th * th, 2)
    rep = classify(x)
    assert rep.label is Label.S2
    assert rep.witness == tau(cbrt2) * unipotent(-th)
    assert rep.normalized == Point.make(cbrt2, 0, 0, 0, 1)


def test_s1_example(cbrt2):
    x = Point.make(cbrt2, 3, 1, 0, 0)
    rep = classify(x)
    assert rep.label is Label.S1
    check_report(x, rep)
    assert rep.normalized == Point.make(cbrt2, 0, 0, 1, 3)


def test_root_outside_base_field(ref):
    # the double root of F_x here is (-s3(u) : 1), not rational over the base field
    u = ref.theta + ref.one
    x = act(unipotent(u), Point.make(ref, 0, 1, 0, 0))
    rep = classify(x)
    assert rep.label is Label.S1
    check_report(x, rep)


@pytest.mark.parametrize("seed", range(8))
def test_orbit_images_of_normal_forms(alg, seed):
    import random

    r = random.Random(seed)
    f = alg.field
    y1 = Point(f.zero, alg.zero, alg.random_unit(r, 4), f.random(r, 4))
    y2 = Point(f.zero, alg.zero, alg.zero, f.random_nonzero(r, 4))
    for y, label in ((y1, Label.S1), (y2, Label.S2)):
        x = act(random_group_element(alg, r), y)
        assert discriminant(x) == 0
        rep = classify(x)
        assert rep.label is label
        check_report(x, rep)


def test_label_is_orbit_invariant(alg, rng):
    for _ in range(10):
        x = random_point(alg, rng, 3)
        g = random_group_element(alg, rng)
        assert classify(x).label is classify(act(g, x)).label


def test_double_root():
    alg = make_algebra((-2, 0, 0), QQ)
    one, zero, th = alg.one, alg.zero, alg.theta
    # (v1 - th v2)^2 = v1^2 - 2 th v1 v2 + th^2 v2^2
    assert double_root(QuadForm(one, -th.scale(2), th * th)) == ProjPoint.canonical(th, one)
    assert double_root(QuadForm(zero, zero, one)) == ProjPoint(one, zero)
    assert double_root(QuadForm(zero, zero, zero)) is None
    with pytest.raises(ValueError):
        double_root(QuadForm(one, zero, one))


def test_double_root_rejects_irrational_coefficients(cbrt2):
    q = quad_form(act(unipotent(cbrt2.theta), Point.make(cbrt2, 0, 1, 0, 0)))
    with pytest.raises(IrrationalRoot):
        double_root(QuadForm(q.a + cbrt2.delta, q.b, q.c))


def test_split_algebra_rejected():
    alg = make_algebra((0, -1, 0), QQ)
    with pytest.raises(SplitAlgebra):
        classify(Point.make(alg, 1, 0, 0, 0))


def test_stratum_predicates(cbrt2):
    p = Point.make(cbrt2, 0, 0, 1, 0)
    assert stratum_membership(p, "Y1ss") and stratum_membership(p, "Z1ss")
    assert not stratum_membership(p, "Y2")
    q = Point.make(cbrt2, 0, 0, 0, 5)
    assert stratum_membership(q, "Y2ss") and stratum_membership(q, "Z2")
    with pytest.raises(ValueError):
        stratum_membership(q, "Y3")


def test_transcript_and_identity_witness(cbrt2):
    rep = classify(Point.make(cbrt2, 0, 0, 1, 0))
    assert rep.witness == GroupElement.identity(cbrt2)
    assert rep.transcript
