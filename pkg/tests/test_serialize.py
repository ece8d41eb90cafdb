import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from triherm.cubealg import make_algebra
from triherm.errors import BadCharacteristic
from triherm.scalars import QQ, PrimeField
from triherm.serialize import (
    field_from_config,
    field_to_config,
    group_from_json,
    group_to_json,
    parse_coeffs,
    point_from_json,
    point_to_json,
)
from triherm.space import random_group_element, random_point

fractions = st.fractions(min_value=-50, max_value=50, max_denominator=30)


def test_field_config_roundtrip():
    alg = field_from_config({"base": "Q", "f": ["-1", "-1", "0"]})
    assert alg == make_algebra((-1, -1, 0), QQ)
    assert field_from_config(field_to_config(alg)) == alg
    fp = field_from_config({"base": {"Fp": 5}, "f": ["1", "1", "0"]})
    assert fp.field == PrimeField(5)
    assert field_to_config(fp) == {"base": {"Fp": 5}, "f": ["1", "1", "0"]}


def test_field_config_errors():
    with pytest.raises(ValueError):
        field_from_config({"base": "Q"})
    with pytest.raises(ValueError):
        field_from_config({"base": "R", "f": [1, 1, 0]})
    with pytest.raises(BadCharacteristic):
        field_from_config({"base": {"Fp": 23}, "f": [-1, -1, 0]})


def test_parse_coeffs():
    assert parse_coeffs("-1,-1,0") == [-1, -1, 0]
    with pytest.raises(ValueError):
        parse_coeffs("1,2")


@given(st.lists(fractions, min_size=8, max_size=8))
@settings(max_examples=50, deadline=None)
def test_point_roundtrip_exact(coords):
    alg = make_algebra((-1, -1, 0), QQ)
    from triherm.space import Point

    x = Point.from_coords(alg, coords)
    doc = json.loads(json.dumps(point_to_json(x)))
    assert point_from_json(alg, doc) == x
    assert all("/" in v for v in [doc["x111"], doc["x222"], *doc["x211"]])


def test_point_scalar_shorthand():
    alg = make_algebra((-1, -1, 0), QQ)
    x = point_from_json(alg, {"x111": "1", "x211": 0, "x122": "1/2", "x222": 2})
    assert x.x122 == alg.scalar(QQ("1/2"))


def test_point_missing_field():
    alg = make_algebra((-1, -1, 0), QQ)
    with pytest.raises(ValueError, match="missing"):
        point_from_json(alg, {"x111": "1"})


def test_finite_field_residues(f7, rng):
    x = random_point(f7, rng)
    doc = point_to_json(x)
    assert all(v.isdigit() for v in doc["x211"])
    assert point_from_json(f7, doc) == x


def test_group_roundtrip(alg, rng):
    for _ in range(10):
        g = random_group_element(alg, rng)
        assert group_from_json(alg, json.dumps(group_to_json(g))) == g


def test_singular_group_rejected(ref):
    with pytest.raises(ValueError):
        group_from_json(ref, {"t1": "1", "g2": [["1", "1"], ["1", "1"]]})
