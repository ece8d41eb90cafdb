import random

import pytest

from triherm.cubealg import make_algebra
from triherm.scalars import QQ, PrimeField

REFERENCE = (-1, -1, 0)  # t^3 - t - 1
CUBE_ROOT_2 = (-2, 0, 0)  # t^3 - 2


@pytest.fixture
def ref():
    return make_algebra(REFERENCE, QQ)


@pytest.fixture
def cbrt2():
    return make_algebra(CUBE_ROOT_2, QQ)


@pytest.fixture
def f7():
    return make_algebra(CUBE_ROOT_2, PrimeField(7))


@pytest.fixture
def f3():
    return make_algebra(REFERENCE, PrimeField(3))


@pytest.fixture(params=["cbrt2", "ref", "f7"])
def alg(request):
    return request.getfixturevalue(request.param)


@pytest.fixture
def rng():
    return random.Random(20261018)


ACCEPTANCE: dict = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
