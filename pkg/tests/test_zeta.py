import math

import mpmath
import pytest
import sympy as sp

from triherm.errors import NonMaximalOrder
from triherm.zeta import (
    FieldInvariants,
    LocalFactor,
    completed_zeta,
    constants,
    dedekind_zeta,
    gamma_factor,
    ideal_counts,
    local_factor,
    phi_ratio,
    primes_up_to,
    residue_completed,
    residue_kappa,
    riemann_zeta,
)

REF = (-1, -1, 0)
PLASTIC = 1.324717957244746
REF_INV = FieldInvariants(r1=1, r2=1, h=1, R=math.log(PLASTIC), w=2, d_abs=23)
t = sp.Symbol("t")


def sympy_degrees(p):
    _, factors = sp.Poly(t**3 - t - 1, t, modulus=p).factor_list()
    return tuple(sorted(g.degree() for g, e in factors for _ in range(e)))


def test_primes():
    assert list(primes_up_to(30)) == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert len(primes_up_to(1)) == 0


@pytest.mark.parametrize("p,kind", [(2, "(3)"), (5, "(1)(2)"), (23, "(1²)(1)")])
def test_reference_splitting_types(p, kind):
    assert local_factor(p, REF).splitting_type == kind


def test_local_factors_match_sympy():
    for p in primes_up_to(400):
        p = int(p)
        if p == 23:
            continue
        assert local_factor(p, REF).degrees == sympy_degrees(p)


def test_fully_split_type_and_wild_refusal():
    # 59 splits completely in the field of discriminant -23
    assert local_factor(59, REF).splitting_type == "(1)(1)(1)"
    with pytest.raises(NonMaximalOrder):
        local_factor(3, (-2, 0, 0))


def test_non_maximal_order_refused():
    with pytest.raises(NonMaximalOrder):
        local_factor(2, (-2, 0, 0))  # disc -108 is divisible by 4


def test_euler_factor_and_ideal_counts():
    lf = LocalFactor(5, ((1, 1), (2, 1)))
    assert lf.ideal_counts(4) == [1, 1, 2, 2, 3]
    s = 2.0
    series = sum(c * 5.0 ** (-k * s) for k, c in enumerate(lf.ideal_counts(40)))
    assert abs(series - lf.euler_factor(s)) < 1e-14


def test_ideal_counts_against_direct_factorization():
    n = 300
    a = ideal_counts(REF, n)
    for m in range(1, n + 1):
        expected = 1
        for p, k in sp.factorint(m).items():
            if p == 23:
                expected *= 1 + k  # (1^2)(1): both primes have norm 23
                continue
            degs = sympy_degrees(p)
            count = [1] + [0] * k
            for d in degs:
                for j in range(d, k + 1):
                    count[j] += count[j - d]
            expected *= count[k]
        assert a[m] == expected, m


def test_ideal_density_matches_residue():
    n = 200000
    density = ideal_counts(REF, n)[1:].sum() / n
    assert abs(density - float(residue_kappa(REF_INV))) < 5e-3


def test_dedekind_two_methods_agree_small_bound():
    est = dedekind_zeta(2, REF, prime_bound=20000)
    assert est.discrepancy < 1e-3
    assert est.tail_bound > 0
    large = dedekind_zeta(30, REF, prime_bound=1000)
    # 2 is inert, so the smallest nontrivial ideal norm is 5
    assert abs(float(large.value - 1) / 5.0**-30 - 1) < 1e-3


def test_dedekind_rejects_nonconvergent():
    with pytest.raises(ValueError):
        dedekind_zeta(1, REF, prime_bound=100)


def test_rational_field_limit():
    assert abs(riemann_zeta(2) - math.pi**2 / 6) < 1e-15


def test_field_invariants_validation():
    with pytest.raises(ValueError):
        FieldInvariants(r1=2, r2=0, h=1, R=1.0, w=2, d_abs=5)
    with pytest.raises(ValueError):
        FieldInvariants(r1=1, r2=1, h=0, R=1.0, w=2, d_abs=23)


def test_gamma_factor_convention():
    g = gamma_factor(2, REF_INV)
    expected = 23 * (1 / mpmath.pi) * (2 * mpmath.pi) ** -1 * 1
    assert abs(g - expected) < 1e-30


def test_constants_are_consistent():
    z2 = mpmath.mpf(1.1048)
    rho, vol = constants(REF_INV, z2)
    assert abs(rho * vol - 1) < 1e-30
    assert abs(rho - residue_completed(REF_INV) / completed_zeta(2, REF_INV, z2)) < 1e-30
    assert residue_kappa(REF_INV) > 0


def test_phi_ratio():
    r = phi_ratio(2, REF_INV, 1.2, 1.05)
    assert abs(r - completed_zeta(2, REF_INV, 1.2) / completed_zeta(3, REF_INV, 1.05)) < 1e-25
