import random
from fractions import Fraction

import pytest

from motivic_cc.lpoly import LPoly, VS_L, VS_UV, VS_Y
from motivic_cc.series import QQ, RING_L, RING_UV, RING_Y, TSeries, IntegralityError
from motivic_cc.lambda_power import (
    EulerExponents, euler_exp, euler_log, mobius, power,
    pre_lambda, pre_lambda_polyring,
)
from helpers import binomial, euler_log_bruteforce, random_lpoly, random_series

L = LPoly.var(VS_L, "L")
Y = LPoly.var(VS_Y, "y")
U = LPoly.var(VS_UV, "u")
V = LPoly.var(VS_UV, "v")


def test_mobius_values():
    assert [mobius(n) for n in range(1, 13)] == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0]


def test_pre_lambda_examples():
    assert pre_lambda(QQ, 1, 6) == TSeries(QQ, [1] * 7)
    assert pre_lambda(QQ, 0, 6) == TSeries.one(QQ, 6)
    # lambda_t(y) = (1 - y t)^(-1), checked by multiplying back
    lam = pre_lambda(RING_Y, Y, 6)
    assert lam == TSeries(RING_Y, [Y ** n for n in range(7)])
    one_minus_yt = TSeries.from_terms(RING_Y, 6, {0: 1, 1: -Y})
    assert lam * one_minus_yt == TSeries.one(RING_Y, 6)


def test_euler_exp_examples():
    assert euler_exp(EulerExponents(QQ, (1, 0, 0, 0))) == TSeries(QQ, [1] * 5)
    assert euler_exp(EulerExponents(QQ, (1, -1, 0, 0))) == TSeries.from_terms(QQ, 4, {0: 1, 1: 1})
    b = EulerExponents(RING_L, tuple(L ** k for k in range(3)))
    s = euler_exp(b)
    assert s.coeffs == (RING_L.one, RING_L.one, 1 + L, 1 + L + L ** 2)


def test_euler_log_examples():
    geo = TSeries(QQ, [1] * 7)
    assert euler_log(geo).exps == (Fraction(1),) + (Fraction(0),) * 5
    one_plus = TSeries.from_terms(QQ, 5, {0: 1, 1: 1})
    assert euler_log(one_plus).exps == (1, -1, 0, 0, 0)
    # surface punctual series decomposes to alpha_k = L^(k-1)
    b = EulerExponents(RING_L, tuple(L ** k for k in range(3)))
    assert euler_log(euler_exp(b)) == b


def test_euler_log_matches_bruteforce_oracle():
    # design obligation: validate the Adams-twisted Moebius inversion against
    # the degree-by-degree divide-out oracle before relying on it
    rng = random.Random(42)
    for _ in range(100):
        a = random_series(rng, RING_Y, 8, normalized=True)
        assert euler_log(a, require_integral=False).exps == \
            euler_log_bruteforce(a).exps


def test_euler_roundtrips_random():
    rng = random.Random(43)
    for _ in range(100):
        b = EulerExponents(RING_Y, tuple(random_lpoly(rng, VS_Y, max_deg=3, terms=3)
                                         for _ in range(8)))
        assert euler_log(euler_exp(b)) == b
        a = random_series(rng, RING_Y, 8, normalized=True)
        assert euler_exp(euler_log(a, require_integral=False)) == a


def test_euler_log_integrality_guard():
    a = TSeries.from_terms(QQ, 3, {0: 1, 1: Fraction(1, 2)})
    with pytest.raises(IntegralityError):
        euler_log(a)
    euler_log(a, require_integral=False)


def test_power_examples():
    one_plus = TSeries.from_terms(QQ, 6, {0: 1, 1: 1})
    assert power(one_plus, 1) == one_plus
    a = random_series(random.Random(3), RING_Y, 6, normalized=True)
    assert power(a, 0, require_integral=False) == TSeries.one(RING_Y, 6)


def test_power_binomial():
    one_plus = TSeries.from_terms(QQ, 8, {0: 1, 1: 1})
    for m in range(0, 7):
        expected = TSeries(QQ, [binomial(m, n) for n in range(9)])
        assert power(one_plus, m) == expected


def test_power_structure_axioms():
    # Def of a power structure, checked on random data over Z[y], N = 6
    rng = random.Random(44)
    ring = RING_Y
    for _ in range(25):
        a = random_series(rng, ring, 6, normalized=True)
        b = random_series(rng, ring, 6, normalized=True)
        m = random_lpoly(rng, VS_Y, max_deg=2, terms=2)
        n = random_lpoly(rng, VS_Y, max_deg=2, terms=2)
        pw = lambda s, e: power(s, e, require_integral=False)
        one = TSeries.one(ring, 6)
        assert pw(a, ring.zero) == one                              # (i)
        assert pw(a, ring.one) == a                                 # (ii)
        assert pw(a * b, m) == pw(a, m) * pw(b, m)                  # (iii)
        assert pw(a, m + n) == pw(a, m) * pw(a, n)                  # (iv)
        assert pw(a, m * n) == pw(pw(a, n), m)                      # (v)
        k = rng.randint(1, 3)
        assert pw(a.subst(k), m) == pw(a, m).subst(k)               # (vii)
    # (vi): (1+t)^m = 1 + m t + O(t^2)
    one_plus = TSeries.from_terms(ring, 6, {0: 1, 1: 1})
    m = 2 + 3 * Y
    s = power(one_plus, m)
    assert s.coeffs[0] == ring.one and s.coeffs[1] == m


def test_pre_lambda_polyring_examples():
    # p = 1 + uv: two-factor product 1/((1-t)(1-uvt))
    s = pre_lambda_polyring(1 + U * V, 4)
    geo1 = TSeries(RING_UV, [RING_UV.one] * 5)
    geo2 = TSeries(RING_UV, [(U * V) ** n for n in range(5)])
    assert s == geo1 * geo2
    assert pre_lambda_polyring(LPoly.const(VS_UV, 0), 4) == TSeries.one(RING_UV, 4)
    assert pre_lambda_polyring(LPoly.const(VS_UV, 2), 4) == geo1 * geo1


def test_pre_lambda_polyring_matches_adams_route():
    rng = random.Random(45)
    for _ in range(50):
        p = random_lpoly(rng, VS_UV, max_deg=3, terms=3)
        n = rng.randint(1, 6)
        assert pre_lambda_polyring(p, n) == pre_lambda(RING_UV, p, n)
