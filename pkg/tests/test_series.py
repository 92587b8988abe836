import random
from fractions import Fraction

import pytest

from motivic_cc.lpoly import LPoly, VS_Y
from motivic_cc.series import (
    QQ, RING_Y, TSeries, NonUnitError, OrderMismatchError, IntegralityError,
)
from helpers import random_series

Y = LPoly.var(VS_Y, "y")


def geometric(ring, order):
    return TSeries(ring, [ring.one] * (order + 1))


def test_mul_basic():
    one_plus = TSeries.from_terms(QQ, 4, {0: 1, 1: 1})
    one_minus = TSeries.from_terms(QQ, 4, {0: 1, 1: -1})
    assert one_plus * one_minus == TSeries.from_terms(QQ, 4, {0: 1, 2: -1})
    a = random_series(random.Random(0), QQ, 4)
    assert a * TSeries.one(QQ, 4) == a


def test_mul_geometric_telescopes():
    g = geometric(QQ, 8)
    one_minus = TSeries.from_terms(QQ, 8, {0: 1, 1: -1})
    assert g * one_minus == TSeries.one(QQ, 8)


def test_order_mismatch():
    with pytest.raises(OrderMismatchError):
        TSeries.one(QQ, 3) * TSeries.one(QQ, 4)
    with pytest.raises(OrderMismatchError):
        TSeries.one(QQ, 3) + TSeries.one(RING_Y, 3)


def test_invert():
    one_minus = TSeries.from_terms(QQ, 6, {0: 1, 1: -1})
    assert one_minus.invert() == geometric(QQ, 6)
    assert TSeries.one(QQ, 6).invert() == TSeries.one(QQ, 6)
    one_plus = TSeries.from_terms(QQ, 6, {0: 1, 1: 1})
    inv = one_plus.invert()
    assert inv == TSeries(QQ, [(-1) ** n for n in range(7)])
    assert one_plus * inv == TSeries.one(QQ, 6)


def test_invert_requires_unit():
    with pytest.raises(NonUnitError):
        TSeries.from_terms(QQ, 3, {0: 2}).invert()


def test_exp_classical():
    # exp(sum t^r/r) = 1/(1-t)
    arg = TSeries.from_terms(QQ, 8, {r: Fraction(1, r) for r in range(1, 9)})
    assert arg.exp() == geometric(QQ, 8)
    assert TSeries.zero(QQ, 5).exp() == TSeries.one(QQ, 5)
    assert TSeries.one(QQ, 5).log() == TSeries.zero(QQ, 5)


def test_exp_over_polynomial_ring():
    # exp(yt + y^2 t^2/2 + ...) = sum y^n t^n
    arg = TSeries(RING_Y, [RING_Y.zero] + [(Y ** r).scale(Fraction(1, r)) for r in range(1, 7)])
    assert arg.exp() == TSeries(RING_Y, [Y ** n for n in range(7)])


def test_exp_log_roundtrip_random():
    rng = random.Random(5)
    for _ in range(100):
        a = random_series(rng, RING_Y, 8, zero_constant=True)
        assert a.exp().log() == a
        b = random_series(rng, RING_Y, 8, normalized=True)
        assert b.log().exp() == b


def test_exp_additive_to_multiplicative():
    rng = random.Random(6)
    for _ in range(30):
        a = random_series(rng, RING_Y, 6, zero_constant=True)
        b = random_series(rng, RING_Y, 6, zero_constant=True)
        assert (a + b).exp() == a.exp() * b.exp()


def test_subst():
    a = TSeries.from_terms(QQ, 5, {0: 1, 1: 1})
    assert a.subst(2) == TSeries.from_terms(QQ, 5, {0: 1, 2: 1})
    assert a.subst(1) == a
    b = TSeries.from_terms(QQ, 4, {0: 1, 1: 1, 2: 3})
    assert b.subst(1, sign=-1) == TSeries.from_terms(QQ, 4, {0: 1, 1: -1, 2: 3})


def test_subst_composition():
    rng = random.Random(8)
    for _ in range(30):
        a = random_series(rng, QQ, 8)
        j, k = rng.randint(1, 3), rng.randint(1, 3)
        assert a.subst(k).subst(j) == a.subst(j * k)


def test_assert_integral():
    TSeries.from_terms(QQ, 2, {0: 1, 2: -4}).assert_integral()
    with pytest.raises(IntegralityError):
        TSeries.from_terms(QQ, 2, {1: Fraction(1, 2)}).assert_integral()
    with pytest.raises(IntegralityError):
        TSeries(RING_Y, [RING_Y.one, Y.scale(Fraction(1, 3))]).assert_integral()
