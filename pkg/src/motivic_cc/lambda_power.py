"""Pre-lambda structures, Euler products and the induced power structure.

The pre-lambda series of a coefficient m is

    (1 - t)^(-m) := lambda_t(m) = exp( sum_r Psi_r(m) t^r / r ),

with Psi_r the ring's Adams endomorphisms.  Every normalized series A then
factors uniquely as an Euler product prod_k (1 - t^k)^(-b_k); decomposing,
re-assembling and exponentiating by ring elements,

    A^m := prod_k (1 - t^k)^(-m b_k),

is the whole calculus this module provides.  The inverse direction computes
b_k from c_n = [t^n] log A by the Adams-twisted Moebius inversion

    b_k = (1/k) * sum_{d | k} mu(k/d) Psi_{k/d}(d * c_d),

which the test suite validates against a brute-force divide-out oracle
before anything else relies on it.
"""

from __future__ import annotations

from dataclasses import dataclass
from .lpoly import LPoly
from .series import CoeffRing, IntegralityError, NonUnitError, TSeries, LaurentRing


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def mobius(n: int) -> int:
    if n == 1:
        return 1
    result, m, p = 1, n, 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            result = -result
        p += 1
    if m > 1:
        result = -result
    return result


@dataclass(frozen=True)
class EulerExponents:
    """The exponent sequence b_1 .. b_N of prod_k (1 - t^k)^(-b_k)."""

    ring: CoeffRing
    exps: tuple

    def __post_init__(self):
        object.__setattr__(self, "exps", tuple(self.ring.coerce(b) for b in self.exps))

    @property
    def order(self) -> int:
        return len(self.exps)

    def exponent(self, k: int):
        """b_k (1-indexed)."""
        return self.exps[k - 1]

    def scale(self, m) -> "EulerExponents":
        m = self.ring.coerce(m)
        return EulerExponents(self.ring, tuple(b * m for b in self.exps))


def pre_lambda(ring: CoeffRing, m, order: int) -> TSeries:
    """lambda_t(m) = exp(sum_r Psi_r(m) t^r / r), a normalized series."""
    m = ring.coerce(m)
    arg = TSeries.from_terms(ring, order,
                             {r: ring.div_int(ring.adams(r, m), r)
                              for r in range(1, order + 1)})
    return arg.exp()


def euler_exp(b: EulerExponents, order: int | None = None) -> TSeries:
    """Assemble prod_{k<=N} (1 - t^k)^(-b_k).

    Computed as one exponential, exp(sum_{k,r} Psi_r(b_k) t^{kr} / r),
    which is the factor-by-factor product with the logs combined first.
    """
    n = b.order if order is None else order
    ring = b.ring
    arg = [ring.zero] * (n + 1)
    for k in range(1, min(b.order, n) + 1):
        bk = b.exponent(k)
        if bk == ring.zero:
            continue
        for r in range(1, n // k + 1):
            arg[k * r] = arg[k * r] + ring.div_int(ring.adams(r, bk), r)
    return TSeries(ring, arg).exp()


def euler_log(a: TSeries, require_integral: bool = True) -> EulerExponents:
    """Decompose a normalized series into its Euler exponents.

    With ``require_integral`` the b_k must stay in the declared integral
    subring; a surviving denominator signals a bug or a false claim.
    """
    if a.coeffs[0] != a.ring.one:
        raise NonUnitError("Euler decomposition needs a normalized series")
    ring = a.ring
    c = a.log().coeffs
    out = []
    for k in range(1, a.order + 1):
        acc = ring.zero
        for d in divisors(k):
            mu = mobius(k // d)
            if mu == 0:
                continue
            term = ring.adams(k // d, c[d] * d)
            acc = acc + (term if mu == 1 else -term)
        bk = ring.div_int(acc, k)
        if require_integral and not ring.is_integral(bk):
            raise IntegralityError(f"Euler exponent b_{k} = {bk} is not integral")
        out.append(bk)
    return EulerExponents(ring, tuple(out))


def power(a: TSeries, m, require_integral: bool = True) -> TSeries:
    """The power structure A(t)^m induced by the pre-lambda ring."""
    b = euler_log(a, require_integral=require_integral)
    return euler_exp(b.scale(m), a.order)


def pre_lambda_polyring(p: LPoly, order: int) -> TSeries:
    """lambda_t of an integer polynomial via the monomial product formula.

    For p = sum a_w * w over monomials w this is prod_w (1 - w t)^(-a_w),
    the pre-lambda structure on a polynomial ring.  It must agree with
    :func:`pre_lambda` over the same ring; the test suite checks that.
    """
    ring = LaurentRing(p.vars)
    if not p.is_integral():
        raise IntegralityError(f"polynomial-ring lambda needs integer coefficients: {p}")
    result = TSeries.one(ring, order)
    for exps in sorted(p.terms):
        a = int(p.terms[exps])
        w = LPoly(p.vars, {exps: 1})
        geom = TSeries(ring, [w ** n for n in range(order + 1)])
        result = result * geom.pow_int(a)
    return result
