"""Truncated formal power series in t over an exact coefficient ring.

A :class:`TSeries` stores coefficients for t^0 .. t^N; every operation
truncates at N and mixing different truncation orders (or different
coefficient rings) is an error rather than a silent re-truncation.  The
coefficient ring is described by a :class:`CoeffRing`, which also carries
the ring's Adams endomorphisms and its notion of integrality, so the same
series code serves Q, the motivic Laurent ring in L, Z[u,v] and Q[y^(1/2)].
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Sequence

from .lpoly import LPoly, VarSet, VS_L, VS_UV, VS_Y


class OrderMismatchError(ValueError):
    """Series operands have different truncation orders."""


class NonUnitError(ValueError):
    """Constant term is not 1 where a normalized series is required."""


class IntegralityError(ArithmeticError):
    """A coefficient left the declared integral subring."""


class CoeffRing:
    """Descriptor of an exact coefficient ring with Adams operations."""

    name: str = "?"

    @property
    def zero(self):
        raise NotImplementedError

    @property
    def one(self):
        raise NotImplementedError

    def from_int(self, n: int):
        raise NotImplementedError

    def coerce(self, x):
        raise NotImplementedError

    def adams(self, r: int, x):
        """The r-th Adams endomorphism applied to x."""
        raise NotImplementedError

    def div_int(self, x, n: int):
        """Exact division of x by the integer n in the rationalized ring."""
        raise NotImplementedError

    def is_integral(self, x) -> bool:
        raise NotImplementedError

    def __repr__(self):
        return self.name


class RationalField(CoeffRing):
    """Plain rationals; Adams operations act as the identity."""

    name = "Q"
    _ZERO = Fraction(0)
    _ONE = Fraction(1)

    @property
    def zero(self) -> Fraction:
        return self._ZERO

    @property
    def one(self) -> Fraction:
        return self._ONE

    def from_int(self, n: int) -> Fraction:
        return Fraction(n)

    def coerce(self, x) -> Fraction:
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        raise TypeError(f"cannot coerce {x!r} into Q")

    def adams(self, r: int, x: Fraction) -> Fraction:
        return x

    def div_int(self, x: Fraction, n: int) -> Fraction:
        return x / n

    def is_integral(self, x: Fraction) -> bool:
        return x.denominator == 1

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")


class LaurentRing(CoeffRing):
    """Laurent polynomials over Q in a fixed variable set.

    Adams operations scale exponent vectors (the polynomial-ring pre-lambda
    structure); integrality means integer coefficients.
    """

    def __init__(self, vars: VarSet):
        self.vars = vars
        self.name = f"Q[{','.join(vars.names) or ''}]"
        self._zero = LPoly.const(vars, 0)
        self._one = LPoly.const(vars, 1)

    @property
    def zero(self) -> LPoly:
        return self._zero

    @property
    def one(self) -> LPoly:
        return self._one

    def from_int(self, n: int) -> LPoly:
        return LPoly.const(self.vars, n)

    def coerce(self, x) -> LPoly:
        if isinstance(x, LPoly):
            if x.vars != self.vars:
                raise TypeError(f"{x!r} lives over {x.vars}, not {self.vars}")
            return x
        if isinstance(x, (int, Fraction)):
            return LPoly.const(self.vars, x)
        raise TypeError(f"cannot coerce {x!r} into {self.name}")

    def adams(self, r: int, x: LPoly) -> LPoly:
        return x.adams(r)

    def div_int(self, x: LPoly, n: int) -> LPoly:
        return x.scale(Fraction(1, n))

    def is_integral(self, x: LPoly) -> bool:
        return x.is_integral()

    def __eq__(self, other):
        return isinstance(other, LaurentRing) and other.vars == self.vars

    def __hash__(self):
        return hash(self.vars)


QQ = RationalField()
RING_L = LaurentRing(VS_L)
RING_Y = LaurentRing(VS_Y)
RING_UV = LaurentRing(VS_UV)


class TSeries:
    """Power series in t truncated at a fixed order."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: CoeffRing, coeffs: Sequence):
        if not coeffs:
            raise ValueError("a series needs at least the t^0 coefficient")
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "coeffs", tuple(ring.coerce(c) for c in coeffs))

    def __setattr__(self, *a):  # pragma: no cover
        raise AttributeError("TSeries is immutable")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def zero(cls, ring: CoeffRing, order: int) -> "TSeries":
        return cls(ring, [ring.zero] * (order + 1))

    @classmethod
    def one(cls, ring: CoeffRing, order: int) -> "TSeries":
        return cls(ring, [ring.one] + [ring.zero] * order)

    @classmethod
    def from_terms(cls, ring: CoeffRing, order: int, terms: dict[int, object]) -> "TSeries":
        coeffs = [ring.zero] * (order + 1)
        for n, c in terms.items():
            if 0 <= n <= order:
                coeffs[n] = ring.coerce(c)
        return cls(ring, coeffs)

    def coefficient(self, n: int):
        return self.coeffs[n]

    # -- arithmetic ------------------------------------------------------

    def _check(self, other: "TSeries") -> None:
        if self.order != other.order:
            raise OrderMismatchError(
                f"truncation orders differ: {self.order} vs {other.order}")
        if self.ring != other.ring:
            raise OrderMismatchError(
                f"coefficient rings differ: {self.ring} vs {other.ring}")

    def __add__(self, other: "TSeries") -> "TSeries":
        self._check(other)
        return TSeries(self.ring, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "TSeries") -> "TSeries":
        self._check(other)
        return TSeries(self.ring, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self) -> "TSeries":
        return TSeries(self.ring, [-a for a in self.coeffs])

    def __mul__(self, other) -> "TSeries":
        if not isinstance(other, TSeries):
            c = self.ring.coerce(other)
            return TSeries(self.ring, [a * c for a in self.coeffs])
        self._check(other)
        n = self.order
        zero = self.ring.zero
        out = [zero] * (n + 1)
        for i, a in enumerate(self.coeffs):
            if a == zero:
                continue
            for j in range(0, n - i + 1):
                b = other.coeffs[j]
                if b == zero:
                    continue
                out[i + j] = out[i + j] + a * b
        return TSeries(self.ring, out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, TSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def pow_int(self, m: int) -> "TSeries":
        if m < 0:
            return self.invert().pow_int(-m)
        result = TSeries.one(self.ring, self.order)
        base = self
        while m:
            if m & 1:
                result = result * base
            base = base * base if m > 1 else base
            m >>= 1
        return result

    def invert(self) -> "TSeries":
        """Multiplicative inverse of a series with constant term 1."""
        if self.coeffs[0] != self.ring.one:
            raise NonUnitError(f"constant term is {self.coeffs[0]}, not 1")
        n = self.order
        out = [self.ring.one] + [self.ring.zero] * n
        for m in range(1, n + 1):
            acc = self.ring.zero
            for k in range(1, m + 1):
                acc = acc + self.coeffs[k] * out[m - k]
            out[m] = -acc
        return TSeries(self.ring, out)

    def exp(self) -> "TSeries":
        """exp of a series with zero constant term."""
        if self.coeffs[0] != self.ring.zero:
            raise NonUnitError(f"exp needs zero constant term, got {self.coeffs[0]}")
        n = self.order
        out = [self.ring.one] + [self.ring.zero] * n
        for m in range(1, n + 1):
            acc = self.ring.zero
            for k in range(1, m + 1):
                acc = acc + (self.coeffs[k] * out[m - k]) * k
            out[m] = self.ring.div_int(acc, m)
        return TSeries(self.ring, out)

    def log(self) -> "TSeries":
        """log of a series with constant term 1."""
        if self.coeffs[0] != self.ring.one:
            raise NonUnitError(f"log needs constant term 1, got {self.coeffs[0]}")
        n = self.order
        out = [self.ring.zero] * (n + 1)
        for m in range(1, n + 1):
            acc = self.ring.zero
            for k in range(1, m):
                acc = acc + (out[k] * self.coeffs[m - k]) * k
            out[m] = self.coeffs[m] - self.ring.div_int(acc, m)
        return TSeries(self.ring, out)

    def subst(self, k: int = 1, sign: int = 1) -> "TSeries":
        """The substitution t -> sign * t^k, truncated at the same order."""
        if k < 1 or sign not in (1, -1):
            raise ValueError(f"bad substitution t -> {sign}*t^{k}")
        out = [self.ring.zero] * (self.order + 1)
        for n, c in enumerate(self.coeffs):
            if n * k > self.order:
                break
            out[n * k] = c if (sign == 1 or n % 2 == 0) else -c
        return TSeries(self.ring, out)

    def map_coeffs(self, target: CoeffRing, f: Callable) -> "TSeries":
        """Apply a coefficient-ring homomorphism f to every coefficient."""
        return TSeries(target, [f(c) for c in self.coeffs])

    def assert_integral(self, what: str = "series") -> "TSeries":
        """Fail loudly if any coefficient left the declared integral subring."""
        for n, c in enumerate(self.coeffs):
            if not self.ring.is_integral(c):
                raise IntegralityError(f"{what}: t^{n} coefficient {c} is not integral")
        return self

    def __str__(self) -> str:
        parts = []
        for n, c in enumerate(self.coeffs):
            if c == self.ring.zero:
                continue
            parts.append(f"({c})*t^{n}" if n else f"({c})")
        return " + ".join(parts) if parts else "0"

    def __repr__(self) -> str:
        return f"TSeries[{self.ring}; N={self.order}]<{self}>"
