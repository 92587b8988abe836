"""Sparse Laurent polynomials with half-integer exponents over exact rationals.

A polynomial is a mapping from exponent vectors to nonzero ``Fraction``
coefficients.  Exponents are counted in units of 1/2 and stored doubled, so
the tuple entry ``3`` means the variable appears with exponent 3/2 and ``-2``
means exponent -1.  Odd (genuinely half-integral) exponents are only legal
for the variables declared half-admissible (``L`` and ``y``); ``u``, ``v``
and every other symbol stay integral.

All values are immutable after construction and all operations are pure, so
instances can be shared freely between threads.  Structural equality equals
mathematical equality because zero coefficients are never stored.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Union

Coeff = Union[int, Fraction]
Expvec = tuple[int, ...]

#: variables that may carry half-integer exponents
HALF_ADMISSIBLE = frozenset({"L", "y"})

#: variables whose distinguished square root is the negative one: the class
#: of the affine line localizes at -L^(1/2), so Adams operations satisfy
#: Psi_r(-L^(1/2)) = (-L^(1/2))^r.  The genus variable y uses +y^(1/2).
NEGATIVE_ROOT = frozenset({"L"})


class VariableMismatchError(ValueError):
    """Operands live over different variable sets."""


class ExactDivisionError(ArithmeticError):
    """Polynomial division left a remainder (or divided by zero)."""


class SubstitutionError(ValueError):
    """Substitution request is incomplete or needs an undeclared root."""


@dataclass(frozen=True)
class VarSet:
    """Ordered set of variable names fixing the monomial layout."""

    names: tuple[str, ...]

    def __post_init__(self) -> None:
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"duplicate variable names: {self.names}")

    def index(self, name: str) -> int:
        return self.names.index(name)

    def __contains__(self, name: str) -> bool:
        return name in self.names

    def __len__(self) -> int:
        return len(self.names)

    def __str__(self) -> str:
        return "(" + ",".join(self.names) + ")"


VS_NONE = VarSet(())
VS_L = VarSet(("L",))
VS_Y = VarSet(("y",))
VS_UV = VarSet(("u", "v"))


def _coerce(c: Coeff) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError(f"not an exact coefficient: {c!r}")


class LPoly:
    """Laurent polynomial over a fixed :class:`VarSet`.

    ``terms`` maps doubled-exponent vectors to ``Fraction`` coefficients;
    zero coefficients are dropped on construction.
    """

    __slots__ = ("vars", "terms")

    def __init__(self, vars: VarSet, terms: Mapping[Expvec, Coeff]):
        clean: dict[Expvec, Fraction] = {}
        n = len(vars)
        for exps, c in terms.items():
            if len(exps) != n:
                raise VariableMismatchError(
                    f"exponent vector {exps} does not match variables {vars}")
            c = _coerce(c)
            if c == 0:
                continue
            for name, e in zip(vars.names, exps):
                if e % 2 != 0 and name not in HALF_ADMISSIBLE:
                    raise ValueError(
                        f"half-integer exponent {Fraction(e, 2)} on integral variable {name}")
            clean[tuple(exps)] = c
        object.__setattr__(self, "vars", vars)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, *a):  # pragma: no cover
        raise AttributeError("LPoly is immutable")

    @classmethod
    def _make(cls, vars: VarSet, terms: dict[Expvec, Fraction]) -> "LPoly":
        # internal fast path: operands were valid, so skip per-term checks
        obj = object.__new__(cls)
        object.__setattr__(obj, "vars", vars)
        object.__setattr__(obj, "terms", {e: c for e, c in terms.items() if c != 0})
        return obj

    # -- constructors ------------------------------------------------

    @classmethod
    def const(cls, vars: VarSet, c: Coeff) -> "LPoly":
        return cls(vars, {(0,) * len(vars): c})

    @classmethod
    def var(cls, vars: VarSet, name: str, half_steps: int = 2) -> "LPoly":
        """The monomial ``name`` raised to ``half_steps/2``."""
        exps = [0] * len(vars)
        exps[vars.index(name)] = half_steps
        return cls(vars, {tuple(exps): 1})

    # -- predicates ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == {(0,) * len(self.vars): Fraction(1)}

    def is_constant(self) -> bool:
        return all(all(e == 0 for e in exps) for exps in self.terms)

    def is_integral(self) -> bool:
        """True when every coefficient is an integer."""
        return all(c.denominator == 1 for c in self.terms.values())

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * len(self.vars), Fraction(0))

    def as_fraction(self) -> Fraction:
        """The value of a constant polynomial."""
        if not self.is_constant():
            raise ValueError(f"not a constant polynomial: {self}")
        return self.constant_term()

    # -- ring operations -----------------------------------------------

    def _check(self, other: "LPoly") -> None:
        if self.vars != other.vars:
            raise VariableMismatchError(f"variable sets differ: {self.vars} vs {other.vars}")

    def __add__(self, other) -> "LPoly":
        if not isinstance(other, LPoly):
            other = LPoly.const(self.vars, other)
        self._check(other)
        out = dict(self.terms)
        for exps, c in other.terms.items():
            out[exps] = out.get(exps, Fraction(0)) + c
        return LPoly._make(self.vars, out)

    __radd__ = __add__

    def __neg__(self) -> "LPoly":
        return LPoly._make(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "LPoly":
        if not isinstance(other, LPoly):
            other = LPoly.const(self.vars, other)
        return self + (-other)

    def __rsub__(self, other) -> "LPoly":
        return (-self) + other

    def __mul__(self, other) -> "LPoly":
        if not isinstance(other, LPoly):
            return self.scale(other)
        self._check(other)
        out: dict[Expvec, Fraction] = {}
        get = out.get
        zero = Fraction(0)
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(map(sum, zip(e1, e2)))
                out[e] = get(e, zero) + c1 * c2
        return LPoly._make(self.vars, out)

    __rmul__ = __mul__

    def scale(self, c: Coeff) -> "LPoly":
        c = _coerce(c)
        if c == 0:
            return LPoly._make(self.vars, {})
        return LPoly._make(self.vars, {e: cc * c for e, cc in self.terms.items()})

    def __pow__(self, n: int) -> "LPoly":
        if not isinstance(n, int):
            raise TypeError("polynomial powers must be integers")
        if n < 0:
            if len(self.terms) != 1:
                raise ExactDivisionError(
                    f"negative power of a non-monomial: ({self})^{n}")
            ((exps, c),) = self.terms.items()
            inv = LPoly(self.vars, {tuple(-e for e in exps): Fraction(1) / c})
            return inv ** (-n)
        result = LPoly.const(self.vars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = LPoly.const(self.vars, other)
        if not isinstance(other, LPoly):
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        return hash((self.vars, tuple(sorted(self.terms.items()))))

    # -- the Adams endomorphisms ----------------------------------------

    def adams(self, r: int) -> "LPoly":
        """Scale every exponent vector by ``r``; a ring endomorphism.

        This realizes the operation determined by the product formula for
        the pre-lambda structure on polynomial rings: a monomial ``m`` maps
        to ``m^r``, and half-integer exponents scale the same way, e.g.
        ``y^(1/2) -> y^(r/2)``.  For the motivic variable the distinguished
        root is ``-L^(1/2)`` (see :data:`NEGATIVE_ROOT`), so odd L-exponents
        pick up the sign making ``-L^(1/2) -> (-L^(1/2))^r``; without it the
        genus specializations would not commute with the Adams operations.
        """
        if r < 1:
            raise ValueError(f"Adams index must be >= 1, got {r}")
        if r == 1:
            return self
        signed = [i for i, name in enumerate(self.vars.names) if name in NEGATIVE_ROOT]
        out: dict[Expvec, Fraction] = {}
        for exps, c in self.terms.items():
            if r % 2 == 0 and sum(exps[i] for i in signed) % 2 == 1:
                c = -c
            out[tuple(e * r for e in exps)] = c
        return LPoly._make(self.vars, out)

    # -- exact division ---------------------------------------------------

    def exact_div(self, other: "LPoly") -> "LPoly":
        """Return ``q`` with ``q * other == self``; raise if none exists.

        A failure signals a violated integrality/divisibility claim, so the
        error carries both operands.
        """
        self._check(other)
        if other.is_zero():
            raise ExactDivisionError("division by zero polynomial")
        if self.is_zero():
            return self
        n = len(self.vars)
        shift_a = tuple(min(e[i] for e in self.terms) for i in range(n))
        shift_b = tuple(min(e[i] for e in other.terms) for i in range(n))
        num = {tuple(a - s for a, s in zip(e, shift_a)): c for e, c in self.terms.items()}
        den = {tuple(a - s for a, s in zip(e, shift_b)): c for e, c in other.terms.items()}
        lead_b = max(den)
        cb = den[lead_b]
        quot: dict[Expvec, Fraction] = {}
        rem = dict(num)
        while rem:
            lead_r = max(rem)
            m = tuple(a - b for a, b in zip(lead_r, lead_b))
            if any(e < 0 for e in m):
                raise ExactDivisionError(f"({self}) is not divisible by ({other})")
            c = rem[lead_r] / cb
            quot[m] = c
            for e2, c2 in den.items():
                e = tuple(a + b for a, b in zip(m, e2))
                nc = rem.get(e, Fraction(0)) - c * c2
                if nc == 0:
                    rem.pop(e, None)
                else:
                    rem[e] = nc
        shift_q = tuple(a - b for a, b in zip(shift_a, shift_b))
        return LPoly._make(self.vars, {tuple(a + s for a, s in zip(e, shift_q)): c
                                       for e, c in quot.items()})

    # -- substitution ---------------------------------------------------

    def substitute(self, target: VarSet,
                   whole: Mapping[str, "LPoly | Coeff"] | None = None,
                   half: Mapping[str, "LPoly | Coeff"] | None = None) -> "LPoly":
        """Evaluate into the ``target`` variable set.

        ``whole[name]`` gives the value of the variable itself and is legal
        only where ``name`` occurs with integer exponents; ``half[name]``
        gives the value of ``name**(1/2)`` and covers all exponents.  The
        paper's sign conventions for square roots are deliberate, so no root
        is ever taken implicitly: a half-integer exponent without a ``half``
        entry is an error.  Variables mentioned in neither mapping must be
        present in ``target`` and are kept.
        """
        whole = dict(whole or {})
        half = dict(half or {})

        def value(name: str, v) -> "LPoly":
            if isinstance(v, (int, Fraction)):
                if _coerce(v) == 0:
                    return LPoly.const(target, 0)
                return LPoly.const(target, v)
            if not isinstance(v, LPoly):
                raise TypeError(f"bad substitution value for {name}: {v!r}")
            if v.vars != target:
                raise VariableMismatchError(
                    f"value for {name} lives over {v.vars}, expected {target}")
            return v

        kept: list[int] = []
        for i, name in enumerate(self.vars.names):
            if name in whole or name in half:
                continue
            if name not in target:
                raise SubstitutionError(f"variable {name} neither assigned nor kept")
            kept.append(i)

        result = LPoly.const(target, 0)
        for exps, c in self.terms.items():
            term = LPoly.const(target, c)
            for i, name in enumerate(self.vars.names):
                e = exps[i]
                if e == 0:
                    continue
                if name in half:
                    term = term * value(name, half[name]) ** e
                elif name in whole:
                    if e % 2 != 0:
                        raise SubstitutionError(
                            f"{name} occurs with exponent {Fraction(e, 2)}; "
                            f"declare a value for {name}^(1/2)")
                    term = term * value(name, whole[name]) ** (e // 2)
                else:
                    j = target.index(name)
                    mono = [0] * len(target)
                    mono[j] = e
                    term = term * LPoly(target, {tuple(mono): 1})
            result = result + term
        return result

    # -- printing --------------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts: list[str] = []
        for exps in sorted(self.terms):
            c = self.terms[exps]
            mono = ""
            for name, e in zip(self.vars.names, exps):
                if e == 0:
                    continue
                if e == 2:
                    mono += name
                elif e % 2 == 0:
                    k = e // 2
                    mono += f"{name}^{k}" if k > 0 else f"{name}^({k})"
                else:
                    mono += f"{name}^({e}/2)"
            if not mono:
                body = str(c)
            elif c == 1:
                body = mono
            elif c == -1:
                body = "-" + mono
            else:
                body = f"{c}*{mono}"
            if parts and not body.startswith("-"):
                parts.append("+" + body)
            else:
                parts.append(body)
        return "".join(parts)

    def __repr__(self) -> str:
        return f"LPoly<{self}>"
