"""Free symbolic Pontrjagin ring over a homology model.

Classes living on the n-th symmetric product are written in terms of
pushforward atoms d^k_*(basis class); a term is a multiset of such atoms
with total index n, stored as a sorted tuple of (k, basis id) pairs.  The
grading variable t keeps track of n, the product is multiset union with
coefficients multiplying, and the coefficient ring is either Q[y^(1/2)]
(Hirzebruch level) or Q (Chern level) via the usual ring descriptor.

The free model deliberately ignores any relations holding in the honest
homology of symmetric products: every identity proved by the calculus is
generated by the same operations on both sides, so equality of free-model
expressions is the verifiable notion, and degree-level (genus) equalities
provide the numeric cross-checks for proper models.
"""

from __future__ import annotations

from fractions import Fraction

from .lpoly import LPoly
from .series import CoeffRing, QQ, RING_L, RING_Y, TSeries
from .lambda_power import euler_log
from .motives import (
    TwoRouteMismatchError, UnsupportedRangeError, Y,
    chi_of_y, punctual_exponents_small, spec_chi, spec_chi_minus_y,
    virtual_alpha, virtual_punctual_series, map_series,
)
from .hirzebruch import HomologyModel, chern_class_of

Multiset = tuple[tuple[int, str], ...]
HClass = dict[str, object]


class PontElement:
    """Homogeneous piece of grading n: multisets of atoms with sum of k's = n."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: dict[Multiset, object], ring: CoeffRing):
        clean = {}
        zero = ring.zero
        for ms, c in terms.items():
            if sum(k for k, _ in ms) != n:
                raise ValueError(f"multiset {ms} does not have total index {n}")
            if any(k < 1 for k, _ in ms):
                raise ValueError(f"atom index must be >= 1 in {ms}")
            if c != zero:
                clean[tuple(sorted(ms))] = c
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, *a):  # pragma: no cover
        raise AttributeError("PontElement is immutable")

    def __eq__(self, other):
        return (isinstance(other, PontElement)
                and self.n == other.n and self.terms == other.terms)


class PontSeries:
    """t-graded element of the free Pontrjagin ring, truncated at a fixed order."""

    __slots__ = ("model", "ring", "components")

    def __init__(self, model: HomologyModel, ring: CoeffRing,
                 components: tuple[PontElement, ...]):
        for n, el in enumerate(components):
            if el.n != n:
                raise ValueError(f"component {n} carries grading {el.n}")
        object.__setattr__(self, "model", model)
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "components", tuple(components))

    def __setattr__(self, *a):  # pragma: no cover
        raise AttributeError("PontSeries is immutable")

    @property
    def order(self) -> int:
        return len(self.components) - 1

    @classmethod
    def from_dicts(cls, model, ring, dicts) -> "PontSeries":
        return cls(model, ring,
                   tuple(PontElement(n, d, ring) for n, d in enumerate(dicts)))

    @classmethod
    def unit(cls, model, ring, order: int) -> "PontSeries":
        dicts = [{} for _ in range(order + 1)]
        dicts[0][()] = ring.one
        return cls.from_dicts(model, ring, dicts)

    def term(self, n: int, ms: Multiset):
        return self.components[n].terms.get(tuple(sorted(ms)), self.ring.zero)

    def _check(self, other: "PontSeries") -> None:
        if self.model != other.model:
            raise ValueError("Pontrjagin operands live over different models")
        if self.order != other.order or self.ring != other.ring:
            raise ValueError("Pontrjagin operands have different order or ring")

    def __add__(self, other: "PontSeries") -> "PontSeries":
        self._check(other)
        out = []
        for a, b in zip(self.components, other.components):
            d = dict(a.terms)
            for ms, c in b.terms.items():
                d[ms] = d.get(ms, self.ring.zero) + c
            out.append(d)
        return PontSeries.from_dicts(self.model, self.ring, out)

    def __neg__(self) -> "PontSeries":
        return self.scale(self.ring.from_int(-1))

    def __sub__(self, other: "PontSeries") -> "PontSeries":
        return self + (-other)

    def scale(self, c) -> "PontSeries":
        c = self.ring.coerce(c)
        return PontSeries.from_dicts(
            self.model, self.ring,
            [{ms: cc * c for ms, cc in el.terms.items()} for el in self.components])

    def mul(self, other: "PontSeries") -> "PontSeries":
        """The Pontrjagin product: multiset union, t-degrees add."""
        self._check(other)
        n = self.order
        out = [dict() for _ in range(n + 1)]
        zero = self.ring.zero
        for i, a in enumerate(self.components):
            if not a.terms:
                continue
            for j in range(0, n - i + 1):
                b = other.components[j]
                if not b.terms:
                    continue
                tgt = out[i + j]
                for ms1, c1 in a.terms.items():
                    for ms2, c2 in b.terms.items():
                        ms = tuple(sorted(ms1 + ms2))
                        tgt[ms] = tgt.get(ms, zero) + c1 * c2
        return PontSeries.from_dicts(self.model, self.ring, out)

    __mul__ = mul

    def subst_neg_t(self) -> "PontSeries":
        """t -> -t: flip the sign of every odd component."""
        return PontSeries.from_dicts(
            self.model, self.ring,
            [{ms: (-c if n % 2 else c) for ms, c in el.terms.items()}
             for n, el in enumerate(self.components)])

    def __eq__(self, other):
        return (isinstance(other, PontSeries)
                and self.model == other.model and self.ring == other.ring
                and self.components == other.components)

    def __repr__(self):
        return f"PontSeries[{self.model.name}; {self.ring}; N={self.order}]"


# -- atoms and operations ---------------------------------------------------

def d_push(model: HomologyModel, k: int, hclass: HClass,
           ring: CoeffRing = RING_Y) -> PontElement:
    """d^k_* of a homology class: linear expansion into atoms (k, basis id)."""
    if k < 1:
        raise ValueError("pushforward index must be >= 1")
    return PontElement(k, {((k, b),): c for b, c in hclass.items()}, ring)


def adams_h(model: HomologyModel, r: int, hclass: HClass,
            ring: CoeffRing = RING_Y) -> HClass:
    """Homological Adams operation: 1/r^k in degree k, and y -> y^r."""
    if r < 1:
        raise ValueError("Adams index must be >= 1")
    degs = model.degs()
    return {b: ring.adams(r, c) * Fraction(1, r ** degs[b])
            for b, c in hclass.items()}


def power_op(k: int, s: PontSeries, order: int | None = None) -> PontSeries:
    """P_k: atoms (j, b) -> (jk, b), gradings scale by k; a ring map for the product."""
    if k < 1:
        raise ValueError("power operation index must be >= 1")
    n = s.order if order is None else order
    out = [dict() for _ in range(n + 1)]
    for m, el in enumerate(s.components):
        if m * k > n:
            break
        for ms, c in el.terms.items():
            out[m * k][tuple((j * k, b) for j, b in ms)] = c
    return PontSeries.from_dicts(s.model, s.ring, out)


def pont_exp(arg: PontSeries) -> PontSeries:
    """exp for the Pontrjagin product; needs vanishing 0-th component."""
    if arg.components[0].terms:
        raise ValueError("Pontrjagin exp needs zero constant component")
    result = PontSeries.unit(arg.model, arg.ring, arg.order)
    term = result
    for m in range(1, arg.order + 1):
        term = (term * arg).scale(Fraction(1, m))
        if all(not el.terms for el in term.components):
            break
        result = result + term
    return result


def _scale_hclass(gamma: HClass, c, ring: CoeffRing) -> HClass:
    c = ring.coerce(c)
    return {b: v * c for b, v in gamma.items()}


def hom_exp_inv(model: HomologyModel, gamma: HClass, k: int, order: int,
                ring: CoeffRing = RING_Y, adams: bool = True) -> PontSeries:
    """(1 - t^k d^k_*)^(-gamma) = exp(sum_r d^{rk}_*(Psi_r gamma) t^{rk} / r).

    With ``adams=False`` the Adams twist is dropped (the Chern-level
    exponential of the MacPherson class series).
    """
    gamma = {b: ring.coerce(c) for b, c in gamma.items()}
    dicts = [dict() for _ in range(order + 1)]
    for r in range(1, order // k + 1):
        g = adams_h(model, r, gamma, ring) if adams else gamma
        inv_r = Fraction(1, r)
        for b, c in g.items():
            dicts[r * k][((r * k, b),)] = c * inv_r
    return pont_exp(PontSeries.from_dicts(model, ring, dicts))


def hom_exponentiation(model: HomologyModel, a: TSeries, gamma: HClass,
                       require_integral: bool = True) -> PontSeries:
    """(1 + sum a_n t^n d^n_*)^gamma via the Euler decomposition of a.

    The scalar series a is decomposed as prod_k (1 - t^k)^(-b_k) in its own
    coefficient ring, and the result is the product of the one-factor
    exponentials with exponents b_k * gamma.
    """
    ring = a.ring
    b = euler_log(a, require_integral=require_integral)
    result = PontSeries.unit(model, ring, a.order)
    for k in range(1, a.order + 1):
        bk = b.exponent(k)
        if bk == ring.zero:
            continue
        result = result * hom_exp_inv(model, _scale_hclass(gamma, bk, ring),
                                      k, a.order, ring)
    return result


# -- the generating series of the main results -------------------------------

def sym_prod_class_series(model: HomologyModel, order: int) -> PontSeries:
    """Hirzebruch classes of symmetric products: (1 - t d_*)^(-T_{(-y)*}(X))."""
    return hom_exp_inv(model, model.ty, 1, order)


def chi_y_alpha_scalars(d: int, order: int) -> list[LPoly]:
    """chi_{-y}(alpha_k) for k = 1..order, in the ranges the data allows."""
    if d == 1:
        return [RING_Y.one] + [RING_Y.zero] * (order - 1)
    if d == 2:
        return [Y ** (k - 1) for k in range(1, order + 1)]
    if order > 3:
        raise UnsupportedRangeError(
            f"chi_(-y)(alpha_k) is unknown past k = 3 for d = {d}, got N = {order}")
    alphas = punctual_exponents_small(d).exps
    return [spec_chi_minus_y(a) for a in alphas[:order]]


def hilb_class_series(model: HomologyModel, d: int, order: int) -> PontSeries:
    """Pushed-forward Hirzebruch classes of Hilbert schemes of a d-fold:
    prod_k (1 - t^k d^k_*)^(-chi_{-y}(alpha_k) T_{(-y)*}(X))."""
    result = PontSeries.unit(model, RING_Y, order)
    for k, scalar in enumerate(chi_y_alpha_scalars(d, order), start=1):
        if scalar.is_zero():
            continue
        result = result * hom_exp_inv(model, _scale_hclass(model.ty, scalar, RING_Y),
                                      k, order)
    return result


def mt2_series(model: HomologyModel, a_motivic: TSeries, order: int) -> PontSeries:
    """Hirzebruch transformation of a motivic exponentiation (A(t))^X:
    apply chi_{-y} to the coefficients of A, then exponentiate homologically."""
    if a_motivic.ring != RING_L:
        raise ValueError("mt2_series expects a series over the motivic L ring")
    if a_motivic.order < order:
        raise UnsupportedRangeError(
            f"series stops at t^{a_motivic.order}, need t^{order}")
    a_y = map_series(TSeries(RING_L, a_motivic.coeffs[: order + 1]), "chi-y")
    return hom_exponentiation(model, a_y, model.ty)


def config_class_series(model: HomologyModel, order: int) -> PontSeries:
    """Classes of configuration spaces:
    (1 - t^2 d^2_*)^(+T) * (1 - t d_*)^(-T)."""
    pos = hom_exp_inv(model, _scale_hclass(model.ty, RING_Y.from_int(-1), RING_Y),
                      2, order)
    return pos * hom_exp_inv(model, model.ty, 1, order)


def chi_alpha_scalars(d: int, order: int) -> list[Fraction]:
    """chi(alpha_k) for k = 1..order: 1 for surfaces, k for threefolds."""
    if d == 1:
        return [Fraction(1)] + [Fraction(0)] * (order - 1)
    if d == 2:
        return [Fraction(1)] * order
    if d == 3:
        return [Fraction(k) for k in range(1, order + 1)]
    if order > 3:
        raise UnsupportedRangeError(
            f"chi(alpha_k) is unknown past k = 3 for d = {d}, got N = {order}")
    return [spec_chi(a) for a in punctual_exponents_small(d).exps[:order]]


def chern_class_series(model: HomologyModel, d: int, order: int) -> PontSeries:
    """Pushed-forward MacPherson Chern classes of Hilbert schemes:
    prod_k (1 - t^k d^k_*)^(-chi(alpha_k) c_*(X)), with no Adams twist."""
    c = chern_class_of(model)
    result = PontSeries.unit(model, QQ, order)
    for k, scalar in enumerate(chi_alpha_scalars(d, order), start=1):
        if scalar == 0:
            continue
        result = result * hom_exp_inv(model, _scale_hclass(c, scalar, QQ),
                                      k, order, ring=QQ, adams=False)
    return result


def virtual_class_series(model: HomologyModel, order: int) -> tuple[PontSeries, PontSeries]:
    """Both forms of the virtual Hirzebruch-class series of a threefold.

    Returns (t-form, (-t)-form).  The t-form exponentiates chi_{-y} of the
    virtual punctual series; since the power calculus does not commute with
    t -> -t over a ring with Adams operations, the Euler decomposition of
    the half-integer-localized series is taken on the -t side (where it is
    an honest product) and the assembled result is read back at -t.  The
    (-t)-form is built directly from the closed-form virtual exponents; the
    two routes share no exponent data and must agree, else this raises.
    """
    a_y = map_series(virtual_punctual_series(order), "chi-y")
    b = euler_log(a_y.subst(1, -1))
    route1 = PontSeries.unit(model, RING_Y, order)
    for k in range(1, order + 1):
        bk = b.exponent(k)
        if bk.is_zero():
            continue
        route1 = route1 * hom_exp_inv(model, _scale_hclass(model.ty, bk, RING_Y),
                                      k, order)
    t_form = route1.subst_neg_t()
    route2 = PontSeries.unit(model, RING_Y, order)
    for k in range(1, order + 1):
        scalar = spec_chi_minus_y(virtual_alpha(k))
        route2 = route2 * hom_exp_inv(model, _scale_hclass(model.ty, scalar, RING_Y),
                                      k, order)
    if t_form.subst_neg_t() != route2:
        raise TwoRouteMismatchError(
            f"virtual class series on {model.name}: the two generating-series forms disagree")
    return t_form, route2


def aluffi_series(model: HomologyModel, order: int) -> PontSeries:
    """Pushed-forward Aluffi classes of Hilbert schemes of a threefold.

    The product prod_k (1 - t^k d^k_*)^(-k c_*(X)) enumerates them against
    (-t)^n, so the coefficient of t^n here carries the sign (-1)^n.
    """
    return chern_class_series(model, 3, order).subst_neg_t()


def pont_degree(model: HomologyModel, s: PontSeries) -> TSeries:
    """Push a Pontrjagin series down to a point: genus-level generating series.

    An atom contributes 1 when its basis class has degree zero and kills the
    term otherwise; this is a ring homomorphism onto scalar t-series.
    """
    if not model.proper:
        raise ValueError(f"model {model.name} is not proper; no degree map")
    degs = model.degs()
    out = []
    for el in s.components:
        acc = s.ring.zero
        for ms, c in el.terms.items():
            if all(degs[b] == 0 for _, b in ms):
                acc = acc + c
        out.append(acc)
    return TSeries(s.ring, out)


def normalized_y1_limit(s: PontSeries) -> PontSeries:
    """Apply the normalization Psi_(1-y) and evaluate at y = 1, exactly.

    A term over a multiset of total homological degree m is divided by
    (1-y)^m; the power must cancel into the coefficient (pole otherwise),
    after which y = 1 specializes the series to the Chern level over Q.
    """
    if s.ring != RING_Y:
        raise ValueError("normalization limit applies to y-level series")
    degs = s.model.degs()
    one_minus_y = RING_Y.one - Y
    out = []
    for el in s.components:
        d: dict[Multiset, Fraction] = {}
        for ms, c in el.terms.items():
            m = sum(degs[b] for _, b in ms)
            try:
                reduced = c.exact_div(one_minus_y ** m)
            except ArithmeticError as exc:
                raise TwoRouteMismatchError(
                    f"pole at y=1 for multiset {ms}") from exc
            d[ms] = chi_of_y(reduced)
        out.append(d)
    return PontSeries.from_dicts(s.model, QQ, out)
