"""Hirzebruch power series and finite homology models with stored classes.

The generating power series

    Q_y(a) = a (1 + y e^(-a)) / (1 - e^(-a)),      Q_y(0) = 1 + y,
    Qhat_y(a) = Q_y(a (1+y)) / (1+y) = a(1+y)/(1 - e^(-a(1+y))) - a y,

are expanded exactly over Q[y]; the nilpotent cohomology variable is the
truncation variable of a :class:`TSeries` over Q[y] (order = dimension).

A :class:`HomologyModel` is a finite graded basis of the even Borel-Moore
homology with a stored class T_{(-y)*}(X); built-in models (point, P^d,
binary products) also carry an independently computed MacPherson Chern class
so the y -> 1 normalization limit can be cross-checked.
"""

from __future__ import annotations

from fractions import Fraction

from .lpoly import LPoly, VS_UV, VS_Y
from .series import RING_UV, RING_Y, TSeries
from .motives import TwoRouteMismatchError, Y, chi_of_y, proj_space_class


def _factorials(n: int) -> list[int]:
    out = [1]
    for i in range(1, n + 1):
        out.append(out[-1] * i)
    return out


def qy_series(order: int) -> TSeries:
    """Expansion of a(1 + y e^(-a))/(1 - e^(-a)) through a^order."""
    fact = _factorials(order + 2)
    # (1 - e^(-a))/a  and  1 + y e^(-a)
    den = TSeries(RING_Y, [Fraction((-1) ** j, fact[j + 1]) for j in range(order + 1)])
    num = TSeries(RING_Y, [RING_Y.one + Y] +
                  [Y.scale(Fraction((-1) ** j, fact[j])) for j in range(1, order + 1)])
    return num * den.invert()


def qyhat_series(order: int) -> TSeries:
    """Expansion of a(1+y)/(1 - e^(-a(1+y))) - a y, the normalized series."""
    fact = _factorials(order + 2)
    one_plus_y = RING_Y.one + Y
    den = TSeries(RING_Y, [(one_plus_y ** j).scale(Fraction((-1) ** j, fact[j + 1]))
                           for j in range(order + 1)])
    correction = TSeries.from_terms(RING_Y, order, {1: -Y})
    return den.invert() + correction


class HomologyModel:
    """Finite basis of H^BM_even(X) tensor Q[y] with stored classes.

    ``basis`` lists (id, homological degree k) pairs; ``ty`` maps basis ids
    to the y-polynomial coefficients of T_{(-y)*}(X).  Proper connected
    models name their degree-zero point class, which the degree map picks
    out.  ``chern`` (over Q) and ``l_class`` (the Grothendieck-ring proxy
    of [X]) are optional extras carried by the built-in models.
    """

    __slots__ = ("name", "dim", "proper", "basis", "zero_id", "ty",
                 "e_poly", "chern", "l_class")

    def __init__(self, name: str, dim: int, proper: bool,
                 basis: tuple[tuple[str, int], ...], zero_id: str | None,
                 ty: dict[str, LPoly], e_poly: LPoly,
                 chern: dict[str, Fraction] | None = None,
                 l_class: LPoly | None = None):
        ids = [b for b, _ in basis]
        if len(set(ids)) != len(ids):
            raise ValueError(f"duplicate basis ids in model {name}")
        degs = dict(basis)
        for b, k in basis:
            if not 0 <= k <= dim:
                raise ValueError(f"basis degree {k} outside 0..{dim} in model {name}")
        if proper:
            if zero_id is None or degs.get(zero_id) != 0:
                raise ValueError(f"proper model {name} needs a degree-0 point class")
        for b in ty:
            if b not in degs:
                raise ValueError(f"ty class mentions unknown basis id {b!r}")
        self.name = name
        self.dim = dim
        self.proper = proper
        self.basis = tuple(basis)
        self.zero_id = zero_id
        self.ty = {b: RING_Y.coerce(c) for b, c in ty.items() if not RING_Y.coerce(c).is_zero()}
        self.e_poly = RING_UV.coerce(e_poly)
        self.chern = dict(chern) if chern is not None else None
        self.l_class = l_class
        if proper:
            got = self.degree_of(self.ty)
            want = self.chi_y()
            if got != want:
                raise ValueError(
                    f"model {name}: degree of stored class is {got}, "
                    f"but the Hodge polynomial gives {want}")

    def degs(self) -> dict[str, int]:
        return dict(self.basis)

    def chi_y(self) -> LPoly:
        """chi_{-y}(X) from the Hodge polynomial: u -> y, v -> 1."""
        return self.e_poly.substitute(VS_Y, whole={"u": Y, "v": 1})

    def degree_of(self, hclass: dict[str, LPoly]) -> LPoly:
        """Push a homology class down to a point (proper models only)."""
        if not self.proper:
            raise ValueError(f"model {self.name} is not proper; no degree map")
        return hclass.get(self.zero_id, RING_Y.zero)

    def __eq__(self, other):
        # equality covers the serialized surface; chern and l_class are
        # derived caches carried only by built-in models
        return (isinstance(other, HomologyModel)
                and self.name == other.name and self.dim == other.dim
                and self.proper == other.proper and self.basis == other.basis
                and self.zero_id == other.zero_id and self.ty == other.ty
                and self.e_poly == other.e_poly)

    def __repr__(self):
        return f"HomologyModel({self.name}, dim={self.dim})"


def degree(model: HomologyModel, hclass: dict[str, LPoly]) -> LPoly:
    return model.degree_of(hclass)


def proj_space_model(d: int) -> HomologyModel:
    """Projective space with basis [P^0], ..., [P^d].

    The cohomology class is Q_y(h)^(d+1)/(1+y) (Euler sequence route); the
    coefficientwise divisibility by 1+y is asserted, not assumed.  Capping
    with [P^d] turns the h^j coefficient into the [P^(d-j)] coordinate, and
    y -> -y converts T_y* into the stored T_{(-y)*}.  The Chern class comes
    independently from (1+h)^(d+1).
    """
    if d < 0:
        raise ValueError("dimension must be >= 0")
    q = qy_series(d).pow_int(d + 1)
    one_plus_y = RING_Y.one + Y
    ty: dict[str, LPoly] = {}
    for j in range(d + 1):
        coeff = q.coeffs[j].exact_div(one_plus_y)
        ty[f"P{d - j}"] = coeff.substitute(VS_Y, whole={"y": -Y})
    basis = tuple((f"P{i}", i) for i in range(d, -1, -1))
    e_poly = LPoly(VS_UV, {(2 * i, 2 * i): 1 for i in range(d + 1)})
    chern = {f"P{d - j}": Fraction(_binom(d + 1, j)) for j in range(d + 1)}
    name = "point" if d == 0 else f"P{d}"
    return HomologyModel(name, d, True, basis, "P0", ty, e_poly,
                         chern=chern, l_class=proj_space_class(d))


def point_model() -> HomologyModel:
    return proj_space_model(0)


def _binom(n: int, k: int) -> int:
    out = 1
    for i in range(k):
        out = out * (n - i) // (i + 1)
    return out


def product_model(m1: HomologyModel, m2: HomologyModel) -> HomologyModel:
    """External product of two proper models (tensor basis, classes multiply)."""
    if not (m1.proper and m2.proper):
        raise ValueError("product model needs proper factors")
    basis = tuple((f"{b1}*{b2}", k1 + k2) for b1, k1 in m1.basis for b2, k2 in m2.basis)
    ty = {}
    for b1, c1 in m1.ty.items():
        for b2, c2 in m2.ty.items():
            ty[f"{b1}*{b2}"] = c1 * c2
    chern = None
    if m1.chern is not None and m2.chern is not None:
        chern = {f"{b1}*{b2}": c1 * c2
                 for b1, c1 in m1.chern.items() for b2, c2 in m2.chern.items()
                 if c1 * c2 != 0}
    l_class = None
    if m1.l_class is not None and m2.l_class is not None:
        l_class = m1.l_class * m2.l_class
    return HomologyModel(f"{m1.name}x{m2.name}", m1.dim + m2.dim, True, basis,
                         f"{m1.zero_id}*{m2.zero_id}", ty, m1.e_poly * m2.e_poly,
                         chern=chern, l_class=l_class)


def chern_limit_check(model: HomologyModel, r: int = 1) -> dict[str, Fraction]:
    """The y -> 1 limit of the twisted normalization of the stored class.

    Computes Psi_(1-y) Psi_r T_{(-y)*}(X) exactly: the degree-k coordinate
    tau(y) becomes tau(y^r) / (r^k (1-y)^k), whose (1-y)-power must cancel
    (a pole means the divisibility claim failed), then y = 1 is substituted.
    When the model stores an independently computed Chern class the result
    is compared against it.
    """
    if r < 1:
        raise ValueError("Adams index must be >= 1")
    degs = model.degs()
    one_minus_y = RING_Y.one - Y
    out: dict[str, Fraction] = {}
    for b, tau in model.ty.items():
        k = degs[b]
        scaled = tau.adams(r)
        try:
            reduced = scaled.exact_div(one_minus_y ** k)
        except ArithmeticError as exc:
            raise TwoRouteMismatchError(
                f"model {model.name}, basis {b}: pole at y=1 "
                f"after (1-y)-cancellation") from exc
        val = chi_of_y(reduced) / r ** k
        if val != 0:
            out[b] = val
    if model.chern is not None and out != model.chern:
        raise TwoRouteMismatchError(
            f"model {model.name}: chern limit (r={r}) gave {out}, "
            f"stored class is {model.chern}")
    return out


def chern_class_of(model: HomologyModel) -> dict[str, Fraction]:
    """The model's rationalized MacPherson Chern class.

    Built-in models store it; for user models it is defined by the y -> 1
    normalization limit of the stored Hirzebruch class.
    """
    if model.chern is not None:
        return dict(model.chern)
    return chern_limit_check(model, 1)
