"""Seeded randomized verification suites behind the ``verify`` command.

Each suite returns a list of {name, status, detail} records; a failing check
carries the counterexample in ``detail``.  Identical (suite, order, seed)
inputs produce identical reports.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .lpoly import LPoly, VarSet, VS_L, VS_NONE, VS_UV, VS_Y
from .series import QQ, RING_L, RING_UV, RING_Y, TSeries
from .lambda_power import EulerExponents, euler_exp, euler_log, power, pre_lambda, pre_lambda_polyring
from . import motives as mo
from . import hirzebruch as hz
from . import pontrjagin as po


def _random_lpoly(rng, vars: VarSet, max_deg=3, terms=3, laurent=False, halves=False) -> LPoly:
    out = {}
    for _ in range(rng.randint(0, terms)):
        exps = []
        for name in vars.names:
            lo = -max_deg if laurent else 0
            e = 2 * rng.randint(lo, max_deg)
            if halves and rng.random() < 0.3:
                e += 1
            exps.append(e)
        out[tuple(exps)] = rng.randint(-4, 4)
    return LPoly(vars, out)


def _random_series(rng, ring, order, normalized=False):
    coeffs = [_random_lpoly(rng, ring.vars, max_deg=2, terms=3) for _ in range(order + 1)]
    if normalized:
        coeffs[0] = ring.one
    return TSeries(ring, coeffs)


def _random_hclass(rng, model):
    out = {}
    for b, _ in model.basis:
        if rng.random() < 0.75:
            p = _random_lpoly(rng, VS_Y, max_deg=2, terms=2)
            if not p.is_zero():
                out[b] = p
    return out


def _run(results: list, name: str, fn) -> None:
    try:
        fn()
        results.append({"name": name, "status": "ok"})
    except Exception as exc:
        results.append({"name": name, "status": "fail", "detail": str(exc)})


def _require(cond: bool, detail: str) -> None:
    if not cond:
        raise AssertionError(detail)


# -- lambda / series suite ---------------------------------------------------

def suite_lambda(order: int, seed: int) -> list[dict]:
    rng = random.Random(seed)
    results: list[dict] = []

    def ring_axioms():
        for _ in range(200):
            a = _random_lpoly(rng, VS_UV, max_deg=6, terms=4)
            b = _random_lpoly(rng, VS_UV, max_deg=6, terms=4)
            c = _random_lpoly(rng, VS_UV, max_deg=6, terms=4)
            _require((a * b) * c == a * (b * c), f"assoc: {a}; {b}; {c}")
            _require(a * (b + c) == a * b + a * c, f"distrib: {a}; {b}; {c}")
            _require(a * b == b * a, f"comm: {a}; {b}")

    def adams_composition():
        for _ in range(100):
            p = _random_lpoly(rng, VS_L, laurent=True, halves=True)
            r, s = rng.randint(1, 5), rng.randint(1, 5)
            _require(p.adams(r).adams(s) == p.adams(r * s),
                     f"adams compose: {p}, r={r}, s={s}")

    def exact_div_roundtrip():
        for _ in range(100):
            a = _random_lpoly(rng, VS_UV)
            b = _random_lpoly(rng, VS_UV)
            if b.is_zero():
                continue
            _require((a * b).exact_div(b) == a, f"divide: {a}; {b}")

    def exp_log_roundtrip():
        for _ in range(100):
            a = _random_series(rng, RING_Y, order)
            z = TSeries(RING_Y, [RING_Y.zero] + list(a.coeffs[1:]))
            _require(z.exp().log() == z, f"exp-log: {z}")
            n = TSeries(RING_Y, [RING_Y.one] + list(a.coeffs[1:]))
            _require(n.log().exp() == n, f"log-exp: {n}")

    def exp_additivity():
        for _ in range(50):
            a = TSeries(RING_Y, [RING_Y.zero] + list(_random_series(rng, RING_Y, order).coeffs[1:]))
            b = TSeries(RING_Y, [RING_Y.zero] + list(_random_series(rng, RING_Y, order).coeffs[1:]))
            _require((a + b).exp() == a.exp() * b.exp(), f"exp-add: {a}; {b}")

    def subst_composition():
        for _ in range(50):
            a = _random_series(rng, RING_Y, order)
            j, k = rng.randint(1, 3), rng.randint(1, 3)
            _require(a.subst(k).subst(j) == a.subst(j * k), f"subst: {a}, j={j}, k={k}")

    def euler_roundtrips():
        for _ in range(100):
            b = EulerExponents(RING_Y, tuple(_random_lpoly(rng, VS_Y) for _ in range(order)))
            _require(euler_log(euler_exp(b)) == b, f"log(exp): {[str(x) for x in b.exps]}")
            a = _random_series(rng, RING_Y, order, normalized=True)
            _require(euler_exp(euler_log(a, require_integral=False)) == a, f"exp(log): {a}")

    def power_axioms():
        n = min(order, 6)
        for _ in range(100):
            a = _random_series(rng, RING_Y, n, normalized=True)
            b = _random_series(rng, RING_Y, n, normalized=True)
            m = _random_lpoly(rng, VS_Y, max_deg=2, terms=2)
            mm = _random_lpoly(rng, VS_Y, max_deg=2, terms=2)
            pw = lambda s, e: power(s, e, require_integral=False)
            _require(pw(a, RING_Y.zero) == TSeries.one(RING_Y, n), f"(i): {a}")
            _require(pw(a, RING_Y.one) == a, f"(ii): {a}")
            _require(pw(a * b, m) == pw(a, m) * pw(b, m), f"(iii): {a}; {b}; {m}")
            _require(pw(a, m + mm) == pw(a, m) * pw(a, mm), f"(iv): {a}; {m}; {mm}")
            _require(pw(a, m * mm) == pw(pw(a, mm), m), f"(v): {a}; {m}; {mm}")
            k = rng.randint(1, 3)
            _require(pw(a.subst(k), m) == pw(a, m).subst(k), f"(vii): {a}; {m}; k={k}")
        one_plus = TSeries.from_terms(RING_Y, n, {0: 1, 1: 1})
        m = _random_lpoly(rng, VS_Y, max_deg=2, terms=2)
        s = power(one_plus, m, require_integral=False)
        _require(s.coeffs[1] == m, f"(vi): linear term of (1+t)^({m}) is {s.coeffs[1]}")

    def polyring_consistency():
        for _ in range(50):
            p = _random_lpoly(rng, VS_UV, max_deg=3, terms=3)
            n = rng.randint(1, min(order, 6))
            _require(pre_lambda_polyring(p, n) == pre_lambda(RING_UV, p, n),
                     f"polyring lambda: {p}")

    def chi_power_compatibility():
        n = min(order, 6)
        for _ in range(25):
            coeffs = [RING_L.one] + [_random_lpoly(rng, VS_L, max_deg=2, terms=2)
                                     for _ in range(n)]
            a = TSeries(RING_L, coeffs)
            m = _random_lpoly(rng, VS_L, max_deg=2, terms=2)
            lhs = mo.map_series(power(a, m, require_integral=False), "chi-y")
            rhs = power(mo.map_series(a, "chi-y"), mo.spec_chi_minus_y(m),
                        require_integral=False)
            _require(lhs == rhs, f"chi_-y power compat: {a}; {m}")

    _run(results, "lpoly-ring-axioms", ring_axioms)
    _run(results, "adams-composition", adams_composition)
    _run(results, "exact-div-roundtrip", exact_div_roundtrip)
    _run(results, "exp-log-roundtrip", exp_log_roundtrip)
    _run(results, "exp-additivity", exp_additivity)
    _run(results, "subst-composition", subst_composition)
    _run(results, "euler-roundtrips", euler_roundtrips)
    _run(results, "power-structure-axioms", power_axioms)
    _run(results, "polyring-lambda-consistency", polyring_consistency)
    _run(results, "chi-power-compatibility", chi_power_compatibility)
    return results


# -- motives suite -----------------------------------------------------------

def suite_motives(order: int, seed: int) -> list[dict]:
    rng = random.Random(seed)
    results: list[dict] = []

    def eq9_closed_forms():
        for d in (1, 2, 3, 4):
            mo.punctual_exponents_small(d)
        _require(mo.punctual_exponents_small(1).exps[1:] == (RING_L.zero,) * 2,
                 "curve exponents should vanish past k=1")
        _require(mo.punctual_exponents_small(2).exps ==
                 (RING_L.one, mo.L, mo.L ** 2), "surface exponents")

    def surface_two_route():
        _require(mo.surface_punctual_series(3) == mo.punctual_hilb_small(2, 3),
                 "surface Euler product vs lambda-binomial series")

    def chi_alpha_threefold():
        for k, a in enumerate(mo.punctual_exponents_small(3).exps, start=1):
            _require(mo.spec_chi(a) == k, f"chi(alpha_{k}) = {mo.spec_chi(a)} != {k}")

    def curve_collapse():
        n = min(order, 6)
        for _ in range(10):
            x = _random_lpoly(rng, VS_L, max_deg=2, terms=3)
            lhs = mo.map_series(mo.hilb_motive_series(x, 1, n), "e")
            rhs = mo.kapranov_zeta(mo.spec_e(x), n)
            _require(lhs == rhs, f"curve collapse at [X]={x}")

    def config_chi_binomial():
        for d in range(4):
            x = mo.proj_space_class(d)
            s = mo.map_series(mo.config_space_series(x, min(order, 6)), "chi")
            for n, c in enumerate(s.coeffs):
                expect = 1
                for i in range(n):
                    expect = expect * (d + 1 - i) // (i + 1)
                if n > d + 1:
                    expect = 0
                _require(c == expect, f"config chi: d={d}, n={n}, got {c}")

    def specialization_homs():
        for _ in range(50):
            a = _random_lpoly(rng, VS_L, laurent=True, halves=True)
            b = _random_lpoly(rng, VS_L, laurent=True, halves=True)
            _require(mo.spec_chi_minus_y(a * b) ==
                     mo.spec_chi_minus_y(a) * mo.spec_chi_minus_y(b), f"chi_-y hom: {a}; {b}")
            _require(mo.spec_chi(a * b) == mo.spec_chi(a) * mo.spec_chi(b),
                     f"chi hom: {a}; {b}")
            ai = _random_lpoly(rng, VS_L)
            bi = _random_lpoly(rng, VS_L)
            _require(mo.spec_e(ai * bi) == mo.spec_e(ai) * mo.spec_e(bi),
                     f"e hom: {ai}; {bi}")

    def virtual_alpha_chi():
        for k in range(1, 7):
            got = mo.spec_chi(mo.virtual_alpha(k))
            _require(got == k, f"chi(virtual alpha_{k}) = {got} != {k}")

    def macmahon_fixture():
        m = mo.macmahon_series(max(order, 8))
        _require(tuple(m.coeffs[:5]) == tuple(Fraction(c) for c in (1, 1, 3, 6, 13)),
                 f"MacMahon prefix: {m.coeffs[:5]}")

    _run(results, "eq9-closed-forms", eq9_closed_forms)
    _run(results, "surface-two-route", surface_two_route)
    _run(results, "chi-alpha-threefold", chi_alpha_threefold)
    _run(results, "curve-collapse", curve_collapse)
    _run(results, "config-chi-binomial", config_chi_binomial)
    _run(results, "specialization-homs", specialization_homs)
    _run(results, "virtual-alpha-chi", virtual_alpha_chi)
    _run(results, "macmahon-fixture", macmahon_fixture)
    return results


# -- hirzebruch suite ---------------------------------------------------------

def _bernoulli_plus(n: int) -> list[Fraction]:
    def binom(a, b):
        out = 1
        for i in range(b):
            out = out * (a - i) // (i + 1)
        return out

    b = [Fraction(1)]
    for m in range(1, n + 1):
        acc = Fraction(0)
        for j in range(m):
            acc += binom(m + 1, j) * b[j]
        b.append(-acc / (m + 1))
    if n >= 1:
        b[1] = -b[1]
    return b


def _eval_y(s: TSeries, c: Fraction) -> TSeries:
    return s.map_coeffs(QQ, lambda p: p.substitute(VS_NONE, whole={"y": c}).as_fraction())


def suite_hirzebruch(order: int, seed: int) -> list[dict]:
    results: list[dict] = []
    n = max(order, 8)

    def qy_specializations():
        q = hz.qy_series(n)
        bern = _bernoulli_plus(n)
        fact = [1]
        for i in range(1, n + 1):
            fact.append(fact[-1] * i)
        todd = TSeries(QQ, [bern[j] / fact[j] for j in range(n + 1)])
        _require(_eval_y(q, Fraction(0)) == todd, "Q_y at y=0 vs Bernoulli oracle")
        _require(_eval_y(q, Fraction(-1)) == TSeries.from_terms(QQ, n, {1: 1}),
                 "Q_y at y=-1 should be the bare Chern root")

    def qyhat_relation():
        q = hz.qy_series(n)
        qh = hz.qyhat_series(n)
        opy = RING_Y.one + mo.Y
        lhs = TSeries(RING_Y, [c * opy for c in qh.coeffs])
        rhs = TSeries(RING_Y, [q.coeffs[j] * opy ** j for j in range(n + 1)])
        _require(lhs == rhs, "(1+y) Qhat_y(a) vs Q_y(a(1+y))")

    def degree_is_chi_y():
        for d in range(5):
            m = hz.proj_space_model(d)
            _require(hz.degree(m, m.ty) == m.chi_y(), f"degree vs chi_-y for P{d}")

    def chern_limits():
        models = [hz.proj_space_model(d) for d in (1, 2, 3)]
        models.append(hz.product_model(hz.proj_space_model(1), hz.proj_space_model(1)))
        for m in models:
            for r in (1, 2, 3, 4):
                hz.chern_limit_check(m, r)

    _run(results, "qy-specializations", qy_specializations)
    _run(results, "qyhat-defining-relation", qyhat_relation)
    _run(results, "degree-chi-y", degree_is_chi_y)
    _run(results, "chern-limit-r-independence", chern_limits)
    return results


# -- pontrjagin suite ---------------------------------------------------------

def _random_pont(rng, model, order):
    dicts = []
    for m in range(order + 1):
        d = {}
        for _ in range(rng.randint(0, 2)):
            if m == 0:
                ms = ()
            else:
                parts, left = [], m
                while left > 0:
                    k = rng.randint(1, left)
                    parts.append((k, rng.choice(model.basis)[0]))
                    left -= k
                ms = tuple(sorted(parts))
            c = LPoly(VS_Y, {(2 * rng.randint(0, 2),): rng.randint(-3, 3)})
            if not c.is_zero():
                d[ms] = d.get(ms, RING_Y.zero) + c
        dicts.append(d)
    return po.PontSeries.from_dicts(model, RING_Y, dicts)


def suite_pontrjagin(order: int, seed: int) -> list[dict]:
    rng = random.Random(seed)
    results: list[dict] = []
    p1 = hz.proj_space_model(1)
    p2 = hz.proj_space_model(2)
    p3 = hz.proj_space_model(3)
    point = hz.point_model()

    def ring_laws():
        for _ in range(100):
            a = _random_pont(rng, p1, 5)
            b = _random_pont(rng, p1, 5)
            c = _random_pont(rng, p1, 5)
            _require(a * b == b * a, "pontrjagin commutativity")
            _require((a * b) * c == a * (b * c), "pontrjagin associativity")
            _require(a * (b + c) == a * b + a * c, "pontrjagin distributivity")
            _require(po.PontSeries.unit(p1, RING_Y, 5) * a == a, "pontrjagin unit")

    def power_op_laws():
        for _ in range(100):
            gamma = _random_hclass(rng, p1)
            r, k = rng.randint(1, 3), rng.randint(1, 3)
            lhs = po.power_op(k, po.PontSeries.from_dicts(
                p1, RING_Y,
                [dict() if m != r else dict(po.d_push(p1, r, gamma).terms)
                 for m in range(r + 1)]), order=r * k)
            rhs = po.PontSeries.from_dicts(
                p1, RING_Y,
                [dict() if m != r * k else dict(po.d_push(p1, r * k, gamma).terms)
                 for m in range(r * k + 1)])
            _require(lhs == rhs, f"P_k d^r = d^rk at r={r}, k={k}")
            a = _random_pont(rng, p1, 2)
            _require(po.power_op(2, po.power_op(3, a, order=12), order=12) ==
                     po.power_op(6, a, order=12), "P_2 P_3 = P_6")

    def hom_exp_additivity():
        for _ in range(100):
            g1 = _random_hclass(rng, p1)
            g2 = _random_hclass(rng, p1)
            tot = dict(g1)
            for b, c in g2.items():
                tot[b] = tot.get(b, RING_Y.zero) + c
            k = rng.randint(1, 2)
            _require(po.hom_exp_inv(p1, tot, k, 5) ==
                     po.hom_exp_inv(p1, g1, k, 5) * po.hom_exp_inv(p1, g2, k, 5),
                     "hom exp additivity in the class")

    def power_op_intertwines():
        for k in (2, 3):
            gamma = _random_hclass(rng, p1)
            _require(po.power_op(k, po.hom_exp_inv(p1, gamma, 1, 4), order=4 * k) ==
                     po.hom_exp_inv(p1, gamma, k, 4 * k),
                     f"P_{k} of one-factor exponential")

    def degree_intertwines():
        for _ in range(100):
            gamma = _random_hclass(rng, p2)
            k = rng.randint(1, 3)
            lhs = po.pont_degree(p2, po.hom_exp_inv(p2, gamma, k, 6))
            rhs = pre_lambda(RING_Y, p2.degree_of(gamma), 6).subst(k)
            _require(lhs == rhs, "degree of exponential vs pre-lambda")

    def mt2_hilb_config():
        _require(po.mt2_series(p2, mo.punctual_series(2, 3), 3) ==
                 po.hilb_class_series(p2, 2, 3), "mt2 vs surface hilb series")
        one_plus = TSeries.from_terms(RING_L, 4, {0: 1, 1: 1})
        for model in (point, p1):
            _require(po.config_class_series(model, 4) ==
                     po.mt2_series(model, one_plus, 4), "config vs mt2(1+t)")

    def chern_normalization():
        for model, d in ((p1, 1), (p2, 2), (p3, 3)):
            _require(po.normalized_y1_limit(po.hilb_class_series(model, d, 3)) ==
                     po.chern_class_series(model, d, 3),
                     f"y->1 normalization limit on {model.name}")

    def virtual_two_route():
        t_form, mt_form = po.virtual_class_series(p3, 3)
        _require(t_form.subst_neg_t() == mt_form, "virtual class series two routes")

    def eq220_sign():
        chern = po.chern_class_series(p3, 3, 4)
        aluffi = po.aluffi_series(p3, 4)
        for n in range(5):
            scaled = {ms: c * ((-1) ** n)
                      for ms, c in chern.components[n].terms.items()}
            _require(aluffi.components[n].terms == scaled, f"Aluffi sign at t^{n}")

    def aluffi_macmahon():
        deg = po.pont_degree(point, po.aluffi_series(point, max(order, 8)))
        _require(deg.subst(1, -1) == mo.macmahon_series(max(order, 8)),
                 "point-level Aluffi degree vs MacMahon")

    _run(results, "pont-ring-laws", ring_laws)
    _run(results, "power-op-laws", power_op_laws)
    _run(results, "hom-exp-additivity", hom_exp_additivity)
    _run(results, "power-op-intertwines-exp", power_op_intertwines)
    _run(results, "degree-intertwines-pre-lambda", degree_intertwines)
    _run(results, "mt2-hilb-config-coherence", mt2_hilb_config)
    _run(results, "chern-normalization-limit", chern_normalization)
    _run(results, "virtual-two-route", virtual_two_route)
    _run(results, "eq220-sign-relation", eq220_sign)
    _run(results, "aluffi-macmahon-degree", aluffi_macmahon)
    return results


SUITES = {
    "lambda": suite_lambda,
    "motives": suite_motives,
    "hirzebruch": suite_hirzebruch,
    "pontrjagin": suite_pontrjagin,
}


def run_suite(name: str, order: int, seed: int) -> list[dict]:
    if name == "all":
        out = []
        for key in ("lambda", "motives", "hirzebruch", "pontrjagin"):
            for rec in SUITES[key](order, seed):
                out.append({**rec, "name": f"{key}/{rec['name']}"})
        return out
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}")
    return SUITES[name](order, seed)
