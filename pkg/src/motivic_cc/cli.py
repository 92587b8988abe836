"""Command-line front end: model ingestion, series computation, verification.

Reports are JSON documents with exact rational/polynomial strings (never
floats) and deterministic field ordering; ``--pretty`` renders a plain-text
table instead.  Exit codes: 0 success, 1 verification failure, 2 input or
schema error, 3 unsupported range.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .lpoly import LPoly, VS_NONE, VS_UV, VS_Y
from .series import QQ, RING_L, RING_UV, RING_Y, TSeries
from .lambda_power import EulerExponents, euler_exp, euler_log
from . import motives as mo
from . import hirzebruch as hz
from . import pontrjagin as po
from .checks import run_suite
from .motives import TwoRouteMismatchError, UnsupportedRangeError


class SchemaError(ValueError):
    """Malformed model/series file or inconsistent field values."""


MAX_ORDER_ENV = "MOTIVIC_CC_MAX_ORDER"
DEFAULT_MAX_ORDER = 12

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_SCHEMA = 2
EXIT_RANGE = 3


def order_cap() -> int:
    raw = os.environ.get(MAX_ORDER_ENV, "")
    try:
        return int(raw) if raw else DEFAULT_MAX_ORDER
    except ValueError:
        raise SchemaError(f"{MAX_ORDER_ENV} must be an integer, got {raw!r}")


def check_order(n: int) -> int:
    cap = order_cap()
    if n < 0:
        raise SchemaError(f"order must be >= 0, got {n}")
    if n > cap:
        raise UnsupportedRangeError(
            f"order {n} exceeds the cap {cap} (set {MAX_ORDER_ENV} to raise it)")
    return n


# -- rational and model (de)serialization ------------------------------------

def format_rational(x: Fraction) -> str:
    return str(x)


def parse_rational(s: str) -> Fraction:
    try:
        return Fraction(str(s))
    except (ValueError, ZeroDivisionError) as exc:
        raise SchemaError(f"bad rational {s!r}") from exc


def model_to_doc(model: hz.HomologyModel) -> dict:
    ty = {}
    for b, _ in model.basis:
        c = model.ty.get(b)
        if c is None:
            continue
        ty[b] = [{"yNum": exps[0], "c": format_rational(coeff)}
                 for exps, coeff in sorted(c.terms.items())]
    e_terms = [{"u": e[0] // 2, "v": e[1] // 2, "c": int(c)}
               for e, c in sorted(model.e_poly.terms.items())]
    return {
        "name": model.name,
        "dim": model.dim,
        "proper": model.proper,
        "basis": [{"id": b, "deg": k} for b, k in model.basis],
        "zeroDegreeBasisId": model.zero_id,
        "ty_class": ty,
        "e_poly": e_terms,
    }


def model_from_doc(doc: dict) -> hz.HomologyModel:
    if not isinstance(doc, dict):
        raise SchemaError("model file must contain a JSON object")
    required = {"name", "dim", "proper", "basis", "zeroDegreeBasisId", "ty_class", "e_poly"}
    missing = required - set(doc)
    if missing:
        raise SchemaError(f"model file misses keys: {sorted(missing)}")
    name = doc["name"]
    dim = doc["dim"]
    proper = doc["proper"]
    if not isinstance(name, str) or not isinstance(dim, int) or not isinstance(proper, bool):
        raise SchemaError("name must be a string, dim an integer, proper a boolean")
    basis = []
    for rec in doc["basis"]:
        if not isinstance(rec, dict) or set(rec) != {"id", "deg"}:
            raise SchemaError(f"bad basis record {rec!r}")
        if not isinstance(rec["id"], str) or not isinstance(rec["deg"], int):
            raise SchemaError(f"bad basis record {rec!r}")
        basis.append((rec["id"], rec["deg"]))
    ty = {}
    if not isinstance(doc["ty_class"], dict):
        raise SchemaError("ty_class must map basis ids to term arrays")
    for b, terms in doc["ty_class"].items():
        poly = RING_Y.zero
        for t in terms:
            if not isinstance(t, dict) or set(t) != {"yNum", "c"} or not isinstance(t["yNum"], int):
                raise SchemaError(f"bad ty_class term {t!r}")
            poly = poly + LPoly(VS_Y, {(t["yNum"],): parse_rational(t["c"])})
        ty[b] = poly
    e_poly = RING_UV.zero
    for t in doc["e_poly"]:
        if not isinstance(t, dict) or set(t) != {"u", "v", "c"} or \
                not all(isinstance(t[k], int) for k in ("u", "v", "c")):
            raise SchemaError(f"bad e_poly term {t!r}")
        e_poly = e_poly + LPoly(VS_UV, {(2 * t["u"], 2 * t["v"]): t["c"]})
    try:
        return hz.HomologyModel(name, dim, proper, tuple(basis),
                                doc["zeroDegreeBasisId"], ty, e_poly)
    except ValueError as exc:
        raise SchemaError(str(exc)) from exc


def series_from_doc(doc: dict) -> TSeries:
    """A user-supplied punctual series over the L ring.

    Format: {"order": N, "coeffs": [[{"lNum": halved-exponent, "c": "p/q"}, ...], ...]}
    """
    if not isinstance(doc, dict) or set(doc) != {"order", "coeffs"}:
        raise SchemaError('series file needs exactly the keys "order" and "coeffs"')
    order = doc["order"]
    coeffs = doc["coeffs"]
    if not isinstance(order, int) or not isinstance(coeffs, list) or len(coeffs) != order + 1:
        raise SchemaError("series file: coeffs must list order+1 coefficients")
    out = []
    for terms in coeffs:
        poly = RING_L.zero
        for t in terms:
            if not isinstance(t, dict) or set(t) != {"lNum", "c"} or not isinstance(t["lNum"], int):
                raise SchemaError(f"bad series term {t!r}")
            poly = poly + LPoly(mo.L.vars, {(t["lNum"],): parse_rational(t["c"])})
        out.append(poly)
    s = TSeries(RING_L, out)
    if s.coeffs[0] != RING_L.one:
        raise SchemaError("series file: the t^0 coefficient must be 1")
    return s


# -- builtin registry ----------------------------------------------------------

BUILTIN_ATOMS = ("point", "P0", "P1", "P2", "P3", "P4")


def builtin_model(name: str) -> hz.HomologyModel:
    parts = name.split("x")
    models = []
    for part in parts:
        if part not in BUILTIN_ATOMS:
            raise SchemaError(
                f"unknown builtin {part!r}; choose from {BUILTIN_ATOMS} or products like P1xP1")
        d = 0 if part == "point" else int(part[1:])
        models.append(hz.proj_space_model(d))
    model = models[0]
    for extra in models[1:]:
        model = hz.product_model(model, extra)
    return model


def load_model(args) -> hz.HomologyModel:
    if getattr(args, "builtin", None):
        return builtin_model(args.builtin)
    if getattr(args, "model", None):
        try:
            with open(args.model) as fh:
                doc = json.load(fh)
        except OSError as exc:
            raise SchemaError(f"cannot read model file: {exc}")
        except json.JSONDecodeError as exc:
            raise SchemaError(f"model file is not valid JSON: {exc}")
        return model_from_doc(doc)
    raise SchemaError("one of --builtin or --model is required")


# -- rendering ------------------------------------------------------------------

def atom_str(k: int, basis_id: str) -> str:
    return f"d{k}*[{basis_id}]"


def coeff_str(c) -> str:
    return format_rational(c) if isinstance(c, Fraction) else str(c)


def pont_coefficients(s: po.PontSeries) -> list[dict]:
    out = []
    for n, el in enumerate(s.components):
        terms = [{"atoms": [atom_str(k, b) for k, b in ms], "c": coeff_str(c)}
                 for ms, c in sorted(el.terms.items())]
        out.append({"n": n, "terms": terms})
    return out


def series_coefficients(s: TSeries) -> list[dict]:
    return [{"n": n, "c": coeff_str(c)} for n, c in enumerate(s.coeffs)]


def report(command: str, params: dict, order: int, coefficients: list,
           checks: list[dict]) -> dict:
    return {"command": command, "params": params, "order": order,
            "coefficients": coefficients, "checks": checks}


def print_report(doc: dict, pretty: bool) -> None:
    if not pretty:
        print(json.dumps(doc, indent=2))
        return
    print(f"# {doc['command']} {doc['params']}")
    for rec in doc["coefficients"]:
        if "terms" in rec:
            body = " + ".join(
                f"({t['c']}) {' '.join(t['atoms']) or '1'}" for t in rec["terms"]) or "0"
            print(f"t^{rec['n']}: {body}")
        elif "alpha" in rec:
            print(f"alpha_{rec['k']}: {rec['alpha']}")
        else:
            print(f"t^{rec['n']}: {rec['c']}")
    for chk in doc["checks"]:
        detail = f" [{chk['detail']}]" if "detail" in chk else ""
        print(f"check {chk['name']}: {chk['status']}{detail}")


def checks_failed(checks: list[dict]) -> bool:
    return any(c["status"] == "fail" for c in checks)


# -- subcommands -----------------------------------------------------------------

def cmd_zeta(args) -> int:
    model = load_model(args)
    order = check_order(args.order)
    z = mo.kapranov_zeta(model.e_poly, order)
    if args.spec == "uv":
        series = z
    elif args.spec == "chi-y":
        series = z.map_coeffs(RING_Y, lambda p: p.substitute(VS_Y, whole={"u": mo.Y, "v": 1}))
    elif args.spec == "chi":
        series = z.map_coeffs(
            QQ, lambda p: p.substitute(VS_NONE, whole={"u": 1, "v": 1}).as_fraction())
    else:
        raise SchemaError(f"unknown specialization {args.spec!r}")
    checks = []
    if model.l_class is not None:
        route = mo.map_series(mo.hilb_motive_series(model.l_class, 1, order), "e")
        ok = route == z
        checks.append({"name": "symmetric-product-route", "status": "ok" if ok else "fail"})
    else:
        checks.append({"name": "symmetric-product-route", "status": "skipped"})
    doc = report("zeta", {"model": model.name, "spec": args.spec}, order,
                 series_coefficients(series), checks)
    print_report(doc, args.pretty)
    return EXIT_CHECK_FAILED if checks_failed(checks) else EXIT_OK


def cmd_exponents(args) -> int:
    order = check_order(args.order)
    checks = []
    if args.series:
        try:
            with open(args.series) as fh:
                doc = json.load(fh)
        except OSError as exc:
            raise SchemaError(f"cannot read series file: {exc}")
        except json.JSONDecodeError as exc:
            raise SchemaError(f"series file is not valid JSON: {exc}")
        s = series_from_doc(doc)
        if s.order < order:
            raise UnsupportedRangeError(
                f"series file stops at t^{s.order}, need t^{order}")
        b = euler_log(TSeries(RING_L, s.coeffs[: order + 1]))
        source = "series-file"
    else:
        if args.dim is None:
            raise SchemaError("one of --dim or --series is required")
        d = args.dim
        if d < 1:
            raise SchemaError("dimension must be >= 1")
        if d == 1:
            exps = ((RING_L.one,) + (RING_L.zero,) * max(order - 1, 0))[:order]
            b = EulerExponents(RING_L, exps)
        elif d == 2:
            b = euler_log(mo.surface_punctual_series(order))
            for k in range(1, min(order, 3) + 1):
                ok = b.exponent(k) == mo.alpha_closed_small(2)[k - 1]
                checks.append({"name": f"closed-form-alpha-{k}",
                               "status": "ok" if ok else "fail"})
        elif d <= 4:
            if order > 3:
                raise UnsupportedRangeError(
                    f"punctual exponents for d={d} are only known through k=3, got N={order}")
            b = EulerExponents(RING_L, mo.punctual_exponents_small(d).exps[:order])
            checks.append({"name": "closed-form-match", "status": "ok"})
        else:
            raise UnsupportedRangeError(f"no punctual data for dimension {d}")
        source = f"dim-{d}"
    coeffs = [{"k": k, "alpha": str(b.exponent(k))} for k in range(1, b.order + 1)]
    doc = report("exponents", {"source": source}, order, coeffs, checks)
    print_report(doc, args.pretty)
    return EXIT_CHECK_FAILED if checks_failed(checks) else EXIT_OK


def _chi_int(model: hz.HomologyModel) -> int:
    chi = model.e_poly.substitute(VS_UV, whole={"u": 1, "v": 1}).as_fraction()
    return int(chi)


def cmd_classes(args) -> int:
    model = load_model(args)
    order = check_order(args.order)
    d = args.dim
    kind = args.kind
    checks: list[dict] = []
    params = {"model": model.name, "kind": kind, "dim": d}

    def degree_check(name, series, make_expected):
        if not model.proper or make_expected is None:
            checks.append({"name": name, "status": "skipped"})
            return
        got = po.pont_degree(model, series)
        checks.append({"name": name, "status": "ok" if got == make_expected() else "fail"})

    if kind in ("virtual", "aluffi") and d != 3:
        raise UnsupportedRangeError(f"--kind {kind} is a threefold formula; use --dim 3")

    if kind == "sym":
        series = po.sym_prod_class_series(model, order)
        degree_check(
            "degree-vs-motivic-route", series,
            None if model.l_class is None else
            (lambda: mo.map_series(mo.hilb_motive_series(model.l_class, 1, order), "chi-y")))
    elif kind == "hilb":
        if d is None:
            raise SchemaError("--kind hilb requires --dim")
        series = po.hilb_class_series(model, d, order)
        degree_check(
            "degree-vs-cheah-route", series,
            None if model.l_class is None else
            (lambda: mo.map_series(mo.hilb_motive_series(model.l_class, d, order), "chi-y")))
    elif kind == "config":
        series = po.config_class_series(model, order)
        one_plus = TSeries.from_terms(RING_L, order, {0: 1, 1: 1})
        ok = series == po.mt2_series(model, one_plus, order)
        checks.append({"name": "config-vs-exponentiation", "status": "ok" if ok else "fail"})
        degree_check(
            "degree-vs-motivic-route", series,
            None if model.l_class is None else
            (lambda: mo.map_series(mo.config_space_series(model.l_class, order), "chi-y")))
    elif kind == "chern":
        if d is None:
            raise SchemaError("--kind chern requires --dim")
        series = po.chern_class_series(model, d, order)
        def chern_expected():
            scalars = po.chi_alpha_scalars(d, order)
            chi = _chi_int(model)
            return euler_exp(EulerExponents(QQ, tuple(s * chi for s in scalars)), order)

        degree_check("degree-vs-euler-product", series, chern_expected)
    elif kind == "virtual":
        t_form, _ = po.virtual_class_series(model, order)
        series = t_form
        checks.append({"name": "two-route-forms", "status": "ok"})
        degree_check(
            "degree-vs-motivic-route", series,
            None if model.l_class is None else
            (lambda: mo.map_series(mo.virtual_hilb_series(model.l_class, order), "chi-y")))
    elif kind == "aluffi":
        series = po.aluffi_series(model, order)
        chern = po.chern_class_series(model, 3, order)
        ok = series == chern.subst_neg_t()
        checks.append({"name": "sign-relation-vs-chern", "status": "ok" if ok else "fail"})
        degree_check("degree-vs-macmahon", series,
                     lambda: mo.macmahon_series(order, _chi_int(model)).subst(1, -1))
        params["convention"] = "coefficients enumerate against (-t)^n"
    else:
        raise SchemaError(f"unknown kind {kind!r}")

    doc = report("classes", params, order, pont_coefficients(series), checks)
    print_report(doc, args.pretty)
    return EXIT_CHECK_FAILED if checks_failed(checks) else EXIT_OK


def cmd_verify(args) -> int:
    order = check_order(args.order)
    results = run_suite(args.suite, order, args.seed)
    doc = report("verify", {"suite": args.suite, "order": order, "seed": args.seed},
                 order, [], results)
    print_report(doc, args.pretty)
    return EXIT_CHECK_FAILED if checks_failed(results) else EXIT_OK


def cmd_model(args) -> int:
    model = load_model(args)
    print(json.dumps(model_to_doc(model), indent=2))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="motivic-cc",
        description="Exact generating series for Hilbert schemes, symmetric "
                    "products and their characteristic classes.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_model_flags(p):
        p.add_argument("--model", help="path to a model JSON file")
        p.add_argument("--builtin", help="builtin model name (point, P1..P4, P1xP1, ...)")

    p = sub.add_parser("zeta", help="symmetric-product (Kapranov zeta) series")
    add_model_flags(p)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--spec", choices=("uv", "chi-y", "chi"), default="uv")
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(fn=cmd_zeta)

    p = sub.add_parser("exponents", help="Euler exponents of the punctual Hilbert series")
    p.add_argument("--dim", type=int)
    p.add_argument("--series", help="path to a series JSON file")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(fn=cmd_exponents)

    p = sub.add_parser("classes", help="characteristic-class generating series")
    add_model_flags(p)
    p.add_argument("--dim", type=int, help="dimension parameter of the punctual data")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--kind", required=True,
                   choices=("hilb", "sym", "config", "chern", "virtual", "aluffi"))
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(fn=cmd_classes)

    p = sub.add_parser("verify", help="run the randomized verification suites")
    p.add_argument("--suite", default="all",
                   choices=("lambda", "motives", "hirzebruch", "pontrjagin", "all"))
    p.add_argument("--order", type=int, default=8)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("model", help="emit a builtin model as a ModelFile JSON document")
    add_model_flags(p)
    p.set_defaults(fn=cmd_model)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except SchemaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SCHEMA
    except UnsupportedRangeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RANGE
    except TwoRouteMismatchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CHECK_FAILED


if __name__ == "__main__":
    sys.exit(main())
