import json

from motivic_cc.cli import (
    EXIT_OK, EXIT_CHECK_FAILED, EXIT_SCHEMA, EXIT_RANGE, builtin_model, main,
    model_from_doc, model_to_doc,
)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv)
    return code, json.loads(out)


def test_zeta_p1_uv(capsys):
    code, doc = run_json(capsys, "zeta", "--builtin", "P1", "--order", "2", "--spec", "uv")
    assert code == EXIT_OK
    assert doc["coefficients"][2] == {"n": 2, "c": "1+uv+u^2v^2"}
    assert doc["checks"] == [{"name": "symmetric-product-route", "status": "ok"}]


def test_zeta_point_all_ones(capsys):
    code, doc = run_json(capsys, "zeta", "--builtin", "point", "--order", "5")
    assert code == EXIT_OK
    assert all(rec["c"] == "1" for rec in doc["coefficients"])


def test_zeta_p1_chi_counts_points(capsys):
    code, doc = run_json(capsys, "zeta", "--builtin", "P1", "--order", "6", "--spec", "chi")
    assert code == EXIT_OK
    assert [rec["c"] for rec in doc["coefficients"]] == [str(n + 1) for n in range(7)]


def test_exponents_dims(capsys):
    code, doc = run_json(capsys, "exponents", "--dim", "2", "--order", "3")
    assert code == EXIT_OK
    assert [rec["alpha"] for rec in doc["coefficients"]] == ["1", "L", "L^2"]
    code, doc = run_json(capsys, "exponents", "--dim", "1", "--order", "3")
    assert [rec["alpha"] for rec in doc["coefficients"]] == ["1", "0", "0"]
    code, doc = run_json(capsys, "exponents", "--dim", "3", "--order", "3")
    assert [rec["alpha"] for rec in doc["coefficients"]] == \
        ["1", "L+L^2", "L^2+L^3+L^4"]


def test_exponents_range_errors(capsys):
    code, _ = run(capsys, "exponents", "--dim", "3", "--order", "4")
    assert code == EXIT_RANGE
    code, _ = run(capsys, "exponents", "--dim", "7", "--order", "2")
    assert code == EXIT_RANGE


def test_exponents_series_file(tmp_path, capsys):
    # 1/(1-t): supplies its own exponents (1, 0, 0)
    doc = {"order": 3, "coeffs": [[{"lNum": 0, "c": "1"}]] * 4}
    path = tmp_path / "series.json"
    path.write_text(json.dumps(doc))
    code, rep = run_json(capsys, "exponents", "--series", str(path), "--order", "3")
    assert code == EXIT_OK
    assert [rec["alpha"] for rec in rep["coefficients"]] == ["1", "0", "0"]


def test_classes_curve_hilb_equals_sym(capsys):
    code, hilb = run_json(capsys, "classes", "--builtin", "P1", "--dim", "1",
                          "--kind", "hilb", "--order", "4")
    assert code == EXIT_OK
    code, sym = run_json(capsys, "classes", "--builtin", "P1", "--dim", "1",
                         "--kind", "sym", "--order", "4")
    assert code == EXIT_OK
    assert hilb["coefficients"] == sym["coefficients"]
    assert all(c["status"] == "ok" for c in hilb["checks"] + sym["checks"])


def test_classes_p2_hilb_degree_check(capsys):
    code, doc = run_json(capsys, "classes", "--builtin", "P2", "--dim", "2",
                         "--kind", "hilb", "--order", "3")
    assert code == EXIT_OK
    assert {"name": "degree-vs-cheah-route", "status": "ok"} in doc["checks"]


def test_classes_aluffi_needs_dim3(capsys):
    code, _ = run(capsys, "classes", "--builtin", "point", "--dim", "2",
                  "--kind", "aluffi", "--order", "3")
    assert code == EXIT_RANGE


def test_classes_hilb_range_error(capsys):
    code, _ = run(capsys, "classes", "--builtin", "P3", "--dim", "3",
                  "--kind", "hilb", "--order", "4")
    assert code == EXIT_RANGE


def test_classes_point_aluffi_macmahon(capsys):
    code, doc = run_json(capsys, "classes", "--builtin", "point", "--dim", "3",
                         "--kind", "aluffi", "--order", "6")
    assert code == EXIT_OK
    assert {"name": "degree-vs-macmahon", "status": "ok"} in doc["checks"]
    assert "(-t)^n" in doc["params"]["convention"]


def test_classes_virtual_and_config(capsys):
    code, doc = run_json(capsys, "classes", "--builtin", "P3", "--dim", "3",
                         "--kind", "virtual", "--order", "3")
    assert code == EXIT_OK
    assert all(c["status"] == "ok" for c in doc["checks"])
    code, doc = run_json(capsys, "classes", "--builtin", "P1", "--dim", "1",
                         "--kind", "config", "--order", "4")
    assert code == EXIT_OK
    assert all(c["status"] == "ok" for c in doc["checks"])


def test_model_roundtrip():
    for name in ("point", "P2", "P1xP1"):
        model = builtin_model(name)
        assert model_from_doc(model_to_doc(model)) == model


def test_model_roundtrip_via_file(tmp_path, capsys):
    code, out = run(capsys, "model", "--builtin", "P1xP2")
    assert code == EXIT_OK
    path = tmp_path / "m.json"
    path.write_text(out)
    code, doc = run_json(capsys, "classes", "--model", str(path), "--dim", "2",
                         "--kind", "sym", "--order", "2")
    assert code == EXIT_OK


def test_schema_errors(tmp_path, capsys):
    code, _ = run(capsys, "classes", "--builtin", "nope", "--dim", "1",
                  "--kind", "sym", "--order", "2")
    assert code == EXIT_SCHEMA
    path = tmp_path / "bad.json"
    path.write_text("{\"name\": \"x\"}")
    code, _ = run(capsys, "classes", "--model", str(path), "--dim", "1",
                  "--kind", "sym", "--order", "2")
    assert code == EXIT_SCHEMA
    path.write_text("not json")
    code, _ = run(capsys, "zeta", "--model", str(path), "--order", "2")
    assert code == EXIT_SCHEMA


def test_inconsistent_model_rejected(tmp_path, capsys):
    model = builtin_model("P1")
    doc = model_to_doc(model)
    doc["ty_class"]["P0"] = [{"yNum": 0, "c": "2"}]
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc))
    code, _ = run(capsys, "zeta", "--model", str(path), "--order", "2")
    assert code == EXIT_SCHEMA


def test_exit_one_on_failed_internal_check(tmp_path, capsys):
    # consistent degree but a positive-degree coordinate not divisible by
    # (1-y): the Chern normalization limit has a pole, reported as exit 1
    doc = {
        "name": "pole", "dim": 1, "proper": True,
        "basis": [{"id": "a", "deg": 1}, {"id": "b", "deg": 0}],
        "zeroDegreeBasisId": "b",
        "ty_class": {"a": [{"yNum": 0, "c": "1"}],
                     "b": [{"yNum": 0, "c": "1"}, {"yNum": 2, "c": "1"}]},
        "e_poly": [{"u": 0, "v": 0, "c": 1}, {"u": 1, "v": 1, "c": 1}],
    }
    path = tmp_path / "pole.json"
    path.write_text(json.dumps(doc))
    code = main(["classes", "--model", str(path), "--dim", "1",
                 "--kind", "chern", "--order", "2"])
    capsys.readouterr()
    assert code == EXIT_CHECK_FAILED


def test_order_cap_env(capsys, monkeypatch):
    code, _ = run(capsys, "zeta", "--builtin", "point", "--order", "13")
    assert code == EXIT_RANGE
    monkeypatch.setenv("MOTIVIC_CC_MAX_ORDER", "14")
    code, _ = run(capsys, "zeta", "--builtin", "point", "--order", "13")
    assert code == EXIT_OK


def test_reports_deterministic(capsys):
    _, a = run(capsys, "verify", "--suite", "motives", "--order", "4", "--seed", "9")
    _, b = run(capsys, "verify", "--suite", "motives", "--order", "4", "--seed", "9")
    assert a == b
    _, c = run(capsys, "classes", "--builtin", "P2", "--dim", "2",
               "--kind", "chern", "--order", "3")
    _, d = run(capsys, "classes", "--builtin", "P2", "--dim", "2",
               "--kind", "chern", "--order", "3")
    assert c == d


def test_verify_suite_passes(capsys):
    code, doc = run_json(capsys, "verify", "--suite", "lambda", "--order", "6", "--seed", "3")
    assert code == EXIT_OK
    assert doc["checks"] and all(c["status"] == "ok" for c in doc["checks"])


def test_no_floats_anywhere(capsys):
    for argv in (
        ("zeta", "--builtin", "P1xP1", "--order", "3", "--spec", "chi-y"),
        ("classes", "--builtin", "P2", "--dim", "2", "--kind", "hilb", "--order", "3"),
        ("classes", "--builtin", "P3", "--dim", "3", "--kind", "aluffi", "--order", "3"),
        ("exponents", "--dim", "4", "--order", "3"),
    ):
        code, doc = run_json(capsys, *argv)
        assert code == EXIT_OK

        def walk(x):
            assert not isinstance(x, float), f"float leaked: {x}"
            if isinstance(x, dict):
                for v in x.values():
                    walk(v)
            elif isinstance(x, list):
                for v in x:
                    walk(v)
            elif isinstance(x, str) and any(ch.isdigit() for ch in x):
                assert "." not in x, f"decimal point leaked: {x}"

        walk(doc)
