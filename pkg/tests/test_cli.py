import csv
import io
import json
import math
import subprocess
import sys

import jsonschema
import pytest

from scatdet import __version__, schemas
from scatdet.cli import dumps, main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def run_json(*argv):
    code, text = run(*argv, "--json")
    env = json.loads(text)
    jsonschema.validate(env, schemas.ENVELOPE)
    jsonschema.validate(env["result"], schemas.BY_COMMAND[env["command"]])
    assert env["version"] == __version__
    return code, env


# -- phi-eval -------------------------------------------------------------------------


def test_phi_eval_value():
    code, env = run_json("phi-eval", "--family", "modular", "--s", "2")
    assert code == 0
    assert env["result"]["value"]["re"] == pytest.approx(1.7445680821, rel=1e-9)
    code, text = run("phi-eval", "--family", "modular", "--s", "2")
    assert code == 0 and "1.744568082131e+00" in text


def test_phi_eval_complex_and_family_json():
    code, env = run_json("phi-eval", "--family-json", '{"family": "gamma0plus", "primes": [2, 3]}', "--s", "0.7,0.3")
    assert code == 0 and env["input"]["family"] == {"family": "gamma0plus", "primes": [2, 3]}


def test_phi_eval_germ_reports():
    code, text = run("phi-eval", "--family", "modular", "--s", "0.5", "--germ")
    assert code == 0 and text.strip() == "order 0, value -1.000000000000e+00"
    code, text = run("phi-eval", "--family", "gamma0", "--primes", "2", "--s", "1", "--germ")
    assert code == 0 and text.startswith("order -1")
    code, env = run_json("phi-eval", "--family", "gamma0plus", "--primes", "2,3,5", "--s", "0.5", "--germ")
    assert env["result"]["germ"]["order"] == 0 and env["result"]["germ"]["value"] == pytest.approx(-1, abs=1e-8)


def test_phi_eval_singular_without_germ_exits_3():
    code, text = run("phi-eval", "--family", "modular", "--s", "1")
    assert code == 3 and text == ""


@pytest.mark.parametrize(
    "argv",
    [
        ["phi-eval", "--family", "modular", "--s", "abc"],
        ["phi-eval", "--family", "gamma0", "--s", "2"],
        ["phi-eval", "--family", "gamma0", "--primes", "4", "--s", "2"],
        ["phi-eval", "--s", "2"],
        ["phi-eval", "--family", "modular", "--s", "0.5,1", "--germ"],
        ["phi-eval", "--family-json", "{not json", "--s", "2"],
    ],
)
def test_phi_eval_bad_args_exit_2(argv):
    assert run(*argv)[0] == 2


def test_argparse_errors_exit_2():
    with pytest.raises(SystemExit) as exc:
        main(["phi-eval", "--family", "nonsense", "--s", "2"])
    assert exc.value.code == 2


def test_phi_eval_csv():
    code, text = run("phi-eval", "--family", "modular", "--s", "3", "--csv")
    rows = list(csv.reader(io.StringIO(text)))
    assert code == 0 and rows[0] == ["s_re", "s_im", "value_re", "value_im"] and len(rows) == 2


# -- verify ---------------------------------------------------------------------------------


@pytest.mark.parametrize(
    "args,sign",
    [(["--family", "modular"], -1), (["--family", "gamma0", "--primes", "2,3"], 1),
     (["--family", "gamma0plus", "--primes", "2,3,5"], -1)],
)
def test_verify_examples(args, sign):
    code, env = run_json("verify", *args)
    row = env["result"]["rows"][0]
    assert code == 0 and row["match"] and row["predicted_sign"] == sign


def test_verify_all():
    code, env = run_json("verify", "--all")
    assert code == 0 and env["result"]["all_match"] and len(env["result"]["rows"]) == 10
    code, text = run("verify", "--all")
    assert code == 0 and text.count("yes") == 10


def test_verify_ledger_table():
    code, text = run("verify", "--family", "gamma0", "--primes", "2,3", "--ledger")
    assert code == 0 and "pole of [zeta(2s-1)]^4" in text and "zero of (1 - 3^(2-2s))^2" in text


def test_verify_mismatch_exits_1(monkeypatch):
    from scatdet import cli
    from scatdet.scattering.central import CentralValueReport

    monkeypatch.setattr(cli, "central_value", lambda fam: CentralValueReport(1.0, 1.0, -1))
    assert run("verify", "--family", "modular")[0] == 1


# -- multiplicities ------------------------------------------------------------------------


def test_multiplicities_modular(tmp_path):
    path = tmp_path / "modular.json"
    path.write_text(json.dumps({"genus": 0, "cusps": 1, "elliptic_orders": [2, 3]}))
    jsonschema.validate(json.loads(path.read_text()), schemas.DESCRIPTOR)
    code, text = run("multiplicities", str(path), "--n-max", "200")
    rows = list(csv.DictReader(io.StringIO(text)))
    assert code == 0 and len(rows) == 201 and all(r["agree"] == "true" for r in rows)
    assert rows[0]["floor"] == "-1"


def test_multiplicities_inline_flags():
    code, text = run("multiplicities", "--genus", "1", "--cusps", "1", "--n-max", "5")
    rows = list(csv.DictReader(io.StringIO(text)))
    assert code == 0 and [int(r["floor"]) for r in rows] == [1, 3, 5, 7, 9, 11]
    code, env = run_json("multiplicities", "--genus", "0", "--cusps", "1", "--elliptic", "2,3,7", "--n-max", "20")
    assert code == 0 and env["result"]["all_agree"]


@pytest.mark.parametrize(
    "argv",
    [["--genus", "0", "--cusps", "1", "--elliptic", "2"], ["--genus", "0", "--cusps", "1", "--elliptic", "2,3", "--n-max", "10001"],
     ["--cusps", "1"], ["/nonexistent/file.json"]],
)
def test_multiplicities_bad_input_exit_2(argv):
    assert run("multiplicities", *argv)[0] == 2


def test_multiplicities_disagreement_exits_1(monkeypatch):
    from scatdet import cli
    from scatdet.surface import MultiplicityReport

    monkeypatch.setattr(cli, "multiplicity_report", lambda d, n: MultiplicityReport(n, 0, 0.5))
    assert run("multiplicities", "--genus", "1", "--cusps", "1", "--n-max", "3")[0] == 1


# -- superzeta-demo -----------------------------------------------------------------------


def test_superzeta_finite():
    zs = '{"kind": "finite", "zeros": [[1, 0, 1], [-1, 0, 1]]}'
    jsonschema.validate(json.loads(zs), schemas.ZERO_SET)
    code, env = run_json("superzeta-demo", "--zeros", zs, "--z", "3")
    res = env["result"]
    assert code == 0 and res["determinant"]["re"] == pytest.approx(8.0, rel=1e-12)
    assert res["cross_check"]["method"] == "direct-product" and res["cross_check"]["pass"]


def test_superzeta_progression():
    zs = '{"kind": "progression", "start": -1, "step": -1}'
    jsonschema.validate(json.loads(zs), schemas.ZERO_SET)
    code, env = run_json("superzeta-demo", "--zeros", zs, "--z", "1")
    res = env["result"]
    assert code == 0 and res["determinant"]["re"] == pytest.approx(math.sqrt(2 * math.pi), rel=1e-12)
    assert res["cross_check"]["method"] == "lerch" and res["cross_check"]["pass"]
    code, text = run("superzeta-demo", "--zeros", zs, "--z", "1")
    assert "lerch cross-check" in text and "pass" in text


@pytest.mark.parametrize(
    "zeros,z",
    [('{"kind": "finite", "zeros": [[1, 0, 1]]}', "0"), ("{broken", "1"),
     ('{"kind": "progression", "start": -1, "step": 1}', "1"), ('{"kind": "finite", "zeros": [[1, 0, 1]]}', "x")],
)
def test_superzeta_bad_input_exit_2(zeros, z):
    assert run("superzeta-demo", "--zeros", zeros, "--z", z)[0] == 2


def test_superzeta_low_s_on_progression_exit_2():
    zs = '{"kind": "progression", "start": -1, "step": -1}'
    assert run("superzeta-demo", "--zeros", zs, "--z", "1", "--s", "1.5")[0] == 2


# -- formatting and determinism ----------------------------------------------------


def test_float_format():
    assert dumps({"a": 1.0, "b": [2, -0.0], "c": None, "d": True}) == '{"a": 1.000000000000e+00, "b": [2, 0.000000000000e+00], "c": null, "d": true}'


@pytest.mark.parametrize(
    "argv",
    [["phi-eval", "--family", "gamma0", "--primes", "2,3", "--s", "1.5,2"], ["verify", "--family", "modular"],
     ["superzeta-demo", "--zeros", '{"kind": "finite", "zeros": [[0.5, 1, 2]]}', "--z", "2,1"]],
)
def test_json_is_byte_identical_and_reparses(argv):
    a = run(*argv, "--json")[1]
    b = run(*argv, "--json")[1]
    assert a == b
    env = json.loads(a)
    jsonschema.validate(env, schemas.ENVELOPE)
    assert json.loads(json.dumps(env)) == env


def test_family_schema_accepts_all_acceptance_families():
    from scatdet.scattering import ACCEPTANCE_FAMILIES

    for f in ACCEPTANCE_FAMILIES:
        jsonschema.validate(f.to_json(), schemas.FAMILY)


# -- entry points ------------------------------------------------------------------------


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "scatdet", "phi-eval", "--family", "modular", "--s", "0.5", "--germ"],
                         capture_output=True, text=True)
    assert out.returncode == 0 and out.stdout.strip() == "order 0, value -1.000000000000e+00"


def test_module_entry_point_exit_code():
    out = subprocess.run([sys.executable, "-m", "scatdet", "phi-eval", "--family", "modular", "--s", "1"],
                         capture_output=True, text=True)
    assert out.returncode == 3 and "singularity" in out.stderr
