import json
import subprocess
import sys
from importlib.resources import files

import jsonschema
import pytest

from cohesion_lab.algebra import ParseError
from cohesion_lab.cli import (Config, UnresolvedName, load_scenario, parse_scenario, run,
                              to_json, to_text)
from cohesion_lab.cli.main import main
from cohesion_lab.cli.report import load_schema, to_json_obj
from cohesion_lab.cli.runner import worker_limit

SHIPPED = files("cohesion_lab") / "scenarios"
AFFINE = str(SHIPPED / "affine_example.scn")


def write(tmp_path, text, name="s.scn"):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


# -- parsing ------------------------------------------------------------------

def test_shipped_affine_scenario_parses():
    s = load_scenario(AFFINE)
    assert [st.check_kind for st in s.checks] == ["prolongation", "euler",
                                                   "euler_composition", "kl"]
    assert len(s.definitions) == 5


@pytest.mark.parametrize("name", ["affine_example", "site_gate",
                                  "rig_preorders", "topos_suite"])
def test_dump_roundtrip(name):
    s = load_scenario(str(SHIPPED / f"{name}.scn"))
    again = parse_scenario(s.dump())
    assert again.same(s)
    assert parse_scenario(again.dump()).dump() == again.dump()


def test_bad_polynomial_reports_line_and_column():
    text = "[algebra A]\ngens = x\nrelations = x^^2\n"
    with pytest.raises(ParseError) as exc:
        parse_scenario(text)
    assert exc.value.line == 3 and exc.value.column == 15
    assert "line 3, column 15" in str(exc.value)


def test_unresolved_reference():
    text = "[check.idempotents]\nalgebra = missing\n"
    with pytest.raises(UnresolvedName) as exc:
        parse_scenario(text)
    assert exc.value.name == "missing" and exc.value.line == 2


def test_forward_references_resolve():
    text = "[scheme T]\nalgebra = W\n\n[algebra W]\ngens = e\nrelations = e^2\n"
    s = parse_scenario(text)
    assert list(s.definitions) == ["T", "W"]


@pytest.mark.parametrize("text", [
    "[algebra A]\nrelations = x\n",           # missing gens
    "[algebra A]\ngens = x\ngens = y\n",     # duplicate key
    "[widget A]\n",                          # unknown kind
    "[check.nonsense]\n",                    # unknown check
    "[algebra A]\ngens = x\ncolour = red\n",  # unknown key
    "gens = x\n",                            # entry outside a stanza
])
def test_malformed_scenarios(text):
    with pytest.raises(ParseError):
        parse_scenario(text)


# -- running ---------------------------------------------------------------------

def test_affine_report_artifacts():
    report = run(load_scenario(AFFINE))
    assert report.exit_code() == 0
    text = to_text(report)
    assert "R = Spec(k[x])" in text
    assert "mult: x ↦ y z" in text


def test_gate_witness_in_report():
    report = run(load_scenario(str(SHIPPED / "site_gate.scn")))
    first = report.results[0]
    assert first.verdict == "pass" and first.artifacts["witness"] == "0"


def test_json_schema_and_determinism(monkeypatch):
    s = load_scenario(str(SHIPPED / "rig_preorders.scn"))
    a = to_json(run(s, workers=1))
    b = to_json(run(s, workers=4))
    assert a == b
    jsonschema.validate(json.loads(a), load_schema())
    monkeypatch.setenv("COHESION_LAB_WORKERS", "2")
    assert to_json(run(s)) == a


def test_worker_limit_env(monkeypatch):
    monkeypatch.setenv("COHESION_LAB_WORKERS", "3")
    assert worker_limit() == 3
    monkeypatch.setenv("COHESION_LAB_WORKERS", "junk")
    assert worker_limit(5) == 5


FAILING = """
[site arrow]
builtin = arrow

[check.site_gate first]
site = arrow

[check.site_gate second]
site = arrow
expect = false
"""

ERRORING = """
[algebra F]
gens = x

[check.idempotents]
algebra = F
"""


def test_exit_codes(tmp_path, capsys):
    assert main(["run", AFFINE]) == 0
    assert main(["run", write(tmp_path, FAILING)]) == 1
    assert main(["run", write(tmp_path, ERRORING)]) == 2
    bad = write(tmp_path, "[algebra A]\ngens = x\nrelations = x^^2\n")
    assert main(["run", bad]) == 3
    assert "line 3, column 15" in capsys.readouterr().err
    assert main(["run", str(tmp_path / "absent.scn")]) == 3
    assert main(["run", write(tmp_path, "# nothing\n")]) == 0


def test_error_is_reported_not_raised(tmp_path):
    report = run(load_scenario(write(tmp_path, ERRORING)))
    (res,) = report.results
    assert res.verdict == "error" and res.error.startswith("InfiniteDimensional")


def test_fail_fast_stops(tmp_path, capsys):
    path = write(tmp_path, FAILING)
    assert main(["run", path, "--fail-fast", "--json"]) == 1
    out = json.loads(capsys.readouterr().out)
    assert out["stopped_early"] is True and len(out["checks"]) == 1
    assert out["exit_code"] == 1


def test_json_has_no_timing(tmp_path):
    obj = to_json_obj(run(load_scenario(write(tmp_path, FAILING))))
    assert all("seconds" not in c for c in obj["checks"])
    assert obj["summary"] == {"pass": 1, "fail": 1, "error": 0}


def test_config_flags_reach_the_report(capsys):
    main(["run", AFFINE, "--json", "--seed", "7", "--monomial-order", "lex"])
    cfg = json.loads(capsys.readouterr().out)["config"]
    assert cfg["seed"] == 7 and cfg["monomial_order"] == "lex"
    assert Config().as_dict()["max_enumeration"] == 10 ** 7


def test_validate_and_catalog(capsys):
    assert main(["validate", AFFINE]) == 0
    assert capsys.readouterr().out.strip() == "ok: 5 definitions, 4 checks"
    assert main(["catalog"]) == 0
    out = capsys.readouterr().out
    assert "arrow (not pre-cohesive)" in out and "Qline" in out


def test_console_script_entry_point():
    proc = subprocess.run([sys.executable, "-m", "cohesion_lab.cli.main", "validate", AFFINE],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.startswith("ok:")
