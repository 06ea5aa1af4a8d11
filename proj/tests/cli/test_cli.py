import csv
import io
import json

import jsonschema


def validator(schemas_dir, name):
    schema = json.loads((schemas_dir / f"{name}.schema.json").read_text())
    return jsonschema.Draft202012Validator(schema)


def no_floats(value):
    if isinstance(value, float):
        return False
    if isinstance(value, dict):
        return all(no_floats(v) for v in value.values())
    if isinstance(value, list):
        return all(no_floats(v) for v in value)
    return True


COMMANDS = [
    ("inspect", [], "inspect"),
    ("derive", ["--level", "1"], "derive"),
    ("pic", ["--max-level", "1"], "groups"),
    ("bf", ["--max-level", "1"], "groups"),
    ("zeta", [], "zeta"),
    ("lfun", [], "lfun"),
    ("padic-zeta", [], "padic"),
    ("padic-bf", [], "padic"),
    ("mu", ["--prime", "2", "--prime", "7"], "mu"),
    ("lambda", [], "lambda"),
    ("defect", ["--max-level", "1"], "defect"),
    ("verify", ["artin", "--level", "1"], "verify"),
    ("verify", ["control", "--level", "1"], "verify"),
    ("verify", ["interpolation"], "verify"),
    ("verify", ["nonvanish", "--level", "1"], "verify"),
]


def test_every_command_on_every_fixture(run, fixtures_dir, schemas_dir):
    for command, extra, schema in COMMANDS:
        checker = validator(schemas_dir, schema)
        for spec in sorted(fixtures_dir.glob("*.json")):
            proc = run(command, *extra, "--input", spec, "--format", "json")
            assert proc.returncode in (0, 1, 2), proc.stderr
            if proc.returncode == 1:
                err = json.loads(proc.stderr)
                validator(schemas_dir, "error").validate(err)
                continue
            doc = json.loads(proc.stdout)
            checker.validate(doc)
            assert no_floats(doc), (command, spec.name)


def test_growth_schema(run_json, fixtures_dir, schemas_dir):
    doc = run_json("growth", "--input", fixtures_dir / "double_loop_p3.json", "--prime", "2", "--max-level", "3")
    validator(schemas_dir, "growth").validate(doc)
    table = doc["growth"][0]
    assert table["mu"] == 1
    assert [r["observed"] for r in table["rows"]] == [0, 2, 8, 26]
    assert {r["residual"] for r in table["rows"]} == {"-1"}


def test_verify_artin_exit_zero_on_fixtures(run, fixtures_dir):
    for spec in sorted(fixtures_dir.glob("*.json")):
        run("verify", "artin", "--level", "1", "--input", spec, check=0)


def test_defect_p5_table(run_json, run, fixtures_dir):
    doc = run_json("defect", "--input", fixtures_dir / "z5_growing_defect.json", "--max-level", "2")
    assert [lv["delta"] for lv in doc["levels"]] == [0, 4, 4]
    text = run("defect", "--input", fixtures_dir / "z5_growing_defect.json", "--max-level", "2", "--format", "text", check=0)
    assert "delta" in text.stdout


def test_mu_even_coefficients(run_json, fixtures_dir):
    doc = run_json("mu", "--input", fixtures_dir / "unbounded_bf.json", "--prime", "2")
    zeta = next(e for e in doc["mu"] if e["function"] == "padic_zeta")
    assert zeta["mu"] >= 1
    bf = next(e for e in doc["mu"] if e["function"] == "padic_bf")
    assert bf["mu"] is None


def test_budget_exceeded(run, fixtures_dir, schemas_dir):
    proc = run("pic", "--input", fixtures_dir / "unbounded_bf.json", "--level", "5", "--budget", "100")
    assert proc.returncode == 1
    err = json.loads(proc.stderr)
    validator(schemas_dir, "error").validate(err)
    assert err["error"] == "budget_exceeded"
    assert err["needed"] > err["budget"] == 100


def test_spec_errors_exit_one(run, tmp_path):
    cases = {
        "malformed_json": "{nope",
        "unknown_vertex": '{"p":2,"d":1,"vertices":["a"],"edges":[{"src":"a","dst":"b","voltage":[0]}]}',
        "voltage_arity": '{"p":2,"d":2,"vertices":["a"],"edges":[{"src":"a","dst":"a","voltage":[0]}]}',
    }
    codes = set()
    for kind, text in cases.items():
        path = tmp_path / f"{kind}.json"
        path.write_text(text)
        proc = run("inspect", "--input", path)
        assert proc.returncode == 1
        err = json.loads(proc.stderr)
        assert err["error"] == kind
        codes.add(err["code"])
    assert len(codes) == 3
    assert run("inspect", "--input", tmp_path / "missing.json").returncode == 1


def test_verification_failure_exit_two(run, fixtures_dir):
    # Zero voltages: the tower is not connected and L_p vanishes at the nontrivial character.
    proc = run("verify", "nonvanish", "--level", "1", "--input", fixtures_dir / "positive_defect.json", "--format", "json")
    assert proc.returncode == 2
    assert json.loads(proc.stdout)["holds"] is False


def test_csv_and_text(run, fixtures_dir):
    proc = run("pic", "--input", fixtures_dir / "triangle_undirected.json", "--max-level", "3", "--format", "csv", check=0)
    rows = list(csv.reader(io.StringIO(proc.stdout)))
    assert rows[0] == ["n", "rank", "factors"]
    assert rows[1:] == [["0", "1", "3"], ["1", "1", "6"], ["2", "1", "12"], ["3", "1", "24"]]
    text = run("pic", "--input", fixtures_dir / "triangle_undirected.json", "--format", "text", check=0)
    assert text.stdout.splitlines()[0].split() == ["n", "rank", "factors"]


def test_random_towers_are_seeded(run):
    args = ["verify", "artin", "--random", "5", "--random-p", "3", "--seed", "17", "--format", "json"]
    a = run(*args, check=0).stdout
    b = run(*args, check=0).stdout
    assert a == b
    doc = json.loads(a)
    assert len(doc["towers"]) == 5
    c = run("verify", "artin", "--random", "5", "--random-p", "3", "--seed", "18", "--format", "json", check=0).stdout
    assert json.loads(c)["holds"]


def test_inspect_unbounded_matrices(run_json, fixtures_dir):
    doc = run_json("inspect", "--input", fixtures_dir / "unbounded_bf.json")
    assert doc["adjacency"] == [["2", "2", "0"], ["1", "1", "1"], ["1", "2", "1"]]
    assert doc["tower_strongly_connected"] is True
