import json
import subprocess
import sys
from importlib import resources

import jsonschema
import pytest

from deficiency.cli import main

SMALL = {
    "thresholds": ["--n", "3"],
    "classify": ["--n", "3", "--c", "200"],
    "deficiency": ["--n", "2", "--c", "0"],
    "selfadjoint": ["--n", "2", "--c", "45"],
    "bands": ["--n", "3"],
    "roots": ["--n", "2", "--c", "45"],
    "hpoly": ["--n", "3"],
    "orlando": ["--n", "3", "--c", "0"],
    "galois": ["--n", "5", "--pmax", "200"],
    "table-a1": ["--nmin", "4", "--nmax", "5", "--pmax", "200"],
    "table-a2": ["--nmax", "4"],
    "table-a3": ["--nmax", "4"],
    "figure1": ["--n", "2", "--grid=-2:2:5"],
    "frobenius": ["--n", "1", "--c", "0", "--mu", "1", "--alpha-index", "2", "--grid", "1/10:1:5"],
}


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def schema(name):
    return json.loads(resources.files("deficiency").joinpath("schemas", name + ".json").read_text())


@pytest.mark.parametrize("cmd", sorted(SMALL))
def test_json_validates_against_schema(cmd, capsys):
    code, out, _ = run([cmd, *SMALL[cmd], "--format", "json"], capsys)
    assert code == 0
    jsonschema.validate(json.loads(out), schema(cmd))


@pytest.mark.parametrize("cmd", sorted(SMALL))
def test_csv_output_is_deterministic(cmd, capsys):
    first = run([cmd, *SMALL[cmd], "--format", "csv"], capsys)
    second = run([cmd, *SMALL[cmd], "--format", "csv"], capsys)
    assert first[0] == 0 and first[1] == second[1]
    assert "\r" not in first[1]


def test_spec_examples(capsys):
    assert json.loads(run(["selfadjoint", "--n", "2", "--c", "45"], capsys)[1])["essentially_selfadjoint"] is True
    assert json.loads(run(["classify", "--n", "3", "--c", "200"], capsys)[1])["count"] == 5
    assert json.loads(run(["thresholds", "--n", "1"], capsys)[1]) == ["3/4"]


def test_decimal_c_is_exact(capsys):
    obj = json.loads(run(["selfadjoint", "--n", "1", "--c", "0.74"], capsys)[1])
    assert obj["c"] == "37/50" and obj["essentially_selfadjoint"] is False


def test_round_trip_of_emitted_rationals(capsys):
    ts = json.loads(run(["thresholds", "--n", "2"], capsys)[1])
    for t in ts:
        obj = json.loads(run(["classify", "--n", "2", "--c", t], capsys)[1])
        assert obj["c"] == t


def test_bands_golden_csv(capsys):
    out = run(["bands", "--n", "2", "--format", "csv"], capsys)[1]
    assert out == (
        "low,low_closed,high,high_closed,count\n"
        "-inf,false,-6.5625,true,3\n"
        "-6.5625,false,45,false,4\n"
        "45,true,inf,false,2\n"
    )


@pytest.mark.parametrize("argv", [
    ["bogus"],
    ["classify", "--n", "0", "--c", "1"],
    ["classify", "--n", "2"],
    ["classify", "--n", "2", "--c", "abc"],
    ["figure1", "--grid", "1:0:5"],
    ["table-a2", "--digits", "60"],
    ["galois", "--n", "1"],
    [],
])
def test_usage_errors_exit_2(argv, capsys):
    assert run(argv, capsys)[0] == 2


def test_computation_error_exit_3(capsys):
    # alpha_1 = -1/2 resonates with 3/2 at c = 3/4
    code, _, err = run(["frobenius", "--n", "1", "--c", "3/4", "--mu", "1", "--alpha-index", "1"], capsys)
    assert code == 3 and "ResonanceError" in err


def test_output_file(tmp_path, capsys):
    target = tmp_path / "h.json"
    assert run(["hpoly", "--n", "3", "--output", str(target)], capsys)[0] == 0
    assert json.loads(target.read_text())["coefficients"] == ["146313216000", "207083520", "-5832"]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "deficiency", "thresholds", "--n", "2"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout) == ["-105/16", "45"]
