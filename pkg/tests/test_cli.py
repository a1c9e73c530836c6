import csv
import io
import json
import subprocess
import sys
from importlib import resources

import jsonschema
import pytest

from endolift import cli
from endolift.errors import InvariantViolation

SCHEMA = json.loads(resources.files("endolift").joinpath("schema/report.schema.json").read_text())


def invoke(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def invoke_json(*argv):
    code, out, err = invoke(*argv)
    assert code == 0, err
    data = json.loads(out)
    jsonschema.validate(data, SCHEMA)
    return data


COMMANDS = [
    ["classify-weight", "--weight", "2,1"],
    ["classify-weight", "--shape", "GLxGL1", "--weight", "2,1", "--a0", "3"],
    ["classify-weight", "--shape", "GL", "--weight", "2,0"],
    ["charset", "--charset=-2,-1,0,1,2"],
    ["charset", "--charset=-3/2,3/2"],
    ["partitions", "--n", "4", "--filter", "stable"],
    ["partitions", "--g", "1"],
    ["franke", "--shape", "GL", "--weight", "1,0,0"],
    ["franke", "--g", "1", "--side", "sp"],
    ["lift-table", "--g", "2"],
    ["octuples", "--g", "2", "--weight", "0,0"],
    ["octuples", "--weight", "1,0,0"],
    ["lefschetz", "--g", "4"],
    ["volumes", "--g-max", "3"],
    ["examples", "--case", "g2", "--a", "2", "--b", "1"],
    ["examples", "--case", "g3", "--a", "3", "--b", "2", "--c", "1"],
    ["examples", "--case", "ikeda", "--gamma", "1", "--k", "0"],
]


@pytest.mark.parametrize("argv", COMMANDS, ids=lambda a: " ".join(a))
def test_json_matches_schema(argv):
    data = invoke_json(*argv)
    assert data["command"] == argv[0]
    assert data["schema_version"] == "1"


@pytest.mark.parametrize("argv", COMMANDS, ids=lambda a: " ".join(a))
def test_md_and_csv_render_the_table(argv):
    table = invoke_json(*argv)["table"]
    code, out, _ = invoke(*argv, "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows == [table["columns"]] + table["rows"]
    code, out, _ = invoke(*argv, "--format", "md")
    assert code == 0
    assert out.count("\n| ") == len(table["rows"]) + 1


def test_octuples_g2():
    data = invoke_json("octuples", "--g", "2", "--weight", "0,0")
    tags = [",".join(f["tags"]) for f in data["result"]["families"]]
    assert data["result"]["count"] == 8
    assert sorted(tags) == sorted(["a", "a'", "b", "b',saito-kurokawa", "c", "d", "d'", "e"])
    assert "conjectural multiplicity" in data["warnings"]


def test_examples_g3():
    data = invoke_json("examples", "--case", "g3", "--a", "3", "--b", "2", "--c", "1")
    rows = [(r["scalar"], *r["pair"]) for r in data["result"]["rows"]]
    assert rows == [(7, 7, 3), (5, 9, 5), (3, 11, 3)]


def test_volumes_ratio():
    data = invoke_json("volumes", "--g-max", "2")
    for rec in data["result"]["rows"]:
        assert rec["ratio"]["exact"] == {"coeff": [2, 1], "pi_exp_twice": 0}
    assert data["result"]["rows"][1]["vol_ch_sp"]["text"] == "(32/3)·π^6"


def test_ikeda_example():
    data = invoke_json("examples", "--case", "ikeda", "--gamma", "1", "--k", "0")
    assert data["result"]["weight"] == 4
    assert data["result"]["label"] == "saito-kurokawa"


@pytest.mark.parametrize(
    "argv",
    [
        ["classify-weight", "--weight", "0,1"],
        ["classify-weight", "--weight", "a,b"],
        ["charset", "--charset=1,2"],
        ["charset"],
        ["octuples", "--g", "3", "--weight", "0,0"],
        ["volumes", "--g-max", "0"],
        ["lefschetz"],
        ["examples", "--case", "g2", "--a", "0", "--b", "1"],
        ["franke", "--g", "1", "--shape", "GL", "--weight", "2,0", "--side", "sp"],
    ],
)
def test_invalid_input_exit_code(argv):
    code, out, err = invoke(*argv)
    assert code == 2
    assert out == "" and "invalid input" in err


def test_argparse_errors_exit_code():
    code, _, _ = invoke("no-such-verb")
    assert code == 2


def test_invariant_violation_exit_code(monkeypatch):
    def broken(g):
        raise InvariantViolation("forced")

    monkeypatch.setattr(cli, "lefschetz_c", broken)
    code, out, err = invoke("lefschetz", "--g", "2")
    assert code == 3 and "invariant violation" in err


def test_output_is_deterministic_across_threads():
    argv = [sys.executable, "-m", "endolift.cli", "octuples", "--weight", "0,0,0,0,0"]
    outputs = set()
    for threads in ("1", "2", "8"):
        proc = subprocess.run(argv, capture_output=True, env={"ENDOLIFT_THREADS": threads, "PATH": ""}, check=True)
        outputs.add(proc.stdout)
    assert len(outputs) == 1


def test_console_script_entry_point():
    proc = subprocess.run([sys.executable, "-m", "endolift.cli", "--version"], capture_output=True, text=True)
    assert proc.returncode == 0 and "endolift" in proc.stdout
