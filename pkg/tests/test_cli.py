import json
import subprocess
import sys

import pytest

from gradus.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_matrix_a1(capsys):
    code, out, _ = run(capsys, "matrix", "--type", "A1", "--m", "1", "--format", "json")
    assert code == 0
    assert json.loads(out)["transition"] == [["1", "v^2"], ["0", "1"]]


def test_basis_a1(capsys):
    code, out, _ = run(capsys, "basis", "--type", "A1", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["dim"] == 2
    assert [o["d"] for o in data["orbits"]] == [0, 2]


def test_verify_examples(capsys):
    code, out, _ = run(capsys, "verify-examples")
    assert code == 0
    assert "FAIL" not in out and out.count("pass") == 16


def test_rigid_facets_a2(capsys):
    code, out, _ = run(capsys, "facets", "--type", "A2", "--rigid", "--format", "json")
    assert code == 0
    assert sorted(o["d"] for o in json.loads(out)["orbits"]) == [0, 4, 6]


def test_alcove_classes_table(capsys):
    code, out, _ = run(capsys, "facets", "--type", "A1")
    lines = out.strip().splitlines()
    assert code == 0 and len(lines) == 2 + 3
    assert lines[0].split() == ["class", "signature", "point"]


def test_dim_and_gram(capsys):
    code, out, _ = run(capsys, "dim", "--type", "A1", "--format", "csv")
    assert code == 0 and out.splitlines() == ["family_size,dim,radical_dim", "3,2,1"]
    code, out, _ = run(capsys, "gram", "--type", "A1", "--format", "json")
    values = sorted(e["value"] for e in json.loads(out)["entries"])
    assert values == sorted(["v^-2 + 2 + v^2", "v^-1 + 2v + v^3", "2 + 2v^2"])


def test_restrict(capsys):
    code, out, _ = run(capsys, "restrict", "--type", "A2", "--levi", "1", "--format", "json")
    assert code == 0
    assert json.loads(out)["constants"] == [[1, 1, 0], [0, 1, 1]]
    code, out, _ = run(capsys, "restrict", "--type", "A2", "--levi-point", "1,1", "--format", "json")
    assert json.loads(out)["constants"] == [[1, 2, 1]]


def test_springer(capsys):
    code, out, _ = run(capsys, "springer", "--type", "A2", "--format", "json")
    rows = json.loads(out)["matching"]
    assert code == 0
    assert {r["label"]: r["b"] for r in rows} == {"[3]": 0, "[2,1]": 1, "[1,1,1]": 3}
    code, out, _ = run(capsys, "springer", "--type", "A1", "--m", "2", "--cocharacter", "1", "--format", "json")
    assert code == 0 and len(json.loads(out)["omega"]) == 3


def test_config_input(capsys):
    cfg = json.dumps({"cartan_type": "A1", "m": 2, "cocharacter": ["1"]})
    code, out, _ = run(capsys, "dim", "--config", cfg, "--format", "json")
    assert code == 0 and json.loads(out)["dim"] == 3


def test_output_file_and_determinism(capsys, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["basis", "--type", "B2", "--format", "json", "-o", str(a)]) == 0
    assert main(["basis", "--type", "B2", "--format", "json", "-o", str(b), "--workers", "4"]) == 0
    assert a.read_bytes() == b.read_bytes()
    assert capsys.readouterr().out == ""


@pytest.mark.parametrize("argv", [
    ["dim", "--type", "Q7"],
    ["dim"],
    ["dim", "--type", "A1", "--cocharacter", "1/3", "--m", "2"],
    ["dim", "--config", '{"cartan_type": "A1", "colour": 2}'],
    ["dim", "--config", '{"cartan_type": "A1"}', "--type", "A1"],
    ["restrict", "--type", "A2", "--levi", "5"],
    ["restrict", "--type", "A1", "--m", "2", "--cocharacter", "1"],
    ["facets", "--type", "A1", "--m", "inf", "--cocharacter", "1"],
])
def test_input_errors_exit_3(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 3 and out == ""
    assert "error" in json.loads(err.strip().splitlines()[-1])


def test_usage_errors_exit_3(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["dim", "--type", "A1", "--m", "zero"])
    assert exc.value.code == 3
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 3


def test_console_entry_point():
    out = subprocess.run([sys.executable, "-m", "gradus.cli", "matrix", "--type", "A1", "--format", "csv"],
                         capture_output=True, text=True)
    assert out.returncode == 0
    assert out.stdout.splitlines() == ["row,0,1", "0,1,v^2", "1,0,1"]
