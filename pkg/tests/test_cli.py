import json
import subprocess
import sys

import pytest

from oddnh.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_schur_differential_example(capsys):
    assert run(capsys, "schur", "d", "--partition", "1", "--n", "3") == (0, "+1*[2] +1*[1,1]\n", "")


def test_lima_example(capsys):
    code, out, _ = run(capsys, "homology", "lima", "--max", "8")
    assert code == 0
    assert out.split() == ["[]", "[2,2]", "[4,4]", "[2,2,2,2]"]


def test_binomial_example(capsys):
    assert run(capsys, "k0", "binom", "--m", "4", "--k", "2", "--at-i")[:2] == (0, "2\n")


@pytest.mark.parametrize("argv,expected", [
    (["poly", "normalize", "x2*x1"], "-x1*x2"),
    (["onh", "normalize", "d[2,1]*x1"], "-x2*d[2,1] + 1"),
    (["poly", "mul", "x1", "--other", "x2"], "x1*x2"),
    (["poly", "dd", "x1^2", "--i", "1"], "x1 - x2"),
    (["onh", "d", "d[2,1]"], "1"),
    (["bimodule", "zd", "--composition", "2"], "0"),
    (["k0", "mul", "--a", "2", "--b", "2"], "(2) E^(4)"),
])
def test_values(capsys, argv, expected):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert out.strip() == expected


def test_syntax_error_exit_code(capsys):
    code, out, err = run(capsys, "poly", "normalize", "x1^")
    assert code == 2 and out == ""
    assert "offset 3" in err


def test_bad_subcommand(capsys):
    assert run(capsys, "nosuch")[0] == 2


def test_degree_cap(capsys):
    assert run(capsys, "poly", "normalize", "x1^9", "--max-degree", "4")[0] == 2
    assert run(capsys, "poly", "normalize", "x1^9", "--max-degree", "9")[0] == 0


def test_json_and_csv(capsys):
    code, out, _ = run(capsys, "--json", "schur", "d", "--partition", "1", "--n", "3")
    assert json.loads(out) == [{"coeff": 1, "partition": [2]}, {"coeff": 1, "partition": [1, 1]}]
    code, out, _ = run(capsys, "bimodule", "vab", "--a", "1", "--b", "2", "--csv")
    assert out.splitlines()[0] == "from,to,coeff"


def test_config_file(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"n": 3, "format": "json", "max_degree": 2}))
    code, out, _ = run(capsys, "poly", "normalize", "x1", "--config", str(cfg))
    assert json.loads(out)["n"] == 3
    assert run(capsys, "poly", "normalize", "x1^3", "--config", str(cfg))[0] == 2
    # flags win over the file
    assert run(capsys, "poly", "normalize", "x1^3", "--config", str(cfg), "--max-degree", "5")[0] == 0
    cfg.write_text(json.dumps({"colour": "red"}))
    assert run(capsys, "poly", "normalize", "x1", "--config", str(cfg))[0] == 2


def test_homology_of_file(tmp_path, capsys):
    path = tmp_path / "cx.json"
    code, out, _ = run(capsys, "--json", "bimodule", "un", "--n", "3")
    path.write_text(out)
    code, out, _ = run(capsys, "homology", "complex", str(path))
    assert (code, out) == (0, "acyclic\n")


def test_verification_failure_exit_code(capsys, monkeypatch):
    from oddnh import verify
    assert run(capsys, "verify", "k0", "--n", "3")[0] == 0
    monkeypatch.setitem(verify.REGISTRY, "k0", [("always fails", lambda n: (False, "forced"))])
    code, out, _ = run(capsys, "verify", "k0")
    assert code == 1
    assert "FAIL  forced" in out


def test_verify_table_is_deterministic():
    cmd = [sys.executable, "-m", "oddnh", "verify", "k0", "--n", "3", "--csv"]
    a = subprocess.run(cmd, capture_output=True, text=True)
    b = subprocess.run(cmd, capture_output=True, text=True)
    assert a.returncode == 0
    assert a.stdout == b.stdout
    assert a.stdout.splitlines()[0] == "group,check,passed,detail"
