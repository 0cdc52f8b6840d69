import json

import pytest

from grothmodt.cli import main, exit_code_for, available_commands
from grothmodt.core import COMMANDS, EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_BUDGET
from grothmodt.core import InputError, CapExceededError, BudgetExceededError, CrtError, IdentityViolation


def _json(capsys) -> dict:
    return json.loads(capsys.readouterr().out)


def test_commands_registered():
    assert sorted(available_commands().keys()) == sorted(COMMANDS)


def test_exit_codes():
    assert exit_code_for(InputError("x")) == EXIT_USAGE
    assert exit_code_for(CapExceededError("x")) == EXIT_BUDGET
    assert exit_code_for(BudgetExceededError("x")) == EXIT_BUDGET
    assert exit_code_for(CrtError("x")) == EXIT_MISMATCH
    assert exit_code_for(IdentityViolation("x")) == EXIT_MISMATCH


def test_class_text(capsys):
    assert main(["class", "--builder", "C 5"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "[Y]  = 1 mod T" in out
    assert "[Y°] = 1 mod T" in out


def test_class_json(capsys):
    assert main(["class", "--builder", "W 3", "--json"]) == EXIT_OK
    data = _json(capsys)
    assert data["Y"] == 0
    assert data["Ytorus"] == -3
    assert data["command"] == "class"
    assert data["exitCode"] == EXIT_OK


def test_class_trace(capsys):
    assert main(["class", "--builder", "C 4", "--trace"]) == EXIT_OK
    assert "corank-one" in capsys.readouterr().out


def test_class_output_file(tmp_path, capsys):
    path = tmp_path / "report.txt"
    assert main(["class", "--builder", "C 3", "-o", str(path)]) == EXIT_OK
    assert capsys.readouterr().out == ""
    assert "[Y]  = 1 mod T" in path.read_text()


def test_class_edges(tmp_path, capsys):
    path = tmp_path / "triangle.txt"
    path.write_text("a b\nb c\nc a\n")
    assert main(["class", "--edges", str(path), "--json"]) == EXIT_OK
    data = _json(capsys)
    assert (data["Y"], data["Ytorus"]) == (1, 1)


def test_class_matrix(tmp_path, capsys):
    path = tmp_path / "u24.json"
    path.write_text(json.dumps({"rows": [[1, 1, 1, 1], [1, 2, 3, 4]], "labels": ["a", "b", "c", "d"]}))
    assert main(["class", "--matrix", str(path), "--json"]) == EXIT_OK
    data = _json(capsys)
    assert (data["Y"], data["Ytorus"]) == (1, -3)


def test_bad_edge_list(tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("a b\na b c d\n")
    assert main(["class", "--edges", str(path)]) == EXIT_USAGE


def test_bad_json(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{\"rows\": [[1, 2]\n")
    assert main(["class", "--matrix", str(path)]) == EXIT_USAGE


@pytest.mark.parametrize("args", [
    ["class"],
    ["class", "--builder", "C 3", "--edges", "x.txt"],
    ["class", "--builder", "Q 3"],
    ["verify", "--builder", "C 3", "--primes", "17"],
    ["verify", "--builder", "C 3", "--primes", "x"],
    ["nosuchcommand"],
])
def test_usage_errors(args):
    assert main(args) == EXIT_USAGE


def test_cap_exceeded():
    assert main(["class", "--builder", "K 8"]) == EXIT_BUDGET


def test_budget_exceeded():
    assert main(["count", "--builder", "K 5", "--budget", "10"]) == EXIT_BUDGET


def test_count(capsys):
    assert main(["count", "--builder", "C 3", "--primes", "3", "--affine", "--json"]) == EXIT_OK
    data = _json(capsys)
    assert data["counts"][0]["nY"] == 9
    assert data["affine"]


def test_verify(capsys):
    assert main(["verify", "--builder", "C 4", "--primes", "3,5"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "PASS" in out
    assert "FAIL" not in out
    assert "not correctness" in out
    assert out.rstrip().endswith("result: PASS")


def test_verify_stratification(capsys):
    assert main(["verify", "--builder", "W 3", "--primes", "3", "--stratification", "--json"]) == EXIT_OK
    data = _json(capsys)
    assert data["verification"]["passed"]
    assert data["stratification"][0]["nY"] == data["stratification"][0]["torusSum"]


def test_fatnexus(capsys):
    assert main(["fatnexus", "--builder", "W 4", "--json"]) == EXIT_OK
    data = _json(capsys)
    assert data["fatNexus"]["v0"] == "h"
    assert data["vanishes"]


def test_fatnexus_none(capsys):
    assert main(["fatnexus", "--builder", "ladder"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "fat nexus: none" in out
    assert "torus action: no" in out


def test_fatnexus_needs_graph(tmp_path):
    path = tmp_path / "u24.json"
    path.write_text(json.dumps({"rows": [[1, 1, 1, 1], [1, 2, 3, 4]]}))
    assert main(["fatnexus", "--matrix", str(path)]) == EXIT_USAGE


def test_matroid_dual(capsys):
    assert main(["matroid", "--builder", "C 4", "--dual", "--json"]) == EXIT_OK
    data = _json(capsys)
    assert data["rank"] == 1
    assert data["bases"] == [["e1"], ["e2"], ["e3"], ["e4"]]
    assert data["uniform"] == [1, 4]


def test_matroid_text(capsys):
    assert main(["matroid", "--builder", "B 3"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "rank: 1, nullity: 2" in out
    assert "uniform: U(1,3)" in out


@pytest.mark.slow
def test_table(capsys):
    assert main(["table", "--sizes", "3"]) == EXIT_OK
    assert "0 mismatches" in capsys.readouterr().out


def test_table_rejects_input():
    assert main(["table", "--builder", "C 3"]) == EXIT_USAGE


def test_class_divided_wheel(capsys):
    assert main(["class", "--builder", "Whats 3", "--json"]) == EXIT_OK
    assert _json(capsys)["Y"] == -3


def test_class_no_reference(capsys):
    assert main(["class", "--builder", "C 5", "--no_reference", "--json"]) == EXIT_OK
    assert _json(capsys)["Y"] == 1


@pytest.mark.slow
def test_verify_octahedron(capsys):
    assert main(["verify", "--builder", "octahedron", "--primes", "3", "--json"]) == EXIT_OK
    data = _json(capsys)
    assert data["Y"] == -1
    assert data["verification"]["passed"]


def test_loops_only_rejected(tmp_path):
    path = tmp_path / "loops.txt"
    path.write_text("a a x\na a y\n")
    assert main(["class", "--edges", str(path)]) == EXIT_USAGE
    assert main(["class", "--builder", "C 1"]) == EXIT_USAGE
    assert main(["verify", "--edges", str(path), "--primes", "3"]) == EXIT_USAGE
