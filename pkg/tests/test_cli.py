import io
import json
import sys

import pytest

from locdom.cli import main


def run(capsys, argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        assert monkeypatch is not None
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_gamma_l_text(capsys):
    code, out, err = run(capsys, ["gamma-l", "--family", "cycle:7"])
    assert code == 0
    assert out == "gamma_l = 3\nwitness = {0, 2, 4}\n"
    assert err == ""


def test_gamma_l_json(capsys):
    code, out, _ = run(capsys, ["gamma-l", "--family", "complete:4", "--json"])
    assert code == 0
    assert json.loads(out) == {"schema_version": 1, "gamma_l": 3, "witness": [0, 1, 2]}


def test_gamma_l_stdin_graph6(capsys, monkeypatch):
    code, out, _ = run(capsys, ["gamma-l"], stdin="D?{", monkeypatch=monkeypatch)
    assert code == 0
    assert out == "gamma_l = 4\nwitness = {0, 1, 2, 3}\n"


def test_cl_full_solve(capsys):
    code, out, _ = run(capsys, ["cl", "--family", "path:5"])
    assert code == 0
    doc = json.loads(out)
    assert doc["schema_version"] == 1
    assert doc["c_l"] == 4
    assert doc["parts"] == [[0, 2], [1], [3], [4]]
    assert doc["partners"] == [2, 2, 0, 0]
    assert doc["status"] == "exact"


def test_cl_tiny_graph(capsys):
    code, out, _ = run(capsys, ["cl", "--family", "complete:2"])
    assert code == 0
    doc = json.loads(out)
    assert doc["c_l"] == "none"
    assert doc["status"] == "none"
    assert doc["parts"] is None


def test_cl_at_least_decision(capsys):
    code, out, _ = run(capsys, ["cl", "--family", "cycle:6", "--at-least", "5"])
    assert code == 0
    doc = json.loads(out)
    assert doc["status"] == "exact"
    assert doc["c_l"] == 5
    assert doc["bounds_used"] == [["at_least", 5]]

    code, out, _ = run(capsys, ["cl", "--family", "cycle:8", "--at-least", "6"])
    assert code == 0
    doc = json.loads(out)
    assert doc["status"] == "none"
    assert doc["c_l"] is None


def test_cl_budget_inconclusive(capsys):
    code, out, _ = run(
        capsys,
        ["cl", "--family", "cycle:14", "--at-least", "6", "--budget-seconds", "0.05"],
    )
    assert code == 4
    doc = json.loads(out)
    assert doc["status"] == "inconclusive"
    assert doc["nodes_explored"] > 0


def test_budget_env_default(capsys, monkeypatch):
    monkeypatch.setenv("LDC_BUDGET_SECONDS", "0.05")
    code, out, _ = run(capsys, ["cl", "--family", "cycle:14", "--at-least", "6"])
    assert code == 4
    assert json.loads(out)["status"] == "inconclusive"


def test_cl_output_file(capsys, tmp_path):
    target = tmp_path / "report.json"
    code, out, _ = run(capsys, ["cl", "--family", "path:5", "--output", str(target)])
    assert code == 0
    doc = json.loads(target.read_text())
    assert doc["c_l"] == 4


def test_check_partition_valid(capsys, tmp_path):
    pfile = tmp_path / "p6.txt"
    pfile.write_text("# parts\n1 3\n0 2\n4\n5\n")
    code, out, err = run(capsys, ["check-partition", "--family", "path:6", str(pfile)])
    assert code == 0
    assert out == (
        "valid LDC-partition with 4 parts\n"
        "part 0 partners part 2\n"
        "part 1 partners part 2\n"
        "part 2 partners part 0\n"
        "part 3 partners part 0\n"
    )


def test_check_partition_json(capsys, tmp_path):
    pfile = tmp_path / "p6.txt"
    pfile.write_text("1 3\n0 2\n4\n5\n")
    code, out, _ = run(
        capsys, ["check-partition", "--family", "path:6", str(pfile), "--json"]
    )
    assert code == 0
    doc = json.loads(out)
    assert doc == {
        "schema_version": 1,
        "valid": True,
        "parts": [[1, 3], [0, 2], [4], [5]],
        "partners": [2, 2, 0, 0],
    }


def test_check_partition_rejects_ld_part(capsys, tmp_path):
    pfile = tmp_path / "k3.txt"
    pfile.write_text("0 1\n2\n")
    code, out, _ = run(capsys, ["check-partition", "--family", "cycle:3", str(pfile)])
    assert code == 1
    assert out == "invalid: part 0 is an LD-set\n"


def test_check_partition_malformed(capsys, tmp_path):
    pfile = tmp_path / "bad.txt"
    pfile.write_text("0 x\n1 2\n")
    code, _, err = run(capsys, ["check-partition", "--family", "cycle:3", str(pfile)])
    assert code == 2
    assert "line 1" in err


def test_coalition_graph_dot(capsys, tmp_path):
    pfile = tmp_path / "s3.txt"
    pfile.write_text("0\n1\n2\n")
    code, out, _ = run(capsys, ["coalition-graph", "--family", "cycle:3", str(pfile)])
    assert code == 0
    assert out == (
        "graph coalition {\n"
        '  p0 [label="{0}"];\n'
        '  p1 [label="{1}"];\n'
        '  p2 [label="{2}"];\n'
        "  p0 -- p1;\n"
        "  p0 -- p2;\n"
        "  p1 -- p2;\n"
        "}\n"
    )


def test_coalition_graph_rejects_invalid(capsys, tmp_path):
    pfile = tmp_path / "orph.txt"
    pfile.write_text("0\n1\n2\n3\n4\n")
    code, _, err = run(capsys, ["coalition-graph", "--family", "path:5", str(pfile)])
    assert code == 1
    assert "no LD-coalition partner" in err


def test_disconnected_exit_code(capsys, tmp_path):
    gfile = tmp_path / "disc.txt"
    gfile.write_text("4\n0 1\n2 3\n")
    code, _, err = run(capsys, ["gamma-l", "--file", str(gfile)])
    assert code == 3
    assert "connected" in err


def test_parse_error_exit_code(capsys, monkeypatch):
    code, _, err = run(
        capsys, ["gamma-l"], stdin="not a graph Z", monkeypatch=monkeypatch
    )
    assert code == 2
    assert err.startswith("error:")


def test_both_sources_rejected(capsys, tmp_path):
    gfile = tmp_path / "g.txt"
    gfile.write_text("0 1\n")
    code, _, err = run(
        capsys, ["gamma-l", "--family", "path:3", "--file", str(gfile)]
    )
    assert code == 2
    assert "exactly one input source" in err


def test_reproduce_tsv(capsys):
    code, out, _ = run(capsys, ["reproduce", "--only", "census-order5-gamma2"])
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "claim\tstatus\telapsed_ms"
    assert lines[1].startswith("census-order5-gamma2\tpass\t")
    assert lines[-1].startswith("overall\tpass\t")


def test_reproduce_json_and_output(capsys, tmp_path):
    target = tmp_path / "rep.json"
    code, out, _ = run(
        capsys,
        ["reproduce", "--only", "census-order5-gamma2", "--output", str(target)],
    )
    assert code == 0
    assert out.startswith("claim\t")
    doc = json.loads(target.read_text())
    assert doc["overall_pass"] is True

    code2, out2, _ = run(
        capsys, ["reproduce", "--only", "census-order5-gamma2", "--json"]
    )
    assert code2 == 0
    assert json.loads(out2)["schema_version"] == 1


def test_reproduce_unknown_claim(capsys):
    code, _, err = run(capsys, ["reproduce", "--only", "nosuchclaim"])
    assert code == 2
    assert "no claims match" in err


def test_version(capsys):
    with pytest.raises(SystemExit) as info:
        main(["--version"])
    assert info.value.code == 0
    assert capsys.readouterr().out == "locdom 0.1.0\n"
