from __future__ import annotations

import json

import pytest

from f1gtheory.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_marks_csv_golden(capsys):
    code, out, _ = run_cli(capsys, "marks", "--group", "C2", "--format", "csv")
    assert code == 0
    assert out == ("class,order1_rep0,order2_rep0-1\n"
                   "order1_rep0,2,0\n"
                   "order2_rep0-1,1,1\n")


def test_marks_json(capsys):
    code, out, _ = run_cli(capsys, "marks", "--group", "S3", "--format", "json")
    assert code == 0
    blob = json.loads(out)
    assert blob["marks"][0][0] == 6


def test_subgroups_json(capsys):
    code, out, _ = run_cli(capsys, "subgroups", "--group", "S3",
                           "--format", "json")
    assert code == 0
    blob = json.loads(out)
    assert blob["class_count"] == 4
    assert blob["subgroup_count"] == 6


def test_lambda_text_output(capsys):
    code, out, _ = run_cli(capsys, "lambda", "--group", "C2",
                           "--element", "[1,0]", "--k", "2")
    assert code == 0
    assert out == "[0,1]\n"


def test_lambda_json_output(capsys):
    code, out, _ = run_cli(capsys, "lambda", "--group", "C2",
                           "--element", "[2,0]", "--k", "2",
                           "--format", "json")
    assert code == 0
    blob = json.loads(out)
    assert blob["result"] == [2, 2]


def test_burnside_mul(capsys):
    code, out, _ = run_cli(capsys, "burnside-mul", "--group", "C2",
                           "--x", "[1,0]", "--y", "[1,0]",
                           "--format", "json")
    assert code == 0
    assert json.loads(out)["product"] == [2, 0]


def test_decompose_module_file(capsys, tmp_path):
    from f1gtheory.groups import build_group
    from f1gtheory.modules import free_module, group_monoid
    module = free_module(group_monoid(build_group(name="C2")), 2)
    path = tmp_path / "module.json"
    path.write_text(json.dumps(module.to_json()))
    code, out, _ = run_cli(capsys, "decompose", "--group", "C2",
                           "--module-json", str(path), "--format", "json")
    assert code == 0
    assert json.loads(out)["coeffs"] == [2, 0]


def test_wh0_json(capsys):
    code, out, _ = run_cli(capsys, "wh0", "--group", "S3", "--format", "json")
    assert code == 0
    blob = json.loads(out)
    assert blob["free_rank"] == 3
    assert blob["torsion"] == []
    assert blob["image"] == [1, 0, 0, 0]


def test_g1_text_mentions_provenance(capsys):
    code, out, _ = run_cli(capsys, "g1", "--group", "C2")
    assert code == 0
    assert "via splitting formula" in out


def test_g0_text(capsys):
    code, out, _ = run_cli(capsys, "g0", "--group", "C3")
    assert code == 0
    assert "stable at bound" in out


def test_g0_monoid_json(capsys, tmp_path):
    path = tmp_path / "monoid.json"
    path.write_text(json.dumps(
        {"size": 3, "mul": [[0, 0, 0], [0, 1, 2], [0, 2, 0]]}))
    code, out, _ = run_cli(capsys, "g0", "--monoid-json", str(path),
                           "--format", "json")
    assert code == 0
    assert json.loads(out)["stability"] == "bounded approximation"


def test_simple_factors(capsys):
    code, out, _ = run_cli(capsys, "simple-factors", "--group", "C3",
                           "--q", "2", "--format", "json")
    assert code == 0
    assert json.loads(out)["simple_factors"] == 2


def test_diamond(capsys):
    code, out, _ = run_cli(capsys, "diamond", "--group", "C3",
                           "--element", "[1,0]", "--k", "2",
                           "--format", "json")
    assert code == 0
    blob = json.loads(out)
    assert blob["carrier_size"] == 7


def test_mackey_check_passes(capsys):
    code, out, _ = run_cli(capsys, "mackey-check", "--group", "C4",
                           "--trials", "10")
    assert code == 0
    assert "overall: pass" in out


def test_lambda_verify_odd_cyclic(capsys):
    code, out, _ = run_cli(capsys, "lambda-verify", "--group", "C3",
                           "--trials", "5")
    assert code == 0


def test_lambda_verify_even_group_informational(capsys):
    code, out, _ = run_cli(capsys, "lambda-verify", "--group", "C2",
                           "--trials", "5")
    assert code == 0
    assert "[informational]" in out


def test_generators_source(capsys):
    code, out, _ = run_cli(capsys, "subgroups",
                           "--generators", "(1 2);(1 2 3)", "--degree", "3",
                           "--format", "json")
    assert code == 0
    assert json.loads(out)["class_count"] == 4


def test_group_json_source(capsys, tmp_path):
    path = tmp_path / "group.json"
    path.write_text(json.dumps({"name": "C4"}))
    code, out, _ = run_cli(capsys, "subgroups", "--group-json", str(path),
                           "--format", "json")
    assert code == 0
    assert json.loads(out)["order"] == 4


def test_unknown_group_exits_2(capsys):
    code, _, err = run_cli(capsys, "marks", "--group", "NOPE")
    assert code == 2
    assert "error" in err


def test_conflicting_sources_exit_2(capsys):
    code, _, err = run_cli(capsys, "marks", "--group", "C2",
                           "--generators", "(1 2)", "--degree", "2")
    assert code == 2


def test_missing_source_exits_2(capsys):
    code, _, err = run_cli(capsys, "marks")
    assert code == 2


def test_bad_coefficient_vector_exits_2(capsys):
    code, _, err = run_cli(capsys, "lambda", "--group", "C2",
                           "--element", "[1]", "--k", "2")
    assert code == 2
    code, _, err = run_cli(capsys, "lambda", "--group", "C2",
                           "--element", "oops", "--k", "2")
    assert code == 2


def test_order_cap_env(capsys, monkeypatch):
    monkeypatch.setenv("F1G_ORDER_CAP", "3")
    code, _, err = run_cli(capsys, "marks", "--group", "C4")
    assert code == 2
    monkeypatch.setenv("F1G_ORDER_CAP", "bogus")
    code, _, err = run_cli(capsys, "marks", "--group", "C2")
    assert code == 2


def test_jobs_note_on_stderr(capsys):
    code, out, err = run_cli(capsys, "marks", "--group", "C2",
                             "--format", "csv", "--jobs", "4")
    assert code == 0
    assert "sequentially" in err
    assert "sequentially" not in out


def test_suite_exit_zero(capsys):
    code, out, _ = run_cli(capsys, "suite", "--group", "C3")
    assert code == 0
    assert "overall: pass" in out


def test_suite_json(capsys):
    code, out, _ = run_cli(capsys, "suite", "--group", "C2",
                           "--format", "json")
    assert code == 0
    blob = json.loads(out)
    assert blob["status"] == "pass"
    assert blob["odd_cyclic"] is False
