import json

import pytest

from kostant.cli import EXIT_CAP, EXIT_OK, EXIT_USAGE, EXIT_VERIFICATION_FAILED, RunConfig, main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_predict_text(capsys):
    code, out, _ = run(capsys, "predict", "--type", "A2", "--J", "1", "--weight", "0,0")
    assert code == EXIT_OK
    lines = out.strip().splitlines()
    assert lines == [
        "degree 0: (0, 0)",
        "degree 1: (1, -2)",
        "degree 2: (0, -3)",
    ]


def test_predict_json(capsys):
    code, out, _ = run(
        capsys, "predict", "--type", "A1", "--J", "", "--weight", "2", "--format", "json"
    )
    assert code == EXIT_OK
    obj = json.loads(out)
    assert obj["schema"] == "v1"
    assert obj["prediction"] == {
        "0": [{"weight": [2], "mult": 1}],
        "1": [{"weight": [-4], "mult": 1}],
    }


def test_predict_full_j_single_degree(capsys):
    code, out, _ = run(capsys, "predict", "--type", "A2", "--J", "1,2", "--weight", "1,1")
    assert code == EXIT_OK
    assert out.strip() == "degree 0: (1, 1)"


def test_verify_pass(capsys):
    code, out, _ = run(capsys, "verify", "--type", "A2", "--J", "1", "--weight", "0,0")
    assert code == EXIT_OK
    assert "PASS" in out


def test_verify_json_record(capsys):
    code, out, _ = run(
        capsys, "verify", "--type", "A2", "--J", "", "--weight", "1,1", "--format", "json"
    )
    assert code == EXIT_OK
    obj = json.loads(out)
    assert obj["passed"] is True
    assert obj["schema"] == "v1"
    assert obj["euler_ok"] and obj["linkage_ok"] and obj["multiplicity_one_ok"]


def test_verify_corrupted_fails(capsys):
    code, out, err = run(
        capsys, "verify", "--type", "A2", "--J", "", "--weight", "1,0", "--corrupt", "0,1"
    )
    assert code == EXIT_VERIFICATION_FAILED
    assert "FAIL" in out or "consistency" in err


def test_usage_errors(capsys):
    code, _, err = run(capsys, "predict", "--type", "A2", "--J", "1", "--weight", "1")
    assert code == EXIT_USAGE and "error" in err
    code, _, err = run(capsys, "predict", "--type", "Z9", "--J", "", "--weight", "1")
    assert code == EXIT_USAGE
    code, _, err = run(capsys, "predict", "--type", "A2", "--J", "5", "--weight", "1,1")
    assert code == EXIT_USAGE
    code, _, _ = run(capsys, "nonsense")
    assert code == EXIT_USAGE


def test_cap_exit_code(capsys):
    code, _, err = run(
        capsys, "verify", "--type", "A2", "--J", "", "--weight", "1,1", "--max-dim", "3"
    )
    assert code == EXIT_CAP
    assert "cap" in err


def test_sweep_a1(capsys):
    code, out, _ = run(capsys, "sweep", "--type", "A1", "--max-coord", "3")
    assert code == EXIT_OK
    assert "8/8 instances passed" in out


def test_sweep_single_subset_json(capsys):
    code, out, _ = run(
        capsys,
        "sweep",
        "--type",
        "A2",
        "--max-coord",
        "1",
        "--J",
        "1",
        "--format",
        "json",
    )
    assert code == EXIT_OK
    obj = json.loads(out)
    assert obj["all_passed"] is True
    assert len(obj["instances"]) == 4
    assert all(r["J"] == [1] for r in obj["instances"])


def test_sweep_with_regime_column(capsys):
    code, out, _ = run(
        capsys, "sweep", "--type", "A1", "--max-coord", "3", "--l", "3"
    )
    assert code == EXIT_OK
    assert "regime=formula-guaranteed" in out
    assert "regime=outside-guarantee" in out


def test_alcove_certificates(capsys):
    code, out, _ = run(capsys, "alcove", "--type", "A2", "--l", "3", "--weight", "0,0")
    assert code == EXIT_OK
    assert "verdict: formula-guaranteed" in out
    code, out, _ = run(capsys, "alcove", "--type", "G2", "--l", "9", "--weight", "0,0")
    assert code == EXIT_OK
    assert "verdict: rejected" in out
    assert "3 divides" in out
    code, out, _ = run(
        capsys, "alcove", "--type", "A3", "--l", "3", "--weight", "0,0,0", "--format", "json"
    )
    assert code == EXIT_OK
    obj = json.loads(out)
    assert obj["verdict"] == "formula-guaranteed" and obj["h"] == 4


def test_runconfig_roundtrip():
    cfg = RunConfig(
        command="verify",
        type_label="A",
        rank=2,
        J=(1,),
        weight=(0, 0),
        fmt="json",
    )
    assert RunConfig.from_dict(cfg.to_dict()) == cfg
