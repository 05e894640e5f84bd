import json
import os

from cherednik.cli import main

GOLDEN = os.path.join(os.path.dirname(__file__), "golden")


def run_json(capsys, argv):
    code = main(argv + ["--format", "json"])
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_verify_pass(capsys):
    code, payload = run_json(capsys, ["verify", "--group", "A1",
                                      "--t", "1", "--c", "1"])
    assert code == 0
    assert payload["passed"]
    names = [e["identity"] for e in payload["identities"]]
    assert names == ["pbw", "dirac-square", "split-squares",
                     "delta-invariance", "pin-cover"]
    assert all(e["passed"] for e in payload["identities"])


def test_verify_cyclotomic_group(capsys):
    code, payload = run_json(capsys, ["verify", "--group", "Z3",
                                      "--t", "0", "--c", "1"])
    assert code == 0
    assert payload["passed"]


def test_verify_gaha_preset(capsys):
    code, payload = run_json(capsys, ["verify", "--group", "A2",
                                      "--c", "1", "--preset", "gaha"])
    assert code == 0
    names = [e["identity"] for e in payload["identities"]]
    assert "split-squares" not in names
    assert payload["passed"]


def test_verify_corrupted_fails(capsys):
    code, payload = run_json(capsys, ["verify", "--group", "A1",
                                      "--preset", "corrupted"])
    assert code == 1
    states = {e["identity"]: e["passed"] for e in payload["identities"]}
    assert states["pbw"] is False
    assert states["dirac-square"] is None


def test_pbw_check_corruption_kind(capsys):
    code, payload = run_json(capsys, ["pbw-check", "--group", "B2",
                                      "--preset", "corrupted",
                                      "--kind", "radical"])
    assert code == 1
    assert not payload["passed"]
    assert {f["condition"] for f in payload["failures"]} == {2}


def test_cohomology_simple_table(capsys):
    code = main(["dirac-cohomology", "--group", "B2", "--t", "0",
                 "--c", "1", "--sigma", "11x0", "--simple"])
    out = capsys.readouterr().out
    assert code == 0
    assert "11x0" in out and "1x1" in out and "0x2" in out


def test_cohomology_standard_json(capsys):
    code, payload = run_json(capsys, [
        "dirac-cohomology", "--group", "A1", "--t", "1", "--c", "1/3",
        "--sigma", "triv"])
    assert code == 0
    assert payload["H_D"] == [{"irrep": "sgn", "multiplicity": 1,
                               "cells": [[0, 1]]}]
    assert payload["c"] == "1/3"


def test_unknown_sigma_exit_two(capsys):
    assert main(["dirac-cohomology", "--group", "A1", "--t", "1",
                 "--c", "1", "--sigma", "nope"]) == 2
    assert "unknown irrep" in capsys.readouterr().err


def test_unknown_group_exit_two(capsys):
    assert main(["partition", "--group", "E8", "--c", "1"]) == 2


def test_simple_needs_t_zero(capsys):
    assert main(["dirac-cohomology", "--group", "B2", "--t", "1",
                 "--c", "1", "--sigma", "11x0", "--simple"]) == 2


def test_window_cap_is_usage_error(capsys):
    assert main(["dirac-cohomology", "--group", "A1", "--t", "1",
                 "--c", "3", "--sigma", "triv", "--K", "2"]) == 2
    assert "K >= 3" in capsys.readouterr().err


def test_missing_group_exit_two(capsys):
    assert main(["partition", "--c", "1"]) == 2


def test_mixed_c_values_rejected(capsys):
    assert main(["partition", "--group", "B2", "--c", "1",
                 "--c", "long=2"]) == 2


def test_per_class_parameters(capsys):
    code, payload = run_json(capsys, ["partition", "--group", "B2",
                                      "--c", "long=1", "--c", "short=0"])
    assert code == 0
    assert payload["c"] == {"long": "1/1", "short": "0/1"}
    assert payload["undecided_pairs"] != []


def test_unitarity_json(capsys):
    code, payload = run_json(capsys, ["unitarity", "--group", "A1",
                                      "--sigma", "triv", "--c", "2",
                                      "--K", "3"])
    assert code == 0
    assert not payload["all_psd"]
    assert payload["consistent"]


def test_config_file_flags_win(tmp_path, capsys):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("group = A1\nsigma = triv\nt = 1\nc = 1/2\n")
    code, payload = run_json(capsys, [
        "dirac-cohomology", "--config", str(cfg), "--c", "1/3"])
    assert code == 0
    assert payload["c"] == "1/3"
    code, payload = run_json(capsys, [
        "dirac-cohomology", "--config", str(cfg)])
    assert code == 0
    assert payload["c"] == "1/2"


def test_golden_partition(tmp_path):
    out = tmp_path / "p.json"
    code = main(["partition", "--group", "B2", "--c", "1",
                 "--format", "json", "--out", str(out)])
    assert code == 0
    with open(os.path.join(GOLDEN, "partition_b2_c1.json"), "rb") as fh:
        assert out.read_bytes() == fh.read()


def test_golden_export_group(tmp_path):
    out = tmp_path / "g.json"
    code = main(["export-group", "--group", "Z3",
                 "--format", "json", "--out", str(out)])
    assert code == 0
    with open(os.path.join(GOLDEN, "group_z3.json"), "rb") as fh:
        assert out.read_bytes() == fh.read()


def test_golden_simple_cohomology(tmp_path):
    out = tmp_path / "s.json"
    code = main(["dirac-cohomology", "--group", "B2", "--t", "0",
                 "--c", "1", "--sigma", "11x0", "--simple",
                 "--format", "json", "--out", str(out)])
    assert code == 0
    with open(os.path.join(GOLDEN, "simple_11x0_b2.json"), "rb") as fh:
        assert out.read_bytes() == fh.read()


def test_json_output_is_byte_stable(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for target in (a, b):
        assert main(["unitarity", "--group", "B2", "--sigma", "1x1",
                     "--c", "1/3", "--K", "2", "--format", "json",
                     "--out", str(target)]) == 0
    assert a.read_bytes() == b.read_bytes()
