import json
import math
import subprocess
import sys

import pytest

from difftop.cli import main
from difftop.instances import bundled_chep_instance, bundled_extend_instance


def run_cli(args, capsys):
    code = main(args)
    out, err = capsys.readouterr()
    return code, out, err


def test_eval_lambda(capsys):
    code, out, _ = run_cli(["eval", "lambda", "0.5"], capsys)
    assert code == 0
    assert float(out) == 0.5


def test_eval_Q(capsys):
    code, out, _ = run_cli(["eval", "Q", "1", "0"], capsys)
    assert code == 0
    assert out.strip() == "1 0"


def test_eval_psi_point_case(capsys):
    t = 0.25
    w = [math.cos(math.pi * t), math.sin(math.pi * t)]
    code, out, _ = run_cli(["eval", "psi", "0", str(w[0]), str(w[1])], capsys)
    assert code == 0
    disk, time = out.split()
    assert float(disk) == 1.0
    assert float(time) == pytest.approx(t, abs=1e-12)


def test_eval_unknown_map_is_usage_error(capsys):
    code, _, err = run_cli(["eval", "frobnicate", "1"], capsys)
    assert code == 2
    assert "unknown map" in err


def test_eval_bad_arity_is_usage_error(capsys):
    code, _, _ = run_cli(["eval", "lambda", "1", "2"], capsys)
    assert code == 2


def test_verify_smoothfn_passes(capsys):
    code, out, _ = run_cli(["verify", "smoothfn", "--report", "json"], capsys)
    assert code == 0
    rep = json.loads(out)
    assert rep["passed"] and rep["suite"] == "smoothfn"


def test_verify_unknown_suite_exits_2():
    proc = subprocess.run(
        [sys.executable, "-m", "difftop.cli", "verify", "nope"],
        capture_output=True, text=True)
    assert proc.returncode == 2


def test_verify_reports_are_deterministic(capsys):
    code1, out1, _ = run_cli(["verify", "smoothfn", "--seed", "7"], capsys)
    code2, out2, _ = run_cli(["verify", "smoothfn", "--seed", "7"], capsys)
    assert code1 == code2 == 0
    assert out1 == out2


def test_verify_seed_changes_report(capsys):
    _, out1, _ = run_cli(["verify", "diskmodel", "--seed", "1"], capsys)
    _, out2, _ = run_cli(["verify", "diskmodel", "--seed", "2"], capsys)
    assert json.loads(out1)["passed"] and json.loads(out2)["passed"]
    assert out1 != out2  # sampled deviations move with the seed


def test_chep_bundled_passes(capsys):
    code, out, _ = run_cli(["chep", "bundled", "--samples", "0.2"], capsys)
    assert code == 0
    rep = json.loads(out)
    names = {p["property"] for p in rep["properties"]}
    assert names == {"H_at_time_zero_is_f", "H_over_base_is_h",
                     "projection_of_H_is_k"}


def test_chep_instance_file_roundtrip(tmp_path, capsys):
    _, desc = bundled_chep_instance()
    path = tmp_path / "interval.json"
    path.write_text(json.dumps(desc))
    code, out, _ = run_cli(["chep", str(path), "--samples", "0.2"], capsys)
    assert code == 0
    assert json.loads(out)["passed"]


def test_chep_incompatible_instance_exits_3(tmp_path, capsys):
    _, desc = bundled_chep_instance(k_offset=0.5)
    path = tmp_path / "broken.json"
    path.write_text(json.dumps(desc))
    code, _, err = run_cli(["chep", str(path)], capsys)
    assert code == 3
    assert "precondition" in err


def test_chep_extend_instance_file(tmp_path, capsys):
    _, desc = bundled_extend_instance()
    path = tmp_path / "extend.json"
    path.write_text(json.dumps(desc))
    code, out, _ = run_cli(["chep", str(path), "--samples", "0.2"], capsys)
    assert code == 0
    rep = json.loads(out)
    assert rep["suite"] == "extend-instance" and rep["passed"]


def test_chep_missing_file_is_usage_error(capsys):
    code, _, err = run_cli(["chep", "/nonexistent/inst.json"], capsys)
    assert code == 2


def test_chep_csv_output(tmp_path, capsys):
    out_csv = tmp_path / "h.csv"
    code, _, _ = run_cli(["chep", "bundled", "--samples", "0.05",
                          "--csv", str(out_csv)], capsys)
    assert code == 0
    lines = out_csv.read_text().strip().splitlines()
    assert lines[0] == "position,t,H_base,H_fiber"
    assert len(lines) > 1


def test_dump_csv_header_and_shape(capsys):
    code, out, _ = run_cli(["dump", "--n", "2", "--count", "5"], capsys)
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "n,s,t,v_0,v_1,region,out_0,out_1,out_2,time"
    assert len(lines) == 6
    row = lines[1].split(",")
    assert row[0] == "2" and len(row) == 10


def test_dump_is_deterministic(capsys):
    _, out1, _ = run_cli(["dump", "--n", "1", "--count", "4", "--seed", "3"], capsys)
    _, out2, _ = run_cli(["dump", "--n", "1", "--count", "4", "--seed", "3"], capsys)
    assert out1 == out2


def test_eval_json_points(capsys):
    code, out, _ = run_cli(["eval", "Q", "2", "0.5", "0.5", "--json-points"],
                           capsys)
    assert code == 0
    obj = json.loads(out)
    assert obj["dim"] == 2 and len(obj["coords"]) == 3
    assert obj["coords"][2] == pytest.approx(1.0)
