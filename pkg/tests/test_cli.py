import json
import subprocess
import sys

import pytest

HUBER_SPEC = '{"base":{"name":"huber","alpha":1},"scaling":{"name":"sqrt","beta":1},"gamma":1,"dims":[2,1]}'
POWER_SPEC = '{"base":{"name":"power","p":2},"scaling":{"name":"root","q":0.5,"interval":[0,4]},"gamma":1,"dims":[2,1]}'
ABS_SPEC = '{"base":{"name":"abs"},"scaling":{"name":"root","q":0.5,"upper":1},"gamma":1,"dims":[2,1]}'


def run_cli(*args, stdin=None):
    return subprocess.run(
        [sys.executable, "-m", "persprox", *args],
        capture_output=True, text=True, input=stdin,
    )


def test_eval_huber_value():
    out = run_cli("eval", "--spec", HUBER_SPEC, "--point", '{"x":[3,0],"y":0}')
    assert out.returncode == 0
    record = json.loads(out.stdout)
    assert record["value"] == pytest.approx(3.0)


def test_eval_power_root_value():
    out = run_cli("eval", "--spec", POWER_SPEC, "--point", '{"x":[2,0],"y":4}')
    assert out.returncode == 0
    record = json.loads(out.stdout)
    assert record["value"] == pytest.approx(1.0)
    assert record["preperspective_value"] == pytest.approx(1.0)


def test_eval_infeasible_point_serializes_inf():
    out = run_cli("eval", "--spec", POWER_SPEC, "--point", '{"x":[1,0],"y":-2}')
    record = json.loads(out.stdout)
    assert record["value"] == "+inf"
    assert record["preperspective_value"] == "+inf"


def test_prox_record_fields_and_roundtrip():
    out = run_cli("prox", "--spec", HUBER_SPEC, "--point", '{"x":[3,0],"y":0}')
    assert out.returncode == 0
    line = out.stdout
    record = json.loads(line)
    assert record["p"] == [2.0, 0.0]
    assert record["q"] == 0.0
    assert record["case_label"] == "Xi2"
    assert record["iterations"] == 0
    # bit-for-bit JSON round-trip for finite values
    assert json.dumps(record, sort_keys=True) + "\n" == line


def test_prox_eta_value():
    out = run_cli("prox", "--spec", HUBER_SPEC, "--point", '{"x":[1,0],"y":0}')
    record = json.loads(out.stdout)
    assert record["case_label"] == "Xi4"
    assert abs(record["eta"] - 0.375) <= 1e-8
    assert record["certificate_gap"] <= 1e-8


def test_bad_spec_exit_code():
    out = run_cli("prox", "--spec", '{"base":{"name":"nope"},"scaling":{"name":"sqrt"}}',
                  "--point", '{"x":[1],"y":0}')
    assert out.returncode == 2
    assert "error" in out.stderr


def test_malformed_json_exit_code():
    out = run_cli("eval", "--spec", "{not json", "--point", '{"x":[1],"y":0}')
    assert out.returncode == 2


def test_solver_failure_exit_code():
    # an over-tight iteration budget forces a root-find failure on a
    # root-region input
    out = run_cli(
        "prox", "--spec", HUBER_SPEC, "--point", '{"x":[1,0],"y":0.3}',
        "--tol", "max_iter=2", "--tol", "eta_tol=1e-15", "--tol", "residual_tol=1e-15",
    )
    assert out.returncode == 3
    assert "solver failure" in out.stderr


def test_trace_root_csv():
    out = run_cli("trace-root", "--spec", HUBER_SPEC, "--point", '{"x":[1,0],"y":0.2}')
    assert out.returncode == 0
    lines = out.stdout.strip().splitlines()
    assert lines[0] == "iter,eta_lo,eta_hi,eta_mid,T_mid"
    assert len(lines) >= 2
    rows = [tuple(float(v) for v in line.split(",")) for line in lines[1:]]
    widths = [hi - lo for _, lo, hi, _, _ in rows]
    assert all(b <= a + 1e-15 for a, b in zip(widths, widths[1:]))
    assert all(lo <= mid <= hi for _, lo, hi, mid, _ in rows)
    assert abs(rows[-1][4]) <= 1e-10


def test_trace_root_power_root_region():
    out = run_cli("trace-root", "--spec", POWER_SPEC, "--point", '{"x":[6,0],"y":3.5}')
    assert out.returncode == 0
    lines = out.stdout.strip().splitlines()
    assert lines[0] == "iter,eta_lo,eta_hi,eta_mid,T_mid"
    last = lines[-1].split(",")
    assert abs(float(last[4])) <= 1e-10


def test_trace_root_closed_form_message():
    out = run_cli("trace-root", "--spec", HUBER_SPEC, "--point", '{"x":[3,0],"y":0}')
    assert out.returncode == 0
    assert out.stdout.strip() == "closed-form case, no root trace"
    out = run_cli("trace-root", "--spec", POWER_SPEC, "--point", '{"x":[0,0],"y":-1}')
    assert out.returncode == 0
    assert "no root trace" in out.stdout


def test_validate_small_run_and_determinism():
    args = ("validate", "--spec", ABS_SPEC, "--seeds", "6")
    first = run_cli(*args)
    second = run_cli(*args)
    assert first.returncode == 0
    assert first.stdout == second.stdout
    report = json.loads(first.stdout)
    assert report["max_deviation"] <= 5e-4
    assert report["seeds"] == 6


def test_validate_worker_pool_matches_serial():
    args = ("validate", "--spec", HUBER_SPEC, "--seeds", "4")
    serial = run_cli(*args)
    pooled = run_cli(*args, "--workers", "2")
    assert serial.returncode == pooled.returncode == 0
    assert serial.stdout == pooled.stdout


def test_demo_requires_huber_sqrt_pair():
    out = run_cli("demo-concomitant", "--spec", POWER_SPEC)
    assert out.returncode == 2


def test_demo_step_size_violation():
    out = run_cli(
        "demo-concomitant", "--spec", HUBER_SPEC,
        "--demo", '{"a":[[1,0],[0,1]],"b":[1,1],"kappa":1.0,"tau":3.0,"iterations":5}',
    )
    assert out.returncode == 2


def test_demo_csv_output():
    out = run_cli(
        "demo-concomitant", "--spec", HUBER_SPEC,
        "--demo", '{"a":[[1,0],[0,1]],"b":[1,1],"tau":0.5,"iterations":50}',
    )
    assert out.returncode == 0
    lines = out.stdout.strip().splitlines()
    assert lines[0] == "iter,objective,step_norm"
    assert len(lines) == 52
    objs = [float(line.split(",")[1]) for line in lines[1:]]
    assert all(b <= a + 1e-9 for a, b in zip(objs[1:], objs[2:]))


def test_validate_oracle_failure_exit_code(tmp_path):
    # a scale interval thinner than any oracle grid makes every sample
    # infeasible: the oracle must fail loudly with its own exit code
    spec = '{"base":{"name":"abs"},"scaling":{"name":"root","q":0.5,"upper":1e-9},"gamma":1,"dims":[1,1]}'
    out = run_cli("validate", "--spec", spec, "--seeds", "1")
    assert out.returncode == 4
    assert "oracle failure" in out.stderr


def test_out_flag_writes_file(tmp_path):
    target = tmp_path / "result.json"
    out = run_cli(
        "prox", "--spec", HUBER_SPEC, "--point", '{"x":[3,0],"y":0}',
        "--out", str(target),
    )
    assert out.returncode == 0
    assert out.stdout == ""
    record = json.loads(target.read_text())
    assert record["case_label"] == "Xi2"


def test_stdin_document():
    doc = json.dumps({"spec": json.loads(ABS_SPEC), "point": {"x": [2, 0], "y": 2}})
    out = run_cli("prox", stdin=doc)
    assert out.returncode == 0
    record = json.loads(out.stdout)
    assert record["p"] == [1.0, 0.0]
    assert record["q"] == 1.0
    assert record["case_label"] == "CaseII"
