import json
import subprocess
import sys

BASE = [sys.executable, "-m", "coniccount.cli"]


def run_cli(*args, env_extra=None):
    import os
    env = dict(os.environ)
    env.pop("CONICCOUNT_OUT_DIR", None)
    if env_extra:
        env.update(env_extra)
    return subprocess.run(BASE + list(args), capture_output=True, text=True,
                          env=env)


def test_count_cubic_exit_zero(tmp_path):
    out = tmp_path / "count.json"
    res = run_cli("count", "--degrees", "3", "--primes", "10007",
                  "--seeds", "0", "--out", str(out))
    assert res.returncode == 0, res.stdout + res.stderr
    data = json.loads(out.read_text())
    assert data["count"] == 6 and data["matches_expected"]


def test_count_output_byte_stable(tmp_path):
    args = ("count", "--degrees", "2,2", "--primes", "10007", "--seeds", "0,1")
    first = run_cli(*args)
    second = run_cli(*args)
    assert first.returncode == second.returncode == 0
    assert first.stdout == second.stdout


def test_splitting_output_byte_stable():
    args = ("splitting", "--degrees", "3", "--curve", "conic",
            "--primes", "10007", "--seeds", "0")
    first = run_cli(*args)
    second = run_cli(*args)
    assert first.returncode == second.returncode == 0
    assert first.stdout == second.stdout


def test_formulas_range():
    res = run_cli("formulas", "--n", "3..5")
    assert res.returncode == 0
    assert "27" in res.stdout and "972" in res.stdout


def test_vanish_rejects_bad_n():
    res = run_cli("vanish", "--n", "4", "--degrees", "4")
    assert res.returncode == 2


def test_splitting_conic(tmp_path):
    out = tmp_path / "split.json"
    res = run_cli("splitting", "--degrees", "2,2", "--curve", "conic",
                  "--primes", "10007", "--seeds", "0", "--out", str(out))
    assert res.returncode == 0, res.stdout + res.stderr
    data = json.loads(out.read_text())
    assert all(e["splitting"] == [2, 1, 1] for e in data["entries"])
    assert all(e["quasi_line"] for e in data["entries"])


def test_splitting_line(tmp_path):
    out = tmp_path / "line.json"
    res = run_cli("splitting", "--degrees", "3", "--curve", "line",
                  "--primes", "10007", "--seeds", "0", "--out", str(out))
    assert res.returncode == 0
    data = json.loads(out.read_text())
    assert data["entries"][0]["splitting"] == [2, 0, 0]
    assert data["entries"][0]["quasi_line"] is False


def test_env_var_output_dir(tmp_path):
    res = run_cli("formulas", "--n", "3",
                  env_extra={"CONICCOUNT_OUT_DIR": str(tmp_path)})
    assert res.returncode == 0
    data = json.loads((tmp_path / "formulas.json").read_text())
    assert data["rows"][0]["closed_form"] == 27


def test_usage_error_exit_two():
    res = run_cli("count")
    assert res.returncode == 2


def test_small_prime_rejected():
    res = run_cli("count", "--degrees", "3", "--primes", "101", "--seeds", "0")
    assert res.returncode == 2
