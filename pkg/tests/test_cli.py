import csv
import io
import math
import subprocess
import sys

import pytest

from infodisturb import frontier
from infodisturb.cli import fmt, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def kv(text):
    return dict(line.split("=", 1) for line in text.strip().splitlines())


def test_fmt():
    assert fmt(-0.0) == "0"
    assert fmt(1 / 3) == "0.333333333"
    assert fmt(1.5e-12) == "1.5e-12"


def test_frontier_36(capsys):
    code, out, _ = run(capsys, "frontier", "--alpha-deg", "36", "--points", "2")
    assert code == 0
    assert "\r" not in out
    rows = list(csv.DictReader(io.StringIO(out)))
    assert list(rows[0]) == ["phi_rad", "theta0_rad", "D", "I_nats", "saturated"]
    assert float(rows[0]["D"]) == 0 and float(rows[0]["I_nats"]) == 0
    assert float(rows[1]["D"]) == pytest.approx(0.0220808, abs=1e-7)
    assert float(rows[1]["I_nats"]) == pytest.approx(0.048536, abs=1e-6)
    assert [r["saturated"] for r in rows] == ["0", "0", "1"]
    # printed values round-trip through the library
    for r in rows[:2]:
        p = frontier.frontier_point(math.radians(36), float(r["phi_rad"]))
        assert float(r["D"]) == pytest.approx(p.D0, rel=1e-8, abs=1e-15)
        assert float(r["I_nats"]) == pytest.approx(p.I, rel=1e-8, abs=1e-15)


def test_frontier_orthogonal_signals(capsys):
    code, out, _ = run(capsys, "frontier", "--alpha-deg", "0", "--points", "5")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and len(rows) == 5
    assert all(float(r["D"]) == 0 for r in rows)
    i = [float(r["I_nats"]) for r in rows]
    assert i == sorted(i) and i[-1] == pytest.approx(math.log(2), abs=1e-9)


def test_frontier_identical_signals(capsys):
    code, out, _ = run(capsys, "frontier", "--alpha-deg", "45")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and len(rows) == 1
    assert float(rows[0]["D"]) == 0 and float(rows[0]["I_nats"]) == 0
    assert rows[0]["saturated"] == "1"


def test_frontier_to_file(tmp_path, capsys):
    path = tmp_path / "f.csv"
    assert run(capsys, "frontier", "--alpha-deg", "20", "--out", str(path))[0] == 0
    assert path.read_bytes().startswith(b"phi_rad,theta0_rad,D,I_nats,saturated\n")


@pytest.mark.parametrize("argv", [
    ["frontier", "--alpha-deg", "50"],
    ["frontier", "--alpha-deg", "30", "--points", "1"],
    ["frontier", "--alpha-deg", "30", "--out", "/nonexistent-dir/x.csv"],
    ["optimize", "--alpha-deg", "30", "--dtol", "0.7"],
    ["optimize", "--alpha-deg", "30", "--dtol", "0.1", "--penalty", "-1"],
    ["optimize", "--alpha-deg", "30", "--dtol", "0.1", "--seed", "-4"],
    ["davies", "--dim", "5"],
    ["davies", "--dim", "2", "--trials", "0"],
    ["frontier"],
    ["bogus"],
])
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err


def test_scenario(capsys):
    code, out, _ = run(capsys, "scenario", "--alpha-deg", "36")
    r = {k: float(v) for k, v in kv(out).items()}
    assert code == 0
    assert list(kv(out)) == ["theta_deg", "I_AE", "I_EB", "I_AB", "z_AB", "D"]
    assert r["theta_deg"] == pytest.approx(42.1332, abs=1e-3)
    assert r["I_AE"] == pytest.approx(0.048536, abs=1e-6)
    assert r["I_EB"] == pytest.approx(0.0049987, abs=1e-7)
    assert r["I_AB"] == pytest.approx(0.0004766, abs=1e-7)
    _, out, _ = run(capsys, "scenario", "--alpha-deg", "22.5")
    assert float(kv(out)["theta_deg"]) == pytest.approx(27.3678, abs=1e-3)
    _, out, _ = run(capsys, "scenario", "--alpha-deg", "0")
    r = {k: float(v) for k, v in kv(out).items()}
    for key in ("I_AE", "I_EB", "I_AB"):
        assert r[key] == pytest.approx(0.693147, abs=1e-6)
    assert r["D"] == 0


def test_optimize(capsys):
    code, out, _ = run(capsys, "optimize", "--alpha-deg", "36", "--dtol", "0.0220808",
                       "--restarts", "4", "--seed", "3")
    r = kv(out)
    assert code == 0
    assert list(r) == ["lambda", "mu", "theta", "phi", "D", "I_nats", "merit", "converged", "seed"]
    assert float(r["I_nats"]) == pytest.approx(0.048536, abs=1e-4)
    assert r["converged"] == "true" and r["seed"] == "3"


def test_optimize_zero_tolerance(capsys):
    code, out, _ = run(capsys, "optimize", "--alpha-deg", "30", "--dtol", "0", "--restarts", "3")
    r = kv(out)
    assert code == 0
    assert float(r["I_nats"]) < 1e-6 and abs(float(r["D"])) < 1e-6


def test_davies(capsys):
    code, out, _ = run(capsys, "davies", "--dim", "2", "--trials", "5", "--seed", "4")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and len(rows) == 5
    assert list(rows[0]) == ["trial", "dim", "I_at_N", "max_improvement_beyond_N"]
    assert all(float(r["max_improvement_beyond_N"]) < 1e-6 for r in rows)


def test_lambda_study(capsys):
    code, out, _ = run(capsys, "lambda-study", "--alpha-deg", "11.25", "--points", "2",
                       "--restarts", "3")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and len(rows) == 2
    assert all(float(r["abs_sin_lambda"]) < 1e-3 for r in rows)


def cli(*argv):
    return subprocess.run([sys.executable, "-m", "infodisturb", *argv],
                          capture_output=True, check=False).stdout


@pytest.mark.parametrize("argv", [
    ["optimize", "--alpha-deg", "25", "--dtol", "0.01", "--restarts", "3", "--seed", "17"],
    ["davies", "--dim", "3", "--trials", "2", "--seed", "5"],
    ["frontier", "--alpha-deg", "36", "--points", "7"],
])
def test_byte_identical_reruns(argv):
    first = cli(*argv)
    assert first and first == cli(*argv)
