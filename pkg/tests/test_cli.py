import json
import math
import subprocess
import sys

import pytest

from dvl.cli import log_expansion, main
from dvl.fixtures import fixture_path
from dvl.numeric import TENGELY_PSI3_FACTOR, TENGELY_ZETA_FACTOR, Ls_numeric, riemann_zeta
from dvl.regress import check_tengely
from dvl.fixtures import tengely36
from dvl.periodic import PeriodicFunction


def write(tmp_path, name, data):
    p = tmp_path / name
    p.write_text(json.dumps(data))
    return str(p)


def test_check_exit_codes(tmp_path, capsys):
    assert main(["check", str(fixture_path("tengely36"))]) == 10
    report = json.loads(capsys.readouterr().out)
    assert report["verdict"] == "vanishes"
    assert main(["check", str(fixture_path("example51")), "--json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["log_coefficients"] == {"2": "1", "3": "0"}
    assert main(["check", write(tmp_path, "d.json", {"period": 3, "values": [1, 1, 1]})]) == 11
    capsys.readouterr()
    assert main(["check", write(tmp_path, "bad.json", {"period": 3, "values": [1, 1]})]) == 2
    assert "length" in capsys.readouterr().err


def test_check_conditional(capsys):
    assert main(["check", str(fixture_path("twoPrime_2_3_k2_l3")), "--k", "2"]) == 10
    report = json.loads(capsys.readouterr().out)
    assert report["conditional"] and "note" in report


def test_eval(tmp_path, capsys):
    assert main(["eval", str(fixture_path("example51")), "--json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert abs(out["value"] - math.log(2)) < 1e-9
    assert out["expansion"] == "1·log 2"
    assert main(["eval", str(fixture_path("tengely36")), "--json"]) == 0
    assert abs(json.loads(capsys.readouterr().out)["value"]) < 1e-9
    assert main(["eval", str(fixture_path("tengely36")), "--s", "2", "--json"]) == 0
    rhs = TENGELY_ZETA_FACTOR(2) * riemann_zeta(2) + TENGELY_PSI3_FACTOR(2) * Ls_numeric([1, -1, 0], 2)
    assert abs(json.loads(capsys.readouterr().out)["value"] - rhs) < 1e-8
    assert main(["eval", write(tmp_path, "d.json", {"period": 2, "values": [1, 1]})]) == 11


def test_log_expansion():
    from fractions import Fraction

    assert log_expansion({2: Fraction(1), 3: Fraction(0)}) == "1·log 2"
    assert log_expansion({2: Fraction(-1, 2), 5: Fraction(3)}) == "-1/2·log 2 + 3·log 5"
    assert log_expansion({2: Fraction(0)}) == "0"


def test_search_command(tmp_path, capsys):
    out = tmp_path / "hits"
    assert main(["search", "36", "--family", "pm1", "--json", "--out", str(out)]) == 0
    summary = json.loads(capsys.readouterr().out)
    assert summary["vanishing"] == 4
    files = sorted(p.name for p in out.iterdir())
    assert len(files) == 4
    for p in out.iterdir():
        assert main(["check", str(p)]) == 10
    capsys.readouterr()
    assert main(["search", "5", "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["vanishing"] == 0
    assert main(["search", "40", "--family", "pm1", "--strategy", "brute"]) == 2


def test_workers_env(monkeypatch, capsys):
    monkeypatch.setenv("DVL_WORKERS", "2")
    assert main(["search", "12", "--family", "pm1", "--zero-sum", "--json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["vanishing"] == 0 and out["evaluated"] == 924


def test_threshold_and_chars(capsys):
    assert main(["threshold", "--json"]) == 0
    assert json.loads(capsys.readouterr().out) == {"3": 34, "7": 130, "15": 2516}
    assert main(["threshold", "12"]) == 2
    capsys.readouterr()
    assert main(["chars", "12", "--json"]) == 0
    chars = json.loads(capsys.readouterr().out)["characters"]
    assert sorted(c["conductor"] for c in chars) == [1, 3, 4, 12]


def test_regress_passes(capsys):
    assert main(["regress"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines and all(line.startswith("PASS") for line in lines)


def test_perturbed_tengely_fails():
    t = tengely36()
    vals = list(t.values)
    assert vals[6] == 1
    vals[6] = -1
    bad = PeriodicFunction(36, tuple(vals))
    assert check_tengely().passed
    assert not check_tengely(bad).passed


def test_console_entry_point():
    r = subprocess.run([sys.executable, "-m", "dvl.cli", "threshold", "3"], capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout.split() == ["3", "34"]
