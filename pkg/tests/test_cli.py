import io
import json
import os
import subprocess
import sys

import pytest

from helpers import FIXTURES
from nchilbert import cli

ARTIN = str(FIXTURES / "artin_example.spec")
HECKE_A = str(FIXTURES / "hecke_a.spec")
HECKE_A_PRIME = str(FIXTURES / "hecke_a_prime.spec")


def run(*argv):
    out = io.StringIO()
    code = cli.main(list(argv), out=out)
    return code, out.getvalue()


@pytest.fixture
def write_spec(tmp_path):
    def write(text, name="ideal.spec"):
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    return write


def test_series_artin():
    code, out = run("series", ARTIN)
    assert code == 0
    assert out == (
        "HS = 1/(1 - 3*t + t^2 + t^3)\n"
        "HS_a = 1/(1 - 4*t + 4*t^2 - t^4)\n"
        "orbit = 6\n"
        "growth = exponential rate ≈ 2.414214\n"
    )


def test_series_hecke():
    code, out = run("series", HECKE_A)
    assert code == 0
    assert out.splitlines()[0] == "HS = (1 + t + t^2 + t^3)/(1 - 3*t + 3*t^2 - t^3)"
    assert "orbit = 36" in out
    assert "growth = polynomial k=3 (HF(d) ~ d^2)" in out
    code, out = run("series", HECKE_A_PRIME)
    assert out.splitlines()[0] == "HS = (1 + 2*t + 3*t^2 + 3*t^3 + 2*t^4 + t^5)/(1 - 2*t + t^5)"
    assert "orbit = 33" in out


def test_series_zero_ideal(write_spec):
    code, out = run("series", write_spec("alphabet = a b\n"))
    assert code == 0
    assert out.splitlines()[0] == "HS = 1/(1 - 2*t)"


def test_series_json():
    code, out = run("series", ARTIN, "--format", "json")
    data = json.loads(out)
    assert data["orbit_sizes"] == [6]
    assert data["growth"]["kind"] == "exponential"
    assert data["backends"] == ["dfa"]


def test_expand():
    code, out = run("expand", ARTIN, "-d", "3")
    assert code == 0
    assert out == "d\tHF\tHF_a\n0\t1\t1\n1\t3\t4\n2\t8\t12\n3\t20\t32\n"
    code, out = run("expand", ARTIN, "-d", "3", "--format", "json")
    assert json.loads(out) == {"HF": [1, 3, 8, 20], "HF_a": [1, 4, 12, 32]}


def test_expand_unit_and_zero(write_spec):
    _, out = run("expand", write_spec("alphabet = a b\ngen = 1\n"), "-d", "2", "--format", "json")
    assert json.loads(out)["HF"] == [0, 0, 0]
    _, out = run("expand", write_spec("alphabet = a b c\n"), "-d", "2", "--format", "json")
    assert json.loads(out)["HF"] == [1, 3, 9]


def test_orbit_text():
    code, out = run("orbit", ARTIN)
    assert code == 0
    assert "orbit size = 6" in out
    assert "  0 0 0 0 3 0\n  0 0 2 0 0 1\n" in out
    assert "constants = (1, 1, 1, 1, 0, 1)" in out
    assert "unit index = 4" in out


def test_orbit_round_trip(tmp_path):
    for spec in (ARTIN, HECKE_A, HECKE_A_PRIME):
        _, report = run("orbit", spec, "--format", "json")
        saved = tmp_path / "orbit.json"
        saved.write_text(report)
        code, solved = run("solve", str(saved))
        assert code == 0
        _, direct = run("series", spec)
        assert solved.splitlines()[:2] == direct.splitlines()[:2]


def test_module_round_trip(tmp_path, write_spec):
    spec = write_spec("alphabet = x y\nrank = 2\ngen[1] = x\ngen[2] = y\ngen[2] = x x\n")
    _, out = run("series", spec)
    assert out.splitlines()[0] == "HS = (2 - 2*t - t^2)/(1 - 2*t)"
    assert "orbit = 7 (components: 3, 4)" in out
    _, report = run("orbit", spec, "--format", "json")
    saved = tmp_path / "module.json"
    saved.write_text(report)
    _, solved = run("solve", str(saved))
    assert solved.splitlines()[0] == "HS = (2 - 2*t - t^2)/(1 - 2*t)"
    _, text = run("orbit", spec)
    assert "component 2" in text


def test_dfa(tmp_path):
    code, dot = run("dfa", ARTIN)
    assert code == 0
    nodes = [line for line in dot.splitlines() if "shape=" in line]
    edges = [line for line in dot.splitlines() if "->" in line]
    assert len(nodes) == 6 and len(edges) == 18
    assert sum("doublecircle" in n for n in nodes) == 1
    assert sum(e.startswith("  q4 -> q4") for e in edges) == 3
    path = tmp_path / "orbit.dot"
    code, out = run("dfa", ARTIN, "--dot", str(path))
    assert code == 0 and path.read_text() == dot
    assert run("dfa", ARTIN, "--component", "2")[0] == 1


@pytest.mark.parametrize("spec", [ARTIN, HECKE_A, HECKE_A_PRIME])
def test_check(spec):
    assert run("check", spec, "-d", "8") == (0, "OK: 9/9 degrees match\n")


def test_check_mismatch(monkeypatch):
    real = cli.oracle_hilbert_function

    def off_by_one(spec, degree):
        counts = real(spec, degree)
        counts[2] += 1
        return counts

    monkeypatch.setattr(cli, "oracle_hilbert_function", off_by_one)
    code, out = run("check", ARTIN, "-d", "4")
    assert code == cli.EXIT_MISMATCH == 3
    assert out.startswith("MISMATCH: 4/5 degrees match")
    assert "degree 2: series 8, brute force 9" in out


def test_budget_exit_code(capsys):
    code, _ = run("series", HECKE_A, "--max-states", "5")
    assert code == cli.EXIT_BUDGET == 2
    assert "error" in capsys.readouterr().err


@pytest.mark.parametrize(
    "argv",
    [
        ["series", "/nonexistent/file.spec"],
        ["expand", ARTIN, "-d", "-1"],
        ["series", ARTIN, "--max-states", "0"],
        ["series", ARTIN, "--backend", "fg"],
        ["check", ARTIN, "-d", "40"],
    ],
)
def test_user_errors(argv, capsys):
    assert run(*argv)[0] == cli.EXIT_USER == 1
    assert capsys.readouterr().err.startswith("error:")


def test_syntax_error_reports_line(write_spec, capsys):
    code, _ = run("series", write_spec("alphabet = x\ngen = x (\n"))
    assert code == 1
    assert "line 2" in capsys.readouterr().err


def test_deterministic_output():
    for cmd in ("series", "orbit", "dfa"):
        assert run(cmd, HECKE_A_PRIME) == run(cmd, HECKE_A_PRIME)


def test_console_script():
    env = dict(os.environ)
    proc = subprocess.run(
        [sys.executable, "-m", "nchilbert.cli", "series", ARTIN],
        capture_output=True, text=True, env=env,
    )
    assert proc.returncode == 0
    assert proc.stdout.startswith("HS = 1/(1 - 3*t + t^2 + t^3)")
