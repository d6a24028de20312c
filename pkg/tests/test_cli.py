import json
import subprocess
import sys

import pytest

from coherentia.cli import run


@pytest.fixture
def belief_file(tmp_path):
    def make(values, logic="classical"):
        path = tmp_path / "b.json"
        path.write_text(json.dumps({"logic": logic, "beliefs": [{"formula": f, "value": v} for f, v in values]}))
        return str(path)

    return make


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_axioms_listing(capsys):
    code, out, _ = call(capsys, "axioms", "--logic", "classical", "--letters", "p")
    assert code == 0
    assert out.splitlines() == [
        "1·B(p) + 1·B(~p) = 1",
        "1·B(p -> p) = 1",
        "1·B(p & ~p) = 0",
        "1·B(p) >= 0",
        "1·B(p) <= 1",
    ]


def test_axioms_json_and_geometry_dump(capsys):
    code, out, err = call(capsys, "axioms", "--logic", "kleene", "--letters", "p", "--format", "json", "--dump-geometry")
    assert code == 0
    data = json.loads(out)
    assert data["representatives"] == ["p", "~p", "p & ~p", "p | ~p"]
    dump = json.loads(err)
    assert dump["V"][1] == ["1/2"] * 4


def test_check_incoherent_prints_book(capsys, belief_file):
    path = belief_file([("p", "3/10"), ("~p", "4/5")])
    code, out, _ = call(capsys, "check", "--beliefs", path)
    assert code == 1
    assert "stake 1 on p at quotient 3/10" in out
    assert "stake 1 on ~p at quotient 4/5" in out
    assert "guaranteed loss: 1/10" in out
    assert "violated axiom: 1·B(p) + 1·B(~p) = 1" in out


def test_check_json(capsys, belief_file):
    path = belief_file([("p", "3/10"), ("~p", "4/5")])
    code, out, _ = call(capsys, "check", "--logic", "classical", "--beliefs", path, "--format", "json")
    data = json.loads(out)
    assert code == 1 and data["coherent"] is False
    assert [b["stake"] for b in data["dutch_book"]["bets"]] == ["1", "1"]
    assert data["dutch_book"]["guaranteed_loss"] == "1/10"


def test_check_coherent(capsys, belief_file):
    path = belief_file([("p", "3/10"), ("~p", "7/10")])
    code, out, _ = call(capsys, "check", "--beliefs", path)
    assert code == 0 and out.startswith("coherent")
    assert "7/10\tp↦0" in out


def test_logic_flag_overrides_file(capsys, belief_file):
    path = belief_file([("p", "1"), ("~p", "1")], logic="classical")
    code, out, _ = call(capsys, "check", "--logic", "lp", "--beliefs", path, "--format", "json")
    assert json.loads(out)["logic"] == "lp"


def test_consequence(capsys):
    code, out, _ = call(capsys, "consequence", "--logic", "lp", "p & ~p", "q")
    assert code == 1
    assert "countervaluation: p↦1/2, q↦0" in out
    code, out, _ = call(capsys, "consequence", "--logic", "kleene", "p & ~p", "q")
    assert code == 0


def test_quotient(capsys):
    code, out, _ = call(capsys, "quotient", "--logic", "kleene", "--letters", "p", "--format", "json")
    data = json.loads(out)
    assert [c["representative"] for c in data["classes"]] == ["p", "~p", "p & ~p", "p | ~p"]
    assert data["classes"][0]["vector"] == ["0", "1/2", "1"]


def test_letters_accept_commas(capsys):
    code, out, _ = call(capsys, "quotient", "--logic", "classical", "--letters", "p,q", "--format", "json")
    assert code == 0 and len(json.loads(out)["classes"]) == 16


def test_verify_modes(capsys):
    code, out, _ = call(capsys, "verify", "--logic", "classical", "--letters", "p", "--templates", "P1,P2,P3", "--mode", "completeness")
    assert code == 0 and out.strip() == "complete"
    code, out, _ = call(capsys, "verify", "--logic", "classical", "--letters", "p", "--templates", "P1", "--mode", "completeness")
    assert code == 1 and "missing axiom: 1·B(p) + 1·B(~p) <= 1" in out
    code, out, _ = call(capsys, "verify", "--logic", "symmetric", "--letters", "p", "--templates", "SL1", "SL2")
    assert code == 0 and out.startswith("sound")


@pytest.mark.parametrize(
    "argv",
    [
        ["consequence", "--logic", "classical", "p & ", "q"],
        ["axioms", "--logic", "nonexistent", "--letters", "p"],
        ["axioms", "--logic", "classical", "--letters", "1p"],
        ["verify", "--logic", "classical", "--letters", "p", "--templates", "P9"],
        ["quotient", "--logic", "lukasiewicz-2", "--letters", "p", "--cap", "3"],
        ["check", "--beliefs", "/nonexistent/beliefs.json"],
        ["frobnicate"],
    ],
)
def test_errors_exit_two_with_one_line(capsys, argv):
    code, out, err = call(capsys, *argv)
    assert code == 2
    assert len(err.strip().splitlines()) == 1 and err.startswith("error: ")


def test_cap_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("COHERENTIA_CAP", "3")
    code, _, err = call(capsys, "quotient", "--logic", "lukasiewicz-2", "--letters", "p")
    assert code == 2 and "cap 3" in err
    code, _, _ = call(capsys, "quotient", "--logic", "lukasiewicz-2", "--letters", "p", "--cap", "50")
    assert code == 0


def test_output_is_byte_identical(capsys):
    first = call(capsys, "axioms", "--logic", "symmetric", "--letters", "p", "--format", "json")
    second = call(capsys, "axioms", "--logic", "symmetric", "--letters", "p", "--format", "json")
    assert first == second


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "coherentia", "logics"], capture_output=True, text=True)
    assert proc.returncode == 0 and "classical" in proc.stdout.split()
