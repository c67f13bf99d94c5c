import json
import subprocess
import sys

import pytest

from idealgraph.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_classify_exit_codes(capsys):
    code, out, _ = run(capsys, "classify", "Z12")
    assert code == 0 and "pendant_implies_star" in out
    code, out, _ = run(capsys, "classify", "vs(2,2)", "--format", "json")
    assert code == 2
    data = json.loads(out)
    h = [e for e in data["entries"] if e["name"] == "hamiltonian"][0]
    assert not h["agree"] and "open question" in h["note"]
    code, _, err = run(capsys, "classify", "Zx")
    assert code == 1 and "position 1" in err


def test_usage_error_exits_one(capsys):
    with pytest.raises(SystemExit) as e:
        main(["frobnicate"])
    assert e.value.code == 1
    with pytest.raises(SystemExit) as e:
        main(["classify", "Z12", "--format", "xml"])
    assert e.value.code == 1


def test_graph_outputs(capsys):
    code, out, _ = run(capsys, "graph", "Z12", "--dot")
    assert code == 0 and out.count(" -- ") == 4 and out.count("[label=") == 4
    code, out, _ = run(capsys, "graph", "GF(2)", "--dot")
    assert code == 0 and "--" not in out
    code, out, _ = run(capsys, "graph", "Z16", "--json")
    assert json.loads(out)["adjacency"] == [[0, 1, 1], [1, 0, 1], [1, 1, 0]]


def test_hamiltonian_command(capsys):
    code, out, _ = run(capsys, "hamiltonian", "Z8 x Z8")
    assert code == 0 and "grid+splice" in out and "cycle (14)" in out and "valid: True" in out
    code, out, _ = run(capsys, "hamiltonian", "GF(2) x GF(3)")
    assert code == 3 and "(1)" in out
    code, out, _ = run(capsys, "hamiltonian", "Z8xZ8", "--format", "json")
    data = json.loads(out)
    assert data["valid"] and data["witness"]["length"] == 14 and len(data["witness"]["vertices"]) == 14


def test_pancyclic_command(capsys):
    code, out, _ = run(capsys, "pancyclic", "GF(2)x GF(3)x GF(5)")
    assert code == 0
    for L in (3, 4, 5, 6):
        assert f"  {L:>3} [" in out
    assert "INVALID" not in out
    code, _, err = run(capsys, "pancyclic", "Z12")
    assert code == 3 and "not Hamiltonian" in err


def test_sweep_small_and_deterministic(capsys):
    args = ["sweep", "--max-vertices", "6", "--no-timestamp", "--format", "json"]
    code, first, _ = run(capsys, *args)
    code2, second, _ = run(capsys, *args)
    assert code == code2 == 0
    assert first == second
    data = json.loads(first)
    assert "timestamp" not in data and data["spec_count"] > 10


def test_cap_error_exits_one(capsys):
    code, _, err = run(capsys, "classify", "vs(2,4)xvs(2,4)")
    assert code == 1 and "cap" in err


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "idealgraph", "graph", "Z12", "--dot"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout.startswith("graph G {")
