import json
import shutil
import subprocess

import pytest

from cmorder.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out.strip(), err.strip()


LAM = "[[],[3,2]]"
MU = "[[2,2,1],[]]"


def test_kappa_example(capsys):
    assert run(capsys, "kappa", "--l", "2", "--m", "1/2,0", "--s", "4",
               "--lambda", LAM) == (0, "6,4,7/2,5/2,3/2,1,1/2,0", "")


def test_symbol_and_n(capsys):
    _, out, _ = run(capsys, "symbol", "--l", "2", "--m", "1/2,0", "--s", "4", "--lambda", LAM)
    assert out.splitlines() == ["1/2,3/2,5/2,7/2", "0,1,4,6"]
    assert run(capsys, "nvalue", "--l", "2", "--m", "1/2,0", "--s", "4",
               "--lambda", LAM)[1] == "94"
    assert run(capsys, "kcompare", "--l", "2", "--m", "9/10,0", "--s", "4",
               "--lambda", LAM, "--mu", MU)[1] == "Incomparable"


def test_afn(capsys):
    base = ["afn", "--l", "2", "--m", "1,0", "--r", "1", "--lambda", MU]
    assert run(capsys, *base, "--s", "4")[1] == "39"
    assert run(capsys, *base)[1] == "5"
    assert run(capsys, "afn", "--l", "2", "--n", "5", "--m", "1/2,0", "--r", "1",
               "--lambda", LAM, "--s", "4")[1] == "65/2"


def test_tau_family(capsys):
    assert run(capsys, "tau", "--s", "1,-1", "--lambda", MU)[1] == "[5,4,1,1]"
    assert run(capsys, "tauinv", "--l", "2", "--rho", "[5,4,1,1]")[1] == \
        "s=1,-1 lambda=[[2,2,1],[]]"
    assert run(capsys, "core", "--s", "2,-1,-1")[1] == "[4,2]"
    assert run(capsys, "jheart", "--rho", "[2,1]", "--l", "2", "--j", "1")[1] == "[1]"


def test_parameters(capsys):
    assert run(capsys, "classify", "--l", "2", "--theta", "0,1")[1] == \
        "wall d=0 (+) between A_-1 and A_0"
    _, out, _ = run(capsys, "classify", "--l", "2", "--theta", "1/3,2/3", "--json")
    assert json.loads(out) == {"kind": "alcove", "index": 0, "s": [0, 0],
                               "w": [1, 2], "sign": "+"}
    assert run(capsys, "walls", "--l", "2", "--n", "2", "--h", "1,0")[1] == "H_1 + (0)h = 0"
    assert run(capsys, "walls", "--l", "2", "--n", "2", "--h", "1,1/3")[1] == "regular"
    assert run(capsys, "alcoverep", "--s", "0,0", "--w", "1,2", "--sign", "+")[1] == "1/2,1/2"


def test_order_and_hasse(capsys):
    assert run(capsys, "order", "--l", "2", "--theta", "1/2,1/2",
               "--a", MU, "--b", LAM)[1] == "Less"
    assert run(capsys, "order", "--s", "1,-1", "--w", "2,1",
               "--a", LAM, "--b", MU)[1] == "Less"
    code, out, _ = run(capsys, "hasse", "--l", "2", "--n", "2", "--theta", "1/2,1/2",
                       "--format", "dot")
    assert code == 0 and out.startswith("digraph poset {") and out.count("->") == 4
    _, out, _ = run(capsys, "hasse", "--n", "2", "--theta", "1/2,1/2", "--format", "json")
    data = json.loads(out)
    assert len(data["elements"]) == 5 and len(data["covers"]) == 4


def test_blocks(capsys):
    _, out, _ = run(capsys, "blocks", "--l", "2", "--n", "2", "--m", "0,0", "--s", "3")
    assert sorted(out.splitlines()) == sorted([
        "{[[],[1,1]]; [[1,1],[]]}", "{[[],[2]]; [[2],[]]}", "{[[1],[1]]}"])
    _, out, _ = run(capsys, "blocks-e", "--l", "2", "--e", "2", "--n", "2", "--h", "1,0",
                    "--json")
    data = json.loads(out)
    assert len(data["classes"]) == 4 and data["unresolved"].count(True) == 2
    _, out, _ = run(capsys, "blocks", "--l", "3", "--n", "1", "--charge", "0,0,0",
                    "--j", "0,1,2", "--json")
    assert len(json.loads(out)["classes"]) == 1


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "tau-roundtrip", "--l", "2", "--max-n", "4")
    assert code == 0 and out.startswith("PASS tau-roundtrip")
    code, out, _ = run(capsys, "verify", "glen-counts", "--l", "2", "--e", "2",
                       "--max-n", "3", "--json")
    assert code == 0 and json.loads(out)[0]["counterexamples"] == []
    code, out, _ = run(capsys, "verify", "s-stability", "--l", "2", "--max-n", "2")
    assert code == 0 and out.startswith("REPORT")


@pytest.mark.parametrize("argv,name", [
    (["kappa", "--l", "2", "--m", "1/2,0", "--s", "1", "--lambda", LAM], "SizeTooSmall"),
    (["order", "--l", "2", "--theta", "0,1", "--a", LAM, "--b", MU], "OnWall"),
    (["blocks-e", "--l", "2", "--e", "3", "--n", "2"], "BadDivisor"),
    (["blocks-e", "--l", "2", "--e", "2", "--n", "2"], "NotCeStable"),
    (["tau", "--s", "1,0", "--lambda", "[[],[]]"], "MalformedCharge"),
    (["afn", "--m", "0,0", "--r", "0", "--lambda", "[[],[]]"], "ZeroR"),
    (["kappa", "--l", "3", "--m", "0,0", "--s", "3", "--lambda", LAM], "WrongLevel"),
    (["verify", "nope"], "UnknownSuite"),
])
def test_domain_errors_exit_one(capsys, argv, name):
    code, _, err = run(capsys, *argv)
    assert code == 1 and err.startswith(name)


@pytest.mark.parametrize("argv", [
    ["frobnicate"],
    ["kappa", "--l", "2", "--m", "x", "--s", "4", "--lambda", LAM],
    ["kappa", "--l", "2", "--m", "1/2,0", "--s", "4", "--lambda", "[[3,2"],
    ["kappa", "--l", "2", "--m", "1/2,0", "--s", "4"],
    ["hasse", "--n", "2", "--theta", "1/2,1/2", "--format", "png"],
])
def test_usage_errors_exit_two(capsys, argv):
    try:
        code = main(argv)
    except SystemExit as exc:
        code = exc.code
    capsys.readouterr()
    assert code == 2


@pytest.mark.skipif(shutil.which("cmorder") is None, reason="console script not installed")
def test_console_script():
    done = subprocess.run(["cmorder", "kappa", "--l", "2", "--m", "1,0", "--s", "4",
                           "--lambda", MU], capture_output=True, text=True)
    assert done.returncode == 0 and done.stdout.strip() == "6,5,3,3,2,1,1,0,0"
