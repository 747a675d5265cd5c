import json
import subprocess
import sys

import pytest

from congruence_ideals.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_roots_text(capsys):
    code, out, _ = run(capsys, "roots", "--m", "31")
    assert code == 0
    assert out == "31: 4 7 20\n"


def test_roots_range_json(capsys):
    code, out, _ = run(capsys, "roots", "--range", "5:7", "--format", "json")
    obj = json.loads(out)
    assert obj["schema"] == 1
    assert obj["roots"] == [{"m": 5, "mu": [3]}, {"m": 6, "mu": [2]}, {"m": 7, "mu": []}]


def test_roots_csv(capsys):
    _, out, _ = run(capsys, "roots", "--m", "31", "--format", "csv")
    assert out.splitlines() == ["m,mu", "31,4", "31,7", "31,20"]


def test_roots_threads_identical(capsys):
    _, a, _ = run(capsys, "roots", "--range", "1:60")
    _, b, _ = run(capsys, "roots", "--range", "1:60", "--threads", "2")
    assert a == b


def test_ideal(capsys):
    code, out, _ = run(capsys, "ideal", "--m", "10", "--mu", "8")
    obj = json.loads(out)
    assert obj["ideal"]["B"] == [[1, 0, 6], [0, 1, 2], [0, 0, 10]]
    assert obj["invariant_factors"] == [10, 1, 1]


def test_ideal_verify(capsys):
    code, out, _ = run(capsys, "ideal", "--verify", "--bound", "50")
    assert code == 0
    assert json.loads(out)["verify"]["fail"] == 0


def test_pair(capsys):
    _, out, _ = run(capsys, "pair", "--m1", "31", "--mu1", "4", "--m2", "31", "--mu2", "7")
    obj = json.loads(out)
    assert obj["pair"]["lambda"] == 357
    assert obj["ideal"]["B"] == [[1, 4, 357], [0, 31, 744], [0, 0, 961]]


def test_pair_verify(capsys):
    code, out, _ = run(capsys, "pair", "--verify", "--bound", "40")
    assert code == 0 and json.loads(out)["verify"]["fail"] == 0


def test_compose(capsys):
    _, out, _ = run(capsys, "compose", "--roots", "5:3", "25:3")
    assert json.loads(out)["result"] == {"m": 125, "mu": 53}
    _, out, _ = run(capsys, "compose", "--roots", "31:4", "31:7")
    obj = json.loads(out)
    assert obj["status"] == "non_cyclic" and obj["result"] is None
    _, out, _ = run(capsys, "compose", "--pairs", "1:0,5:3", "5:3,1:0")
    assert json.loads(out)["status"] == "integer_divisible"


def test_compose_sampled_verify_is_deterministic(capsys):
    _, a, _ = run(capsys, "compose", "--verify", "--samples", "50", "--seed", "7", "--bound", "40")
    _, b, _ = run(capsys, "compose", "--verify", "--samples", "50", "--seed", "7", "--bound", "40")
    assert a == b and json.loads(a)["verify"]["fail"] == 0


def test_param(capsys):
    _, out, _ = run(capsys, "param", "--c", "0,1,2")
    obj = json.loads(out)
    assert obj["witness"]["m"] == 10 and obj["witness"]["mu"] == 8
    assert obj["approximation"]["point"] == ["1/2", "3/4"]
    assert obj["hooley"]["m2"] == 10
    _, out, _ = run(capsys, "param", "--poly", "0,1", "--m", "5", "--mu", "3")
    assert json.loads(out)["witness"]["m"] == 5


def test_param_verify(capsys):
    code, out, _ = run(capsys, "param", "--verify", "--bound", "3")
    assert code == 0 and json.loads(out)["verify"]["fail"] == 0


def test_zeta(capsys):
    code, out, _ = run(capsys, "zeta", "cotype", "--bound", "40", "--verify")
    obj = json.loads(out)
    assert code == 0 and obj["ok"]
    code, out, _ = run(capsys, "zeta", "dedekind", "--poly", "0,1", "--bound", "30", "--format", "csv")
    assert code == 0 and out.startswith("n,ideals,root_side,match\n1,1,1,1")


def test_census(capsys):
    code, out, _ = run(capsys, "census", "approx", "--bound", "200", "--verify")
    assert code == 0 and json.loads(out)["verify"]["fail"] == 0
    _, out, _ = run(capsys, "census", "spacing", "--M", "100")
    assert json.loads(out)["points"] == 28


@pytest.mark.parametrize(
    "argv",
    [
        ["roots"],
        ["roots", "--m", "0"],
        ["roots", "--m", "5", "--poly", "0,0,0"],
        ["ideal", "--m", "7", "--mu", "1"],
        ["pair", "--poly", "0,1", "--m1", "5"],
        ["param", "--poly", "1,2,3", "--c", "1,1,1"],
    ],
)
def test_usage_errors(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert out == "" and err.startswith("error:")


def test_entry_point_byte_identical():
    cmd = [sys.executable, "-m", "congruence_ideals", "compose", "--roots", "5:3", "25:3"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b
    assert json.loads(a)["status"] == "composed"
