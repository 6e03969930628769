import io
import json
import subprocess
import sys

import pytest

from polydeg.cli import NEGATIVE, OK, USAGE, VIOLATED, main, run


def call(*argv, stdin=None):
    text, code = run(list(argv), io.StringIO(stdin or ""))
    data = json.loads(text)
    assert data["schema"] == 1
    return data, code


def test_mdeg():
    data, code = call("mdeg", "--w", "1,1,1", "--map", '["x1","x2","x3"]')
    assert code == OK and data["mdeg"] == [[1], [1], [1]] and data["total"] == [3]


def test_mdeg_from_word_and_stdin():
    word = '[{"kind":"elem","l":2,"a":"1","p":"x1^2"}]'
    data, _ = call("mdeg", "--w", "1,1,1", "--map", word)
    assert data["mdeg"] == [[1], [2], [1]]
    data, _ = call("mdeg", "--w", "1,1,1", "--map", "-", stdin='["x1","x2 + x1^3","x3"]')
    assert data["total"] == [5]


def test_deg_initial_wedge():
    assert call("deg", "--w", "2,1", "--poly", "x1 + x2^3")[0]["deg"] == [3]
    assert call("deg", "--w", "2,1", "--poly", "0")[0]["deg"] is None
    assert call("initial", "--w", "1,1", "--poly", "x1 + x2^2")[0]["initial"] == "x2^2"
    assert call("wedge", "--w", "3,1", "--polys", "x1 + x2^2; x2")[0]["wedge"] == [4]


def test_rank_two_weight():
    data, _ = call("deg", "--w", "[[0,1],[1,0]]", "--poly", "x1^5 + x2")
    assert data["deg"] == [1, 0]


def test_approx_and_refine():
    data, code = call("approx", "--w", "[[0,1],[1,0]]", "--support", "[[1,0],[0,1],[2,0]]")
    assert code == OK and data["v"] == [1, 3] and data["verified"]
    data, _ = call("refine", "--weights", '["1,1","0,1"]', "--polys", "x1 + x2 + x2^2")
    assert data["initial"] == ["x2^2"]
    data, _ = call("monomialize", "--nvars", "2", "--polys", "x1 + x2")
    assert data["initial"] == ["x2"]


def test_semigroup_exit_codes():
    data, code = call("semigroup", "--d", "6", "--gens", "2,3")
    assert code == OK and data["coeffs"] == [0, 2]
    data, code = call("semigroup", "--d", "1", "--gens", "2,3")
    assert code == NEGATIVE and data["member"] is False


def test_cw():
    data, code = call("cw", "--w", "2,3", "--d", "6")
    assert code == OK and data["coordinate"] == "x1^3 + x2"
    assert call("cw", "--w", "2,3", "--d", "1")[1] == NEGATIVE


def test_realize():
    data, code = call("realize", "--w", "1,1,1", "--target", "2,3,5")
    assert code == OK and data["checks"]["mdeg"] and data["kind"] == "realize_thm72"
    data, _ = call("realize", "--w", "1,1,1", "--target", "1,2,1", "--fix-last")
    assert data["tuple"] == ["x1", "x1^2 + x2", "x3"]
    data, _ = call("realize", "--w", "1,1,1", "--target", "2,3,5", "--ring", "Zmod:6")
    assert data["ring"] == "Zmod:6" and all(data["checks"].values())


def test_factor_and_reduce():
    data, code = call("factor", "--w", "1,3,2", "--map", '["x1","x3 + x1^2","x2 + x1^3"]')
    assert code == OK and data["checks"]["recomposes"]
    data, code = call("reduce", "--w", "1,1,1", "--map", '["x1","x2 + x1^2","x3"]')
    assert code == OK and data["index"] == 2 and data["h"] == "x1^2"
    data, code = call("reduce", "--w", "1,1,1", "--map", '["x1","x2","x3"]')
    assert code == NEGATIVE and data["status"] == "none"


def test_su_check():
    pair = json.dumps({"F": ["x1", "x2", "x3"], "G": ["x1", "x2", "x3"]})
    data, code = call("su-check", "--w", "1,1,1", "--pair", pair, "--witness", '{"Q":"0"}')
    assert code == NEGATIVE and data["conditions"]["SU5"] is False


def test_dichotomy():
    data, code = call("dichotomy", "--w", "1,1,1", "--map", '["x1","x2 + x1^2","x3"]', "--I", "1,2,3")
    assert code == OK and data["case"] == "b" and data["witness"] == 2
    data, _ = call("dichotomy", "--w", "2,3,7", "--map", '["x1","x2","x3"]', "--I", "1,2")
    assert data["case"] == "a" and data["sigma"] == {"1": 1, "2": 2}


def test_harness_command():
    data, code = call("harness", "--suite", "plane", "--cases", "10", "--seed", "2")
    assert code == OK and data["ok"] and data["cases"] == 10


@pytest.mark.parametrize("argv", [
    [],
    ["nosuch"],
    ["deg", "--w", "1,1", "--poly", "x1 +* x2"],
    ["semigroup", "--d", "6"],
    ["harness", "--suite", "nosuch"],
    ["factor", "--w", "1,1,1", "--map", '["x1","x2 + x1^2","x3"]'],
    ["mdeg", "--w", "1,1", "--map", "not json"],
])
def test_usage_errors(argv):
    data, code = call(*argv)
    assert code == USAGE and "error" in data


def test_parse_error_offset():
    data, _ = call("deg", "--w", "1,1", "--poly", "x1 +* x2")
    assert "offset 4" in data["message"]


def test_violation_exit_code(monkeypatch):
    from polydeg import tamecert
    from polydeg.errors import TheoremViolated

    def boom(*a, **k):
        raise TheoremViolated("planted")

    monkeypatch.setattr(tamecert, "realize", boom)
    assert call("realize", "--w", "1,1,1", "--target", "1,1,1")[1] == VIOLATED


def test_determinism():
    a = run(["harness", "--suite", "thm33", "--cases", "5", "--seed", "9"])
    b = run(["harness", "--suite", "thm33", "--cases", "5", "--seed", "9"])
    strip = lambda t: {k: v for k, v in json.loads(t[0]).items() if k != "elapsed"}
    assert strip(a) == strip(b)


def test_pretty_output():
    text, _ = run(["deg", "--w", "1,1", "--poly", "x1", "--pretty"])
    assert "\n" in text and json.loads(text)["deg"] == [1]


def test_main_and_module(capsys):
    assert main(["deg", "--w", "1", "--poly", "x1^2"]) == OK
    assert json.loads(capsys.readouterr().out)["deg"] == [2]
    proc = subprocess.run([sys.executable, "-m", "polydeg", "semigroup", "--d", "1", "--gens", "2,3"],
                          capture_output=True, text=True)
    assert proc.returncode == NEGATIVE and json.loads(proc.stdout)["member"] is False
