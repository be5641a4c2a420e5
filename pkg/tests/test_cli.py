import json

import pytest

from ncpenrose import cli, verify
from ncpenrose.k0ring import ZAlpha


def run(capsys, *argv):
    code = cli.run(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_hilbert_example(capsys):
    code, out, _ = run(capsys, "hilbert", "--r", "1", "--N", "10")
    assert code == 0
    assert "b_0..b_10 = 1,2,3,5,8,13,21,34,55,89,144" in out
    assert out.strip().endswith("true")


def test_k0_expand_example(capsys):
    code, out, _ = run(capsys, "k0", "--r", "1", "expand", "--class", "2")
    assert code == 0
    assert "(1,1),(-2,1)" in out and "resum exact: true" in out
    code, out, _ = run(capsys, "k0", "--r", "1", "expand", "--class", "2", "--json")
    d = json.loads(out)
    assert d["digits"] == [[1, 1], [-2, 1]] and d["resum_exact"]
    assert ZAlpha.from_json(d["class"]) == ZAlpha.from_int(2, 1)


def test_verify_r2_quick_example(capsys):
    code, out, _ = run(capsys, "verify", "--r", "2", "--level", "quick")
    assert code == 0, out


def test_verify_reports_sorted_and_json(capsys):
    code, out, _ = run(capsys, "verify", "--r", "1", "--json", "--only", "0")
    d = json.loads(out)
    ids = [c["check"] for c in d["checks"]]
    assert ids == sorted(ids) and ids[0].startswith("01")
    assert "seconds" not in d["checks"][0]
    assert code == (0 if d["pass"] else 1)
    code, out, _ = run(capsys, "verify", "--r", "1", "--json", "--only", "02", "--timing")
    assert code == 0 and "seconds" in json.loads(out)["checks"][0]


def test_verify_failure_exit_code(capsys):
    code, out, _ = run(capsys, "verify", "--r", "1", "--only", "05c", "--json")
    d = json.loads(out)
    assert code == 1 and not d["pass"]
    assert d["checks"][0]["witnesses"]


@pytest.mark.parametrize("argv", [
    ["hilbert", "--N", "x"],
    ["hilbert", "--r", "0"],
    ["nosuch"],
    ["k0", "expand"],
    ["bratteli", "--bogus"],
    ["verify", "--level", "slow"],
])
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert err


def test_value_errors_exit_2(capsys):
    code, _, err = run(capsys, "k0", "expand", "--class", "a^")
    assert code == 2 and "error" in err
    code, _, err = run(capsys, "points", "module", "--z", "011")
    assert code == 2
    code, _, err = run(capsys, "tiles", "--prefix", "0110")
    assert code == 2
    code, _, err = run(capsys, "tiles", "--r", "2", "--prefix", "0")
    assert code == 2


def test_json_everywhere(capsys, tmp_path):
    cmds = [
        ["hilbert", "--r", "2", "--N", "6"],
        ["enumerate", "--r", "1", "--n", "3"],
        ["enumerate", "--r", "1", "--n", "3", "--what", "words"],
        ["bratteli", "--r", "2", "--N", "4"],
        ["k0", "--r", "1", "shift", "--n", "2"],
        ["k0", "--r", "1", "eval", "--poly", "t + t^2"],
        ["k0", "--r", "1", "compare", "--pm", "t", "--pn", "1"],
        ["k0", "--r", "2", "matrix"],
        ["k0", "--r", "1", "growth"],
        ["quiver", "--r", "1", "--N", "5"],
        ["points", "module", "--z", ":01"],
        ["points", "iso", "--z", ":01", "--w", "0:10"],
        ["points", "f2", "--N", "3"],
        ["tiles", "--prefix", "0100"],
    ]
    for c in cmds:
        code, out, _ = run(capsys, *c, "--json")
        assert code == 0, c
        json.loads(out)


def test_k0_outputs(capsys):
    _, out, _ = run(capsys, "k0", "--r", "1", "compare", "--pm", "t", "--pn", "1")
    assert out.strip() == "Less complement: O(-2)"
    _, out, _ = run(capsys, "k0", "--r", "1", "eval", "--poly", "t + t^2", "--json")
    assert ZAlpha.from_json(json.loads(out)["class"]) == ZAlpha.one(1)
    _, out, _ = run(capsys, "k0", "--r", "1", "shift", "--n", "1")
    assert "a" in out and "approx 1.61803398874989484820458683437" in out


def test_bratteli_outputs(capsys):
    _, out, _ = run(capsys, "bratteli", "--r", "3", "--N", "5")
    assert out.splitlines()[-1] == "A(5): 15 8 4 2"
    _, dot, _ = run(capsys, "bratteli", "--r", "1", "--N", "3", "--dot")
    assert dot.startswith("graph bratteli")


def test_quiver_outputs(capsys):
    code, out, _ = run(capsys, "quiver", "--r", "1")
    assert code == 0 and "relation: (1 - t - t^2) p1 = 0" in out
    _, dot, _ = run(capsys, "quiver", "--r", "2", "--dot")
    assert dot.startswith("digraph quiver")


def test_points_outputs(capsys):
    _, out, _ = run(capsys, "points", "iso", "--z", ":01", "--w", "0:01")
    assert out.strip() == "isomorphic tails: false"
    _, out, _ = run(capsys, "points", "f2", "--N", "2", "--json")
    d = json.loads(out)
    assert d["total"] == 5 and d["pure"] == 3
    _, out, _ = run(capsys, "points", "module", "--z", ":01")
    assert "sphere sequence: inf 0 inf 0" in out


def test_tiles_files(capsys, tmp_path):
    svg, dump = tmp_path / "p.svg", tmp_path / "p.json"
    code, out, _ = run(capsys, "tiles", "--prefix", "000000", "--merge", "--out", str(svg),
                       "--dump", str(dump), "--dots")
    assert code == 0
    assert "round trip true" in out and "matching rule: ok" in out
    text = svg.read_text()
    assert text.startswith("<?xml") and "<circle" in text
    d = json.loads(dump.read_text())
    assert d["triangles"] and d["quads"]
    run(capsys, "tiles", "--prefix", "000000", "--merge", "--svg", str(tmp_path / "q.svg"), "--dots")
    assert (tmp_path / "q.svg").read_text() == text


def test_deterministic(capsys):
    for argv in (["verify", "--r", "1", "--only", "02"], ["tiles", "--prefix", "01001", "--json"]):
        a = run(capsys, *argv)
        b = run(capsys, *argv)
        assert a == b
