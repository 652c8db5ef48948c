import json

import pytest

from tatoms.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_analyze_k_minus(capsys):
    code, out = run(capsys, "analyze", "K-3,3")
    rep = json.loads(out)
    assert code == 0
    assert rep["parameters"]["phi"]["value"] == 2
    assert rep["parameters"]["phi_r"]["value"] == 3
    assert all(e["agree"] for e in rep["parameters"].values())


def test_analyze_k1_and_file(capsys, tmp_path):
    code, out = run(capsys, "analyze", "K1")
    assert code == 0
    assert {e["value"] for e in json.loads(out)["parameters"].values()} == {1}
    f = tmp_path / "p2p3.txt"
    f.write_text("5 3\n0 1\n2 3\n3 4\n")
    code, out = run(capsys, "analyze", str(f), "--params", "pgrundy")
    assert code == 0 and json.loads(out)["parameters"]["pgrundy"]["value"] == 3


def test_parse_error(capsys, tmp_path):
    f = tmp_path / "bad.txt"
    f.write_text("3 5\n0 1\n")
    code, out = run(capsys, "analyze", str(f))
    assert code == 2 and out == ""


def test_cap_exceeded(capsys, tmp_path):
    f = tmp_path / "big.txt"
    n = 40
    f.write_text(f"{n} {n * (n - 1) // 2}\n" + "".join(f"{u} {v}\n" for u in range(n)
                                                       for v in range(u + 1, n)))
    code, out = run(capsys, "analyze", str(f), "--params", "phi_r")
    assert code == 3 and out == ""


def test_undecided_exit(capsys):
    code, out = run(capsys, "analyze", "Petersen", "--params", "phi", "--budget", "1")
    rep = json.loads(out)
    assert code == 4
    assert rep["parameters"]["phi"]["methods"]["atoms"]["undecided"]


def test_detect(capsys):
    assert run(capsys, "detect", "K-3,3", "--kind", "b", "--t", "3")[0] == 0
    assert run(capsys, "detect", "K2,3", "--kind", "pgrundy", "--t", "3")[0] == 1
    for kind in ("grundy", "pgrundy", "b"):
        assert run(capsys, "detect", "K1", "--kind", kind, "--t", "1")[0] == 0


def test_gen(capsys, tmp_path):
    out_file = tmp_path / "b3.json"
    code, out = run(capsys, "gen", "--kind", "b", "--t", "3", "--out", str(out_file))
    assert code == 0 and json.loads(out)["count"] == 5
    assert len(json.loads(out_file.read_text())) == 5
    assert json.loads(run(capsys, "gen", "--kind", "pgrundy", "--t", "3")[1])["count"] == 3
    assert json.loads(run(capsys, "gen", "--kind", "b", "--t", "2")[1])["count"] == 1
    assert run(capsys, "gen", "--kind", "b", "--t", "4")[0] == 3


def test_verify(capsys):
    code, out = run(capsys, "verify", "pg-iff", "--n-max", "5")
    assert code == 0 and json.loads(out)["result"] == "pass"
    code, out = run(capsys, "verify", "tree-phi-eq", "--samples", "20", "--n-max", "10", "--seed", "3")
    rep = json.loads(out)
    assert code == 0 and rep["params"]["seed"] == 3
    assert run(capsys, "verify", "deletion-characterization", "--n-max", "5")[0] == 0
    assert run(capsys, "verify", "no-such-theorem")[0] == 2


def test_verify_deterministic(capsys):
    a = run(capsys, "verify", "girth7-phi-eq", "--samples", "3", "--seed", "1")[1]
    b = run(capsys, "verify", "girth7-phi-eq", "--samples", "3", "--seed", "1")[1]
    assert a == b


def test_critical_and_spectrum(capsys):
    code, out = run(capsys, "critical", "K4")
    assert code == 0 and json.loads(out)["vertices"]["critical"] == [0, 1, 2, 3]
    code, out = run(capsys, "spectrum", "Petersen", "--t", "3")
    rep = json.loads(out)
    assert code == 0 and 3 in rep["b_spectrum"] and rep["coloring"]["k"] == 3


def test_unknown_command():
    with pytest.raises(SystemExit):
        main(["frobnicate"])
