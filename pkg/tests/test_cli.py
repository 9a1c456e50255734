import json

import pytest

from treestars.cli import main, parse_range
from treestars.graph import canonical_code, parse_edge_list, path_graph
from treestars.tk import construct_tk


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_parse_range():
    assert list(parse_range("3..6")) == [3, 4, 5, 6]
    assert list(parse_range("4")) == [4]


def test_construct_k3(capsys, tmp_path):
    out = tmp_path / "t3.txt"
    code, _, _ = run(capsys, "construct", "--k", "3", "--out", str(out))
    assert code == 0
    g = parse_edge_list(out.read_text())
    assert g == construct_tk(3)[0]
    labels = json.loads((tmp_path / "t3.txt.labels.json").read_text())
    assert labels["z"] == list(range(9, 15)) and labels["x0"] == 0


def test_construct_stdout_k1_is_p7(capsys):
    code, out, _ = run(capsys, "construct", "--k", "1")
    assert code == 0
    assert canonical_code(parse_edge_list(out)) == canonical_code(path_graph(7))


def test_construct_k0_usage_error(capsys):
    code, _, err = run(capsys, "construct", "--k", "0")
    assert code == 2 and "k" in err


def test_missing_flag_is_usage_error(capsys):
    with pytest.raises(SystemExit) as info:
        main(["construct"])
    assert info.value.code == 2


def test_stars_p3_json(capsys, tmp_path):
    f = tmp_path / "p3.txt"
    f.write_text("0 1\n1 2\n")
    code, out, _ = run(capsys, "stars", str(f), "--r", "2", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["counts"] == {"0": "1", "1": "0", "2": "1"}
    assert payload["leaves"] == [0, 2]


def test_stars_csv(capsys, tmp_path):
    f = tmp_path / "p3.txt"
    f.write_text("0 1\n1 2\n")
    code, out, _ = run(capsys, "stars", str(f), "--r", "2", "--format", "csv")
    assert out.splitlines() == ["vertex,count,leaf", "0,1,1", "1,0,0", "2,1,1"]


def test_stars_t3_r5(capsys, tmp_path):
    f = tmp_path / "t3.txt"
    run(capsys, "construct", "--k", "3", "--out", str(f))
    code, out, _ = run(capsys, "stars", str(f), "--r", "5", "--format", "json")
    payload = json.loads(out)
    x0 = int(payload["counts"]["0"])
    assert all(int(payload["counts"][str(z)]) < x0 for z in range(9, 15))
    assert payload["verdict"]["holds"] is False
    code, out, _ = run(capsys, "stars", str(f), "--r", "5")
    first = out.splitlines()[1].split()
    assert first == ["0", "240"]
    assert "FAILS" in out


def test_stars_empty_file(capsys, tmp_path):
    f = tmp_path / "empty.txt"
    f.write_text("")
    code, _, err = run(capsys, "stars", str(f), "--r", "2")
    assert code == 2 and "error" in err


def test_stars_missing_file(capsys, tmp_path):
    code, _, _ = run(capsys, "stars", str(tmp_path / "nope.txt"), "--r", "2")
    assert code == 2


def test_counts(capsys, tmp_path):
    f = tmp_path / "tri.txt"
    f.write_text("0 1\n1 2\n0 2\n")
    code, out, _ = run(capsys, "counts", str(f))
    assert json.loads(out)["counts"] == ["1", "3", "0", "0"]


@pytest.mark.parametrize("check", ["theorem", "decompose", "mu", "formula"])
def test_verify_checks_pass(capsys, check):
    code, out, _ = run(capsys, "verify", "--k", "1..6" if check != "theorem" else "3..6", "--check", check)
    assert code == 0
    assert json.loads(out)["pass"] is True


def test_verify_mu_values(capsys):
    code, out, _ = run(capsys, "verify", "--k", "1..6", "--check", "mu")
    assert [r["mu"] for r in json.loads(out)["reports"]] == [3, 5, 7, 9, 11, 13]


def test_verify_k2_vacuous(capsys):
    code, out, _ = run(capsys, "verify", "--k", "2", "--check", "theorem")
    assert code == 0
    assert json.loads(out)["reports"][0]["c"]["vacuous"] is True


def test_verify_mu_beyond_cap_is_usage_error(capsys):
    code, _, _ = run(capsys, "verify", "--k", "10", "--check", "mu")
    assert code == 2


def test_verify_failure_exit_1(capsys, monkeypatch):
    import treestars.cli as cli

    monkeypatch.setattr(cli, "mu", lambda g: 0)
    code, out, _ = run(capsys, "verify", "--k", "3", "--check", "mu")
    assert code == 1 and json.loads(out)["failing_k"] == [3]


def test_search_small(capsys):
    code, out, _ = run(capsys, "search", "--n", "2..5", "--r", "1..2")
    assert code == 0
    assert json.loads(out)["counterexamples"] == []


def test_search_hk(capsys):
    code, out, _ = run(capsys, "search", "--n", "2..12", "--r", "1..4")
    payload = json.loads(out)
    assert code == 0 and payload["counterexamples"] == [] and payload["total_trees"] == 986


def test_search_t3(capsys, tmp_path):
    out = tmp_path / "rep.json"
    code, _, _ = run(capsys, "search", "--n", "15..15", "--r", "5..5", "--out", str(out))
    assert code == 0
    found = json.loads(out.read_text())["counterexamples"]
    assert canonical_code(construct_tk(3)[0]).decode() in {c["canonical_code"] for c in found}


def test_search_byte_identical_across_workers(capsys):
    _, a, _ = run(capsys, "search", "--n", "12..13", "--r", "5..7", "--workers", "1")
    _, b, _ = run(capsys, "search", "--n", "12..13", "--r", "5..7", "--workers", "2")
    assert a == b


def test_search_cap_violation(capsys):
    code, _, _ = run(capsys, "search", "--n", "2..19", "--r", "5")
    assert code == 2
