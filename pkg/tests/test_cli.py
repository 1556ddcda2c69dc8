import json
import re

import pytest

from paigelab.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_cox(capsys):
    code, out, _ = run(capsys, "cox", "2")
    assert code == 0
    assert "E(2) = (3,3|3,2): order 12" in out
    assert "census 1:1 2:3 3:8" in out
    assert "A4-profile: yes" in out


def test_lattice_text(capsys):
    code, out, _ = run(capsys, "lattice", "7")
    assert code == 0
    assert out.splitlines()[0] == "74 subgroups: 1 trivial, 49 C3, 8 C7, 1 C7×C7, 14 order-21, 1 full"
    assert "i^2+i+1 = 0 mod 7: {2, 4}" in out


def test_lattice_dot(tmp_path, capsys):
    path = tmp_path / "l7.dot"
    assert main(["lattice", "7", "--format", "dot", "--out", str(path)]) == 0
    text = path.read_text(encoding="utf-8")
    assert text.startswith("digraph")
    nodes = re.findall(r"^\s*n(\d+) \[label=", text, re.M)
    edges = re.findall(r"^\s*n(\d+) -> n(\d+);", text, re.M)
    assert len(nodes) == 74 and len(edges) == 192


def test_lattice_json(capsys):
    code, out, _ = run(capsys, "lattice", "5", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["schema"] == 1 and doc["p"] == 5
    assert len(doc["nodes"]) == 34
    assert {n["tag"] for n in doc["nodes"]} >= {"1", "G", "H", "H(inf)", "G(0,0)"}
    ids = {n["id"] for n in doc["nodes"]}
    orders = {n["id"]: n["order"] for n in doc["nodes"]}
    for a, b in doc["edges"]:
        assert a in ids and b in ids and orders[b] % orders[a] == 0 and orders[b] > orders[a]


def test_output_deterministic(capsys):
    _, a, _ = run(capsys, "lattice", "7", "--format", "json")
    _, b, _ = run(capsys, "lattice", "7", "--format", "json")
    assert a == b


def test_congruence(capsys):
    assert run(capsys, "congruence", "13")[1].strip() == "{3, 9} (p ≡ 1 mod 3)"
    assert run(capsys, "congruence", "5")[1].strip() == "{} (p ≢ 1 mod 3)"
    code, out, _ = run(capsys, "congruence", "3")
    assert code == 0 and out.startswith("{1}")


def test_paige(capsys):
    code, out, _ = run(capsys, "paige", "2", "generation")
    assert code == 0
    assert out.strip() == "closure 120, generator orders 3,3,3 (expected order 120)"
    code, out, _ = run(capsys, "paige", "3", "moufang", "--samples", "5000")
    assert code == 0 and out.strip() == "5000 triples, 0 violations"


def test_embed(capsys):
    code, out, _ = run(capsys, "embed", "25", "34")
    assert code == 0
    assert out.splitlines()[0] == "M*(25), pair g3,g4: relations ok, |G1|=75, iso: yes"


@pytest.mark.parametrize("argv", [["paige", "9", "generation"], ["embed", "9", "34"],
                                  ["lattice", "3"], ["lattice", "4"], ["paige", "6", "moufang"]])
def test_rejected_input(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err.startswith("error: ")


def test_budget_env(capsys, monkeypatch):
    monkeypatch.setenv("ZORN_BUDGET", "500")
    code, _, err = run(capsys, "paige", "3", "generation")
    assert code == 2 and "CapExceeded" in err


def test_bad_usage(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["cox", "0"])
    assert exc.value.code == 2


def test_verify_all(capsys):
    code, out, _ = run(capsys, "verify-all", "--max-p", "5")
    assert code == 0
    assert out.strip().splitlines()[-1].endswith("checks passed")
    assert "FAIL" not in out
