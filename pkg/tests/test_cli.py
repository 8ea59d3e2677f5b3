import io
import json
import subprocess
import sys

import pytest

from conftest import BIG_TEXT
from narayana.cli import document_to_polynomial, latex, main
from narayana.qtpoly import QTPolynomial


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_enumerate():
    assert run("enumerate", "--m", "1", "--n", "1") == (0, "0b 1\n")
    code, text = run("enumerate", "--m", "2", "--n", "2")
    assert code == 0 and len(text.splitlines()) == 3
    code, text = run("enumerate", "--m", "2", "--n", "3", "--format", "json")
    doc = json.loads(text)
    assert doc["count"] == 6 == len(doc["words"])
    assert run("enumerate", "--m", "0", "--n", "1")[0] == 2


def test_stats():
    assert run("stats", BIG_TEXT) == (0, "m=12 n=7 area=30 dinv=35 bounce=41\n")
    assert run("stats", "0b 1") == (0, "m=1 n=1 area=1 dinv=1 bounce=1\n")
    code, text = run("stats", "0b 1", "--format", "json")
    assert json.loads(text) == {"m": 1, "n": 1, "area": 1, "dinv": 1, "bounce": 1}


def test_stats_validation_error(capsys):
    assert run("stats", "0b 1b 1")[0] == 2
    assert "condition 3" in capsys.readouterr().err
    assert run("stats", "0b x")[0] == 2


@pytest.mark.parametrize("method", ["enumerate", "recursion"])
def test_poly_terms(method):
    code, text = run("poly", "nara", "--m", "2", "--n", "2", "--format", "json", "--method", method)
    assert code == 0
    assert json.loads(text)["terms"] == [[3, 3, "1"], [3, 4, "1"], [4, 3, "1"]]
    code, text = run("poly", "para", "--a", "1", "--b", "1", "--format", "json", "--method", method)
    assert json.loads(text)["terms"] == [[0, 0, "1"], [0, 1, "1"], [1, 0, "1"]]
    code, text = run("poly", "nara", "--m", "1", "--n", "2", "--format", "json", "--method", method)
    assert json.loads(text)["terms"] == [[2, 2, "1"]]


@pytest.mark.parametrize("family,sizes", [
    ("nara", ["--m", "3", "--n", "4"]),
    ("tilde-nara", ["--m", "4", "--n", "2"]),
    ("para", ["--a", "3", "--b", "2"]),
])
def test_poly_methods_and_formats_agree(family, sizes):
    texts, docs = set(), set()
    for method in ["enumerate", "recursion"]:
        _, text = run("poly", family, *sizes, "--method", method)
        _, doc = run("poly", family, *sizes, "--method", method, "--format", "json")
        texts.add(text)
        docs.add(doc)
        assert QTPolynomial.parse(text) == document_to_polynomial(json.loads(doc))
    assert len(texts) == len(docs) == 1


def test_poly_refined_and_latex():
    code, text = run("poly", "tilde-nara", "--m", "2", "--n", "2", "--r", "2", "--s", "1", "--method", "recursion")
    assert code == 0 and QTPolynomial.parse(text) == QTPolynomial.parse("q^3*t^3 + q^4*t^3")
    doc = json.loads(run("poly", "para", "--a", "1", "--b", "1", "--r", "1", "--s", "0", "--format", "json")[1])
    assert (doc["r"], doc["s"]) == (1, 0)
    assert run("poly", "para", "--a", "1", "--b", "1", "--format", "latex")[1] == "1 + t^{1} + q^{1}\n"
    assert latex(QTPolynomial.parse("0")) == "0"


@pytest.mark.parametrize("argv", [
    ["poly", "nara", "--m", "2"],
    ["poly", "para", "--a", "0", "--b", "0"],
    ["poly", "nara", "--m", "2", "--n", "2", "--r", "1"],
    ["poly", "nara", "--m", "2", "--n", "2", "--r", "5", "--s", "0", "--method", "recursion"],
    ["poly", "bogus", "--m", "1", "--n", "1"],
    ["frobnicate"],
])
def test_poly_usage_errors(argv):
    assert run(*argv)[0] == 2


def test_digamma():
    forward = "0b 1 1 1b 1b 2 2b 2b 3 3b 3b 4 4 4b 4b 3b 1 1b 1b"
    assert run("digamma", BIG_TEXT) == (0, forward + "\n")
    assert run("digamma", "0b 1") == (0, "0b 1\n")
    assert run("digamma", forward, "--direction", "inverse") == (0, BIG_TEXT + "\n")
    assert run("digamma", "1 0b")[0] == 2


def test_verify():
    code, text = run("verify", "--max-total", "6")
    lines = text.splitlines()
    assert code == 0 and lines[-1] == "120/120 checks passed"
    assert all(line.startswith("PASS") for line in lines[:-1])
    code, text = run("verify", "--max-total", "2")
    assert code == 0 and text.splitlines()[-1] == "8/8 checks passed"
    assert run("verify", "--checks", "count,nope")[0] == 2
    assert run("verify", "--max-total", "1")[0] == 2


def test_verify_order_is_fixed():
    _, text = run("verify", "--max-total", "5", "--checks", "count,dyck")
    cells = [tuple(int(tok.split("=")[1]) for tok in line.split()[2:4]) for line in text.splitlines()[:-1]]
    assert cells == sorted(cells, key=lambda mn: (mn[0] + mn[1], mn[0]))


def test_verify_parallel_matches_sequential(monkeypatch):
    sequential = run("verify", "--max-total", "6")
    monkeypatch.setenv("NARAYANA_THREADS", "3")
    assert run("verify", "--max-total", "6") == sequential
    monkeypatch.setenv("NARAYANA_THREADS", "-1")
    assert run("verify", "--max-total", "3")[0] == 2


def test_determinism():
    for argv in [["enumerate", "--m", "3", "--n", "3", "--format", "json"], ["poly", "nara", "--m", "3", "--n", "3"]]:
        assert run(*argv) == run(*argv)


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "narayana", "stats", "0b 1 1b 2"], capture_output=True, text=True, check=False
    )
    assert proc.returncode == 0
    assert proc.stdout == "m=2 n=2 area=4 dinv=3 bounce=3\n"
