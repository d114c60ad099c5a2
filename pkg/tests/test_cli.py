import json
import math
import subprocess
import sys

import pytest

from essspec.cli import dumps, main
from essspec.extremal import theorem1_extremal, theorem3_extremal
from essspec.formats import parse_digraph6, parse_edge_list, parse_graph6, write_graph6


@pytest.fixture
def p3(tmp_path):
    path = tmp_path / "p3.el"
    path.write_text("3 2\n0 1\n1 2\n")
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_spectrum(capsys, p3):
    code, out, _ = run(capsys, "spectrum", "--file", p3)
    assert code == 0
    data = json.loads(out)
    assert data["lambda1"] == pytest.approx(1 + math.sqrt(3), rel=1e-12)
    assert data["lower"] <= data["lambda1"] <= data["upper"]


def test_construct_thm1_graph6(capsys):
    code, out, _ = run(capsys, "construct", "thm1", "--n", "7", "--kappa", "2", "--out", "g6")
    assert code == 0
    assert out.strip().encode() == write_graph6(theorem1_extremal(7, 2))


def test_construct_thm3_defaults_to_digraph6(capsys):
    code, out, _ = run(capsys, "construct", "thm3", "--n", "7", "--k", "1", "--n1", "2")
    assert code == 0 and parse_digraph6(out.strip()) == theorem3_extremal(7, 1, 2)


def test_construct_edge_list(capsys):
    code, out, _ = run(capsys, "construct", "thm2", "--n", "7", "--kappa", "2", "--delta", "3", "--out", "el")
    assert code == 0 and parse_edge_list(out).n == 7


def test_verify_thm1_json(capsys):
    code, out, _ = run(capsys, "verify", "thm1", "--n", "6", "--kappa", "2", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["extremal_matches"] is True and data["uniqueness"] is True
    assert data["minimizer_canonical"] == data["construction_canonical"]


def test_verify_mismatch_exits_one(capsys):
    # an infeasible triple cannot match its construction
    code, out, _ = run(capsys, "verify", "thm2", "--n", "6", "--kappa", "1", "--delta", "5")
    assert code == 1 and "construction-infeasible" in out


def test_verify_lemmas(capsys, tmp_path):
    assert run(capsys, "verify", "lemma-edge", "--trials", "20")[0] == 0
    assert run(capsys, "verify", "lemma-arc", "--trials", "20")[0] == 0
    assert run(capsys, "verify", "lemma-f", "--json")[0] == 0
    assert run(capsys, "verify", "lemma-balance", "--s", "1", "--parts", "4", "3")[0] == 0
    c4 = tmp_path / "c4.el"
    c4.write_text("4 4\n0 1\n1 2\n2 3\n3 0\n")
    code, out, _ = run(capsys, "verify", "lemma-edge", "--file", str(c4), "--edge", "0", "1", "--json")
    assert code == 0 and json.loads(out)["holds"] is True


def test_essconn_and_vconn(capsys, tmp_path):
    path = tmp_path / "g.g6"
    path.write_bytes(write_graph6(theorem1_extremal(7, 2)))
    code, out, _ = run(capsys, "essconn", "--file", str(path), "--json")
    data = json.loads(out)
    assert code == 0 and data["essential_connectivity"] == 2 and data["cut"] == [0, 1]
    code, out, _ = run(capsys, "vconn", "--file", str(path))
    assert code == 0 and out.strip() == "vertex connectivity: 2"


def test_essconn_undefined(capsys, tmp_path):
    path = tmp_path / "k4.g6"
    path.write_text("C~\n")
    code, out, _ = run(capsys, "essconn", "--file", str(path))
    assert code == 0 and "undefined" in out


def test_convert(capsys, p3):
    code, out, _ = run(capsys, "convert", "--file", p3, "--to", "g6")
    assert code == 0 and parse_graph6(out.strip()).edges() == [(0, 1), (1, 2)]


@pytest.mark.parametrize("argv", [
    ["bogus"],
    ["spectrum", "--nope"],
    ["spectrum"],
    ["construct", "thm1", "--n", "7"],
    ["construct", "thm1", "--n", "5", "--kappa", "2"],
])
def test_usage_errors_exit_two(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_parse_errors_exit_two(capsys, tmp_path):
    bad = tmp_path / "bad.el"
    bad.write_text("3 1\n0 9\n")
    code, _, err = run(capsys, "spectrum", "--file", str(bad))
    assert code == 2 and "line 2" in err
    code, _, _ = run(capsys, "spectrum", "--file", str(tmp_path / "missing.el"))
    assert code == 2
    disconnected = tmp_path / "two.el"
    disconnected.write_text("2 0\n")
    assert run(capsys, "spectrum", "--file", str(disconnected))[0] == 2


def test_internal_errors_exit_three(capsys, monkeypatch):
    import essspec.cli as cli

    def boom(*a, **k):
        raise RuntimeError("kaboom")

    monkeypatch.setattr(cli, "verify_theorem1", boom)
    assert run(capsys, "verify", "thm1", "--n", "6", "--kappa", "2")[0] == 3


def test_threads_default_from_environment(monkeypatch):
    monkeypatch.setenv("ESSSPEC_THREADS", "4")
    from essspec.cli import build_parser
    args = build_parser().parse_args(["verify", "thm1", "--n", "6", "--kappa", "2"])
    assert args.threads == 4


def test_dumps_float_precision():
    x = 0.1 + 0.2
    text = dumps({"x": x, "inf": math.inf, "nested": [1.0 / 3.0]})
    data = json.loads(text)
    assert data["x"] == x and data["inf"] is None and data["nested"][0] == 1.0 / 3.0


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "essspec", "--version"], capture_output=True, text=True)
    assert proc.returncode == 0 and "essspec" in proc.stdout
