from __future__ import annotations

import io
import json

import pytest

from metricdim import harness
from metricdim.cli import main
from metricdim.exact import metric_dimension, rooted_metric_dimension
from metricdim.graph import RootedGraph, complete, cycle, parse_edge_list
from metricdim.hproduct import hierarchical_product


def run(capsys, monkeypatch, argv, stdin=None):
    if stdin is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def family(capsys, monkeypatch, *args):
    code, out, _ = run(capsys, monkeypatch, ["family", *args])
    assert code == 0
    return out


def test_binomial_pipeline(capsys, monkeypatch):
    text = family(capsys, monkeypatch, "binomial", "3")
    assert "# root 0" in text
    code, out, _ = run(capsys, monkeypatch, ["dim", "-"], text)
    assert code == 0 and json.loads(out) == {"dim": 2, "basis": metric_dimension(parse_edge_list(text)[0]).basis.to_list()}


def test_complete_frdim(capsys, monkeypatch):
    text = family(capsys, monkeypatch, "complete", "5")
    code, out, _ = run(capsys, monkeypatch, ["frdim", "-", "--root", "0"], text)
    assert code == 0 and json.loads(out) == {"rdim_f": "2", "convention_empty_Pu": False}


def test_fdim_and_end_rooted_path(capsys, monkeypatch):
    code, out, _ = run(capsys, monkeypatch, ["fdim", "-"], family(capsys, monkeypatch, "cycle", "6"))
    res = json.loads(out)
    assert code == 0 and res["dim_f"] == "3/2" and set(res["weights"]) == {str(v) for v in range(6)}
    text = family(capsys, monkeypatch, "path", "5", "--root", "0")
    code, out, _ = run(capsys, monkeypatch, ["frdim", "-"], text)
    assert json.loads(out) == {"rdim_f": "0", "convention_empty_Pu": True}
    code, out, _ = run(capsys, monkeypatch, ["rdim", "-", "--root", "4"], text)
    assert json.loads(out) == {"rdim": 0, "basis": []}


def test_product_round_trip(tmp_path, capsys, monkeypatch):
    outer, inner = tmp_path / "outer.txt", tmp_path / "inner.txt"
    family(capsys, monkeypatch, "complete", "3", "-o", str(outer))
    family(capsys, monkeypatch, "cycle", "4", "-o", str(inner))
    prod = tmp_path / "prod.txt"
    code, _, _ = run(
        capsys, monkeypatch, ["product", str(outer), str(inner), "--root2", "1", "--root1", "2", "-o", str(prod)]
    )
    assert code == 0
    g, root = parse_edge_list(prod.read_text())
    mem = hierarchical_product(RootedGraph(complete(3), 1), RootedGraph(cycle(4), 2))
    assert g == mem.graph and root == mem.result.root
    code, out, _ = run(capsys, monkeypatch, ["rdim", str(prod)])
    r = rooted_metric_dimension(mem.result)
    assert json.loads(out) == {"rdim": r.value, "basis": r.basis.to_list()}
    code, out, _ = run(capsys, monkeypatch, ["dim", str(prod)])
    assert json.loads(out)["dim"] == 3


def test_verify_passes_and_is_stable(capsys, monkeypatch):
    argv = ["verify", "binomial", "--no-timing"]
    code, first, _ = run(capsys, monkeypatch, argv)
    code2, second, _ = run(capsys, monkeypatch, argv)
    assert code == code2 == 0 and first == second
    rep = json.loads(first)
    assert rep["statement_id"] == "binomial" and rep["failures"] == [] and "elapsed_ms" not in rep


def test_verify_failure_exits_one(capsys, monkeypatch):
    monkeypatch.setattr(harness, "_factor_rdim", lambda inner: -1)
    code, out, _ = run(capsys, monkeypatch, ["verify", "thm2.6", "--trials", "3", "--no-timing"])
    assert code == 1 and len(json.loads(out)["failures"]) == 3


@pytest.mark.parametrize(
    "argv, stdin",
    [
        (["bogus"], None),
        ([], None),
        (["rdim", "-"], "3 2\n0 1\n1 2\n"),
        (["rdim", "-", "--root", "7"], "3 2\n0 1\n1 2\n"),
        (["dim", "-"], "3 2\n0 1\n"),
        (["dim", "-"], "4 2\n0 1\n2 3\n"),
        (["dim", "/nonexistent/file"], None),
        (["family", "cycle", "2"], None),
        (["family", "biclique", "2"], None),
        (["family", "path", "3", "--root", "3"], None),
        (["product", "-", "-"], None),
        (["verify", "thm9"], None),
    ],
)
def test_usage_and_input_errors_exit_two(capsys, monkeypatch, argv, stdin):
    code, out, err = run(capsys, monkeypatch, argv, stdin)
    assert code == 2 and out == "" and err.startswith("metricdim: error:")
