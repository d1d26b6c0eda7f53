import csv
import io
import json

import pytest

from dihedral_graphs import cli
from dihedral_graphs.graph_core import build_graph


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_graph_json_p2(capsys):
    code, out, _ = run(capsys, "graph", "--p", "2", "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert (data["n"], data["p"]) == (4, 2)
    assert len(data["vertices"]) == 8 and len(data["edges"]) == 10
    assert data["edges"] == sorted(data["edges"])
    assert all(u < v for u, v in data["edges"])
    assert {v["class"] for v in data["vertices"]} == {"reflection", "dihedral", "rotation"}
    assert data["vertices"][0] == {
        "id": 0, "label": "<r^2>", "kind": "rotation_cyclic", "class": "rotation", "class_index": None,
    }


def test_graph_json_round_trip(capsys):
    _, out, _ = run(capsys, "graph", "--n", "12", "--format", "json")
    data = json.loads(out)
    assert data["p"] is None and all(v["class"] is None for v in data["vertices"])
    g = build_graph(12)
    assert cli.graph_from_dict(data).adjacency_matrix() == g.adjacency_matrix()


def test_graph_dot_n6(capsys):
    code, out, _ = run(capsys, "graph", "--n", "6", "--format", "dot")
    assert code == 0
    assert out.startswith('graph "D_12" {')
    node_lines = [ln for ln in out.splitlines() if ln.strip().endswith(";") and "--" not in ln]
    assert len(node_lines) == 14
    assert out.isascii()


def test_graph_dot_classes(capsys):
    _, out, _ = run(capsys, "graph", "--p", "3", "--format", "dot")
    assert '"<r^3, s r^2>" [class="dihedral"];' in out
    assert '"<s>" [class="reflection"];' in out


@pytest.mark.parametrize(
    "argv",
    [
        ["graph", "--n", "2"],
        ["graph", "--p", "4"],
        ["indices", "--n", "5"],
        ["verify", "--n", "12"],
        ["respoly", "--p", "2", "--format", "dot"],
        ["graph"],
        ["graph", "--p", "2", "--n", "4"],
    ],
)
def test_invalid_input_exits_2(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == cli.EXIT_INVALID


def test_unwritable_output_path(capsys, tmp_path):
    code, _, err = run(capsys, "graph", "--p", "2", "--out", str(tmp_path / "missing" / "g.json"))
    assert code == cli.EXIT_INVALID and "cannot write" in err


def test_indices_csv_p3(capsys):
    code, out, _ = run(capsys, "indices", "--p", "3", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 8
    assert rows[0] == {"quantity": "Wiener", "oracle": "190", "formula": "190", "match": "true"}
    mismatched = {r["quantity"] for r in rows if r["match"] != "true"}
    # stated Schultz/Gutman polynomials disagree with the definitions
    assert mismatched == {"Schultz", "Gutman"}
    assert code == cli.EXIT_FAILED


def test_indices_without_closed_form(capsys):
    code, out, _ = run(capsys, "indices", "--n", "12", "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert all(row["formula"] is None and row["match"] is None for row in data["indices"])


def test_metric_dim_p5(capsys):
    code, out, _ = run(capsys, "metric-dim", "--p", "5")
    assert code == 0
    first, second = out.splitlines()
    assert first == "21"
    assert "twin lower bound 21" in second


def test_metric_dim_json(capsys):
    _, out, _ = run(capsys, "metric-dim", "--p", "3", "--format", "json")
    data = json.loads(out)
    assert data["beta"] == data["lower_bound"] == 7 and len(data["basis"]) == 7


def test_respoly_json_p2(capsys):
    code, out, _ = run(capsys, "respoly", "--p", "2", "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert data["beta"] == 3
    assert data["coefficients"] == {"3": 8, "4": 28, "5": 38, "6": 25, "7": 8, "8": 1}


def test_respoly_budget_refusal(capsys):
    code, _, err = run(capsys, "respoly", "--p", "5")
    assert code == cli.EXIT_BUDGET and "refused" in err


def _verify(capsys, p, *extra):
    code, out, _ = run(capsys, "verify", "--p", str(p), "--format", "json", *extra)
    return code, json.loads(out)


@pytest.mark.parametrize("p", [2, 3])
def test_verify_rows(capsys, p):
    code, data = _verify(capsys, p)
    failing = {r["check"] for r in data["rows"] if r["mandatory"] and r["status"] != "pass"}
    assert failing == {"index Schultz", "index Gutman"}
    assert code == cli.EXIT_FAILED
    info = [r for r in data["rows"] if not r["mandatory"]]
    assert info and all(r["status"].startswith("info: ") for r in info)


def test_verify_p5_skips_respoly(capsys):
    code, data = _verify(capsys, 5)
    rows = {r["check"]: r for r in data["rows"]}
    assert rows["metric dimension"]["status"] == "pass"
    assert rows["index Wiener"]["status"] == "pass"
    assert rows["resolving polynomial"]["status"].startswith("skipped: budget")
    assert code == cli.EXIT_FAILED


def test_verify_p7_budget_override(capsys):
    code, data = _verify(capsys, 7)
    rows = {r["check"]: r for r in data["rows"]}
    assert rows["independence number"]["status"].startswith("skipped: budget")
    code, data = _verify(capsys, 7, "--max-vertices", "60")
    rows = {r["check"]: r for r in data["rows"]}
    assert rows["independence number"]["status"] == "pass"
    assert rows["clique number"]["status"] == "pass"


def test_output_file_is_deterministic(capsys, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    run(capsys, "verify", "--p", "3", "--format", "json", "--out", str(a))
    run(capsys, "verify", "--p", "3", "--format", "json", "--out", str(b))
    assert a.read_bytes() == b.read_bytes()
