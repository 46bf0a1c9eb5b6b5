import json

import pytest

from stabpoly.cli import main
from stabpoly.graphs import cycle_graph, to_graph6, to_json_dict
from stabpoly.catalog import save_catalog


@pytest.fixture()
def c5_file(tmp_path):
    p = tmp_path / "c5.g6"
    p.write_text(to_graph6(cycle_graph(5)))
    return str(p)


def test_facets_command(c5_file, capsys):
    assert main(["facets", c5_file]) == 0
    out = capsys.readouterr().out
    assert "facets: 11" in out


def test_facets_json(c5_file, capsys):
    assert main(["--format", "json", "facets", c5_file]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["facets"] == 11 and data["full_facets"] == 1


def test_facets_json_graph_input(tmp_path, capsys):
    p = tmp_path / "c5.json"
    p.write_text(json.dumps(to_json_dict(cycle_graph(5))))
    assert main(["facets", str(p)]) == 0


def test_classify_command(c5_file, capsys):
    assert main(["classify", c5_file]) == 0
    out = capsys.readouterr().out
    assert "prime: True" in out
    assert "facet_inducing: True" in out


def test_budget_exit_code(tmp_path, capsys):
    from stabpoly.graphs import complete_graph

    p = tmp_path / "k6.g6"
    p.write_text(to_graph6(complete_graph(6)))
    assert main(["--budget-vertices", "5", "facets", str(p)]) == 3


def test_input_error_exit_code(tmp_path):
    p = tmp_path / "bad.g6"
    p.write_text("")
    assert main(["facets", str(p)]) == 2
    assert main(["facets", str(tmp_path / "missing.g6")]) == 2


def test_separate_command(tmp_path, catalog, capsys, c5_file):
    catpath = tmp_path / "cat.json"
    save_catalog(catalog, catpath)
    point = tmp_path / "pt.json"
    point.write_text(json.dumps(["1/2"] * 5))
    code = main(["--catalog", str(catpath), "separate", c5_file, str(point)])
    out = capsys.readouterr().out
    assert code == 1
    assert "violated" in out
    point.write_text(json.dumps({"point": ["0"] * 5}))
    code = main(["--catalog", str(catpath), "separate", c5_file, str(point)])
    assert code == 0


def test_catalog_show_and_verify(tmp_path, catalog, capsys):
    catpath = tmp_path / "cat.json"
    save_catalog(catalog, catpath)
    assert main(["--catalog", str(catpath), "catalog", "show"]) == 0
    out = capsys.readouterr().out
    assert "K2" in out and "C5" in out and "G2" in out
    # verify exits 2: the published class count of 26 is not attainable
    # (see the decisions ledger); the command reports honestly
    code = main(["--catalog", str(catpath), "catalog", "verify"])
    assert code == 2


def test_verify_command_quick(capsys):
    assert main(["verify", "composition"]) == 0
    out = capsys.readouterr().out
    assert "[PASS] composition" in out
