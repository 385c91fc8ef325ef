"""Command-line interface, driven through main(argv)."""

import json

import pytest

from conecross import BookDrawing, Multigraph, complete_graph, f_graph
from conecross.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert code == 0, err
    return json.loads(out)


def write_graph(tmp_path, g, name="g.json"):
    path = tmp_path / name
    path.write_text(g.to_json())
    return str(path)


def test_gen_complete_graph(capsys, tmp_path):
    out_path = tmp_path / "k5.json"
    code, _, _ = run(capsys, "gen", "--family", "kn", "--n", "5", "--out", str(out_path))
    assert code == 0
    g = Multigraph.from_json(out_path.read_text())
    assert g == complete_graph(5)


def test_gen_fk_writes_nine_vertices(capsys):
    data = run_json(capsys, "gen", "--family", "fk", "--k", "3")
    g = Multigraph.from_json_dict(data)
    assert g.n == 9
    assert g == f_graph(3)


def test_gen_mult_doubles_fig1(capsys):
    data = run_json(capsys, "gen", "--family", "mult", "--base", "fig1", "--r", "2")
    assert Multigraph.from_json_dict(data).m == 42


def test_gen_union_and_cone(capsys, tmp_path):
    k3 = write_graph(tmp_path, complete_graph(3))
    data = run_json(capsys, "gen", "--family", "union", "--base", k3, "--other", k3)
    assert Multigraph.from_json_dict(data).n == 6
    data = run_json(capsys, "gen", "--family", "cone", "--base", k3)
    assert Multigraph.from_json_dict(data) == complete_graph(4)


def test_gen_subdivide(capsys, tmp_path):
    k5 = write_graph(tmp_path, complete_graph(5))
    data = run_json(
        capsys, "gen", "--family", "subdivide", "--base", k5, "--edge", "0", "--t", "2"
    )
    g = Multigraph.from_json_dict(data)
    assert g.n == 7 and g.m == 12


def test_gen_missing_flag_is_a_usage_error(capsys):
    code, _, err = run(capsys, "gen", "--family", "kn")
    assert code == 2
    assert "--n" in err


def test_gen_dot_output(capsys, tmp_path):
    dot = tmp_path / "k4.dot"
    code, _, _ = run(
        capsys, "gen", "--family", "kn", "--n", "4", "--dot", str(dot)
    )
    assert code == 0
    assert "0 -- 1" in dot.read_text()


def test_cr_of_the_named_graph(capsys):
    data = run_json(capsys, "cr", "fig3")
    assert data["lower"] == 2
    assert data["upper"] == 2
    assert data["status"] == "exact"
    assert "certificate" in data


def test_cr_cone_flag(capsys):
    data = run_json(capsys, "cr", "fig3", "--cone")
    assert data["status"] == "exact"
    assert data["lower"] == 5


def test_cr_accepts_graph_files(capsys, tmp_path):
    path = write_graph(tmp_path, complete_graph(5))
    data = run_json(capsys, "cr", path)
    assert data["lower"] == data["upper"] == 1


def test_cr_rejects_missing_files(capsys):
    code, _, err = run(capsys, "cr", "no-such-file.json")
    assert code == 2
    assert err


def test_book_default_is_one_page_natural(capsys, tmp_path):
    k4 = write_graph(tmp_path, complete_graph(4))
    data = run_json(capsys, "book", k4)
    assert data == {
        "crossings": 1,
        "status": "exact",
        "pages": 1,
        "order": [0, 1, 2, 3],
    }


def test_book_partition_uses_the_cut(capsys, tmp_path):
    k5 = write_graph(tmp_path, complete_graph(5))
    data = run_json(capsys, "book", k5, "--optimize", "partition")
    assert data["pages"] == 2
    assert data["crossings"] == 1


def test_book_order_search(capsys, tmp_path):
    k4 = write_graph(tmp_path, complete_graph(4))
    data = run_json(capsys, "book", k4, "--optimize", "order")
    assert data["crossings"] == 1
    assert data["status"] == "exact"


def test_book_both_matches_the_two_page_optimum(capsys, tmp_path):
    k5 = write_graph(tmp_path, complete_graph(5))
    data = run_json(capsys, "book", k5, "--optimize", "both", "--pages", "2")
    assert data["crossings"] == 1
    assert data["status"] == "exact"


def test_book_writes_a_loadable_drawing(capsys, tmp_path):
    k5 = write_graph(tmp_path, complete_graph(5))
    out = tmp_path / "book.json"
    dot = tmp_path / "book.dot"
    run_json(
        capsys, "book", k5, "--optimize", "both",
        "--out", str(out), "--dot", str(dot),
    )
    drawing = BookDrawing.from_json(out.read_text())
    assert drawing.page_count <= 2
    text = dot.read_text()
    assert "page=" in text and "spine_position=" in text


def test_book_explicit_order(capsys, tmp_path):
    k4 = write_graph(tmp_path, complete_graph(4))
    data = run_json(capsys, "book", k4, "--order", "0,2,1,3")
    assert data["order"] == [0, 2, 1, 3]
    assert data["crossings"] == 1


def test_book_flag_contradictions(capsys, tmp_path):
    k4 = write_graph(tmp_path, complete_graph(4))
    code, _, err = run(capsys, "book", k4, "--optimize", "both", "--pages", "1")
    assert code == 2 and "2 pages" in err
    code, _, err = run(capsys, "book", k4, "--optimize", "order", "--order", "0,1,2,3")
    assert code == 2
    code, _, err = run(capsys, "book", k4, "--order", "0,1,2")
    assert code == 2


def test_convert12_on_k5(capsys, tmp_path):
    k5 = write_graph(tmp_path, complete_graph(5))
    out = tmp_path / "two.json"
    code, stdout, _ = run(capsys, "convert12", k5, "--out", str(out))
    assert code == 0
    data = json.loads(stdout)
    assert data["k"] == 5
    assert data["crossings"] == data["k"] - data["cut"]
    assert data["crossings"] <= 2
    assert data["verdict"] == "pass"
    assert BookDrawing.from_json(out.read_text()).page_count == 2


def test_bounds_report_for_k_ten(capsys):
    rows = run_json(capsys, "bounds", "--k", "10")
    by_name = {r["bound"]: r for r in rows}
    assert by_name["phi-upper"]["value"] == 11
    assert by_name["phi-upper"]["conditional"]
    assert by_name["cone-lower-simple"]["value"] == 15


def test_bounds_report_for_k_one(capsys):
    rows = run_json(capsys, "bounds", "--k", "1")
    by_name = {r["bound"]: r for r in rows}
    assert by_name["cone-lower-simple"]["value"] == 3
    assert by_name["fs-known"]["value"] == 3


def test_bounds_report_for_k_zero(capsys):
    rows = run_json(capsys, "bounds", "--k", "0")
    by_name = {r["bound"]: r for r in rows}
    assert by_name["cone-lower-sqrt"]["value"] == 0
    assert by_name["cone-lower-simple"]["value"] == 0
    assert "phi-upper" not in by_name


def test_bounds_multigraph_drops_the_simple_row(capsys):
    rows = run_json(capsys, "bounds", "--k", "10", "--multigraph")
    assert all(r["bound"] != "cone-lower-simple" for r in rows)
    assert any(r["bound"] == "cone-lower-sqrt" for r in rows)


def test_bounds_sweep_counts_the_crossover(capsys):
    data = run_json(capsys, "bounds", "--sweep", "60")
    assert len(data["rows"]) == 61
    flips = [r["k"] for r in data["rows"] if not r["dominates"]]
    assert flips == list(range(51, 61))
    assert data["dominance_violations"] == 10


def test_bounds_requires_a_mode(capsys):
    code, _, err = run(capsys, "bounds")
    assert code == 2 and "--k" in err


def test_experiment_hh_table(capsys):
    rows = run_json(capsys, "experiment", "hh-table", "--verify-upto", "6")
    by_n = {r["n"]: r for r in rows}
    assert by_n[5]["z"] == 1
    assert by_n[6]["z"] == 3
    assert by_n[12]["z"] == 150
    assert by_n[5]["verified"] and by_n[6]["verified"]


def test_experiment_cor22_small_run(capsys):
    data = run_json(capsys, "experiment", "cor22-suite", "--count", "40", "--seed", "3")
    assert data["count"] == 40
    assert data["failures"] == []


def test_experiment_family_points(capsys):
    rows = run_json(capsys, "experiment", "family-points")
    assert [r["r"] for r in rows] == [1, 2]
    assert all(r["verified"] and r["matches_formula"] for r in rows)


def test_unknown_subcommand_fails(capsys):
    with pytest.raises(SystemExit):
        main(["frobnicate"])


def test_order_must_be_a_permutation(capsys, tmp_path):
    k4 = write_graph(tmp_path, complete_graph(4))
    code, _, err = run(capsys, "convert12", k4, "--order", "0,1,2,2")
    assert code == 2
