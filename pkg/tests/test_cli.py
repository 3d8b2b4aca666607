import json

import pytest

from linforest.cli import main
from linforest.graph6 import parse_graph6, write_graph6
from linforest.graphs import complete, cycle


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_gen_emits_graph6(capsys):
    code, out, _ = run(capsys, "gen", "--family", "s", "--params", "n=7,h=2")
    assert code == 0
    g = parse_graph6(out.strip())
    assert g.n == 7 and g.edge_count() == 11


def test_gen_json_metadata(capsys):
    code, out, _ = run(capsys, "gen", "--family", "u3", "--params", "h=1", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["order"] == 6 and doc["edges"] == 6 and doc["delta"] == 1


def test_gen_bad_params_exit_2(capsys):
    code, _, err = run(capsys, "gen", "--family", "u3", "--params", "h=0")
    assert code == 2 and "error" in err


def test_contains_pipeline(capsys, tmp_path):
    path = tmp_path / "in.g6"
    path.write_text(write_graph6(cycle(6)) + "\n" + write_graph6(complete(3)) + "\n")
    code, out, _ = run(capsys, "contains", "--forest", "3,3", "--input", str(path), "--format", "text")
    assert code == 0
    assert out.splitlines() == ["yes", "no"]


def test_classify_exit_codes(capsys, tmp_path):
    path = tmp_path / "in.g6"
    path.write_text(write_graph6(cycle(4)) + "\n")
    # C_4 with F = 2P_4: delta 2 < h = 3 and no containment: hypothesis error
    code, out, _ = run(capsys, "classify", "--forest", "4,4", "--input", str(path), "--format", "text")
    assert code == 2 and out.strip() == "hypothesis_not_met"
    code, out, _ = run(capsys, "classify", "--forest", "2,2", "--input", str(path), "--format", "text")
    assert code == 0 and out.strip() == "contains"


def test_sweep_json_and_text_counts_agree(capsys):
    code, out, _ = run(capsys, "sweep", "--theorem", "even", "--forest", "2,2",
                       "--n", "6", "--jobs", "1")
    assert code == 0
    doc = json.loads(out)
    assert doc["counts"]["checked"] == 112 and doc["counts"]["contains"] == 111
    code, out, _ = run(capsys, "sweep", "--theorem", "even", "--forest", "2,2",
                       "--n", "6", "--jobs", "1", "--format", "text")
    assert code == 0 and "checked 112, contains 111" in out


def test_sweep_range(capsys):
    code, out, _ = run(capsys, "sweep", "--theorem", "one_odd", "--forest", "3,2",
                       "--range", "5..6", "--jobs", "1")
    docs = json.loads(out)
    assert code == 0 and len(docs) == 2
    assert [d["n"] for d in docs] == [5, 6]
    assert all(d["counts"]["violations"] == 0 for d in docs)


def test_lemma_cli(capsys):
    code, out, _ = run(capsys, "lemma", "--lemma", "dirac", "--n", "6", "--jobs", "1")
    doc = json.loads(out)
    assert code == 0 and doc["counts"]["violations"] == 0


def test_turan_cli(capsys):
    code, out, _ = run(capsys, "turan", "--forest", "2,2", "--n", "5", "--jobs", "1")
    doc = json.loads(out)
    assert code == 0 and doc["max_edges"] == 4


def test_sharpness_cli(capsys):
    code, out, _ = run(capsys, "sharpness", "--case", "remark1a")
    doc = json.loads(out)
    assert code == 0 and doc["passed"] is True


def test_enumerate_cli(capsys):
    code, out, _ = run(capsys, "enumerate", "--n", "5", "--connectivity", "connected",
                       "--jobs", "1")
    lines = out.strip().splitlines()
    assert code == 0 and len(lines) == 21
    assert all(parse_graph6(l).n == 5 for l in lines)


def test_enumerate_ingest_reports_bad_lines(capsys, tmp_path):
    path = tmp_path / "in.g6"
    path.write_text("C~\nC\nD??\n")
    code, out, err = run(capsys, "enumerate", "--n", "4", "--input", str(path), "--jobs", "1")
    assert code == 0
    assert out.strip().splitlines() == ["C~"]  # D?? has order 5, filtered; C is bad
    assert "line 2" in err


def test_enumerate_dedup(capsys, tmp_path):
    path = tmp_path / "in.g6"
    relabeled = write_graph6(complete(4).relabel([1, 0, 3, 2]))
    path.write_text(f"C~\n{relabeled}\n")
    code, out, _ = run(capsys, "enumerate", "--n", "4", "--input", str(path),
                       "--dedup", "--jobs", "1")
    assert code == 0 and len(out.strip().splitlines()) == 1


def test_usage_error_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["sweep", "--forest", "2,2"])  # missing --theorem
    assert exc.value.code == 2


def test_out_file(capsys, tmp_path):
    target = tmp_path / "report.json"
    code, out, _ = run(capsys, "sweep", "--theorem", "even", "--forest", "2,2",
                       "--n", "5", "--jobs", "1", "--out", str(target))
    assert code == 0 and out == ""
    doc = json.loads(target.read_text())
    assert doc["counts"]["violations"] == 0
