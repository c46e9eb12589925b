from __future__ import annotations

import json

import pytest

from tricrit.cli import main
from tricrit.coloring import ListSystem, lists_to_json
from tricrit.families import gen_Hr
from tricrit.graphs import complete_graph, cycle_graph, write_graph6
from tricrit.propagation import P6_REFERENCE_COUNTS


def run(capsys, *argv):
    rc = main(list(argv))
    cap = capsys.readouterr()
    return rc, cap.out, cap.err


def write_instance(tmp_path, g, lists=None, stem="g"):
    gpath = tmp_path / f"{stem}.g6"
    gpath.write_text(write_graph6(g) + "\n")
    if lists is None:
        return str(gpath), None
    lpath = tmp_path / f"{stem}.lists.json"
    lpath.write_text(json.dumps(lists_to_json(lists)))
    return str(gpath), str(lpath)


def test_enumerate_table(capsys):
    rc, out, err = run(capsys, "enumerate", "--forbidden", "P6", "--max-n", "5")
    assert rc == 0 and err == ""
    lines = out.strip().split("\n")
    assert lines[0] == "1\t1"
    assert lines[4] == "5\t86"
    assert lines[-1] == "max_length\t5"


def test_enumerate_json_and_jobs(capsys):
    rc, out, _ = run(
        capsys, "enumerate", "--forbidden", "P6", "--max-n", "8", "--jobs", "2",
        "--format", "json",
    )
    assert rc == 0
    data = json.loads(out)
    assert data["counts"] == list(P6_REFERENCE_COUNTS[:8])
    assert data["max_length"] == 8


def test_enumerate_emit_file(capsys, tmp_path):
    out_file = tmp_path / "stream.txt"
    rc, _, _ = run(
        capsys, "enumerate", "--forbidden", "P6", "--max-n", "4", "--emit", str(out_file)
    )
    assert rc == 0
    lines = out_file.read_text().strip().split("\n")
    assert len(lines) == 31
    assert lines == sorted(lines)


def test_enumerate_bad_pattern(capsys):
    rc, _, err = run(capsys, "enumerate", "--forbidden", "Bogus")
    assert rc == 2
    assert "unrecognized pattern name" in err


def test_enumerate_rejects_silly_max_n(capsys):
    rc, _, err = run(capsys, "enumerate", "--forbidden", "P6", "--max-n", "65")
    assert rc == 2 and "error" in err


def test_solve_sat(capsys, tmp_path):
    gpath, _ = write_instance(tmp_path, cycle_graph(5))
    rc, out, _ = run(capsys, "solve", "--graph", gpath, "--format", "json")
    assert rc == 0
    coloring = json.loads(out)["coloring"]
    assert len(coloring) == 5 and set(coloring) <= {1, 2, 3}


def test_solve_unsat(capsys, tmp_path):
    g, l = gen_Hr(3)
    gpath, lpath = write_instance(tmp_path, g, l)
    rc, out, _ = run(capsys, "solve", "--graph", gpath, "--lists", lpath)
    assert rc == 1
    assert out.strip() == "UNSAT"


def test_solve_missing_file(capsys, tmp_path):
    rc, _, err = run(capsys, "solve", "--graph", str(tmp_path / "nope.g6"))
    assert rc == 2 and "error" in err


def test_solve_bad_lists_dimension(capsys, tmp_path):
    gpath, _ = write_instance(tmp_path, cycle_graph(4))
    lpath = tmp_path / "short.json"
    lpath.write_text(json.dumps({"n": 2, "lists": [[1], [2]]}))
    rc, _, err = run(capsys, "solve", "--graph", gpath, "--lists", str(lpath))
    assert rc == 2 and "error" in err


def test_check_minimal_obstruction(capsys, tmp_path):
    g, l = gen_Hr(3)
    gpath, lpath = write_instance(tmp_path, g, l)
    rc, out, _ = run(capsys, "check", "--graph", gpath, "--lists", lpath)
    assert rc == 0
    assert "colorable\tFalse" in out and "minimal\tTrue" in out


def test_check_non_minimal(capsys, tmp_path):
    from tricrit.graphs import Graph, disjoint_union

    g = disjoint_union(complete_graph(4), Graph(1))
    gpath, _ = write_instance(tmp_path, g)
    rc, out, _ = run(capsys, "check", "--graph", gpath, "--format", "json")
    assert rc == 1
    data = json.loads(out)
    assert data["colorable"] is False and data["minimal"] is False
    assert data["non_critical"] == [4]
    assert data["extracted"]["vertices"] == [0, 1, 2, 3]


def test_critical(capsys, tmp_path):
    gpath, _ = write_instance(tmp_path, complete_graph(4))
    rc, out, _ = run(capsys, "critical", "--graph", gpath)
    assert rc == 0 and "four_vertex_critical\tTrue" in out
    gpath2, _ = write_instance(tmp_path, cycle_graph(5), stem="c5")
    rc, out, _ = run(capsys, "critical", "--graph", gpath2, "--format", "json")
    assert rc == 1
    assert json.loads(out) == {"four_vertex_critical": False}


def test_family_emit_circulant(capsys):
    rc, out, _ = run(capsys, "family", "--name", "Gr", "--r", "1")
    assert rc == 0
    assert out.strip() == write_graph6(complete_graph(4))


def test_family_emit_path_member_json(capsys):
    rc, out, _ = run(capsys, "family", "--name", "Hr", "--r", "2", "--format", "json")
    assert rc == 0
    data = json.loads(out)
    g, l = gen_Hr(2)
    assert data["graph6"] == write_graph6(g)
    assert ListSystem.from_sets(data["lists"]["lists"]) == l


def test_family_verify(capsys):
    rc, out, _ = run(capsys, "family", "--name", "Hr", "--r", "2", "--verify")
    assert rc == 0
    assert "minimal-obstruction\tPASS" in out
    rc, out, _ = run(capsys, "family", "--name", "Gr", "--r", "2", "--verify",
                     "--format", "json")
    assert rc == 0
    data = json.loads(out)
    assert data["passed"] is True and data["family"] == "Gr"


def test_family_errors(capsys):
    rc, _, err = run(capsys, "family", "--name", "Qr", "--r", "1")
    assert rc == 2 and "--name must be Gr or Hr" in err
    rc, _, err = run(capsys, "family", "--name", "Gr", "--r", "0")
    assert rc == 2


def test_classify_by_name(capsys):
    rc, out, _ = run(capsys, "classify", "--pattern", "2P3", "--format", "json")
    assert rc == 0
    data = json.loads(out)
    assert data["case"] == "equals-2P3"
    assert data["finite_vertex_critical"] is True
    assert data["finite_list_obstructions"] is False
    assert data["summary"].endswith(".")


def test_classify_by_graph6(capsys):
    rc, out, _ = run(capsys, "classify", "--pattern", write_graph6(cycle_graph(4)))
    assert rc == 0
    assert "case\tcontains-cycle" in out


def test_classify_garbage(capsys):
    rc, _, err = run(capsys, "classify", "--pattern", "\x01bogus")
    assert rc == 2
    assert "neither a recognized pattern name nor valid graph6" in err


def test_argparse_failures_exit_2(capsys):
    rc, _, _ = run(capsys, "no-such-command")
    assert rc == 2
    rc, _, _ = run(capsys, "enumerate", "--format", "yaml")
    assert rc == 2


def test_entry_point_installed():
    import shutil
    import subprocess

    exe = shutil.which("tricrit")
    if exe is None:
        pytest.skip("console script not on PATH")
    proc = subprocess.run(
        [exe, "classify", "--pattern", "P5"], capture_output=True, text=True
    )
    assert proc.returncode == 0
    assert "induced-subgraph-of-P6" in proc.stdout
