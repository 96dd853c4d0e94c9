import subprocess
import sys

import pytest

from hopdomlab.cli import main
from hopdomlab.graph import parse_graph, serialize_graph
from hopdomlab.solvers import Problem, solve_minimum
from hopdomlab.reductions import ReductionFamily, ReductionKind, reduce

from conftest import K


@pytest.fixture()
def k2_file(tmp_path):
    path = tmp_path / "k2.graph"
    path.write_text("2 1\n0 1\n")
    return str(path)


def test_solve_matches_module(k2_file, capsys):
    assert main(["solve", "--problem", "hd", "--in", k2_file]) == 0
    out = capsys.readouterr().out
    res = solve_minimum(parse_graph("2 1\n0 1\n"), Problem.HOP_DOM)
    assert out == f"optimum {res.optimum}\n" + " ".join(map(str, res.witness)) + "\n"


def test_solve_infeasible_exit(tmp_path, capsys):
    path = tmp_path / "k3.graph"
    path.write_text(serialize_graph(K(3)))
    assert main(["solve", "--problem", "2sd", "--in", str(path)]) == 1
    assert "INFEASIBLE" in capsys.readouterr().out


def test_check_exit_codes(k2_file, capsys):
    assert main(["check", "--problem", "vc", "--in", k2_file, "--set", "0"]) == 0
    assert main(["check", "--problem", "vc", "--in", k2_file, "--set", ""]) == 1


def test_reduce_outputs(tmp_path, k2_file, capsys):
    out = tmp_path / "g2.graph"
    roles = tmp_path / "roles.tsv"
    rc = main(["reduce", "--kind", "hd-dreg", "--d", "4", "--in", k2_file,
               "--out", str(out), "--roles", str(roles)])
    assert rc == 0
    assert capsys.readouterr().out == "vertices 11 edges 19 offset 1\n"
    red = reduce(ReductionKind(Problem.HOP_DOM, ReductionFamily.D_REGULAR, 4),
                 parse_graph("2 1\n0 1\n"))
    assert parse_graph(out.read_text()).adjacency == red.output.adjacency
    role_lines = roles.read_text().splitlines()
    assert role_lines[0] == "0\tu_0"
    assert len(role_lines) == red.output.n


def test_embed_then_layout(tmp_path, k2_file, capsys):
    emb = tmp_path / "k2.emb"
    assert main(["embed", "--in", k2_file, "--scale", "2", "--out", str(emb)]) == 0
    csv = tmp_path / "lay.csv"
    svg = tmp_path / "lay.svg"
    rc = main(["layout", "--problem", "hd", "--embedding", str(emb),
               "--out", str(csv), "--svg", str(svg)])
    assert rc == 0
    assert capsys.readouterr().out == "disks 28 offset 7\n"
    assert csv.read_text().splitlines()[0] == "id,role,cx_num,cx_den,cy_num,cy_den"
    assert svg.read_text().startswith("<svg")


def test_layout_notes_printed_form_discrepancy(k2_file, capsys):
    rc = main(["layout", "--problem", "2sd", "--in", k2_file, "--scale", "2"])
    assert rc == 0
    out = capsys.readouterr().out
    assert out.startswith("disks 38 offset 15")
    assert "printed closed form 23 disagrees" in out


def test_verify_exit_status(tmp_path, capsys):
    rc = main(["verify", "--corpus", "named:K2,P3", "--kinds", "hd-dreg",
               "--d", "4", "--budget", "120"])
    assert rc == 0
    assert "2 pass, 0 fail" in capsys.readouterr().out
    rc = main(["verify", "--corpus", "named:K2", "--kinds", "2sd-dreg", "--d", "4"])
    assert rc == 1  # the documented K2 falsification shows up as FAIL


def test_verify_report_file(tmp_path, capsys):
    out = tmp_path / "report.tsv"
    rc = main(["verify", "--corpus", "named:K2", "--kinds", "hd-claw",
               "--out", str(out)])
    assert rc == 0
    assert out.read_text().startswith("# hopdomlab-verify v1")


def test_usage_and_parse_errors(tmp_path, capsys):
    assert main(["solve", "--problem", "nope", "--in", "x"]) == 2
    bad = tmp_path / "bad.graph"
    bad.write_text("2 1\n1 0\n")
    assert main(["solve", "--problem", "hd", "--in", str(bad)]) == 2
    assert "line 2" in capsys.readouterr().err
    assert main(["reduce", "--kind", "hd-dreg", "--in", str(bad)]) == 2


def test_console_script_runs():
    proc = subprocess.run([sys.executable, "-m", "hopdomlab.cli", "--help"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "verify" in proc.stdout
