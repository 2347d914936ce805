import json
import subprocess
import sys

import pytest

from girth7.cli import main
from girth7.families import a_graph, coxeter
from girth7.formats import parse_graph6, write_graph6
from girth7.symmetry import are_isomorphic


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def cox_file(tmp_path):
    p = tmp_path / "cox.g6"
    p.write_text(write_graph6(coxeter()) + "\n")
    return str(p)


def test_construct(capsys):
    code, out, _ = run(capsys, "construct", "--family", "a", "--n", "9")
    assert code == 0 and parse_graph6(out.strip()) == a_graph(9)
    code, out, _ = run(capsys, "construct", "--family", "coxeter", "--json")
    assert code == 0 and json.loads(out)["vertices"] == 28


def test_construct_errors(capsys):
    assert run(capsys, "construct", "--family", "a")[0] == 2
    assert run(capsys, "construct", "--family", "a", "--n", "5")[0] == 1
    assert run(capsys, "construct", "--family", "nope")[0] == 2
    assert run(capsys, "construct", "--family", "petersen", "--n", "10", "--k", "5")[0] == 1


def test_analyze_and_classify(capsys, cox_file):
    code, out, _ = run(capsys, "analyze", cox_file, "--json")
    info = json.loads(out)
    assert code == 0 and info["aut_order"] == 336 and info["signatures"] == [[4, 4, 4]] and info["arc_transitive"]
    code, out, _ = run(capsys, "classify", cox_file)
    assert code == 0 and out.startswith("case 3 Coxeter")


def test_classify_domain_error(capsys, tmp_path):
    p = tmp_path / "a8.g6"
    p.write_text(write_graph6(a_graph(8)))
    code, out, err = run(capsys, "classify", str(p))
    assert code == 1 and out == "" and "NotVertexTransitive" in err


def test_missing_file(capsys):
    assert run(capsys, "classify", "/nonexistent/file.g6")[0] == 1


def test_isomorphic(capsys, tmp_path, cox_file):
    other = tmp_path / "b.g6"
    other.write_text(write_graph6(a_graph(8)))
    code, out, _ = run(capsys, "isomorphic", cox_file, cox_file, "--json")
    assert code == 0 and json.loads(out)["isomorphic"]
    code, out, _ = run(capsys, "isomorphic", cox_file, str(other))
    assert code == 0 and out.strip() == "not isomorphic"


def test_truncate_recover_round_trip(capsys, tmp_path):
    code, g6, _ = run(capsys, "construct", "--family", "k77trunc")
    gfile = tmp_path / "t.g6"
    gfile.write_text(g6)
    code, out, _ = run(capsys, "recover", str(gfile))
    assert code == 0
    base = tmp_path / "base.json"
    base.write_text(out)
    code, out, _ = run(capsys, "truncate", str(base))
    assert code == 0 and are_isomorphic(parse_graph6(out.strip()), parse_graph6(g6.strip())) is not None


def test_map_commands(capsys, tmp_path):
    code, g6, _ = run(capsys, "construct", "--family", "klein")
    gfile = tmp_path / "k.g6"
    gfile.write_text(g6)
    mfile = tmp_path / "k.json"
    assert run(capsys, "map", "build", str(gfile), "--out", str(mfile))[0] == 0
    code, out, _ = run(capsys, "map", "euler", str(mfile))
    assert code == 0 and out.strip() == "-4"
    code, out, _ = run(capsys, "map", "check-rotary", str(mfile), "--json")
    assert json.loads(out) == {"rotary": True, "regular": True}


def test_map_build_rejects_coxeter(capsys, cox_file):
    code, _, err = run(capsys, "map", "build", cox_file)
    assert code == 1 and "NotTwoPerEdge" in err


def test_signatures(capsys):
    code, out, _ = run(capsys, "signatures", "--realizable", "--json")
    assert json.loads(out) == [[0, 1, 1], [2, 2, 2], [4, 4, 4], [4, 4, 6], [4, 5, 5]]
    code, out, _ = run(capsys, "signatures", "--candidates")
    assert out.splitlines()[-1] == "5 5 6"
    assert run(capsys, "signatures")[0] == 2


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "condition")
    assert code == 0 and all(line.startswith("PASS") for line in out.splitlines())
    code, out, _ = run(capsys, "verify", "lemma41", "--n", "9", "--json")
    assert code == 0 and json.loads(out)["passed"]
    assert run(capsys, "verify", "nosuch")[0] == 2


def test_out_file_and_stdin(tmp_path):
    out = tmp_path / "c.g6"
    proc = subprocess.run(
        [sys.executable, "-m", "girth7", "construct", "--family", "coxeter", "--out", str(out)],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and proc.stdout == ""
    proc = subprocess.run(
        [sys.executable, "-m", "girth7", "classify", "-", "--json"], input=out.read_text(), capture_output=True, text=True
    )
    assert proc.returncode == 0 and json.loads(proc.stdout)["case"] == "Coxeter"


def test_deterministic_output(capsys, cox_file):
    first = run(capsys, "classify", cox_file, "--json")
    second = run(capsys, "classify", cox_file, "--json")
    assert first == second
