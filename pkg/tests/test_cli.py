import io
import random
import subprocess
import sys

import pytest

from normsat.cli import main, parse_assignment
from normsat.formula import emit_dimacs, is_normal, parse_dimacs
from normsat.generate import random_cnf
from normsat.truth import GeneralizedAssignment, eval_alg1, format_trace

ETA1 = "p cnf 3 2\n-1 -2 -3 0\n-1 2 3 0\n"


def run(argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    out = io.StringIO()
    code = main(argv, out)
    return code, out.getvalue()


@pytest.fixture
def eta1_file(tmp_path):
    p = tmp_path / "eta1.cnf"
    p.write_text(ETA1)
    return p


def test_parse_assignment():
    assert parse_assignment("1 -2 tail=pos") == GeneralizedAssignment.parse("1 -2", "pos")
    assert parse_assignment("1 tail=pos", "neg") == GeneralizedAssignment.parse("1", "neg")


def test_normalize_with_cert(tmp_path):
    src = tmp_path / "in.cnf"
    src.write_text("p cnf 3 2\n1 0\n1 2 3 0\n")
    dst, cert = tmp_path / "out.cnf", tmp_path / "cert.txt"
    code, text = run(["normalize", str(src), "-o", str(dst), "--cert", str(cert)])
    assert code == 0 and text == ""
    assert is_normal(parse_dimacs(dst.read_text()))
    assert cert.read_text() == "UnitExpanded pos=1 vars=4,5,6,7,8,9 clauses=9\n"


def test_eval_example(eta1_file, tmp_path):
    trace = tmp_path / "t.txt"
    code, text = run(["eval", str(eta1_file), "--assign", "1 -2 -3 4", "--tail", "neg", "--n", "4",
                      "--trace", str(trace)])
    assert code == 0 and text == "false\n"
    f = parse_dimacs(ETA1)
    expected = eval_alg1(GeneralizedAssignment.parse("1 -2 -3 4"), f, 4)[1]
    assert trace.read_text() == format_trace(expected)


def test_aggressive_and_compose(eta1_file):
    assert run(["aggressive", str(eta1_file), "--assign", "1 -2 -3 4", "--n", "4"]) == (0, "true\n")
    assert run(["compose", str(eta1_file), "--part", "1 tail=pos", "--part", "1 2"]) == (0, "true\n")


def test_distance():
    assert run(["distance", "--a", "1", "--b", "-1"]) == (0, "1/8\n")
    assert run(["distance", "--a", "1", "--tail", "pos", "--b", "-1"]) == (0, "1/8\n")
    assert run(["distance", "--a", "1", "--a", "-1", "--b", "1"]) == (0, "1/8\n")
    assert run(["distance", "--a", "tail=pos", "--b", "tail=neg"]) == (0, "2/9\n")


def test_equiv(eta1_file):
    code, text = run(["equiv", "--a", "1 -2", "--b", "-1 2", str(eta1_file)])
    assert code == 0 and text == "pi keep=-1 -2 tail=pos\ntrue\n"
    assert run(["--seed", "3", "equiv", "--a", "1", "--b", "1", "--samples", "5"])[1].endswith("true\n")
    assert run(["equiv", "--a", "1 -2", "--a", "-1 2", "--b", "-1 2", "--b", "1 -2"]) == (0, "true\n")


def test_solvers(monkeypatch):
    assert run(["brute"], ETA1, monkeypatch) == (0, "SAT -1 -2 -3\n")
    code, text = run(["solve2sat", "-"], "p cnf 2 4\n1 2 0\n-1 2 0\n1 -2 0\n-1 -2 0\n", monkeypatch)
    assert (code, text) == (0, "UNSAT\n")


def test_classify(eta1_file):
    assert run(["classify", str(eta1_file)]) == (0, "CLASS kind=Easy s=2 satisfiable=yes\n")


def test_cauchy_and_diagonal():
    code, text = run(["cauchy", "--upto", "2", "--positive", "3"])
    assert code == 0 and text == "1\t3/512\t7/72\n2\t0\t5/144\n"
    code, text = run(["--seed", "1", "diagonal", "--count", "4"])
    rows = text.splitlines()
    assert code == 0 and len(rows) == 4
    assert all(r.endswith("\tdistinct") for r in rows)


@pytest.mark.parametrize("seed", range(25))
def test_pipeline_never_over_budget(seed, tmp_path):
    f = random_cnf(random.Random(seed), 6, 18)
    src, mid, red = tmp_path / "a.cnf", tmp_path / "b.cnf", tmp_path / "c.cnf"
    src.write_text(emit_dimacs(f))
    assert run(["normalize", str(src), "-o", str(mid)])[0] == 0
    assert run(["reduce34", str(mid), "-o", str(red)])[0] == 0
    code, text = run(["classify", str(red)])
    assert code == 0
    assert "kind=Easy" in text or "kind=Hard4" in text


def test_exit_codes(tmp_path, eta1_file):
    assert run(["nonsense"])[0] == 2
    assert run(["eval", str(eta1_file)])[0] == 2
    assert run(["brute", str(tmp_path / "missing.cnf")])[0] == 2
    assert run(["compose", str(eta1_file)])[0] == 2
    assert run(["distance"])[0] == 2
    wide = tmp_path / "wide.cnf"
    wide.write_text("p cnf 4 1\n1 2 3 4 0\n")
    assert run(["normalize", str(wide)])[0] == 1
    assert run(["classify", str(wide)])[0] == 1
    bad = tmp_path / "bad.cnf"
    bad.write_text("p cnf 2 1\n3 0\n")
    assert run(["brute", str(bad)])[0] == 1


def test_module_entry_point(eta1_file):
    proc = subprocess.run([sys.executable, "-m", "normsat", "brute", str(eta1_file)],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "SAT -1 -2 -3\n"
    proc = subprocess.run([sys.executable, "-m", "normsat", "classify", "/nonexistent"],
                          capture_output=True, text=True)
    assert proc.returncode == 2 and proc.stderr.startswith("normsat: ")
