import io
import json
from pathlib import Path

import pytest

from farsight import example_path
from farsight.cli import EXIT_INPUT, EXIT_OK, EXIT_USAGE, EXIT_VERIFY, compare, main
from farsight.oracle import gen_random_instance

GOLDEN = Path(__file__).parent / "golden"


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out)
    return code, out.getvalue()


def ex(name):
    return str(example_path(name))


def test_solve_gs_text():
    code, out = run("solve", "-a", "gs", "-i", ex("paper_ex1"), "--partial")
    assert code == EXIT_OK
    assert out.split() == ["b0-g0", "b1-g6", "b2-g2", "b3-g1", "b4-g3", "b5-g5", "b6-g4"]


@pytest.mark.parametrize(
    "argv,golden",
    [
        (("solve", "-a", "gs", "-i", ex("paper_ex1"), "--partial", "--format", "json"), "ex1_gs.json"),
        (
            ("solve", "-a", "farsighted-linear", "-i", ex("paper_ex2_truthful"), "--partial", "--format", "json"),
            "ex2_truthful_linear.json",
        ),
        (("compare", "-i", ex("paper_ex1"), "--partial", "--format", "json"), "ex1_compare.json"),
    ],
)
def test_golden_json(argv, golden):
    code, out = run(*argv)
    assert code == EXIT_OK
    assert json.loads(out) == json.loads((GOLDEN / golden).read_text())


def test_trace_output():
    code, out = run("solve", "-a", "gs", "-i", ex("paper_ex1"), "--partial", "--trace")
    assert code == EXIT_OK
    assert out.splitlines()[-1].startswith("b0→g0(b0)|b1→g1(b1)|")


def test_audit_flag():
    code, _ = run("solve", "-a", "farsighted-linear", "--audit", "-i", ex("paper_ex1"), "--partial")
    assert code == EXIT_OK


@pytest.mark.parametrize(
    "argv",
    [
        ("solve", "-a", "ttc", "--trace"),
        ("solve", "-a", "gs", "--audit"),
        ("solve", "-a", "nope"),
        ("solve",),
        ("bench", "-a", "gs", "--n", "4", "--repeats", "1"),
    ],
)
def test_usage_errors(argv, capsys):
    try:
        code = main(list(argv), io.StringIO())
    except SystemExit as e:
        code = e.code
    assert code == EXIT_USAGE


def test_n0_is_input_error(tmp_path, capsys):
    f = tmp_path / "zero.txt"
    f.write_text("0\n")
    code, _ = run("solve", "-a", "gs", "-i", str(f))
    assert code == EXIT_INPUT
    assert "ShapeMismatch" in capsys.readouterr().err


def test_partial_without_flag(capsys):
    code, _ = run("solve", "-a", "gs", "-i", ex("paper_ex1"))
    assert code == EXIT_INPUT
    assert "line" in capsys.readouterr().err


def test_missing_file(capsys):
    code, _ = run("solve", "-a", "gs", "-i", "/nonexistent/file.txt")
    assert code == EXIT_INPUT


def test_compare_n1(tmp_path):
    f = tmp_path / "one.txt"
    f.write_text("1\n0\n0\n")
    code, out = run("compare", "-i", str(f), "--format", "json")
    report = json.loads(out)
    assert code == EXIT_OK
    assert report["ttc_divergent_boys"] == [] and report["ref_linear_agree"]


def test_compare_random_seed7():
    report = compare(gen_random_instance(6, 7))
    assert report["ref_linear_agree"]
    for row in report["boys"]:
        assert row["farsighted-ref"] == row["farsighted-linear"]


def test_compare_text_flags():
    code, out = run("compare", "-i", ex("paper_ex1"), "--partial")
    flagged = [line.split()[0] for line in out.splitlines() if "ttc!=farsighted" in line]
    assert flagged == ["b3", "b5", "b6"]


def test_gen_uses_env_seed(monkeypatch):
    monkeypatch.setenv("FARSIGHT_SEED", "42")
    _, a = run("gen", "--n", "3")
    _, b = run("gen", "--n", "3", "--seed", "42")
    assert a == b
    assert a.splitlines()[1:3] == ["3", "2 0 1"]


def test_verify_ok(tmp_path):
    out_file = tmp_path / "report.json"
    code, out = run("verify", "--count", "50", "--seed", "3", "--out", str(out_file))
    assert code == EXIT_OK
    assert json.loads(out_file.read_text())["passed"]


def test_verify_failure_exit(monkeypatch):
    from farsight import cli, oracle

    report = oracle.SweepReport(instances=1, failures=[{"check": "x"}])
    monkeypatch.setattr(cli, "verify_sweep", lambda *a: report)
    code, out = run("verify", "--count", "1")
    assert code == EXIT_VERIFY
    assert json.loads(out)["failures"] == [{"check": "x"}]


def test_bench_csv(tmp_path):
    f = tmp_path / "b.csv"
    code, _ = run("bench", "-a", "ttc", "--n", "2", "4", "--repeats", "3", "--out", str(f))
    assert code == EXIT_OK
    assert f.read_text().splitlines()[0] == "algorithm,n,median_ns,ratio_to_prev"
