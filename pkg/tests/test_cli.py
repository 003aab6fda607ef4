import json
import subprocess
import sys

import pytest
from click.testing import CliRunner

from gotzmann import cli
from gotzmann.cli import ResultRecord, dump_records, load_records, main


@pytest.fixture
def run():
    runner = CliRunner()

    def invoke(*args):
        return runner.invoke(main, list(args), catch_exceptions=False)

    return invoke


def test_tau_examples(run):
    r = run("tau", "--n", "3", "--r", "2", "--d", "4")
    assert r.exit_code == 0 and r.output == "6\n"
    r = run("tau", "--n", "4", "--r", "3", "--d", "2")
    assert r.output == "2\n"


def test_tau_all_methods(run):
    r = run("tau", "--n", "5", "--r", "2", "--d", "2", "--method", "all")
    assert r.exit_code == 0
    lines = r.output.splitlines()
    assert lines[-1] == "tau = 4 (all 5 methods agree)"
    assert sorted(lines[:-1]) == sorted(f"{m}: 4" for m in
                                        ["recursive", "delta_sum", "closed_form", "machinery", "oracle_search"])


@pytest.mark.parametrize("method", ["delta", "machinery", "oracle", "closed"])
def test_tau_single_methods(run, method):
    assert run("tau", "--n", "4", "--d", "3", "--method", method).output == "10\n"


def test_tau_usage_errors(run):
    assert run("tau", "--n", "3", "--r", "3", "--d", "1").exit_code == 2
    assert run("tau", "--n", "3", "--d", "-1").exit_code == 2
    assert run("tau", "--n", "3").exit_code == 2


def test_tau_cap_exit(run, monkeypatch):
    monkeypatch.setenv("GOTZMANN_CAP", "50")
    r = run("tau", "--n", "4", "--d", "3", "--method", "oracle")
    assert r.exit_code == 3


def test_tau_cache(run, tmp_path):
    cache = tmp_path / "cache.json"
    assert run("tau", "--n", "5", "--d", "3", "--cache", str(cache)).output == "56\n"
    data = json.loads(cache.read_text())
    assert data["5,2,3"]["tau"] == "56" and data["5,2,3"]["timestamp"]
    # a cache hit is served as stored
    data["5,2,3"]["tau"] = "57"
    cache.write_text(json.dumps(data))
    assert run("tau", "--n", "5", "--d", "3", "--cache", str(cache)).output == "57\n"


def test_table_csv(run):
    r = run("table", "--n-range", "3..5", "--d-range", "0..3", "--r", "2", "--format", "csv")
    assert r.exit_code == 0
    lines = r.output.splitlines()
    assert lines[0] == "n,r,d,tau"
    assert len(lines) == 13
    assert "5,2,2,4" in lines
    assert lines[1:5] == ["3,2,0,0", "3,2,1,0", "3,2,2,1", "3,2,3,3"]


def test_table_json_roundtrip(run):
    r = run("table", "--n-range", "3-4", "--d-range", "0..2", "--format", "json")
    recs = load_records(r.output)
    assert len(recs) == 6 and all(rec.timestamp is None for rec in recs)
    assert dump_records(recs) == r.output
    assert recs[-1] == ResultRecord(4, 2, 2, "2", ["delta_sum", "recursive"], None)
    assert recs[-1].value == 2


def test_table_stamp(run):
    r = run("table", "--n-range", "3", "--d-range", "2", "--format", "json", "--stamp")
    assert load_records(r.output)[0].timestamp


def test_table_jobs_byte_identical(run, tmp_path):
    outs = []
    for jobs in ("1", "2"):
        path = tmp_path / f"t{jobs}.json"
        r = run("table", "--n-range", "3..7", "--d-range", "0..12", "--format", "json",
                "--jobs", jobs, "--out", str(path))
        assert r.exit_code == 0
        outs.append(path.read_bytes())
    assert outs[0] == outs[1]
    assert b"\r\n" not in outs[0]


def test_table_usage_errors(run, tmp_path):
    assert run("table", "--n-range", "3..5", "--d-range", "3..1").exit_code == 2
    assert run("table", "--n-range", "x", "--d-range", "0..1").exit_code == 2
    assert run("table", "--n-range", "2..3", "--d-range", "0..1").exit_code == 2
    bad = tmp_path / "missing" / "out.csv"
    assert run("table", "--n-range", "3", "--d-range", "0", "--out", str(bad)).exit_code == 2


def test_table_cache_roundtrip(run, tmp_path):
    cache = tmp_path / "c.json"
    first = run("table", "--n-range", "3..4", "--d-range", "0..4", "--cache", str(cache)).output
    second = run("table", "--n-range", "3..4", "--d-range", "0..4", "--cache", str(cache)).output
    assert first == second
    assert len(json.loads(cache.read_text())) == 10


def test_check_suites(run):
    r = run("check", "--suite", "conjecture", "--max-n", "6")
    assert r.exit_code == 0 and r.output.endswith("conjecture: passed\n")
    assert run("check", "--suite", "formulas", "--max-n", "9", "--max-d", "30").exit_code == 0
    assert run("check", "--suite", "oracle", "--max-n", "4", "--max-d", "3").exit_code == 0
    assert run("check", "--suite", "machinery", "--max-n", "3", "--max-d", "3").exit_code == 0
    assert run("check", "--suite", "conjecture", "--max-d", "3").exit_code == 2


def test_check_failure_exit(run, monkeypatch):
    def broken(**_):
        yield ("always wrong", False, "by construction")

    monkeypatch.setitem(cli.checks.SUITES, "formulas", broken)
    r = run("check", "--suite", "formulas")
    assert r.exit_code == 1
    assert "FAIL  always wrong" in r.output


@pytest.mark.parametrize("n,degree,dominant,first", [
    (3, 2, "(1/2)*d^2", "tau_3(x_2^d) = C(d,2)"),
    (4, 4, "(1/8)*d^4", None),
    (6, 16, "2^-15*d^16", None),
])
def test_interpolate(run, n, degree, dominant, first):
    r = run("interpolate", "--n", str(n))
    lines = r.output.splitlines()
    assert r.exit_code == 0
    if first:
        assert lines[0] == first
    assert lines[1] == f"degree: {degree}"
    assert lines[2] == f"dominant: {dominant}"


def test_interpolate_usage(run):
    assert run("interpolate", "--n", "2").exit_code == 2


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "gotzmann", "tau", "--n", "4", "--d", "2"],
                         capture_output=True, text=True, check=True)
    assert out.stdout == "2\n"
