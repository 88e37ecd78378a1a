import io
import json

import pytest

from theta_park.cli import main
from theta_park.cli.app import InputError, parse_partition
from theta_park.cli.suites import SuiteResult, run_jobs, thread_count


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_parse_partition():
    assert parse_partition("3,1,1") == (3, 1, 1)
    assert parse_partition("") == ()
    for bad in ("1,2", "a", "0", "2,-1"):
        with pytest.raises(InputError):
            parse_partition(bad)


def test_expand_text(capsys):
    code, out, _ = run(capsys, "expand", "--kind", "e", "--lambda", "1,1", "--gamma", "2")
    assert code == 0
    assert out == "e_2: q^3 + q^2 + q + 1\ne_11: q^2 + 2*q + 3\n"


def test_expand_en(capsys):
    assert run(capsys, "expand", "--kind", "e", "--lambda", "3", "--gamma", "")[1] == "e_3: 1\n"


def test_expand_json(capsys):
    code, out, _ = run(capsys, "expand", "--kind", "s", "--lambda", "2,1", "--gamma", "1", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["diff"] == [] and data["pipeline"] == "both"
    assert {tuple(t["eta"]) for t in data["terms"]} == {(3,), (2, 1), (1, 1, 1)}


@pytest.mark.parametrize("pipeline", ["oracle", "combinatorial"])
def test_expand_single_pipeline(capsys, pipeline):
    code, out, _ = run(capsys, "expand", "--lambda", "2", "--gamma", "1", "--pipeline", pipeline)
    assert code == 0 and out.startswith("e_")


@pytest.mark.parametrize("argv", [
    ["expand", "--lambda", "1,2"],
    ["expand", "--lambda", ""],
    ["expand", "--kind", "x", "--lambda", "1"],
    ["nosuch"],
    ["verify", "nosuch"],
    ["render", "/nonexistent/file.json"],
])
def test_invalid_input_exits_1(capsys, argv):
    assert run(capsys, *argv)[0] == 1


def test_enumerate(capsys):
    assert run(capsys, "enumerate", "pf", "--lambda", "1,1", "--gamma", "2", "--count")[1] == "10\n"
    code, out, _ = run(capsys, "enumerate", "cct", "--mu", "1", "--max-size", "3")
    assert code == 0 and len(out.splitlines()) == 4
    code, out, _ = run(capsys, "enumerate", "decorated", "--n", "2", "--k", "1", "--m", "1", "--count")
    assert int(out) > 0


def test_enumerate_fixed_points_size_check(capsys):
    assert run(capsys, "enumerate", "fixed-points", "--lambda", "2", "--eta", "1")[0] == 1


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "xi_en", "--n-max", "3")
    assert code == 0 and out == "PASS xi_en: 3 checked, 0 failed\n"
    code, out, _ = run(capsys, "verify", "--n-max", "0", "--m-max", "0")
    assert code == 0 and all(line.startswith("PASS") for line in out.splitlines())


def test_verify_timings(capsys):
    code, out, _ = run(capsys, "verify", "involution", "--n-max", "2", "--m-max", "1", "--weight-max", "3",
                       "--timings")
    assert code == 0 and out.rstrip().endswith(" s)")


def test_conjecture(capsys):
    code, out, _ = run(capsys, "conjecture", "--lambda", "2,1", "--gamma", "1", "--format", "json")
    assert code == 0 and json.loads(out)["all_nonnegative"]
    code, out, _ = run(capsys, "conjecture", "--n-max", "2", "--m-max", "1")
    assert code == 0 and "NEGATIVE" not in out


def test_render_stdin(capsys, monkeypatch):
    obj = {"P": "NNNENEENNEENEEEEEEEE", "Q": "EEENENEEENEENENEENEN", "w": [1, 4, 5, 3, 1, 2, 5]}
    monkeypatch.setattr("sys.stdin", io.StringIO(json.dumps(obj)))
    code, out, _ = run(capsys, "render", "-")
    assert code == 0 and out.count("\\times") == 3
    monkeypatch.setattr("sys.stdin", io.StringIO("{not json"))
    assert run(capsys, "render")[0] == 1


def test_render_file_is_deterministic(capsys, tmp_path):
    f = tmp_path / "obj.json"
    f.write_text(json.dumps({"P": "NNEE", "Q": "ENEN"}), encoding="utf-8")
    a = run(capsys, "render", str(f), "--format", "svg")[1]
    b = run(capsys, "render", str(f), "--format", "svg")[1]
    assert a == b and a.startswith("<svg")


def test_thread_count(monkeypatch):
    monkeypatch.delenv("THETA_PARK_THREADS", raising=False)
    assert thread_count(3) == 3
    monkeypatch.setenv("THETA_PARK_THREADS", "2")
    assert thread_count(1) == 2
    monkeypatch.setenv("THETA_PARK_THREADS", "zero")
    assert thread_count(1) == 1


def test_run_jobs_keeps_order():
    assert run_jobs(abs, [-3, 2, -1], threads=2) == [3, 2, 1]


def test_suite_line():
    r = SuiteResult("x", 4, ["bad"], 1.5)
    assert not r.passed
    assert r.line() == "FAIL x: 4 checked, 1 failed"
    assert r.line(True) == "FAIL x: 4 checked, 1 failed (1.50 s)"
