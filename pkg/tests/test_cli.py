import io
import json
import subprocess
import sys

import pytest

from gaussperfect.cli import main


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_check_json():
    code, out, _ = run("check", "2+i", "--format", "json")
    assert code == 0
    report = json.loads(out)
    assert report["normPerfect"] is True and report["perfectUnit"] is None
    assert report["normSigma"] == 10 and report["twoNorm"] == 10


def test_check_text_carries_same_fields():
    _, text, _ = run("check", "2+i")
    _, js, _ = run("check", "2+i", "--format", "json")
    pairs = dict(tok.split("=", 1) for tok in text.split())
    assert pairs == {k: json.dumps(v) if not isinstance(v, str) else v for k, v in json.loads(js).items()}


def test_factor():
    assert run("factor", "5") == (0, "-i * (1+2i)^1 * (2+i)^1\n", "")
    code, out, _ = run("factor", "5", "--format", "json")
    assert json.loads(out)["factors"] == [{"prime": "1+2i", "exponent": 1}, {"prime": "2+i", "exponent": 1}]


def test_sigma():
    assert run("sigma", "1") == (0, "1 (norm 1)\n", "")
    code, out, _ = run("sigma", "-1-2i", "--format", "json")
    assert json.loads(out) == {"subject": "-1-2i", "sigma": "2+2i", "normSigma": 8}


def test_negative_literals_parse_as_subjects():
    assert run("factor", "-3")[1] == "-1 * (3)^1\n"
    assert run("factor", "-i")[1] == "-i\n"


def test_search_acceptance_example():
    code, out, err = run("search", "--bound", "10", "--parity", "odd", "--format", "json")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 1
    rec = json.loads(lines[0])
    assert rec["subject"] == "2+i" and rec["report"]["normSigma"] == 10
    assert json.loads(err) == {"records": 1, "errors": 0, "normBound": 10, "shard": 0, "shards": 1}


def test_search_text_mode_one_line_per_record():
    code, out, err = run("search", "--bound", "10", "--parity", "odd")
    assert code == 0 and out.startswith("2+i norm=5 kind=norm_perfect_prime")
    assert "records=1" in err


def test_search_shards_concatenate_to_single_stream():
    _, single, _ = run("search", "--bound", "3000", "--kind", "both", "--format", "json")
    parts = [run("search", "--bound", "3000", "--kind", "both", "--format", "json", "--shards", "4", "--shard", str(j))[1] for j in range(4)]
    assert "".join(parts) == single


def test_primes_and_verify():
    code, out, err = run("primes", "--bound", "1000", "--format", "json")
    assert code == 0
    assert [json.loads(l)["subject"] for l in out.splitlines()] == ["2+i"]
    summary = json.loads(err)
    assert summary["solverSolutions"] == [[0, -1], [0, 1], [2, -1], [2, 1]]
    assert summary["solverPrimes"] == ["2-i", "2+i"]
    code, out, err = run("verify", "--bound", "1000", "--format", "json")
    assert code == 0 and json.loads(err)["failed"] == 0


@pytest.mark.parametrize(
    "argv, fragment",
    [
        (["factor", "2+x"], "'2+x'"),
        (["check", "0"], "zero"),
        (["search", "--bound", "10", "--shards", "2", "--shard", "2"], "shard index"),
        (["search", "--bound", "0"], "norm bound"),
        (["search"], "--bound"),
        (["frobnicate"], "invalid choice"),
    ],
)
def test_usage_errors(argv, fragment):
    code, out, err = run(*argv)
    assert code == 1 and out == ""
    assert fragment in err


def test_item_errors_exit_two(monkeypatch):
    import gaussperfect.search as search_mod

    monkeypatch.setattr(search_mod, "factor", lambda eta: 1 / 0)
    code, out, err = run("search", "--bound", "3", "--format", "json")
    assert code == 2
    assert json.loads(err)["errors"] == 2  # 1 and 1+i


def test_identical_invocations_identical_output():
    assert run("search", "--bound", "2000", "--kind", "both") == run("search", "--bound", "2000", "--kind", "both")


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "gaussperfect", "factor", "2"], capture_output=True, text=True, check=True
    )
    assert proc.stdout == "-i * (1+i)^2\n"
