import contextlib
import io
import subprocess
import sys

import pytest

from fareyseq import cli, core
from fareyseq.serialize import dumps_jsonl, read_jsonl


def run(argv, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    old = sys.stdin
    sys.stdin = io.StringIO(stdin)
    try:
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            try:
                code = cli.main(argv)
            except SystemExit as exc:
                code = exc.code
    finally:
        sys.stdin = old
    return code, out.getvalue(), err.getvalue()


def test_gen_order_2():
    code, out, _ = run(["gen", "--order", "2"])
    assert code == 0
    assert out == '{"order":2,"len":3}\n{"n":0,"d":1,"s":1}\n{"n":1,"d":2,"s":1}\n{"n":1,"d":1,"s":0}\n'


@pytest.mark.parametrize("fmt", ["triples-jsonl", "fractions", "csv", "report-text"])
def test_classic_flag_agrees(fmt):
    a = run(["gen", "--order", "9", "--format", fmt])
    b = run(["gen", "--order", "9", "--format", fmt, "--classic"])
    assert a == b and a[0] == 0


def test_formats():
    assert run(["gen", "--order", "2", "--format", "report-text"])[1] == "(0,1,1) || (1,2,1) || (1,1,0)\n"
    assert run(["gen", "--order", "3", "--format", "fractions"])[1] == "0/1\n1/3\n1/2\n2/3\n1/1\n"
    assert run(["gen", "--order", "2", "--format", "csv"])[1] == "n,d,s\n0,1,1\n1,2,1\n1,1,0\n"


def test_twins_and_primes():
    assert run(["twins", "--count", "1"])[1] == "3 5\n"
    assert run(["primes", "--count", "4"])[1] == "3 5 7 11\n"
    assert run(["primes", "--count", "4", "--strict"])[1] == "3 5 7 11\n"
    assert run(["twins", "--count", "2", "--paper-k", "20"])[1] == "Twin Pair #1: {3, 5}\nTwin Pair #2: {5, 7}\n"


def test_round_trip_small():
    for m in range(1, 30):
        _, text, _ = run(["gen", "--order", str(m)])
        code, stepped, _ = run(["step"], stdin=text)
        assert code == 0
        assert stepped == run(["gen", "--order", str(m + 1)])[1]


def test_step_from_file(tmp_path):
    path = tmp_path / "f4.jsonl"
    path.write_text(dumps_jsonl(core.generate(4)))
    code, out, _ = run(["step", "--input", str(path)])
    assert code == 0 and read_jsonl(out.splitlines()) == core.generate(5)


def test_step_rejects_bad_input():
    code, out, err = run(["step"], stdin='{"order":2,"len":2}\n{"n":0,"d":1,"s":1}\n{"n":1,"d":1,"s":0}\n')
    assert code == 2 and out == "" and "missing" in err
    code, out, err = run(["step"], stdin="not json\n")
    assert code == 2 and out == ""
    code, _, _ = run(["step"], stdin='{"order":2,"len":5}\n{"n":0,"d":1,"s":1}\n')
    assert code == 2


def test_usage_errors():
    assert run(["gen", "--order", "0"])[0] == 2
    assert run(["gen"])[0] == 2
    code, out, err = run(["cycles", "--denominator", "3", "--c", "4"])
    assert code == 2 and out == "" and err
    assert run(["gap", "--frac", "2/4", "--order", "5"])[0] == 2


def test_exit_codes_for_caps_and_truncation(monkeypatch):
    assert run(["twins", "--count", "10", "--paper-k", "1"])[0] == 4
    monkeypatch.setattr(core, "MAX_ORDER", 5)
    code, out, err = run(["gen", "--order", "6"])
    assert code == 3 and out == ""


def test_created_props_gap_index():
    assert run(["created", "--order", "2"])[1] == '{"n":1,"d":3,"s_f":2,"i_f":2}\n{"n":2,"d":3,"s_f":1,"i_f":4}\n'
    code, out, _ = run(["props", "--order", "6", "--only", "4", "7"])
    assert code == 0 and out.count('"holds":true') == 2
    assert run(["gap", "--frac", "1/3", "--order", "5"])[1] == "1/15\n"
    assert run(["index", "--frac", "1/2", "--order", "7"])[1] == "10\n"


def test_cycles_command():
    assert run(["cycles", "--denominator", "3", "--c", "1"])[1] == (
        "d=3 c=1 :: {m ≡ 0 (mod 3), m ≥ 3} ∪ {m ≡ 1 (mod 3), m ≥ 4}\n")
    assert run(["cycles", "--denominator", "3", "--c", "1", "--ems", "2"])[1] == "3 4 6 7\n"


def test_franel_command(tmp_path):
    assert run(["franel", "--max-order", "2"])[1] == "m,statistic,count\n1,0.25,2\n2,0.138888888888889,3\n"
    path = tmp_path / "f.csv"
    assert run(["franel", "--max-order", "20", "--out", str(path), "--verify"])[0] == 0
    assert len(path.read_text().splitlines()) == 21


def test_deterministic():
    assert run(["gen", "--order", "25"]) == run(["gen", "--order", "25"])
    assert run(["franel", "--max-order", "25"]) == run(["franel", "--max-order", "25"])


def test_selftest_small():
    code, out, _ = run(["selftest", "--max-order", "20"])
    assert code == 0 and "FAIL" not in out


def test_real_pipeline():
    gen = subprocess.run([sys.executable, "-m", "fareyseq", "gen", "--order", "7"],
                         capture_output=True, text=True, check=True)
    step = subprocess.run([sys.executable, "-m", "fareyseq", "step"], input=gen.stdout,
                          capture_output=True, text=True, check=True)
    nxt = subprocess.run([sys.executable, "-m", "fareyseq", "gen", "--order", "8"],
                         capture_output=True, text=True, check=True)
    assert step.stdout == nxt.stdout
    bad = subprocess.run([sys.executable, "-m", "fareyseq", "gen", "--order", "-3"],
                         capture_output=True, text=True)
    assert bad.returncode == 2 and bad.stdout == "" and bad.stderr
