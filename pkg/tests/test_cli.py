import csv
import io
import json
import subprocess
import sys

import pytest

from yugong.cli import main, parse_k_list, UsageError


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_parse_k_list():
    assert parse_k_list("2..5") == [2, 3, 4, 5]
    assert parse_k_list("4,8,12") == [4, 8, 12]
    assert parse_k_list("3") == [3]
    assert parse_k_list("2..3,8") == [2, 3, 8]
    for bad in ("", "a", "5..2", "0"):
        with pytest.raises(UsageError):
            parse_k_list(bad)


def test_generate(capsys):
    code, out, _ = run(capsys, "generate", "--k", "2", "--format", "struct")
    rec = json.loads(out)["records"][0]
    assert code == 0 and rec["N"] == 60 and len(rec["ascii"]) == 60
    assert rec["modulus"] == "13"
    _, out2, _ = run(capsys, "generate", "--k", "2", "--delta", "-1", "--format", "struct")
    rec2 = json.loads(out2)["records"][0]
    assert rec2["N"] == 60 and rec2["ascii"] != rec["ascii"]


def test_generate_deterministic(capsys):
    a = run(capsys, "generate", "--k", "2", "--modulus", "0x13")
    b = run(capsys, "generate", "--k", "2", "--modulus", "0x13")
    assert a == b and a[0] == 0


def test_generate_to_file(tmp_path, capsys):
    out = tmp_path / "s.csv"
    assert main(["generate", "--k", "1..2", "--format", "csv", "--out", str(out)]) == 0
    rows = list(csv.DictReader(io.StringIO(out.read_text())))
    assert [r["N"] for r in rows] == ["12", "60"]
    assert rows[0]["in_theorem_scope"] == "False"


@pytest.mark.parametrize("argv", [
    ["generate", "--k", "2", "--modulus", "0x1f"],
    ["generate", "--k", "2", "--modulus", "zz"],
    ["generate", "--k", "2", "--modulus", "0x43"],
    ["verify", "--k", "1"],
    ["scan"],
    ["scan", "--conjecture", "--ks", "6"],
])
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and "error" in err


@pytest.mark.parametrize("argv", [
    ["generate"], ["verify", "--delta", "2"], ["bogus"], ["verify", "--nope"],
])
def test_argparse_errors_exit_2(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2


def test_tables_1(capsys):
    code, out, _ = run(capsys, "tables", "--which", "1")
    assert code == 0
    assert "1-20  -4,0,-4,4;0,0,-4,4;-4,0,-4,4;-4,0,0,4;-4,0,-4,-4;" in out
    assert "[1] PASS" in out


def test_tables_3_blocks(capsys):
    code, out, _ = run(capsys, "tables", "--which", "3", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and len(rows) == 1019
    assert all(r["pass"] == "True" for r in rows)
    ac = {int(r["tau"]): int(r["AC"]) for r in rows}
    assert [ac[t] for t in range(17, 21)] == [0, 0, -4, 4]


def test_tables_4(capsys):
    code, out, _ = run(capsys, "tables", "--which", "4", "--k-max", "5", "--format", "struct")
    recs = json.loads(out)["records"]
    assert code == 0
    assert [r["bound"] for r in recs] == [6, 55, 240, 1020, 4072]
    assert all(r["bound_matches"] and r["bound_holds"] for r in recs)


def test_tables_4_delta_minus_one_flags_violation(capsys):
    code, out, _ = run(capsys, "tables", "--which", "4", "--k-max", "2", "--delta", "-1")
    assert code == 1 and "BOUND-VIOLATED" in out


def test_verify_default(capsys):
    code, out, _ = run(capsys, "verify")
    assert code == 0 and "FAIL" not in out


def test_verify_congruences(capsys):
    code, out, _ = run(capsys, "verify", "--k", "3", "--only", "congruences", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0
    labels = {r["label"]: r for r in rows}
    assert labels["half-minus"]["pass"] == "True"
    assert int(labels["mod-15"]["actual"], 16) == 9


def test_verify_lemma2(capsys):
    code, out, _ = run(capsys, "verify", "--k", "2", "--only", "lemma2")
    assert code == 0 and "gcd=5" in out


def test_verify_size_cap(capsys):
    code, out, _ = run(capsys, "verify", "--k", "3", "--only", "lemma2", "--size-cap", "2")
    assert code == 3 and "SKIPPED" in out


def test_scan_primes(capsys):
    code, out, _ = run(capsys, "scan", "--primes", "--max-k", "24")
    assert code == 0 and out.strip().endswith(": 4, 24")
    _, out, _ = run(capsys, "scan", "--primes", "--max-k", "8")
    assert out.strip().endswith(": 4")


def test_scan_conjecture(capsys):
    code, out, _ = run(capsys, "scan", "--conjecture", "--ks", "4,8", "--format", "struct")
    recs = json.loads(out)["records"]
    assert code == 0 and [r["gcd"] for r in recs] == ["1", "1"]


def test_scan_conjecture_cap(capsys):
    code, out, _ = run(capsys, "scan", "--conjecture", "--ks", "4,20")
    assert code == 3 and "skipped" in out
    code, out, _ = run(capsys, "scan", "--conjecture", "--ks", "20", "--modular")
    assert code == 0 and "gcd=1" in out


def test_report_written_on_failure(tmp_path, capsys):
    out = tmp_path / "t4.json"
    code = main(["tables", "--which", "4", "--k-max", "2", "--delta", "-1",
                 "--format", "struct", "--out", str(out)])
    assert code == 1
    recs = json.loads(out.read_text())["records"]
    assert recs[1]["bound_holds"] is False


def test_console_script():
    proc = subprocess.run([sys.executable, "-m", "yugong.cli", "generate", "--k", "1"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "N=12" in proc.stdout
