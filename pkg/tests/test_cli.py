import json
import subprocess
import sys

import pytest

from lexparse.cli import main
from lexparse.fibwords import edited_fib, fibonacci
from lexparse.parse import decode, from_dict, from_lines


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_parse_worked_example(capsys):
    code, out, _ = run_cli(capsys, "parse", "--text", "ababbaaba", "--order", "ab")
    assert code == 0
    assert "v=6" in out
    assert "aba" in out


def test_parse_generated_both_orders(capsys):
    code, out, _ = run_cli(capsys, "parse", "--gen", "fib:8", "--order", "ab")
    assert code == 0 and "v=4" in out
    code, out, _ = run_cli(capsys, "parse", "--gen", "fib:8", "--order", "ba")
    assert code == 0 and "v=5" in out


def test_parse_json_round_trip(capsys):
    code, out, _ = run_cli(capsys, "parse", "--gen", "T:10", "--format", "json")
    assert code == 0
    obj = json.loads(out)
    assert obj["v"] == 8
    assert decode(from_dict(obj)) == edited_fib(10)


def test_parse_lexparse_format_round_trip(capsys):
    code, out, _ = run_cli(capsys, "parse", "--gen", "fib:9", "--format", "lexparse")
    assert code == 0
    assert out.startswith("LEXPARSE 34 ab")
    assert decode(from_lines(out)) == fibonacci(9)


def test_parse_csv_deterministic(capsys):
    code, first, _ = run_cli(capsys, "parse", "--gen", "fib:9", "--format", "csv")
    assert code == 0
    assert first.splitlines()[0] == "index,start,length,kind,source"
    code, second, _ = run_cli(capsys, "parse", "--gen", "fib:9", "--format", "csv")
    assert first == second


def test_parse_rejects_uncovered_ordering(capsys):
    code, _, err = run_cli(capsys, "parse", "--text", "abc", "--order", "ab")
    assert code == 2
    assert "outside the ordering" in err


def test_parse_rejects_bad_ordering_spec(capsys):
    code, _, err = run_cli(capsys, "parse", "--text", "ab", "--order", "aab")
    assert code == 2
    assert "duplicate" in err


def test_parse_file_binary_safe(capsys, tmp_path):
    path = tmp_path / "blob.bin"
    path.write_bytes(b"\x00\x01\x00\x01\x01\x00")
    code, out, _ = run_cli(capsys, "parse", "--file", str(path))
    assert code == 0
    assert "n=6" in out


def test_gen(capsys):
    code, out, _ = run_cli(capsys, "gen", "--gen", "fib:5")
    assert code == 0
    assert out == "abaab\n"


def test_gen_cap_via_env(capsys, monkeypatch):
    monkeypatch.setenv("LEXPARSE_MAX_N", "10")
    code, _, err = run_cli(capsys, "gen", "--gen", "fib:12")
    assert code == 2
    assert "cap" in err
    monkeypatch.setenv("LEXPARSE_MAX_N", "junk")
    code, _, err = run_cli(capsys, "gen", "--gen", "fib:5")
    assert code == 2


def test_scan_edit_fib12(capsys):
    code, out, _ = run_cli(capsys, "scan", "edit", "--gen", "fib:12", "--kind", "sub")
    assert code == 0
    assert "max ratio = 5/2" in out
    assert "v(base) = 4" in out


def test_scan_edit_rows_csv(capsys):
    code, out, _ = run_cli(
        capsys, "scan", "edit", "--gen", "fib:8", "--kind", "del",
        "--rows", "--format", "csv",
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "kind,position,old,new,v_base,v_edited,ratio"
    assert len(lines) == 1 + 21  # one row per deletion position


def test_scan_edit_requires_kind(capsys):
    code, _, err = run_cli(capsys, "scan", "edit", "--gen", "fib:8")
    assert code == 2
    assert "--kind" in err


def test_scan_edit_del_single_symbol(capsys):
    code, _, err = run_cli(capsys, "scan", "edit", "--text", "a", "--kind", "del")
    assert code == 2


def test_scan_ao_fib13(capsys):
    code, out, _ = run_cli(capsys, "scan", "ao", "--gen", "fib:13")
    assert code == 0
    assert "ab: v=8" in out
    assert "ba: v=4" in out
    assert "ratio = 2/1" in out


def test_scan_ao_csv(capsys):
    code, out, _ = run_cli(capsys, "scan", "ao", "--gen", "fib:13", "--format", "csv")
    assert code == 0
    assert out.splitlines()[0] == "ordering,v"
    assert "ab,8" in out and "ba,4" in out


def test_scan_ao_rejects_wide_alphabet(capsys):
    code, _, err = run_cli(capsys, "scan", "ao", "--text", "abcdefghi")
    assert code == 2
    assert "distinct symbols" in err


def test_growth_csv(capsys):
    code, out, _ = run_cli(capsys, "growth", "--k", "6..7")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "k,n,v_base,witness_v,ratio"
    assert lines[1] == "6,144,4,10,5/2"
    assert lines[2] == "7,377,4,12,3/1"


def test_growth_bad_range(capsys):
    code, _, err = run_cli(capsys, "growth", "--k", "8..6")
    assert code == 2


def test_verify_passes(capsys):
    code, out, _ = run_cli(capsys, "verify", "--k", "6..7")
    assert code == 0
    assert "FAIL" not in out
    assert "OK:" in out


def test_verify_single_group(capsys):
    code, out, _ = run_cli(capsys, "verify", "--k", "6..6", "--only", "lyndon")
    assert code == 0
    assert all(
        line.split()[1].startswith("lyndon/")
        for line in out.splitlines()
        if line.startswith("PASS")
    )


def test_verify_below_range_reports_only(capsys):
    code, out, _ = run_cli(capsys, "verify", "--k", "5..5")
    assert code == 0
    assert "REPORT" in out


def test_verify_bad_group(capsys):
    # argparse rejects the choice itself, with the usage-error exit code
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--k", "6..6", "--only", "nope"])
    assert exc.value.code == 2
    capsys.readouterr()


def test_decode_subcommand(capsys, tmp_path):
    path = tmp_path / "parse.txt"
    code, out, _ = run_cli(capsys, "parse", "--gen", "fib:10", "--format", "lexparse",
                           "--out", str(path))
    assert code == 0
    code, out, _ = run_cli(capsys, "decode", "--file", str(path))
    assert code == 0
    assert out == fibonacci(10) + "\n"


def test_decode_json_payload(capsys, tmp_path):
    path = tmp_path / "parse.json"
    run_cli(capsys, "parse", "--text", "ababbaaba", "--format", "json", "--out", str(path))
    code, out, _ = run_cli(capsys, "decode", "--file", str(path))
    assert code == 0
    assert out == "ababbaaba\n"


def test_decode_rejects_junk(capsys, tmp_path):
    path = tmp_path / "junk.txt"
    path.write_text("not a parse\n")
    code, _, err = run_cli(capsys, "decode", "--file", str(path))
    assert code == 2


def test_out_writes_file(capsys, tmp_path):
    path = tmp_path / "word.txt"
    code, _, _ = run_cli(capsys, "gen", "--gen", "fib:7", "--out", str(path))
    assert code == 0
    assert path.read_text(encoding="latin-1") == fibonacci(7)


def test_module_invocation():
    proc = subprocess.run(
        [sys.executable, "-m", "lexparse", "gen", "--gen", "fib:5"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == "abaab\n"


def test_mutually_exclusive_inputs(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["parse", "--text", "ab", "--gen", "fib:5"])
    assert exc.value.code == 2
    capsys.readouterr()
