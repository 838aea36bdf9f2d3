import json
import subprocess
import sys
from pathlib import Path

import pytest

PKG = [sys.executable, "-m", "sturmwords"]


def run(*args, expect=0):
    proc = subprocess.run(
        PKG + list(args), capture_output=True, text=True
    )
    assert proc.returncode == expect, proc.stderr
    return proc.stdout


def test_christoffel_word():
    assert run("christoffel", "5", "2") == "aaabaab\n"
    assert run("christoffel", "1", "1") == "ab\n"
    assert run("christoffel", "5", "2", "--variant", "upper") == "baabaaa\n"


def test_christoffel_bwt():
    out = run("christoffel", "5", "3", "--bwt")
    rows = out.splitlines()
    assert len(rows) == 8
    assert rows[0] == "aabaabab"
    assert rows == sorted(rows)


def test_christoffel_rejects_noncoprime():
    proc = subprocess.run(PKG + ["christoffel", "4", "2"], capture_output=True, text=True)
    assert proc.returncode == 2
    assert "coprime" in proc.stderr


def test_mechanical_prefix():
    out = run("mechanical", "--slope", "log2_3_2", "-N", "36")
    assert out == "abababbababbabababbababbabababbababb\n"
    out = run("mechanical", "--slope", "2/7", "-N", "7")
    assert out == "aaabaab\n"


def test_varieties_word_table():
    out = run("varieties", "--word", "aaabab", "-m", "3", "-P", "1,2")
    lines = out.splitlines()
    assert lines[0].split() == ["profile", "multiplicity", "representative", "first_row"]
    mults = [line.split()[1] for line in lines[2:]]
    assert mults == ["1", "3", "1", "1"]


def test_varieties_slope_json():
    out = run("varieties", "--slope", "5/2", "-m", "4", "-P", "1,2,1", "-f", "json")
    doc = json.loads(out)
    assert doc["schema_version"] == 1
    assert doc["residues"] == [0, 1, 5, 6]
    assert [e["multiplicity"] for e in doc["entries"]] == [1, 4, 1, 1]
    assert [e["profile"] for e in doc["entries"]] == [
        [0, 0, 1], [0, 1, 0], [1, 0, 0], [1, 0, 1]]


def test_varieties_slope_fig3():
    out = run("varieties", "--slope", "5/3", "-m", "4", "-P", "1,1,1,1", "-f", "json")
    doc = json.loads(out)
    assert [e["multiplicity"] for e in doc["entries"]] == [2, 2, 1, 2, 1]


def test_varieties_m_mismatch():
    proc = subprocess.run(
        PKG + ["varieties", "--word", "aaabab", "-m", "4", "-P", "1,2"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 2


def test_frequencies_table():
    out = run("frequencies", "--slope", "log2_3_2", "-m", "4", "-P", "1,3", "-f", "json")
    doc = json.loads(out)
    assert [e["profile"] for e in doc["entries"]] == [[0, 2], [1, 1], [1, 2]]
    assert [e["members"] for e in doc["entries"]] == [
        ["abab", "abba"], ["baba"], ["babb", "bbab"]]
    freqs = [e["frequency"] for e in doc["entries"]]
    assert abs(freqs[0] - 0.415037499) < 1e-9
    assert abs(sum(freqs) - 1) < 1e-8
    assert doc["error_bound"] < 1e-15


def test_frequencies_letters():
    out = run("frequencies", "--slope", "log2_3_2", "-m", "1", "-P", "1", "-f", "json")
    doc = json.loads(out)
    by_profile = {tuple(e["profile"]): e["frequency"] for e in doc["entries"]}
    assert abs(by_profile[(0,)] - 0.415037499) < 1e-9
    assert abs(by_profile[(1,)] - 0.584962501) < 1e-9


def test_frequencies_empirical_deviation():
    out = run("frequencies", "--slope", "log2_3_2", "-m", "4", "-P", "1,3",
              "--empirical", "100000", "-f", "json")
    doc = json.loads(out)
    for entry in doc["entries"]:
        assert entry["deviation"] <= 1e-4


def test_frequencies_rational_slope_fails():
    proc = subprocess.run(
        PKG + ["frequencies", "--slope", "1/2", "-P", "1,3"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 2


def test_diagram_segments():
    out = run("diagram", "--slope", "log2_3_2", "-m", "4")
    assert "abab" in out and "bbab" in out
    assert out.count("(j=") == 5
    out = run("diagram", "--slope", "log2_3_2", "-m", "4", "-P", "1,3")
    assert "<0,2>" in out and "{abab,abba}" in out
    out = run("diagram", "--slope", "golden", "-m", "1")
    assert out.count("(j=") == 2


def test_check_exit_codes():
    out = run("check", "christoffel", "--max-n", "12", "--max-m", "5")
    assert all(line.startswith("PASS") for line in out.splitlines())


def test_check_all_scope_json():
    out = run("check", "--max-n", "10", "--max-m", "4", "--prefix-len", "400",
              "-f", "json")
    doc = json.loads(out)
    assert doc["ok"] is True
    names = [r["name"] for r in doc["results"]]
    assert any(n.startswith("oracle_equivalence") for n in names)
    assert any(n.startswith("lexorder") for n in names)


def test_determinism_byte_identical():
    a = run("frequencies", "--slope", "log2_3_2", "-m", "4", "-P", "1,3", "-f", "json")
    b = run("frequencies", "--slope", "log2_3_2", "-m", "4", "-P", "1,3", "-f", "json")
    assert a == b
    a = run("diagram", "--slope", "sqrt2m1", "-m", "6")
    b = run("diagram", "--slope", "sqrt2m1", "-m", "6")
    assert a == b


@pytest.mark.parametrize("args", [
    ["christoffel", "5", "2", "--bwt"],
    ["mechanical", "--slope", "sqrt2m1", "-N", "25"],
    ["varieties", "--slope", "5/2", "-P", "1,2,1"],
    ["frequencies", "--slope", "log2_3_2", "-P", "1,3"],
    ["diagram", "--slope", "golden", "-m", "3"],
])
def test_json_round_trips(args):
    out = run(*args, "-f", "json")
    doc = json.loads(out)
    assert json.dumps(doc, indent=2) + "\n" == out


def test_csv_output(tmp_path: Path):
    out_file = tmp_path / "varieties.csv"
    run("varieties", "--word", "aaabab", "-m", "3", "-P", "1,2",
        "-f", "csv", "--out", str(out_file))
    content = out_file.read_bytes().decode()
    lines = content.split("\r\n")
    assert lines[0] == "profile,multiplicity,representative,first_row"
    assert lines[1] == '"0,0",1,aaa,'
    assert lines[2] == '"0,1",3,aab,'


def test_check_failure_exits_1(monkeypatch, capsys):
    import sturmwords.cli as cli_mod
    from sturmwords.checks import CheckResult

    monkeypatch.setattr(
        cli_mod.checks, "run_christoffel_checks",
        lambda cfg: [CheckResult("fake", False, "forced failure", "w=ab")],
    )
    code = cli_mod.main(["check", "christoffel"])
    assert code == 1
    out = capsys.readouterr().out
    assert out.startswith("FAIL")
    assert "w=ab" in out


def test_internal_mismatch_exits_3(monkeypatch, capsys):
    import sturmwords.cli as cli_mod
    from sturmwords import classify_varieties as real_classify

    def broken_classify(fs, comp):
        table = real_classify(fs, comp)
        return type(table)(comp=table.comp, entries=table.entries[::-1],
                           total=table.total)

    monkeypatch.setattr(cli_mod, "classify_varieties", broken_classify)
    code = cli_mod.main(["varieties", "--slope", "5/2", "-P", "1,2,1"])
    assert code == 3
    assert "consistency" in capsys.readouterr().err


def test_word_validation():
    proc = subprocess.run(
        PKG + ["varieties", "--word", "abc", "-P", "1,2"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 2
