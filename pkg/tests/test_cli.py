import csv
import io
import json

import pytest

from congrlab import cli
from congrlab.checks import REGISTRY, CheckDescriptor


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestVerify:
    def test_wolstenholme_jsonl(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "--checks", "wolst_h", "--p-min", "5", "--p-max", "97")
        assert code == 0
        lines = out.splitlines()
        assert len(lines) == 23  # primes in [5, 97]
        rows = [json.loads(line) for line in lines]
        assert [r["p"] for r in rows] == sorted(r["p"] for r in rows)
        for row in rows:
            assert list(row) == ["check", "p", "a", "modulus", "lhs", "rhs",
                                 "pass", "status"]
            assert row["check"] == "wolst_h"
            assert row["a"] is None
            assert 0 <= row["lhs"] < row["modulus"]
            assert 0 <= row["rhs"] < row["modulus"]
            assert row["pass"] is True
            assert row["status"] == "proven"

    def test_argument_checks_emit_a_as_fraction_text(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "--checks", "thm11_c", "--p-min", "5", "--p-max", "5",
            "--a-set", "1/2,2")
        assert code == 0
        rows = [json.loads(line) for line in out.splitlines()]
        assert [r["a"] for r in rows] == ["1/2", "2/1"]

    def test_csv_format(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "--checks", "wolst_h2", "--p-min", "5", "--p-max", "13",
            "--format", "csv")
        assert code == 0
        rows = list(csv.reader(io.StringIO(out)))
        assert rows[0] == ["check", "p", "a", "modulus", "lhs", "rhs", "pass", "status"]
        assert len(rows) == 1 + 4
        assert rows[1] == ["wolst_h2", "5", "", "5", "0", "0", "true", "proven"]

    def test_table_format(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "--checks", "rv_16", "--p-min", "5", "--p-max", "7",
            "--format", "table")
        assert code == 0
        assert "rv_16" in out and "pass" in out

    def test_out_file(self, capsys, tmp_path):
        target = tmp_path / "report.jsonl"
        code, out, _ = run_cli(
            capsys, "verify", "--checks", "wolst_h", "--p-min", "5", "--p-max", "13",
            "--out", str(target))
        assert code == 0
        assert out == ""
        assert len(target.read_text().splitlines()) == 4

    def test_deterministic_across_jobs(self, capsys):
        args = ("verify", "--checks", "thm11_a,rv_16", "--p-min", "5",
                "--p-max", "17", "--a-set", "1/2,1/3")
        _, serial, _ = run_cli(capsys, *args, "--jobs", "1")
        _, parallel, _ = run_cli(capsys, *args, "--jobs", "2")
        assert serial == parallel

    def test_jobs_env_fallback(self, capsys, monkeypatch):
        monkeypatch.setenv("CONGRLAB_JOBS", "2")
        code, out, _ = run_cli(
            capsys, "verify", "--checks", "wolst_h", "--p-min", "5", "--p-max", "11")
        assert code == 0
        assert len(out.splitlines()) == 3

    def test_recorded_mismatch_does_not_fail_the_run(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "--checks", "cor11_10_transcribed,cor11_10",
            "--p-min", "5", "--p-max", "13")
        assert code == 0
        rows = [json.loads(line) for line in out.splitlines()]
        recorded = [r for r in rows if r["check"] == "cor11_10_transcribed"]
        assert recorded and all(r["pass"] is False for r in recorded)
        assert all(r["status"] == "recorded" for r in recorded)

    def test_conjectures_are_opt_in(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "--checks", "all", "--p-min", "5", "--p-max", "5",
            "--a-set", "1/2")
        assert code == 0
        names = {json.loads(line)["check"] for line in out.splitlines()}
        assert "conj_121" not in names
        code, out, _ = run_cli(
            capsys, "verify", "--checks", "all", "--p-min", "5", "--p-max", "5",
            "--a-set", "1/2", "--include-conjectures")
        assert code == 0
        names = {json.loads(line)["check"] for line in out.splitlines()}
        assert "conj_121" in names

    def test_proven_failure_sets_exit_code(self, capsys, monkeypatch):
        broken = CheckDescriptor(
            name="wolst_h", exponent=2, evaluate=lambda p, a: (1, 2, True))
        monkeypatch.setitem(REGISTRY, "wolst_h", broken)
        code, out, _ = run_cli(
            capsys, "verify", "--checks", "wolst_h", "--p-min", "5", "--p-max", "7")
        assert code == 1
        assert all(json.loads(line)["pass"] is False for line in out.splitlines())

    @pytest.mark.parametrize("argv", [
        ("verify", "--p-min", "4", "--p-max", "3"),
        ("verify", "--p-min", "4", "--p-max", "97"),
        ("verify", "--p-min", "5", "--p-max", "20000"),
        ("verify", "--checks", "bogus", "--p-min", "5", "--p-max", "7"),
        ("verify", "--checks", "wolst_h", "--p-min", "5", "--p-max", "7",
         "--a-set", "x/y"),
        ("verify", "--jobs", "0", "--p-min", "5", "--p-max", "7"),
    ])
    def test_usage_errors(self, capsys, argv):
        code, _, err = run_cli(capsys, *argv)
        assert code == 2
        assert err

    def test_unknown_subcommand_is_usage_error(self, capsys):
        assert run_cli(capsys, "frobnicate")[0] == 2


class TestSearch:
    def test_empty_result(self, capsys):
        code, out, _ = run_cli(capsys, "search", "--target", "euler-quarter",
                               "--p-max", "100")
        assert code == 0
        assert out == ""

    def test_bad_target(self, capsys):
        assert run_cli(capsys, "search", "--target", "nope", "--p-max", "10")[0] == 2

    def test_bad_range(self, capsys):
        assert run_cli(capsys, "search", "--target", "euler-quarter",
                       "--p-max", "2")[0] == 2


class TestEval:
    def test_central_family(self, capsys):
        code, out, _ = run_cli(capsys, "eval", "--p", "5", "--exp", "2",
                               "--family", "cb2", "--weight", "h")
        assert code == 0
        assert out.strip() == "3 (mod 25)"

    def test_generic_family(self, capsys):
        code, out, _ = run_cli(capsys, "eval", "--p", "5", "--exp", "2",
                               "--family", "generic", "--a", "1/2", "--weight", "h")
        assert code == 0
        assert out.strip() == "3 (mod 25)"

    def test_generic_requires_a(self, capsys):
        assert run_cli(capsys, "eval", "--p", "5", "--exp", "1",
                       "--weight", "h")[0] == 2

    def test_central_rejects_a(self, capsys):
        assert run_cli(capsys, "eval", "--p", "5", "--exp", "1", "--family", "cb2",
                       "--a", "1/2", "--weight", "h")[0] == 2

    def test_composite_p(self, capsys):
        assert run_cli(capsys, "eval", "--p", "9", "--exp", "1",
                       "--family", "cb2", "--weight", "one")[0] == 2

    def test_exponent_out_of_range_for_family(self, capsys):
        assert run_cli(capsys, "eval", "--p", "5", "--exp", "4",
                       "--family", "cb2", "--weight", "one")[0] == 2
        assert run_cli(capsys, "eval", "--p", "5", "--exp", "5",
                       "--family", "generic", "--a", "1/2", "--weight", "one")[0] == 2

    def test_help_exits_cleanly(self, capsys):
        assert run_cli(capsys, "--help")[0] == 0
        assert run_cli(capsys, "verify", "--help")[0] == 0

    def test_non_integral_argument_reports_error(self, capsys):
        code, _, err = run_cli(capsys, "eval", "--p", "5", "--exp", "1",
                               "--family", "generic", "--a", "1/5", "--weight", "h")
        assert code == 2
        assert "error" in err


class TestIdentities:
    def test_small_cap(self, capsys):
        code, out, _ = run_cli(capsys, "identities", "--max-size", "4")
        assert code == 0
        assert out.count("ok") == 7


class TestOracleCommand:
    def test_agreement_at_half(self, capsys):
        code, out, _ = run_cli(capsys, "oracle", "--p", "5", "--exp", "2",
                               "--a", "1/2")
        assert code == 0
        assert out.count("ok") == 6
        assert "not p-integral" in out  # the 1/(2k+1) weight at a = 1/2

    def test_default_argument(self, capsys):
        code, out, _ = run_cli(capsys, "oracle", "--p", "7", "--exp", "1")
        assert code == 0
        assert "a = 1/2" in out


class TestSievePrimes:
    def test_clamps_to_five(self):
        assert cli.sieve_primes(2, 20) == [5, 7, 11, 13, 17, 19]
        assert cli.sieve_primes(5, 5) == [5]
        assert cli.sieve_primes(24, 28) == []


def test_module_entry_point_runs_in_subprocess():
    import os
    import pathlib
    import subprocess
    import sys

    import congrlab

    src_dir = pathlib.Path(congrlab.__file__).resolve().parents[1]
    env = dict(os.environ, PYTHONPATH=str(src_dir))
    proc = subprocess.run(
        [sys.executable, "-m", "congrlab.cli", "verify", "--checks", "rv_27",
         "--p-min", "5", "--p-max", "13"],
        capture_output=True, text=True, env=env, check=False)
    assert proc.returncode == 0
    assert len(proc.stdout.splitlines()) == 4
