"""Command-line interface: outputs, formats, exit codes."""

from __future__ import annotations

import json

import pytest

from braidkit.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestOneShotCommands:
    def test_nf(self, capsys):
        code, out, _ = run(capsys, "nf", "3: 1 2 1 2")
        assert code == 0
        assert out == "D^1 | (1 3 2)\n"

    def test_eq_true(self, capsys):
        code, out, _ = run(capsys, "eq", "3: 1 2 1", "3: 2 1 2")
        assert (code, out) == (0, "true\n")

    def test_eq_false(self, capsys):
        code, out, _ = run(capsys, "eq", "3: 1 2", "3: 2 1")
        assert (code, out) == (0, "false\n")

    def test_eq_strand_mismatch_is_usage_error(self, capsys):
        code, _, err = run(capsys, "eq", "3: 1", "4: 1")
        assert code == 2
        assert "error" in err

    def test_conj_positive(self, capsys):
        code, out, _ = run(capsys, "conj", "3: 1", "3: 2")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "conjugate"
        assert lines[1].startswith("3:")

    def test_conj_negative(self, capsys):
        code, out, _ = run(capsys, "conj", "3: 1", "3: -1")
        assert (code, out) == (0, "non-conjugate\n")

    def test_embed(self, capsys):
        code, out, _ = run(capsys, "embed", "2: 1 1 1", "4")
        assert (code, out) == (0, "4: 1 1 1\n")

    def test_embed_with_conjugator(self, capsys):
        code, out, _ = run(capsys, "embed", "2: 1", "3", "--conjugator", "3: 2")
        assert (code, out) == (0, "3: -2 1 2\n")

    def test_classify_periodic(self, capsys):
        assert run(capsys, "classify", "3: 1 2")[:2] == (0, "periodic\n")

    def test_classify_reducible(self, capsys):
        code, out, _ = run(capsys, "classify", "3: 1")
        assert code == 0
        assert out.startswith("reducible curve=1..2 power=1 conjugator=3:")

    def test_classify_pseudo_anosov(self, capsys):
        assert run(capsys, "classify", "3: 1 -2")[:2] == (0, "pseudo-anosov\n")

    def test_malformed_word(self, capsys):
        code, _, err = run(capsys, "nf", "3: x")
        assert code == 2
        assert "error" in err

    def test_backend_info(self, capsys):
        code, out, _ = run(capsys, "--backend-info")
        assert code == 0
        assert out.strip() in ("c", "python")

    def test_no_command(self, capsys):
        assert run(capsys, )[0] == 2


class TestSuiteCommands:
    VERIFY = (
        "verify-nonmerging",
        "--m", "2", "--n", "3", "--trials", "12", "--maxlen", "8", "--seed", "99",
    )

    def test_verify_text(self, capsys):
        code, out, _ = run(capsys, *self.VERIFY)
        assert code == 0
        assert "summary:" in out

    def test_verify_records_reproducible(self, capsys):
        code1, out1, _ = run(capsys, *self.VERIFY, "--format", "records")
        code2, out2, _ = run(capsys, *self.VERIFY, "--format", "records")
        assert code1 == code2 == 0
        assert out1 == out2
        assert out1.splitlines()[0].startswith("trial=0 mode=")

    def test_verify_json(self, capsys):
        code, out, _ = run(capsys, *self.VERIFY, "--format", "json")
        assert code == 0
        assert json.loads(out)["summary"]["inconsistent"] == 0

    def test_verify_general(self, capsys):
        code, out, _ = run(capsys, *self.VERIFY, "--general-conj-len", "4", "--format", "json")
        assert code == 0
        assert json.loads(out)["summary"]["general_mismatches"] == 0

    def test_verify_skip_exit_code(self, capsys):
        code, out, _ = run(
            capsys,
            "verify-nonmerging",
            "--m", "3", "--n", "4", "--trials", "8", "--maxlen", "8", "--seed", "5",
            "--conjugate-fraction", "1.0", "--max-sss", "1",
        )
        assert code == 3

    def test_boundary(self, capsys):
        code, out, _ = run(
            capsys, "boundary-suite", "--m", "2", "--n", "4", "--trials", "20", "--seed", "1"
        )
        assert code == 0
        assert "20/20" in out

    def test_boundary_json(self, capsys):
        code, out, _ = run(
            capsys,
            "boundary-suite",
            "--m", "2", "--n", "4", "--trials", "5", "--seed", "1",
            "--format", "json",
        )
        assert code == 0
        assert json.loads(out)["summary"]["boundary_passes"] == 5

    def test_bench_smoke(self, capsys):
        code, out, _ = run(
            capsys, "bench", "--n", "3", "--maxlen", "4", "--trials", "3", "--seed", "2"
        )
        assert code == 0
        lines = out.splitlines()
        assert lines[0].split()[:2] == ["op", "n"]
        assert any("conjugate-batch" in line for line in lines)


class TestUsageErrors:
    def test_unknown_command(self, capsys):
        with pytest.raises(SystemExit) as info:
            main(["frobnicate"])
        assert info.value.code == 2

    def test_missing_required_flag(self, capsys):
        with pytest.raises(SystemExit) as info:
            main(["verify-nonmerging", "--m", "2"])
        assert info.value.code == 2
