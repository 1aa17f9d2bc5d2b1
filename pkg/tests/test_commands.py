"""Tests for the command line: output text and exit codes."""

import json

import pytest

from weaving.commands import EXIT_FAILED, EXIT_OK, EXIT_TOO_LARGE, EXIT_USAGE
from weaving.main import build_parser, main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out.strip(), captured.err


class TestJones:
    def test_w3n(self, capsys):
        code, out, _ = run(capsys, "jones", "--family", "w3n", "--n", "2")
        assert code == EXIT_OK
        assert out == "t^-2 - t^-1 + 1 - t + t^2"

    def test_braid(self, capsys):
        code, out, _ = run(capsys, "jones", "--braid", "2; 1")
        assert code == EXIT_OK
        assert out == "1"

    def test_mirror(self, capsys):
        _, out, _ = run(capsys, "jones", "--family", "wp2", "--p", "2", "--mirror")
        assert out == "-t^(-5/2) - t^(-1/2)"

    def test_general_family(self, capsys):
        _, plain, _ = run(capsys, "jones", "--family", "w", "--p", "3", "--n", "2")
        assert plain == "t^-2 - t^-1 + 1 - t + t^2"

    def test_json(self, capsys):
        code, out, _ = run(capsys, "jones", "--family", "wp2", "--p", "2", "--format", "json")
        assert code == EXIT_OK
        record = json.loads(out)
        assert record["label"] == "W(2,2) = 2_1^2"
        assert record["quantities"]["jones"] == [[1, "-1"], [5, "-1"]]


class TestOtherCommands:
    def test_bracket(self, capsys):
        code, out, _ = run(capsys, "bracket", "--braid", "2; 1")
        assert code == EXIT_OK
        assert out == "bracket: -A^3\nwrithe: 1\njones: 1"

    def test_det(self, capsys):
        _, out, _ = run(capsys, "det", "--family", "w3n", "--n", "15")
        assert out == "1860496"

    def test_det_from_braid(self, capsys):
        _, out, _ = run(capsys, "det", "--braid", "3; 1 -2 1 -2")
        assert out == "5"

    def test_eval_at_omega(self, capsys):
        _, out, _ = run(capsys, "eval", "--family", "wp2", "--p", "6")
        assert out == "i"

    def test_eval_at_minus_one(self, capsys):
        _, out, _ = run(capsys, "eval", "--family", "w3n", "--n", "2", "--at", "minus-one")
        assert out == "5"

    def test_invariants(self, capsys):
        code, out, _ = run(capsys, "invariants", "--family", "w3n", "--n", "4")
        assert code == EXIT_OK
        lines = out.splitlines()
        assert lines[0] == "W(3,4) = 8_18"
        assert "  det: 45" in lines
        assert "  n_L: 2 (sign -)" in lines
        assert "  unknotting: 2 <= u <= 2" in lines

    def test_invariants_json(self, capsys):
        _, out, _ = run(capsys, "invariants", "--family", "wp2", "--p", "12", "--format", "json")
        report = json.loads(out)
        assert report["determinant"] == 13860
        assert report["n_L"] == 1
        assert report["v_at_w"]["pretty"] == "√3"

    def test_table(self, capsys):
        code, out, _ = run(capsys, "table", "--which", "values", "--format", "md")
        assert code == EXIT_OK
        assert "| W(14,2) |  | 80782 | i |" in out.splitlines()

    @pytest.mark.parametrize(
        ("which", "row"),
        [
            ("1", "| W(14,2) |  | 80782 | i |"),
            ("2", "| W(3,2) | 4_1 | t^-2 - t^-1 + 1 - t + t^2 |"),
        ],
    )
    def test_table_by_number(self, capsys, which, row):
        code, out, _ = run(capsys, "table", "--which", which, "--format", "md")
        assert code == EXIT_OK
        assert row in out.splitlines()

    def test_table_defaults_to_values(self, capsys):
        code, out, _ = run(capsys, "table", "--format", "md")
        assert code == EXIT_OK
        assert out.splitlines()[0] == "| knot | name | det | V(w) |"

    def test_verify(self, capsys):
        code, out, _ = run(capsys, "verify", "--max-n", "3", "--max-p", "4", "--budget", "4096")
        assert code == EXIT_OK
        assert all(line.endswith(": OK") for line in out.splitlines())

    def test_verify_fits_the_default_acceptance_budget(self, capsys):
        code, out, _ = run(capsys, "verify", "--max-n", "4", "--max-p", "4", "--budget", "1024")
        assert code == EXIT_OK
        lines = out.splitlines()
        assert len(lines) == 14
        assert any(line.startswith("Markov invariance:") for line in lines)
        assert any(line.startswith("reference values:") for line in lines)


class TestExitCodes:
    def test_parse_error(self, capsys):
        code, _, err = run(capsys, "jones", "--braid", "3; 1 x")
        assert code == EXIT_USAGE
        assert "error [PARSE_ERROR]" in err

    def test_domain_error(self, capsys):
        code, _, err = run(capsys, "jones", "--family", "wp2", "--p", "1")
        assert code == EXIT_USAGE
        assert "DOMAIN_ERROR" in err

    def test_missing_parameter(self, capsys):
        code, _, err = run(capsys, "jones", "--family", "w3n")
        assert code == EXIT_USAGE
        assert "--n" in err

    def test_both_sources(self, capsys):
        code, _, _ = run(capsys, "jones", "--family", "w3n", "--n", "2", "--braid", "2; 1")
        assert code == EXIT_USAGE

    def test_verify_domain(self, capsys):
        code, _, _ = run(capsys, "verify", "--max-n", "0")
        assert code == EXIT_USAGE

    def test_budget_exceeded(self, capsys):
        braid = "3; " + " ".join(["1 -2"] * 6)
        code, _, err = run(capsys, "jones", "--braid", braid, "--budget", "16")
        assert code == EXIT_TOO_LARGE
        assert "TOO_LARGE" in err

    def test_verify_budget_exceeded(self, capsys):
        code, _, _ = run(capsys, "verify", "--max-n", "2", "--max-p", "10", "--budget", "1024")
        assert code == EXIT_TOO_LARGE

    def test_unknown_table(self):
        with pytest.raises(SystemExit) as exc:
            main(["table", "--which", "3"])
        assert exc.value.code == EXIT_USAGE

    def test_exit_codes_are_distinct(self):
        assert len({EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_TOO_LARGE}) == 4


def test_parser_requires_a_command():
    with pytest.raises(SystemExit):
        build_parser().parse_args([])
