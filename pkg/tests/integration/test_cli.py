"""
Integration tests for the CLI.
"""

import io
import json
import logging
from unittest.mock import patch

import pytest

from pnilrep.cli import EXIT_ERROR, EXIT_SUCCESS, LOG_HANDLER_NAME, main, parse_rational, parse_vectors


def run(args):
    """Run the CLI and return its exit code and stdout."""
    with patch("sys.stdout", new_callable=io.StringIO) as stdout, patch("sys.stderr", new_callable=io.StringIO):
        code = main(args)
    return code, stdout.getvalue()


class TestDual:
    def test_console(self):
        """Test the dual ball of G^{5,2} passes its count."""
        code, output = run(["dual", "-g", "g52", "-p", "3", "-n", "1"])
        assert code == EXIT_SUCCESS
        assert "Σ d² = 243, expected 243" in output

    def test_golden(self, golden_h1):
        """Test the H₁ label table against the stored report."""
        code, output = run(["dual", "-g", "h1", "-p", "3", "-n", "1", "-f", "json"])
        assert code == EXIT_SUCCESS
        data = json.loads(output)
        golden = json.loads(golden_h1.read_text())
        for key in ("schema", "group", "prime", "level", "label_count", "sum_d_squared", "expected", "branch_counts", "pass"):
            assert data[key] == golden[key], key
        by_xi = lambda rows: sorted(rows, key=lambda r: r["xi"])
        assert by_xi(data["labels"]) == by_xi(golden["labels"])
        assert data["labels"][0]["xi"] == "1,1,1"

    def test_prime_too_small(self):
        """Test G^{5,4} at p = 3 is an error."""
        code, _ = run(["dual", "-g", "g54", "-p", "3"])
        assert code == EXIT_ERROR

    def test_unknown_group(self):
        """Test an unknown group is an error."""
        code, _ = run(["dual", "-g", "g99"])
        assert code == EXIT_ERROR

    def test_csv(self):
        """Test the CSV label table."""
        code, output = run(["dual", "-f", "csv"])
        assert code == EXIT_SUCCESS
        lines = output.strip().splitlines()
        assert lines[0] == "xi,branch,dim,level"
        assert len(lines) == 12


class TestVerify:
    def test_spectrum_suite(self):
        """Test the spectrum suite on H₁ passes."""
        code, output = run(["verify", "--suite", "spectrum", "-g", "h1", "--samples", "2", "-f", "json"])
        assert code == EXIT_SUCCESS
        data = json.loads(output)
        assert data["pass"] is True
        assert data["notes"]["spectrum_labels"] == "11"

    def test_seed_reproducible(self):
        """Test the same seed reproduces the report."""
        args = ["verify", "--suite", "characters", "-g", "b4", "--samples", "3", "-s", "5", "-f", "json"]
        assert run(args) == run(args)

    def test_threads_environment(self, monkeypatch):
        """Test PNILREP_THREADS is accepted."""
        monkeypatch.setenv("PNILREP_THREADS", "2")
        code, _ = run(["verify", "--suite", "reps", "--samples", "2"])
        assert code == EXIT_SUCCESS

    def test_bad_threads_environment(self, monkeypatch):
        """Test a malformed PNILREP_THREADS is an error."""
        monkeypatch.setenv("PNILREP_THREADS", "lots")
        code, _ = run(["verify", "--suite", "reps"])
        assert code == EXIT_ERROR

    def test_unknown_suite(self):
        """Test argparse rejects unknown suites."""
        with pytest.raises(SystemExit) as exc:
            run(["verify", "--suite", "everything"])
        assert exc.value.code == 2


class TestSpectrum:
    def test_h1(self):
        """Test the H₁ table shows the closed-form value 4.5."""
        code, output = run(["spectrum", "-g", "h1", "-p", "3", "-n", "1"])
        assert code == EXIT_SUCCESS
        assert "4.5" in output

    def test_csv(self):
        """Test the CSV table has the spectrum columns."""
        code, output = run(["spectrum", "-g", "zp", "--dim", "2", "-f", "csv"])
        assert code == EXIT_SUCCESS
        assert output.splitlines()[0] == "label,tau,h_prime,closed_form,numeric,diff,bound_ok"

    @pytest.mark.slow
    def test_g56_bound(self):
        """Test G^{5,6} rows carry the lower-bound verdict."""
        code, output = run(["spectrum", "-g", "g56", "-p", "5", "-n", "1", "-f", "json"])
        assert code == EXIT_SUCCESS
        data = json.loads(output)
        rows = [row for label in data["labels"] for row in label["rows"]]
        assert rows
        assert all(row["bound_ok"] is True for row in rows)

    def test_directions(self):
        """Test custom directions that span the stratum."""
        code, output = run(["spectrum", "-g", "h1", "--directions", "0,1;1,0"])
        assert code == EXIT_SUCCESS
        assert "4.5" in output

    def test_directions_not_spanning(self):
        """Test directions that miss the stratum are an error."""
        code, _ = run(["spectrum", "-g", "h1", "--directions", "1,0;2,0"])
        assert code == EXIT_ERROR


class TestGaussian:
    def test_closed_form(self):
        """Test ∫_{ℤ₅} e(u²/25) du has modulus 1/5."""
        code, output = run(["gaussian", "-p", "5", "--a", "1/25", "--samples", "0", "-f", "json"])
        assert code == EXIT_SUCCESS
        data = json.loads(output)
        assert abs(complex(*data["closed_form"])) == pytest.approx(0.2)
        assert data["oracle"] is None

    def test_oracle(self):
        """Test the oracle agrees with the closed form."""
        code, output = run(["gaussian", "-p", "5", "--a", "1/5^2", "--b", "1/5", "--oracle", "-f", "json"])
        assert code == EXIT_SUCCESS
        data = json.loads(output)
        assert data["abs_diff"] < 1e-9

    def test_bad_rational(self):
        """Test a malformed coefficient is an error."""
        code, _ = run(["gaussian", "--a", "one third"])
        assert code == EXIT_ERROR


class TestPlancherel:
    def test_b4(self):
        """Test Plancherel on B₄ with a fixed seed."""
        code, output = run(["plancherel", "-g", "b4", "--seed", "42", "-f", "json"])
        assert code == EXIT_SUCCESS
        data = json.loads(output)
        assert data["seed"] == 42
        assert data["l2_norm_squared"] == pytest.approx(data["plancherel_sum"])


class TestRep:
    def test_shift(self):
        """Test π(1,0,0) of the H₁ label λ = 1/3 is a cyclic shift."""
        code, output = run(["rep", "--xi", "1,1,1/3", "--x", "1,0,0", "-f", "json"])
        assert code == EXIT_SUCCESS
        data = json.loads(output)
        assert data["dim"] == 3
        assert data["matrix"][0][2] == pytest.approx([1.0, 0.0])
        assert data["matrix"][0][0] == pytest.approx([0.0, 0.0])

    def test_invalid_label(self):
        """Test a point outside every branch is an error."""
        code, _ = run(["rep", "--xi", "1/3,1,1/3", "--x", "1,0,0"])
        assert code == EXIT_ERROR

    def test_wrong_arity(self):
        """Test elements need one residue per coordinate."""
        code, _ = run(["rep", "--xi", "1,1,1/3", "--x", "1,0"])
        assert code == EXIT_ERROR


class TestOptions:
    def test_output_file(self, tmp_path):
        """Test -o writes the report to a file."""
        output_file = tmp_path / "dual.json"
        code, output = run(["dual", "-f", "json", "-o", str(output_file)])
        assert code == EXIT_SUCCESS
        assert output == ""
        assert json.loads(output_file.read_text())["label_count"] == 11

    def test_console_output_file(self, tmp_path):
        """Test console reports can be written to a file."""
        output_file = tmp_path / "dual.txt"
        code, _ = run(["dual", "-o", str(output_file)])
        assert code == EXIT_SUCCESS
        assert "Dual ball B(1) of h1" in output_file.read_text()

    def test_config_file(self, tmp_path):
        """Test settings come from --config and flags override them."""
        path = tmp_path / "run.yaml"
        path.write_text("group: b4\nprime: 3\nformat: json\n")
        code, output = run(["dual", "-c", str(path)])
        assert code == EXIT_SUCCESS
        assert json.loads(output)["group"] == "b4"
        code, output = run(["dual", "-c", str(path), "-g", "h1"])
        assert json.loads(output)["group"] == "h1"

    def test_missing_config(self, tmp_path):
        """Test a missing config file is an error."""
        code, _ = run(["dual", "-c", str(tmp_path / "missing.yaml")])
        assert code == EXIT_ERROR

    def test_version(self):
        """Test --version exits cleanly."""
        with pytest.raises(SystemExit) as exc:
            run(["--version"])
        assert exc.value.code == 0

    def test_no_command(self):
        """Test a subcommand is required."""
        with pytest.raises(SystemExit) as exc:
            run([])
        assert exc.value.code == 2

    def test_repeated_runs_keep_one_handler(self):
        """Test calling main twice leaves a single pnilrep handler on the root logger."""
        run(["dual", "-v"])
        run(["dual"])
        handlers = [h for h in logging.getLogger().handlers if h.get_name() == LOG_HANDLER_NAME]
        assert len(handlers) == 1
        assert handlers[0].level == logging.WARNING


class TestParsers:
    def test_rational(self):
        """Test rational forms accepted on the command line."""
        assert str(parse_rational("2/3^2", 3)) == "2/9"
        assert str(parse_rational("-1/9", 3)) == "-1/9"
        assert str(parse_rational("0.5", 3)) == "1/2"
        with pytest.raises(ValueError):
            parse_rational("1/5^2", 3)

    def test_vectors(self):
        """Test direction lists."""
        assert parse_vectors("1,0,0;0,1,0") == [(1, 0, 0), (0, 1, 0)]
        with pytest.raises(ValueError):
            parse_vectors("1,a")
