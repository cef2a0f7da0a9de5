"""Command-line front end: output formats and the exit-code contract."""

import csv
import io

from confluent.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestEval:
    def test_phi(self, capsys):
        code, out, _ = run(capsys, "eval", "phi", "--alpha", "2", "--beta", "2", "--x", "1")
        assert code == 0
        assert "value=2.718281828459045" in out
        assert "method=direct_series" in out

    def test_psi(self, capsys):
        code, out, _ = run(capsys, "eval", "psi", "--alpha", "0.5", "--x", "1")
        assert code == 0
        assert "value=3.7621956910836314" in out

    def test_chi_optimal_bracket_fields(self, capsys):
        code, out, _ = run(
            capsys, "eval", "chi", "--alpha", "1", "--beta", "1", "--x", "10",
            "--mode", "optimal",
        )
        assert code == 0
        row = dict(tok.split("=", 1) for tok in out.split())
        assert float(row["lower"]) <= 0.9156333393978808 <= float(row["upper"])
        assert row["k_opt"] == "9"

    def test_chi_transformed(self, capsys):
        code, out, _ = run(
            capsys, "eval", "chi", "--alpha", "1", "--beta", "0.5", "--x", "8",
            "--mode", "transformed",
        )
        assert code == 0
        assert "method=transformed_series" in out

    def test_domain_error_exit_2(self, capsys):
        code, _, err = run(capsys, "eval", "psi", "--alpha", "0", "--x", "1")
        assert code == 2
        assert err.strip()

    def test_missing_flag_exit_2(self, capsys):
        code, _, err = run(capsys, "eval", "phi", "--alpha", "2", "--x", "1")
        assert code == 2


class TestVerify:
    def test_eq18_passes(self, capsys):
        code, out, _ = run(capsys, "verify", "eq18", "--x", "0.1,1,10")
        assert code == 0
        lines = [ln for ln in out.splitlines() if ln.startswith("eq18")]
        assert len(lines) == 3
        assert all("true" in ln for ln in lines)

    def test_eq44_point(self, capsys):
        code, out, _ = run(
            capsys, "verify", "eq44", "--alpha", "1.2", "--beta", "0.8", "--x", "1"
        )
        assert code == 0
        row = [ln for ln in out.splitlines() if ln.startswith("eq44")][0]
        assert abs(float(row.split()[4])) <= 1e-8  # lhs column

    def test_unknown_id_exit_2(self, capsys):
        code, _, err = run(capsys, "verify", "no-such-id")
        assert code == 2
        assert "unknown" in err

    def test_failure_exit_1(self, capsys):
        # a domain-violating grid point becomes a failed report, never an abort
        code, out, _ = run(capsys, "verify", "eq12", "--alpha", "1.0", "--x", "1")
        assert code == 1
        assert "reason" in out or "domain" in out

    def test_csv_round_trip(self, capsys):
        code, out, _ = run(capsys, "verify", "eq18", "--x", "0.1,1,10", "--format", "csv")
        assert code == 0
        rows = list(csv.DictReader(io.StringIO(out)))
        assert len(rows) == 3
        code2, out2, _ = run(capsys, "verify", "eq18", "--x", "0.1,1,10", "--format", "csv")
        assert out == out2
        for row in rows:
            # shortest-round-trip text: parsing and re-printing is stable
            for fieldname in ("lhs", "rhs", "abs_residual", "rel_residual"):
                v = float(row[fieldname])
                assert repr(v) == row[fieldname]

    def test_records_format(self, capsys):
        code, out, _ = run(capsys, "verify", "eq18", "--x", "1", "--format", "records")
        assert code == 0
        assert out.startswith("id=eq18 ")
        assert "passed=true" in out

    def test_grid_triple_syntax(self, capsys):
        code, out, _ = run(capsys, "verify", "eq18", "--x", "0.5:0.5:3")
        assert code == 0
        assert len([ln for ln in out.splitlines() if ln.startswith("eq18")]) == 3


class TestBracket:
    def test_alternating_sign_column(self, capsys):
        code, out, err = run(
            capsys, "bracket", "--alpha", "1", "--beta", "1", "--x", "10",
            "--kmax", "12", "--format", "records",
        )
        assert code == 0
        assert "k_opt=9" in err
        signs = []
        for ln in out.splitlines():
            row = dict(tok.split("=", 1) for tok in ln.split())
            signs.append(row["sign"])
        assert signs[:10] == ["+", "-", "+", "-", "+", "-", "+", "-", "+", "-"]

    def test_alpha_zero_constant_column(self, capsys):
        code, out, _ = run(
            capsys, "bracket", "--alpha", "0", "--beta", "1", "--x", "10",
            "--kmax", "4", "--format", "records",
        )
        assert code == 0
        for ln in out.splitlines():
            row = dict(tok.split("=", 1) for tok in ln.split())
            assert float(row["partial"]) == 1.0

    def test_negative_x_exit_2(self, capsys):
        code, _, err = run(capsys, "bracket", "--alpha", "1", "--beta", "1", "--x", "-1")
        assert code == 2
        assert err.strip()


class TestResolve:
    def test_table_rows(self, capsys):
        code, out, _ = run(capsys, "resolve")
        assert code == 0
        for key in ("eq33", "eq42", "eq46"):
            assert key in out

    def test_csv(self, capsys):
        code, out, _ = run(capsys, "resolve", "--format", "csv")
        assert code == 0
        rows = list(csv.DictReader(io.StringIO(out)))
        assert [r["id"] for r in rows] == ["eq33", "eq42", "eq46"]
        assert all(r["adopted_variant"] == "1" for r in rows)
        assert all(float(r["worst_rel_residual"]) <= 1e-6 for r in rows)

    def test_broken_variant_set_exit_1(self, capsys, monkeypatch):
        from confluent import verify

        monkeypatch.setattr(verify, "_VARIANT_PASS_REL", 1e-18)
        code, _, err = run(capsys, "resolve")
        assert code == 1
        assert err.strip()


class TestExitCodeContract:
    def test_three_scripted_invocations(self, capsys):
        ok, _, _ = run(capsys, "verify", "eq18", "--x", "1")
        fail, _, _ = run(capsys, "verify", "eq12", "--alpha", "2.0", "--x", "1")
        usage, _, _ = run(capsys, "verify", "bogus-id")
        assert (ok, fail, usage) == (0, 1, 2)
