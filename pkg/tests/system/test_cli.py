"""System tests for the logmono command line."""

import json
import subprocess
import sys
from fractions import Fraction
from pathlib import Path

import pytest

from logmono import __version__
from logmono.cli import main
from logmono.exceptions import PrecisionExhausted


def run(capsys: pytest.CaptureFixture[str], *argv: str) -> tuple[int, str, str]:
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.mark.system
class TestExactCommands:
    """bernoulli and tangent print exact rationals."""

    def test_bernoulli_json(self, capsys):
        code, out, _ = run(capsys, "bernoulli", "--n-max", "10", "--format", "json")
        assert code == 0
        data = json.loads(out)
        assert data["command"] == "bernoulli"
        values = {row["n"]: row["value"] for row in data["rows"]}
        assert values[0] == "1"
        assert values[1] == "-1/2"
        assert values[2] == "1/6"
        assert values[3] == "0"
        assert values[10] == "5/66"

    def test_tangent_csv(self, capsys):
        code, out, _ = run(capsys, "tangent", "--n-max", "5", "--format", "csv")
        assert code == 0
        assert out == "n,T_n\n1,1\n2,2\n3,16\n4,272\n5,7936\n"

    def test_text_output(self, capsys):
        code, out, _ = run(capsys, "tangent", "--n-max", "3")
        assert code == 0
        assert out.splitlines()[0] == "T(1) .. T(3)"

    def test_json_is_deterministic(self, capsys):
        _, first, _ = run(capsys, "bernoulli", "--n-max", "30", "--format", "json")
        _, second, _ = run(capsys, "bernoulli", "--n-max", "30", "--format", "json")
        assert first == second


@pytest.mark.system
class TestEnclosureCommands:
    """zeta, bounds, sun and logmono."""

    def test_zeta_grid(self, capsys):
        code, out, _ = run(capsys, "zeta", "--range", "2:4", "--step", "1/2", "--format", "json")
        assert code == 0
        rows = json.loads(out)["rows"]
        assert [row["x"] for row in rows] == ["2", "5/2", "3", "7/2", "4"]
        assert rows[0]["agrees_with_bernoulli_form"] is True
        assert rows[4]["agrees_with_bernoulli_form"] is True
        assert "agrees_with_bernoulli_form" not in rows[1]
        mid, rad = Fraction(rows[0]["mid"]), Fraction(rows[0]["rad"])
        assert abs(mid - Fraction("1.64493406684822643647")) <= rad + Fraction(1, 10**18)

    def test_bounds_match_printed_constants(self, capsys):
        code, out, _ = run(capsys, "bounds", "--k-max", "4", "--format", "json")
        assert code == 0
        data = json.loads(out)
        assert data["mismatched"] == []
        names = [row["name"] for row in data["rows"]]
        assert names[:5] == ["2log2", "zeta-part@6", "f1(6)", "total@6", "f0(6)"]
        assert names[-3:] == ["f(2,6)", "f(3,9)", "f(4,12)"]

    def test_sun(self, capsys):
        code, out, _ = run(capsys, "sun", "--n-max", "12", "--format", "csv")
        assert code == 0
        assert out.splitlines()[0] == "part,n,verdict,precision"

    def test_logmono_tangent(self, capsys):
        code, out, _ = run(capsys, "logmono", "tangent", "--depth", "2", "--n-max", "40", "--format", "json")
        assert code == 0
        data = json.loads(out)
        assert data["sequence"] == "tangent"
        assert [order["r"] for order in data["orders"]] == [0, 1, 2]

    def test_logmono_csv_columns(self, capsys):
        code, out, _ = run(capsys, "logmono", "inv_root_abs_bernoulli", "--n-max", "20", "--format", "csv")
        assert code in (0, 1, 2)
        assert out.splitlines()[0] == "r,property,N,violations,undecided"

    def test_precision_setting_without_flag(self, capsys, test_settings):
        test_settings.precision = 256
        code, out, _ = run(capsys, "zeta", "--range", "2:3", "--format", "json")
        assert code == 0
        assert json.loads(out)["precision"] == 256
        assert test_settings.precision == 256

    def test_prec_flag_overrides_setting(self, capsys, test_settings):
        test_settings.precision = 256
        code, out, _ = run(capsys, "zeta", "--range", "2:3", "--prec", "192", "--format", "json")
        assert code == 0
        assert json.loads(out)["precision"] == 192

    def test_undecided_exit_status(self, capsys, mocker):
        patched = mocker.patch(
            "logmono.cli.commands.kth_deriv_log_theta", side_effect=PrecisionExhausted("sign not decided")
        )
        code, out, _ = run(capsys, "verify-kth", "--k-max", "2", "--format", "json")
        assert code == 2
        signs = json.loads(out)["signs"]
        assert {s["sign"] for s in signs} == {"undecided"}
        assert patched.call_count == len(signs)

    @pytest.mark.slow
    def test_verify_kth(self, capsys):
        code, out, _ = run(capsys, "verify-kth", "--k-max", "3", "--format", "json")
        assert code == 0
        data = json.loads(out)
        assert [t["threshold"] for t in data["thresholds"]] == [6, 14]

    @pytest.mark.slow
    def test_verify_theta(self, capsys):
        code, out, _ = run(capsys, "verify-theta", "--range", "7:12", "--format", "json")
        assert code == 0
        data = json.loads(out)
        assert data["certificate"]["status"] == "certified"
        assert data["tail"]["certified"] is True


@pytest.mark.system
class TestUsageErrors:
    """Bad input exits 3 with a message on stderr."""

    @pytest.mark.parametrize(
        "argv",
        [
            ["bernoulli", "--range", "1-2"],
            ["bernoulli", "--bogus"],
            ["zeta", "--prec", "32"],
            ["zeta", "--range", "4:2"],
            ["verify-theta", "--range", "6:7"],
            ["logmono", "fibonacci"],
            ["logmono", "tangent", "--depth", "3", "--n-max", "5"],
            ["logmono", "tangent", "--range", "2.5:40"],
            ["tangent", "--n-max", "0"],
            [],
        ],
    )
    def test_usage_errors(self, capsys, argv: list[str]):
        code, out, err = run(capsys, *argv)
        assert code == 3
        assert out == ""
        assert "error" in err

    def test_version(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["--version"])
        assert exc.value.code == 0
        assert __version__ in capsys.readouterr().out


@pytest.mark.system
class TestFilesAndConfig:
    """--out and --config."""

    def test_out_file(self, capsys, temp_dir: Path):
        target = temp_dir / "reports" / "tangent.csv"
        code, out, _ = run(capsys, "tangent", "--n-max", "4", "--format", "csv", "--out", str(target))
        assert code == 0
        assert out == ""
        assert target.read_text(encoding="utf-8") == "n,T_n\n1,1\n2,2\n3,16\n4,272\n"

    def test_config_file(self, capsys, temp_dir: Path):
        config = temp_dir / "run.env"
        config.write_text("N_MAX=4\nFORMAT=json\n")
        code, out, _ = run(capsys, "tangent", "--config", str(config))
        assert code == 0
        assert [row["value"] for row in json.loads(out)["rows"]] == ["1", "2", "16", "272"]

    def test_flags_beat_config_file(self, capsys, temp_dir: Path):
        config = temp_dir / "run.env"
        config.write_text("N_MAX=4\nFORMAT=json\n")
        code, out, _ = run(capsys, "tangent", "--config", str(config), "--format", "csv", "--n-max", "2")
        assert code == 0
        assert out == "n,T_n\n1,1\n2,2\n"

    def test_bad_config_file(self, capsys, temp_dir: Path):
        config = temp_dir / "run.env"
        config.write_text("COLOUR=blue\n")
        code, _, err = run(capsys, "tangent", "--config", str(config))
        assert code == 3
        assert "COLOUR" in err


@pytest.mark.system
@pytest.mark.slow
class TestModuleEntryPoint:
    def test_python_dash_m(self):
        src = Path(__file__).resolve().parents[2] / "src"
        proc = subprocess.run(
            [sys.executable, "-m", "logmono", "tangent", "--n-max", "3", "--format", "csv"],
            capture_output=True,
            text=True,
            env={"PYTHONPATH": str(src), "PATH": ""},
            check=False,
        )
        assert proc.returncode == 0
        assert proc.stdout == "n,T_n\n1,1\n2,2\n3,16\n"
