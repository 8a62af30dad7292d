import json
import subprocess
import sys
from pathlib import Path

import pytest

jsonschema = pytest.importorskip("jsonschema")

from maxclass.cli import main

SCHEMA_DIR = Path(__file__).resolve().parents[1] / "src" / "maxclass" / "schemas"


def load_schema(name):
    return json.loads((SCHEMA_DIR / name).read_text())


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_count_text(capsys):
    code, out, _ = run_cli(capsys, "count", "--n", "3", "--p", "5", "--N", "2")
    assert code == 0
    assert "r (enumerated)  = 56" in out
    assert "r (closed form) = 56" in out
    assert "r (series)      = 56" in out
    assert "agreement: yes" in out


def test_count_single_method(capsys):
    code, out, _ = run_cli(
        capsys, "count", "--n", "2", "--p", "3", "--N", "1", "--method", "series"
    )
    assert code == 0
    assert "r (series)      = 2" in out
    assert "enumerated" not in out


def test_count_json_schema(capsys):
    code, out, _ = run_cli(
        capsys, "count", "--n", "3", "--p", "5", "--N", "1", "--format", "json"
    )
    assert code == 0
    payload = json.loads(out)
    jsonschema.validate(payload, load_schema("count.schema.json"))
    assert payload["methods"]["enumerated"] == "8"
    assert payload["orbit_census"] == {"1": "4", "5": "4"}
    assert payload["agree"] is True


def test_count_exceptional_prime(capsys):
    code, _, err = run_cli(capsys, "count", "--n", "4", "--p", "3", "--N", "1")
    assert code == 2
    assert "exceptional prime p=3 < n=4" in err


def test_count_budget(capsys):
    code, _, err = run_cli(
        capsys, "count", "--n", "3", "--p", "5", "--N", "2", "--budget", "10"
    )
    assert code == 2
    assert "budget" in err


def test_count_nonprime(capsys):
    code, _, err = run_cli(capsys, "count", "--n", "2", "--p", "6", "--N", "1")
    assert code == 2
    assert "not prime" in err


def test_count_threads_consistent(capsys):
    code1, out1, _ = run_cli(capsys, "count", "--n", "4", "--p", "5", "--N", "2")
    code2, out2, _ = run_cli(
        capsys, "count", "--n", "4", "--p", "5", "--N", "2", "--threads", "2"
    )
    assert code1 == code2 == 0
    assert out1 == out2


def test_zeta_text(capsys):
    code, out, _ = run_cli(capsys, "zeta", "--n", "3")
    assert code == 0
    assert "zeta = (1 - t)^2 / ((1 - p t)^2)" in out
    assert "abscissa = 1" in out
    assert "holds with factor p^2" in out


def test_zeta_series(capsys):
    code, out, _ = run_cli(capsys, "zeta", "--n", "2", "--p", "3", "--series", "3")
    assert code == 0
    assert "series at p=3: 1, 2, 6, 18" in out


def test_zeta_abscissa_n6(capsys):
    code, out, _ = run_cli(capsys, "zeta", "--n", "6")
    assert code == 0
    assert "abscissa = 4" in out


def test_zeta_series_needs_p(capsys):
    code, _, err = run_cli(capsys, "zeta", "--n", "3", "--series", "2")
    assert code == 2
    assert "--series needs --p" in err


def test_zeta_json_schema(capsys):
    code, out, _ = run_cli(
        capsys, "zeta", "--n", "4", "--p", "5", "--series", "2", "--format", "json"
    )
    assert code == 0
    payload = json.loads(out)
    jsonschema.validate(payload, load_schema("zeta.schema.json"))
    assert payload["functional_equation"] == {"holds": True, "factor_exponent": 3}
    assert payload["series"]["coefficients"] == ["1", "28", "716"]


def test_verify_pass(capsys):
    code, out, _ = run_cli(capsys, "verify", "--suite", "zeta")
    assert code == 0
    assert "[PASS]" in out
    assert "[FAIL]" not in out


def test_verify_orbit_suite_with_grid(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--suite", "shout", "--n", "3", "--p", "5", "--N", "1"
    )
    assert code == 0
    assert "orbit size" in out


def test_verify_oracle_suite_with_grid(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--suite", "oracle", "--n", "2", "--p", "3", "--N", "2"
    )
    assert code == 0
    assert "[FAIL]" not in out


def test_table_format(capsys):
    code, out, _ = run_cli(capsys, "table", "--n", "3", "--p", "5", "--max-N", "2")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "n\tp\tN\tr_enum\tr_closed\tr_series\tagree\terror"
    assert len(lines) == 4
    assert lines[1].split("\t") == ["3", "5", "0", "1", "1", "1", "yes", ""]
    assert lines[3].split("\t") == ["3", "5", "2", "56", "56", "56", "yes", ""]


def test_table_r_values_heisenberg(capsys):
    code, out, _ = run_cli(capsys, "table", "--n", "2", "--p", "2", "--max-N", "3")
    assert code == 0
    rows = [line.split("\t") for line in out.splitlines()[1:]]
    assert [r[3] for r in rows] == ["1", "1", "2", "4"]


def test_table_minimal_grid(capsys):
    code, out, _ = run_cli(capsys, "table", "--n", "2", "--p", "3", "--max-N", "0")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 2
    assert lines[1].split("\t")[3:7] == ["1", "1", "1", "yes"]


def test_table_records_cell_errors(capsys):
    code, out, _ = run_cli(
        capsys, "table", "--n", "3", "--p", "5", "--max-N", "2", "--budget", "20"
    )
    assert code == 0  # the run continues; errors land in the last column
    lines = out.splitlines()
    last = lines[3].split("\t")
    assert last[3] == ""  # enumeration cell empty
    assert last[4] == "56"  # closed form still fine
    assert "budget" in last[7]


def test_dump_schema_and_content(capsys):
    code, out, _ = run_cli(
        capsys, "dump", "--n", "3", "--p", "5", "--N", "1", "--exponents", "0,1,1"
    )
    assert code == 0
    payload = json.loads(out)
    jsonschema.validate(payload, load_schema("rep.schema.json"))
    assert payload["rows"] == [[0, 2, 0, 4, 4], [1, 2, 3, 4, 0], [1, 1, 1, 1, 1]]


def test_dump_rejects_bad_exponents(capsys):
    code, _, err = run_cli(
        capsys, "dump", "--n", "3", "--p", "5", "--N", "1", "--exponents", "1,1,1"
    )
    assert code == 2
    assert "e_1" in err


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "maxclass.cli", "zeta", "--n", "5"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "(1 - t)^2 / ((1 - p^3 t)(1 - p t))" in proc.stdout
