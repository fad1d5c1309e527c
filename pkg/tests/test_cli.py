import json
import subprocess
import sys

import pytest

from siladic.cli import EXIT_INCONCLUSIVE, EXIT_IO, EXIT_USAGE, check_budget, main, parse_k, BudgetExceeded
from siladic.colored import ci
from siladic.qseries import TriSeries
from siladic.recurrences import INITIAL_CONDITIONS


def run(capsys, *argv):
    status = main(list(argv))
    out, err = capsys.readouterr()
    return status, out, err


def test_verify_product_limit(capsys):
    status, out, _ = run(capsys, "verify", "product-limit", "--N", "25")
    assert status == 0
    assert "product-limit" in out and "PASS" in out


def test_verify_keyprop_range_json(capsys):
    status, out, _ = run(capsys, "verify", "keyprop", "--k", "1..4", "--N", "30", "--format", "json")
    assert status == 0
    rows = [json.loads(line) for line in out.splitlines()]
    assert len(rows) == 16
    assert {r["status"] for r in rows} == {"pass"}
    assert rows[0]["schema"] == "siladic.replay/1"


def test_budget_guard(capsys):
    status, _, err = run(capsys, "verify", "keyprop", "--k", "1", "--N", "1000000")
    assert status == EXIT_INCONCLUSIVE
    assert "budget" in err and "caps of at most" in err


def test_budget_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("SILADIC_BUDGET_MB", "0.001")
    status, _, _ = run(capsys, "counts", "D", "--N", "10")
    assert status == EXIT_INCONCLUSIVE
    with pytest.raises(BudgetExceeded):
        check_budget((100, 100, 100), 1)


def test_unknown_target_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "bogus"])
    assert exc.value.code == EXIT_USAGE


def test_bad_k_is_usage_error(capsys):
    assert run(capsys, "verify", "qdiff", "--k", "x..y")[0] == EXIT_USAGE
    assert run(capsys, "verify", "qdiff", "--k", "2_b")[0] == EXIT_USAGE
    assert run(capsys, "counts", "d")[0] == EXIT_USAGE
    assert run(capsys, "series", "G", "--k", "2_a2")[0] == EXIT_USAGE


def test_bad_format_is_usage_error(capsys):
    assert run(capsys, "verify", "initials", "--format", "csv")[0] == EXIT_USAGE
    assert run(capsys, "counts", "D", "--N", "3", "--format", "poly")[0] == EXIT_USAGE


def test_unequal_caps_for_keyprop(capsys):
    status, _, err = run(capsys, "verify", "keyprop", "--U", "5", "--V", "6", "--N", "5")
    assert status == EXIT_USAGE
    assert "(5, 5, 5)" in err


def test_counts_csv_header(capsys):
    status, out, _ = run(capsys, "counts", "D", "--N", "10", "--format", "csv")
    assert status == 0
    lines = out.splitlines()
    assert lines[0] == "u,v,n,count"
    assert "0,0,0,1" in lines


def test_counts_distinct_odd(capsys):
    _, out, _ = run(capsys, "counts", "distinct-odd", "--N", "16")
    rows = [tuple(map(int, line.split())) for line in out.splitlines()]
    assert sum(c for _, _, n, c in rows if n == 16) == 5


def test_series_G_2b(capsys):
    status, out, _ = run(capsys, "series", "G", "--k", "2_b", "--N", "10")
    assert status == 0
    caps = (10, 10, 10)
    assert TriSeries.parse_poly(caps, out.strip()) == TriSeries.parse_poly(caps, INITIAL_CONDITIONS["2_b"])


def test_series_dilated(capsys):
    _, out, _ = run(capsys, "series", "dilated-D", "--dilation", "3,2,1", "--N", "12", "--format", "json")
    _, prod, _ = run(capsys, "series", "schur-product", "--N", "12", "--format", "json")
    assert json.loads(out)["terms"] == json.loads(prod)["terms"]
    assert run(capsys, "series", "dilated-D", "--N", "5")[0] == EXIT_USAGE
    assert run(capsys, "series", "dilated-D", "--dilation", "3,2", "--N", "5")[0] == EXIT_USAGE


@pytest.mark.parametrize("target", ["refdilat", "comp", "newschur", "refinement", "rr", "schur", "schur-product", "siladic"])
def test_verify_theorem_targets(capsys, target):
    status, out, _ = run(capsys, "verify", target, "--N", "20")
    assert status == 0, out


def test_verify_recurrence_targets(capsys):
    for argv in (["initials"], ["ladder", "--k", "6_b", "--N", "16"], ["qdiff", "--k", "2", "--N", "16"],
                 ["proof-steps", "--k", "2", "--N", "20"], ["keyprop", "--k", "1..2", "--N", "12", "--source", "enum"]):
        status, out, _ = run(capsys, "verify", *argv)
        assert status == 0, out


def test_inconclusive_exit(capsys):
    # caps too small to separate the two offsets at k = 3
    status, out, _ = run(capsys, "verify", "proof-steps", "--k", "3", "--N", "10")
    assert status == EXIT_INCONCLUSIVE
    assert "INCONCLUSIVE" in out


def test_out_file_and_determinism(capsys, tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    assert main(["counts", "newschur", "--N", "15", "--format", "csv", "--out", str(a)]) == 0
    assert main(["counts", "newschur", "--N", "15", "--format", "csv", "--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_io_error(capsys, tmp_path):
    status, _, err = run(capsys, "counts", "D", "--N", "3", "--out", str(tmp_path / "missing" / "x.csv"))
    assert status == EXIT_IO
    assert "cannot write" in err


def test_parse_k():
    assert parse_k("2_b") == ci("2_b")
    assert list(parse_k("1..3")) == [1, 2, 3]
    assert list(parse_k("5")) == [5]
    assert list(parse_k(None)) == [1, 2, 3, 4]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "siladic", "counts", "C-refdilat", "--N", "4"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert "1 1 4 1" in proc.stdout
