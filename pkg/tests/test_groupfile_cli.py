import pytest

from unitwist import catalog
from unitwist.cli import main, report_lines
from unitwist.groupfile import GroupFileError, default_degree_bound, parse_group_file


def run_cli(args, capsys):
    rc = main(args)
    out = capsys.readouterr()
    return rc, out.out, out.err


def test_catalog_files_parse(each_example):
    data = each_example.data
    assert data.presentation.ring.generators
    assert data.rmatrix is not None


def test_default_degree_bounds(examples):
    assert default_degree_bound(examples("u3").pres) == 2
    assert default_degree_bound(examples("jordan4-abelian").pres) == 6
    assert default_degree_bound(examples("u4-ex5").pres) == 4


def test_round_trip_through_file(tmp_path, capsys):
    # exporting a catalog entry to a file and re-importing yields the same
    # presentation output
    entry = catalog.get("jordan4-abelian")
    path = tmp_path / "jordan.group"
    path.write_text(entry.group_text)
    rc1, out1, _ = run_cli(["present", str(path)], capsys)
    rc2, out2, _ = run_cli(["present", "--example", "jordan4-abelian"], capsys)
    assert rc1 == rc2 == 0
    assert out1 == out2
    assert out1.strip().splitlines() == entry.expected["relations"]


def test_cli_determinism(capsys):
    rc1, out1, _ = run_cli(["gamma", "--example", "u4-ex5"], capsys)
    rc2, out2, _ = run_cli(["gamma", "--example", "u4-ex5"], capsys)
    assert rc1 == rc2 == 0
    assert out1 == out2


def test_cli_validate_pass(capsys):
    rc, out, _ = run_cli(["validate", "--example", "u4-ex5", "--max-degree", "3"], capsys)
    assert rc == 0
    assert "classical Yang-Baxter equation: pass" in out


def test_cli_validate_honest_failure(capsys):
    # the raw exponential evaluator of the nonabelian example is recorded
    # as failing the cocycle identity: validate exits nonzero
    rc, out, _ = run_cli(["validate", "--example", "jordan4-minimal",
                          "--max-degree", "3"], capsys)
    assert rc == 1
    assert "cocycle identity at bound 3: FAIL" in out


def test_cli_strata(capsys):
    rc, out, _ = run_cli(["strata", "--example", "u4-ex5", "--point", "caseI2"], capsys)
    assert rc == 0
    assert "ideal <F24*F13 - a*F14, F23 - a>" in out
    assert "dimension law 2*dimT - dimTg == dim: pass" in out


def test_cli_unknown_example(capsys):
    rc, _, err = run_cli(["present", "--example", "nope"], capsys)
    assert rc == 2
    assert "unknown catalog id" in err
    rc, _, err = run_cli(["report", "--example", "nope"], capsys)
    assert rc == 2


def test_cli_missing_file(capsys):
    rc, _, err = run_cli(["present", "/nonexistent/file.group"], capsys)
    assert rc == 2


def test_cli_gb_and_eliminate(capsys):
    rc, out, _ = run_cli(["gb", "--vars", "X,Y,Z", "Y - X^2", "Z - X^3"], capsys)
    assert rc == 0
    assert "dimension: 1" in out
    rc, out, _ = run_cli(["eliminate", "--vars", "X,Y,Z", "--drop", "X",
                          "Y - X^2", "Z - X^3"], capsys)
    assert rc == 0
    assert "Y^3 - Z^2" in out


def test_non_antisymmetric_rmatrix_rejected():
    text = """
[group]
name = bad
generators = X V

[rmatrix]
1 2 1
2 1 1
"""
    with pytest.raises(GroupFileError) as err:
        parse_group_file(text)
    assert "antisymmetric" in str(err.value)


def test_parse_error_line_numbers():
    text = """
[group]
name = bad
generators = X V

[coproduct]
V = X + V
"""
    with pytest.raises(GroupFileError) as err:
        parse_group_file(text)
    assert "line 7" in str(err.value)


def test_corrupted_q_fails_validation(capsys, tmp_path):
    text = """
[group]
name = corrupt
generators = X Y V W

[coproduct]
V = X (x) Y
W = V (x) Y

[rmatrix]
1 3 1
"""
    path = tmp_path / "corrupt.group"
    path.write_text(text)
    rc, out, _ = run_cli(["validate", str(path)], capsys)
    assert rc == 1
    assert "FAIL coassociativity" in out


def test_report_all_catalog(capsys):
    for cid in catalog.ids():
        rc, out, _ = run_cli(["report", "--example", cid], capsys)
        assert rc == 0, (cid, out[-2000:])
        assert "manifest: all comparisons OK" in out


def test_report_determinism():
    lines1, mis1 = report_lines(catalog.get("jordan4-abelian"))
    lines2, mis2 = report_lines(catalog.get("jordan4-abelian"))
    assert lines1 == lines2
    assert not mis1 and not mis2


def test_lie_table_verified(examples):
    from unitwist.groupfile import verify_lie_table
    ok, _ = verify_lie_table(examples("jordan4-abelian").data)
    assert ok
    text = catalog.get("heisenberg3").group_text.replace("1 2 3 1", "1 2 3 2")
    bad = parse_group_file(text)
    ok, where = verify_lie_table(bad)
    assert not ok


def test_cocycle_table_section(tmp_path, capsys):
    text = """
[group]
name = tiny
generators = X V

[cocycle-table]
bound = 2
X , V = 1/2
V , X = -1/2
"""
    data = parse_group_file(text)
    assert data.table_cocycle is not None
    X = data.presentation.ring.var("X")
    V = data.presentation.ring.var("V")
    from fractions import Fraction
    assert data.table_cocycle.scalar(X, V) == Fraction(1, 2)
