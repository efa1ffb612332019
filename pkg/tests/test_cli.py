import json

import pytest

from knotslope.cli import main
from knotslope.corpus import fixtures_dir


def path_of(filename):
    return str(fixtures_dir() / filename)


def test_validate_good_diagram(capsys):
    assert main(["validate", path_of("8_17_planar.pd")]) == 0
    out = capsys.readouterr().out
    assert "overall      True" in out


def test_validate_failing_diagram_exits_1(capsys):
    assert main(["validate", path_of("10_161_planar.pd")]) == 1
    out = capsys.readouterr().out
    assert "alternating  False" in out


def test_validate_truncated_file_exits_2(tmp_path, capsys):
    bad = tmp_path / "nonsense.txt"
    bad.write_text("surface-diagram v1\nknot broken\n")
    assert main(["validate", str(bad)]) == 2
    assert "error:" in capsys.readouterr().err


def test_missing_file_exits_2(capsys):
    assert main(["validate", "no-such-file.pd"]) == 2


def test_unknown_subcommand_exits_2():
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_invariants_text(capsys):
    assert main(["invariants", path_of("8_17_planar.pd")]) == 0
    out = capsys.readouterr().out
    assert "slope +8, chi -3, non-orientable" in out
    assert "slope -8, chi -3, non-orientable" in out


def test_invariants_json(capsys):
    assert main(["invariants", path_of("4_1.pd"), "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["schema"] == 1
    assert {doc["black"]["slope"], doc["white"]["slope"]} == {-4, 4}
    assert doc["genus"] == 0


def test_mirror_round_trip(tmp_path, capsys):
    out_file = tmp_path / "mirror.sdg"
    assert main(["mirror", path_of("3_1.pd"), "-o", str(out_file)]) == 0
    capsys.readouterr()
    assert main(["invariants", str(out_file)]) == 0
    out = capsys.readouterr().out
    assert "slope +6" in out  # trefoil slope -6 negated


def test_moves_command(capsys):
    code = main([
        "moves", "--from", "slope=8,chi=-3,orientable=false",
        "--handles", "1", "--crosscaps-plus", "3",
    ])
    assert code == 0
    assert "(+14, -8, non-orientable)" in capsys.readouterr().out


def test_moves_malformed_from_exits_2(capsys):
    assert main(["moves", "--from", "slope=8"]) == 2


def test_fixtures_list(capsys):
    assert main(["fixtures", "list"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert len(out) >= 10
    assert any("8_17-planar" in line for line in out)


def test_report_unknown_knot_exits_2(capsys):
    assert main(["report", "--knot", "unheard_of"]) == 2
