"""Command-line interface: subcommands and exit-code contract."""

import pytest

from pentagrow.cli import (EXIT_IO, EXIT_OK, EXIT_USAGE, EXIT_VERIFY, main)


def test_unknown_subcommand_is_usage_error(capsys):
    assert main(["frobnicate"]) == EXIT_USAGE


def test_missing_required_argument(capsys):
    assert main(["grow"]) == EXIT_USAGE


def test_grow_and_verify(tmp_path, capsys):
    out = tmp_path / "s.penta"
    assert main(["grow", "--n", "40", "--seed", "7",
                 "--out", str(out)]) == EXIT_OK
    summary = capsys.readouterr().out
    assert "n=40" in summary and "V=" in summary and "H=" in summary
    assert main(["verify", "--in", str(out)]) == EXIT_OK
    assert "verified=ok" in capsys.readouterr().out


def test_verify_deep_against_oracle(tmp_path, capsys):
    out = tmp_path / "s.penta"
    assert main(["grow", "--n", "25", "--seed", "2",
                 "--out", str(out)]) == EXIT_OK
    capsys.readouterr()
    assert main(["verify", "--in", str(out), "--deep"]) == EXIT_OK
    assert "deep=True" in capsys.readouterr().out


def test_verify_deep_size_limit(tmp_path, capsys):
    out = tmp_path / "s.penta"
    assert main(["grow", "--n", "60", "--seed", "2",
                 "--out", str(out)]) == EXIT_OK
    assert main(["verify", "--in", str(out), "--deep"]) == EXIT_USAGE


def test_verify_corrupt_file(tmp_path, capsys):
    p = tmp_path / "junk"
    p.write_text("garbage\n")
    assert main(["verify", "--in", str(p)]) == EXIT_VERIFY


def test_missing_input_is_io_error(tmp_path, capsys):
    assert main(["verify", "--in", str(tmp_path / "absent")]) == EXIT_IO
    assert main(["holes", "--in", str(tmp_path / "absent"),
                 "--out", str(tmp_path / "h.csv")]) == EXIT_IO


def test_holes_census(tmp_path, capsys):
    s = tmp_path / "s.penta"
    cat = tmp_path / "catalog.txt"
    hist = tmp_path / "holes.csv"
    assert main(["grow", "--n", "300", "--seed", "1",
                 "--out", str(s)]) == EXIT_OK
    capsys.readouterr()
    assert main(["holes", "--in", str(s), "--catalog", str(cat),
                 "--out", str(hist)]) == EXIT_OK
    out = capsys.readouterr().out
    assert "violations=0" in out
    lines = hist.read_text().splitlines()
    assert lines[0] == "name,count"
    assert len(lines) > 1
    assert cat.exists()
    # a second run reuses the saved catalog and gives the same histogram
    assert main(["holes", "--in", str(s), "--catalog", str(cat),
                 "--out", str(hist)]) == EXIT_OK
    assert hist.read_text().splitlines() == lines


def test_stats_writes_csvs(tmp_path, capsys):
    rec = tmp_path / "records.csv"
    summ = tmp_path / "summary.csv"
    assert main(["stats", "--n-max", "120", "--runs", "2", "--seed", "4",
                 "--out", str(rec), "--summary-out", str(summ)]) == EXIT_OK
    assert rec.read_text().startswith("seed,n,V,E,H,")
    assert summ.read_text().startswith("n,mean_V_over_n,")
    assert "V_over_n=" in capsys.readouterr().out


def test_export_svg(tmp_path, capsys):
    s = tmp_path / "s.penta"
    svg = tmp_path / "out.svg"
    assert main(["grow", "--n", "50", "--seed", "3",
                 "--out", str(s)]) == EXIT_OK
    assert main(["export", "--in", str(s), "--svg", str(svg),
                 "--holes-as-cut"]) == EXIT_OK
    assert 'id="cut"' in svg.read_text()
