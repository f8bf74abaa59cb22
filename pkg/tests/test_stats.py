"""Batch runner, growth-curve summaries, and CSV serialization."""

import pytest

from pentagrow.errors import InsufficientData
from pentagrow.stats import (RECORD_HEADER, SUMMARY_HEADER, estimate_limits,
                             geometric_checkpoints, read_csv, run_batch,
                             run_single, write_csv, write_summary_csv)


def test_checkpoint_schedule():
    assert geometric_checkpoints(1000) == [10, 20, 50, 100, 200, 500, 1000]
    assert geometric_checkpoints(130) == [10, 20, 50, 100, 130]
    assert geometric_checkpoints(10) == [10, 10][:1] or \
        geometric_checkpoints(10) == [10]
    assert geometric_checkpoints(7) == [7]


def test_run_single_measures_every_checkpoint():
    rec = run_single(300, seed=2)
    assert [c.n for c in rec.checkpoints] == geometric_checkpoints(300)
    for c in rec.checkpoints:
        assert 1 - c.V + c.E - c.n == c.H          # Euler identity
        assert 0 < c.outer_perimeter <= c.total_boundary
        assert c.free_edges > 0


def test_run_single_rejects_bad_schedule():
    with pytest.raises(ValueError):
        run_single(100, seed=0, schedule=[10, 200])
    with pytest.raises(ValueError):
        run_single(100, seed=0, schedule=[0, 10])


def test_batch_independent_of_worker_count(tmp_path):
    serial = run_batch(150, runs=3, base_seed=5, workers=1)
    pooled = run_batch(150, runs=3, base_seed=5, workers=2)
    assert serial == pooled
    p1, p2 = tmp_path / "a.csv", tmp_path / "b.csv"
    write_csv(serial, p1)
    write_csv(pooled, p2)
    assert p1.read_bytes() == p2.read_bytes()


def test_csv_roundtrip_is_idempotent(tmp_path):
    records = run_batch(200, runs=2, base_seed=0)
    p1, p2 = tmp_path / "a.csv", tmp_path / "b.csv"
    write_csv(records, p1)
    parsed = read_csv(p1)
    write_csv(parsed, p2)
    assert p1.read_bytes() == p2.read_bytes()
    assert p1.read_text().splitlines()[0] == RECORD_HEADER
    assert [r.seed for r in parsed] == [0, 1]


def test_read_csv_rejects_wrong_header(tmp_path):
    p = tmp_path / "bad.csv"
    p.write_text("foo,bar\n1,2\n")
    with pytest.raises(ValueError):
        read_csv(p)


def test_summary_shape_and_csv(tmp_path):
    records = run_batch(200, runs=3, base_seed=1)
    summary = estimate_limits(records)
    assert summary.runs == 3
    assert summary.schedule == tuple(geometric_checkpoints(200))
    k = len(summary.schedule)
    assert len(summary.mean_V_over_n) == k == len(summary.se_H)
    # per-tile vertex count sits between the single-tile 5 and the dense
    # limit long before convergence
    assert 2.0 < summary.mean_V_over_n[-1] < 5.0
    assert 3.0 < summary.mean_E_over_n[-1] < 5.0
    est, hw = summary.slope_V
    assert hw >= 0 and 2.0 < est < 3.0
    p = tmp_path / "summary.csv"
    write_summary_csv(summary, p)
    lines = p.read_text().splitlines()
    assert lines[0] == SUMMARY_HEADER
    assert len(lines) == 1 + k


def test_estimate_limits_needs_data():
    with pytest.raises(InsufficientData):
        estimate_limits([])
    rec = run_single(50, seed=0, schedule=[50])
    with pytest.raises(InsufficientData):
        estimate_limits([rec])
