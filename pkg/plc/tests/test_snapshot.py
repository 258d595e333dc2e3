import os
from dataclasses import replace

import pytest

from plc.engine.closure import run_stage
from plc.snapshot import ChecksumMismatch, VersionMismatch, SnapshotFormatError, IntegrityError, SnapshotError
from plc.snapshot.reader import Snapshot, read_snapshot, load_snapshot
from plc.snapshot.record import SnapshotParam, PointRecord, parse_record
from plc.snapshot.snapshot_generator import SnapshotGenerator


def test_header_and_records(stage1):
    text = SnapshotGenerator(stage1).write_snapshot_string()
    lines = text.splitlines()
    assert lines[:4] == ["PLC 1", "K 1", "POLICY skip", "FRESH 0 0"]
    assert lines[4:8] == ["S 0 0", "S 1 0", "S 0 1", "S 5 7"]
    assert sum(1 for line in lines if line.startswith("P ")) == 4
    assert sum(1 for line in lines if line.startswith("L ")) == 6
    assert lines[-2] == "END 4 4 6"
    assert lines[-1].startswith("SUM ") and len(lines[-1]) == 4 + 64


@pytest.mark.parametrize("stage", [0, 1, 2])
def test_round_trip(canonical_run, stage):
    c = canonical_run[0][stage]
    text = SnapshotGenerator(c).write_snapshot_string()
    snapshot = Snapshot.from_string(text)
    assert Snapshot.from_string(text) == snapshot
    restored = snapshot.to_configuration()
    assert restored == c
    assert restored.start == c.start
    assert SnapshotGenerator(restored).write_snapshot_string() == text


def test_generate_adds_extension(tmp_path, stage2):
    text = SnapshotGenerator(stage2).generate(str(tmp_path / "stage"))
    assert os.path.exists(tmp_path / "stage.plc")
    with open(tmp_path / "stage.plc", "rb") as f:
        assert f.read() == text.encode("utf-8")
    assert load_snapshot(str(tmp_path / "stage.plc")) == stage2
    assert read_snapshot(str(tmp_path / "stage.plc")).k == 2


def test_resumed_stage_matches_direct_run(stage2, stage3):
    restored = Snapshot.from_string(SnapshotGenerator(stage2).write_snapshot_string()).to_configuration()
    resumed, _ = run_stage(restored)
    assert SnapshotGenerator(resumed).write_snapshot_string() == SnapshotGenerator(stage3).write_snapshot_string()


def test_corruption_is_detected(stage2):
    text = SnapshotGenerator(stage2).write_snapshot_string()
    corrupted = text.replace("L 0 1 0", "L 0 1 1", 1)
    assert corrupted != text
    with pytest.raises(ChecksumMismatch):
        Snapshot.from_string(corrupted)


def test_future_version(stage2):
    text = SnapshotGenerator(stage2).write_snapshot_string()
    with pytest.raises(VersionMismatch):
        Snapshot.from_string(text.replace("PLC 1", "PLC 2", 1))


def test_truncated_snapshot(stage2):
    text = SnapshotGenerator(stage2).write_snapshot_string()
    with pytest.raises(SnapshotError):
        Snapshot.from_string("".join(text.splitlines(keepends=True)[:-1]))
    with pytest.raises(SnapshotFormatError):
        Snapshot.from_string("PLC 1\nK 1\n")


def test_missing_line_fails_integrity(stage2):
    broken = replace(stage2, lines=stage2.lines[:-1], line_points=stage2.line_points[:-1])
    snapshot = Snapshot.from_string(SnapshotGenerator(broken).write_snapshot_string())
    with pytest.raises(IntegrityError):
        snapshot.to_configuration()


def test_records():
    record = parse_record("P 5 7 12\n")
    assert isinstance(record, PointRecord)
    assert record.to_triple().as_tuple() == (5, 7, 12)
    with pytest.raises(SnapshotFormatError):
        parse_record("P 2 4 6").to_triple()
    with pytest.raises(SnapshotFormatError):
        parse_record("Q 1 2 3")
    with pytest.raises(SnapshotFormatError):
        parse_record("L 1 2")
    with pytest.raises(SnapshotFormatError):
        parse_record("S 1/0 2")
    with pytest.raises(ValueError):
        SnapshotParam(1, "real")
