import logging
import typing
from dataclasses import dataclass
from fractions import Fraction

from plc.engine import EngineError
from plc.engine.closure import rebuild_incidence
from plc.engine.configuration import Configuration, ParallelPolicy
from plc.geom.start import StartConfig
from plc.geom.triple import PointTriple, LineTriple
from plc.snapshot import SnapshotFormatError, IntegrityError
from plc.snapshot.record import StartRecord, PointRecord, LineRecord, parse_record
from plc.snapshot.sections import HeaderSection, EndSection, ChecksumSection


__all__ = [
    "Snapshot",
    "read_snapshot",
    "load_snapshot"
]


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Snapshot:
    version: int
    k: int
    policy: ParallelPolicy
    fresh_points: int
    fresh_lines: int
    start: typing.Tuple[typing.Tuple[Fraction, Fraction], ...]
    points: typing.Tuple[PointTriple, ...]
    lines: typing.Tuple[LineTriple, ...]
    checksum: str

    @classmethod
    def from_string(cls, text: str) -> "Snapshot":
        """
        Parses snapshot text. The version is checked before the checksum, so that a file from a newer format is
        reported as such rather than as corrupted.

        Raises
        ======
        VersionMismatch, ChecksumMismatch, SnapshotFormatError
        """
        lines = text.splitlines(keepends=True)
        header = HeaderSection.read(lines)
        if len(lines) < HeaderSection.n_lines + 2 or not text.endswith("\n"):
            raise SnapshotFormatError("Snapshot is truncated")
        ChecksumSection.verify("".join(lines[:-1]), lines[-1])

        groups = {StartRecord: [], PointRecord: [], LineRecord: []}
        order = [StartRecord, PointRecord, LineRecord]
        current = 0
        for line in lines[HeaderSection.n_lines:-2]:
            record = parse_record(line)
            position = order.index(type(record))
            if position < current:
                raise SnapshotFormatError(f"Record '{line.strip()}' is out of order")
            current = position
            groups[type(record)].append(record)
        end = EndSection.read(lines[-2])
        counts = (len(groups[StartRecord]), len(groups[PointRecord]), len(groups[LineRecord]))
        if counts != (end.n_start, end.n_points, end.n_lines):
            raise SnapshotFormatError(f"Record counts {counts} do not match the END section "
                                      f"{(end.n_start, end.n_points, end.n_lines)}")

        return cls(
            version=header.version, k=header.k, policy=header.policy,
            fresh_points=header.fresh_points, fresh_lines=header.fresh_lines,
            start=tuple(r.values() for r in groups[StartRecord]),
            points=tuple(r.to_triple() for r in groups[PointRecord]),
            lines=tuple(r.to_triple() for r in groups[LineRecord]),
            checksum=lines[-1].split()[1]
        )

    def to_configuration(self) -> Configuration:
        """
        Rebuilds the configuration, grouping all point pairs by their joining line, and checks it.

        Raises
        ======
        IntegrityError
          If the points and lines do not form a closed, consistent configuration
        """
        if self.k < 1:
            raise SnapshotFormatError(f"Stage index must be at least 1, got {self.k}")
        if not (0 <= self.fresh_points <= len(self.points) and 0 <= self.fresh_lines <= len(self.lines)):
            raise SnapshotFormatError(f"Fresh markers ({self.fresh_points}, {self.fresh_lines}) are out of range")
        start = None
        if self.start:
            try:
                start = StartConfig(self.start)
            except ValueError as e:
                raise SnapshotFormatError(str(e)) from e
        try:
            point_lines, line_points = rebuild_incidence(self.points, self.lines, "pairs")
        except KeyError as e:
            raise IntegrityError(f"The join of two snapshot points is missing from its lines: {e}") from e
        c = Configuration(k=self.k, points=self.points, lines=self.lines, point_lines=point_lines,
                          line_points=line_points, fresh_points=self.fresh_points, fresh_lines=self.fresh_lines,
                          policy=self.policy, start=start)
        try:
            c.check_consistency()
        except EngineError as e:
            raise IntegrityError(str(e)) from e
        return c


def read_snapshot(file_name: str) -> Snapshot:
    with open(file_name, "r", newline="", encoding="utf-8") as f:
        text = f.read()
    return Snapshot.from_string(text)


def load_snapshot(file_name: str) -> Configuration:
    c = read_snapshot(file_name).to_configuration()
    logger.info(f"Loaded stage {c.k} snapshot from {file_name}: n={c.n}, m={c.m}")
    return c
