import logging
import os
import typing

from plc.engine.configuration import Configuration
from plc.snapshot import SNAPSHOT_EXTENSION
from plc.snapshot.record import SnapshotRecord, StartRecord, PointRecord, LineRecord
from plc.snapshot.sections import HeaderSection, EndSection, ChecksumSection


__all__ = [
    "SnapshotGenerator"
]


logger = logging.getLogger(__name__)


class SnapshotGenerator:
    """Generates snapshot files from a stage configuration"""
    def __init__(self, configuration: Configuration):
        self.configuration = configuration
        self.header = HeaderSection(configuration.k, configuration.policy, configuration.fresh_points,
                                    configuration.fresh_lines)
        self.end_section = None
        self.checksum = None

    def _records(self) -> typing.List[SnapshotRecord]:
        c = self.configuration
        records: typing.List[SnapshotRecord] = []
        if c.start is not None:
            records.extend(StartRecord.from_point(x, y) for x, y in c.start.points)
        records.extend(PointRecord.from_triple(p) for p in c.points)
        records.extend(LineRecord.from_triple(line) for line in c.lines)
        return records

    def write_snapshot_string(self) -> str:
        c = self.configuration
        body = self.header.write_header_section_string()
        body += "".join(r.write_record_string() for r in self._records())
        self.end_section = EndSection(n_start=0 if c.start is None else len(c.start.points), n_points=c.n,
                                      n_lines=c.m)
        body += self.end_section.write_end_section_string()
        self.checksum = ChecksumSection(body)
        return body + self.checksum.write_checksum_section_string()

    def generate(self, file_name: str) -> str:
        """
        Generates a snapshot file for the configuration.

        Parameters
        ==========
        file_name: str
          File where the snapshot will be saved. If the file name does not end with the ".plc" extension, it will be
          added automatically.

        Returns
        =======
        str
          The snapshot in Python string format
        """
        snapshot_string = self.write_snapshot_string()

        if os.path.splitext(file_name)[-1] != SNAPSHOT_EXTENSION:
            file_name += SNAPSHOT_EXTENSION

        # newline="" keeps the bytes identical across platforms, which the checksum relies on
        with open(file_name, "w", newline="", encoding="utf-8") as f:
            f.write(snapshot_string)
        logger.info(f"Wrote stage {self.configuration.k} snapshot to {file_name}")

        return snapshot_string
