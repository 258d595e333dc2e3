import hashlib
import typing

from plc.engine.configuration import ParallelPolicy
from plc.snapshot import FORMAT_TAG, FORMAT_VERSION, SnapshotFormatError, VersionMismatch, ChecksumMismatch


__all__ = [
    "HeaderSection",
    "EndSection",
    "ChecksumSection"
]


def _keyed(line: str, key: str, n_values: int) -> typing.List[str]:
    fields = line.split()
    if len(fields) != n_values + 1 or fields[0] != key:
        raise SnapshotFormatError(f"Expected '{key}' with {n_values} value(s), got '{line.strip()}'")
    return fields[1:]


def _int(text: str, key: str) -> int:
    try:
        return int(text)
    except ValueError as e:
        raise SnapshotFormatError(f"'{key}' needs an integer, got '{text}'") from e


class HeaderSection:
    n_lines = 4

    def __init__(self, k: int, policy: ParallelPolicy, fresh_points: int, fresh_lines: int,
                 version: int = FORMAT_VERSION):
        self.version = version
        self.k = k
        self.policy = ParallelPolicy(policy)
        self.fresh_points = fresh_points
        self.fresh_lines = fresh_lines

    def write_header_section_string(self) -> str:
        return (f"{FORMAT_TAG} {self.version}\n"
                f"K {self.k}\n"
                f"POLICY {self.policy.value}\n"
                f"FRESH {self.fresh_points} {self.fresh_lines}\n")

    @classmethod
    def read(cls, lines: typing.List[str]) -> "HeaderSection":
        if len(lines) < cls.n_lines:
            raise SnapshotFormatError("Snapshot header is truncated")
        version = _int(_keyed(lines[0], FORMAT_TAG, 1)[0], FORMAT_TAG)
        if version != FORMAT_VERSION:
            raise VersionMismatch(f"Snapshot format version {version} is not supported (expected {FORMAT_VERSION})")
        k = _int(_keyed(lines[1], "K", 1)[0], "K")
        try:
            policy = ParallelPolicy(_keyed(lines[2], "POLICY", 1)[0])
        except ValueError as e:
            raise SnapshotFormatError(f"Unknown parallel policy in '{lines[2].strip()}'") from e
        fresh_points, fresh_lines = (_int(v, "FRESH") for v in _keyed(lines[3], "FRESH", 2))
        return cls(k, policy, fresh_points, fresh_lines, version)


class EndSection:
    def __init__(self, n_start: int, n_points: int, n_lines: int):
        self.n_start = n_start
        self.n_points = n_points
        self.n_lines = n_lines

    def write_end_section_string(self) -> str:
        return f"END {self.n_start} {self.n_points} {self.n_lines}\n"

    @classmethod
    def read(cls, line: str) -> "EndSection":
        return cls(*(_int(v, "END") for v in _keyed(line, "END", 3)))


class ChecksumSection:
    """``SUM <sha256>`` over every byte that precedes it"""
    def __init__(self, body: str):
        self.digest = self.compute(body)

    @staticmethod
    def compute(body: str) -> str:
        return hashlib.sha256(body.encode("utf-8")).hexdigest()

    def write_checksum_section_string(self) -> str:
        return f"SUM {self.digest}\n"

    @classmethod
    def verify(cls, body: str, line: str):
        stored = _keyed(line, "SUM", 1)[0]
        actual = cls.compute(body)
        if stored != actual:
            raise ChecksumMismatch(f"Snapshot checksum {stored} does not match content checksum {actual}")
