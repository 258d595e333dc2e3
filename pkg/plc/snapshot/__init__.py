"""
Line-oriented text snapshots of a stage configuration. A snapshot stores the points, lines and start points of a
configuration with enough bookkeeping to continue the iteration; incidence is rebuilt on load.
"""
FORMAT_TAG = "PLC"
FORMAT_VERSION = 1
SNAPSHOT_EXTENSION = ".plc"


class SnapshotError(Exception):
    pass


class SnapshotFormatError(SnapshotError):
    pass


class ChecksumMismatch(SnapshotError):
    pass


class VersionMismatch(SnapshotError):
    pass


class IntegrityError(SnapshotError):
    pass
