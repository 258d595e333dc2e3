import typing
from fractions import Fraction

from plc.geom import ProjectiveError
from plc.geom.triple import PointTriple, LineTriple, HomogeneousTriple
from plc.snapshot import SnapshotFormatError


__all__ = [
    "SnapshotParam",
    "SnapshotRecord",
    "StartRecord",
    "PointRecord",
    "LineRecord",
    "parse_record"
]


class SnapshotParam:
    """One whitespace-free field of a snapshot record"""
    allowed_dtypes = ["int", "rational", "string"]

    def __init__(self, value, dtype: str):
        self.value = value
        self.dtype = dtype
        if self.dtype not in self.allowed_dtypes:
            raise ValueError(f"SnapshotParam dtype must be one of {self.allowed_dtypes}. Chosen value was {self.dtype}.")

    def write_value_to_python_str(self) -> str:
        if self.dtype == "int":
            return str(int(self.value))
        elif self.dtype == "rational":
            return str(Fraction(self.value))
        elif self.dtype == "string":
            if not self.value or any(ch.isspace() for ch in self.value):
                raise ValueError(f"String fields must be nonempty and free of whitespace, got '{self.value}'")
            return self.value

    @classmethod
    def read(cls, text: str, dtype: str) -> "SnapshotParam":
        try:
            if dtype == "int":
                return cls(int(text), dtype)
            elif dtype == "rational":
                return cls(Fraction(text), dtype)
        except (ValueError, ZeroDivisionError) as e:
            raise SnapshotFormatError(f"Cannot read '{text}' as {dtype}: {e}") from e
        return cls(text, dtype)


class SnapshotRecord:
    tag: str = None
    dtypes: typing.Tuple[str, ...] = ()

    def __init__(self, params: typing.List[SnapshotParam]):
        if len(params) != len(self.dtypes):
            raise SnapshotFormatError(f"Record '{self.tag}' takes {len(self.dtypes)} fields, got {len(params)}")
        self.params = params

    def write_record_string(self) -> str:
        return " ".join([self.tag] + [p.write_value_to_python_str() for p in self.params]) + "\n"

    @classmethod
    def from_fields(cls, fields: typing.List[str]):
        if len(fields) != len(cls.dtypes):
            raise SnapshotFormatError(f"Record '{cls.tag}' takes {len(cls.dtypes)} fields, got {len(fields)}")
        return cls([SnapshotParam.read(f, d) for f, d in zip(fields, cls.dtypes)])

    def values(self) -> tuple:
        return tuple(p.value for p in self.params)


class StartRecord(SnapshotRecord):
    """``S <x> <y>``: one affine start point"""
    tag = "S"
    dtypes = ("rational", "rational")

    @classmethod
    def from_point(cls, x: Fraction, y: Fraction):
        return cls([SnapshotParam(x, "rational"), SnapshotParam(y, "rational")])


class _TripleRecord(SnapshotRecord):
    dtypes = ("int", "int", "int")
    triple_type: typing.Type[HomogeneousTriple] = HomogeneousTriple

    @classmethod
    def from_triple(cls, t: HomogeneousTriple):
        return cls([SnapshotParam(v, "int") for v in t])

    def to_triple(self) -> HomogeneousTriple:
        try:
            return self.triple_type(*self.values())
        except ProjectiveError as e:
            raise SnapshotFormatError(f"Record '{self.write_record_string().strip()}': {e}") from e


class PointRecord(_TripleRecord):
    """``P <a> <b> <c>``"""
    tag = "P"
    triple_type = PointTriple


class LineRecord(_TripleRecord):
    """``L <a> <b> <c>``"""
    tag = "L"
    triple_type = LineTriple


_RECORD_TYPES = {r.tag: r for r in (StartRecord, PointRecord, LineRecord)}


def parse_record(line: str) -> SnapshotRecord:
    fields = line.split()
    if not fields or fields[0] not in _RECORD_TYPES:
        raise SnapshotFormatError(f"Unknown snapshot record '{line.strip()}'")
    return _RECORD_TYPES[fields[0]].from_fields(fields[1:])
