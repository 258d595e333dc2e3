import logging
import os
import typing
from dataclasses import dataclass, field, fields, replace
from fractions import Fraction

from plc.engine.configuration import Budget, ParallelPolicy
from plc.geom.start import StartConfig, CANONICAL_START


__all__ = [
    "WORKERS_ENV_VAR",
    "RunConfig",
    "parse_start",
    "parse_key_values",
    "resolve_run_config"
]


logger = logging.getLogger(__name__)

WORKERS_ENV_VAR = "PLC_WORKERS"

_INT_KEYS = ("max_stage", "max_points", "max_lines", "max_bits", "workers")
_STR_KEYS = ("output_dir", "stats_csv", "bounds_json")


def parse_start(text: str) -> StartConfig:
    """Reads four ``x,y`` pairs separated by ``;``, for example ``0,0; 1,0; 0,1; 5,7`` or ``1/2,3; ...``"""
    pairs = []
    for chunk in text.split(";"):
        coords = [c.strip() for c in chunk.split(",")]
        if len(coords) != 2:
            raise ValueError(f"Start point '{chunk.strip()}' must be written as x,y")
        pairs.append((Fraction(coords[0]), Fraction(coords[1])))
    return StartConfig.from_pairs(pairs)


@dataclass(frozen=True)
class RunConfig:
    start: StartConfig = CANONICAL_START
    max_stage: int = 3
    max_points: int = 200000
    max_lines: int = 2000000
    max_bits: int = 4096
    # None runs under skip but rejects parallel start lines
    policy: typing.Optional[ParallelPolicy] = None
    workers: int = 1
    output_dir: str = "plc_run"
    stats_csv: str = "stats.csv"
    bounds_json: str = "bounds.json"
    growth_plot: typing.Optional[str] = field(default=None)
    omit_timings: bool = False

    def __post_init__(self):
        if self.policy is not None:
            object.__setattr__(self, "policy", ParallelPolicy(self.policy))
        if self.max_stage < 1:
            raise ValueError(f"max_stage must be at least 1, got {self.max_stage}")
        if self.workers < 1:
            raise ValueError(f"workers must be at least 1, got {self.workers}")
        # Budget validates the caps
        self.budget()

    def budget(self) -> Budget:
        return Budget(self.max_points, self.max_lines, self.max_bits)

    def output_path(self, name: str) -> str:
        return name if os.path.isabs(name) else os.path.join(self.output_dir, name)

    def snapshot_path(self, k: int) -> str:
        return self.output_path(f"stage_{k}.plc")

    def with_overrides(self, **overrides) -> "RunConfig":
        """Copy with every override that is not ``None`` applied"""
        known = {f.name for f in fields(self)}
        unknown = set(overrides) - known
        if unknown:
            raise ValueError(f"Unknown run configuration key(s) {sorted(unknown)}")
        return replace(self, **{k: v for k, v in overrides.items() if v is not None})


def parse_key_values(text: str) -> typing.Dict[str, typing.Any]:
    """
    Reads ``key = value`` lines; ``#`` starts a comment. Values are converted to the types of the matching
    :class:`RunConfig` fields.
    """
    values = {}
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"Line {number} of the run configuration has no '=': '{raw}'")
        key, value = (part.strip() for part in line.split("=", 1))
        if key == "start":
            values[key] = parse_start(value)
        elif key == "policy":
            values[key] = ParallelPolicy(value)
        elif key in _INT_KEYS:
            values[key] = int(value)
        elif key in _STR_KEYS:
            values[key] = value
        else:
            raise ValueError(f"Unknown run configuration key '{key}' on line {number}")
    return values


def resolve_run_config(config_file: str = None, environ: typing.Mapping[str, str] = None,
                       **overrides) -> RunConfig:
    """
    Defaults, then the key-value file, then command-line overrides (``None`` means not given), then the worker
    count from ``PLC_WORKERS``.
    """
    cfg = RunConfig()
    if config_file is not None:
        with open(config_file, "r") as f:
            cfg = cfg.with_overrides(**parse_key_values(f.read()))
    cfg = cfg.with_overrides(**overrides)
    environ = os.environ if environ is None else environ
    if environ.get(WORKERS_ENV_VAR):
        try:
            workers = int(environ[WORKERS_ENV_VAR])
        except ValueError as e:
            raise ValueError(f"{WORKERS_ENV_VAR} must be an integer, got '{environ[WORKERS_ENV_VAR]}'") from e
        logger.info(f"Worker count {workers} taken from {WORKERS_ENV_VAR}")
        cfg = cfg.with_overrides(workers=workers)
    return cfg
