import typing

import numpy as np
import pytest

from plc.engine.closure import init, run_stage, degrees
from plc.engine.configuration import Configuration, StageStats
from plc.geom.start import CANONICAL_START, StartConfig, validate_start


def grow(c: Configuration, stages: int) -> typing.Tuple[typing.List[Configuration], typing.List[StageStats]]:
    configurations, stats = [c], [degrees(c)]
    for _ in range(stages):
        c, s = run_stage(c)
        configurations.append(c)
        stats.append(s)
    return configurations, stats


def random_valid_starts(count: int, seed: int, bound: int = 6) -> typing.List[StartConfig]:
    rng = np.random.default_rng(seed)
    starts = []
    while len(starts) < count:
        coords = rng.integers(-bound, bound + 1, size=(4, 2))
        denominators = rng.integers(1, 4, size=(4, 2))
        cfg = StartConfig.from_pairs([(f"{x}/{dx}", f"{y}/{dy}") for (x, y), (dx, dy) in zip(coords, denominators)])
        if not validate_start(cfg):
            starts.append(cfg)
    return starts


@pytest.fixture(scope="session")
def canonical_run():
    """Stages 1 to 3 from the canonical start"""
    return grow(init(CANONICAL_START), 2)


@pytest.fixture(scope="session")
def stage1(canonical_run) -> Configuration:
    return canonical_run[0][0]


@pytest.fixture(scope="session")
def stage2(canonical_run) -> Configuration:
    return canonical_run[0][1]


@pytest.fixture(scope="session")
def stage3(canonical_run) -> Configuration:
    return canonical_run[0][2]


@pytest.fixture(scope="session")
def stage4(stage3) -> Configuration:
    """Stage 4 from the canonical start; only slow tests ask for it"""
    return run_stage(stage3)[0]
