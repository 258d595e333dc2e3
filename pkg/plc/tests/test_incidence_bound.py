import json
from fractions import Fraction

import pytest

from plc.bounds.report import pencil_incidence
from plc.oracles import IncidenceBoundViolation
from plc.oracles.grid import PencilGrid, arithmetic_grid_spec, family_intersection_count
from plc.oracles.incidence_bound import (DEFAULT_INCIDENCE_CONSTANT, incidence_bound_report,
                                         random_incidence_samples, pencil_grid)


def test_random_families_satisfy_the_bound():
    samples = random_incidence_samples(100, seed=13)
    assert all(4 <= g.N <= 8 and 2 <= g.k <= 5 for g in samples)
    report = incidence_bound_report(samples)
    assert report.c == Fraction(1, 13)
    assert all(s.passes for s in report.samples)
    assert report.min_ratio >= float(DEFAULT_INCIDENCE_CONSTANT)
    assert report.min_ratio <= report.median_ratio
    json.dumps(report.as_dict())


def test_samples_are_reproducible():
    first = incidence_bound_report(random_incidence_samples(5, seed=7))
    second = incidence_bound_report(random_incidence_samples(5, seed=7))
    assert first == second


def test_violation_is_raised_for_a_large_constant():
    samples = [arithmetic_grid_spec(2, families=4)]
    with pytest.raises(IncidenceBoundViolation) as err:
        incidence_bound_report(samples, c=Fraction(10))
    assert len(err.value.violations) == 1
    report = incidence_bound_report(samples, c=Fraction(10), enforce=False)
    assert not report.samples[0].passes


def test_bound_needs_four_families():
    with pytest.raises(ValueError):
        incidence_bound_report([arithmetic_grid_spec(3, families=3)])
    with pytest.raises(ValueError):
        incidence_bound_report([])


def test_pencil_grid_from_a_stage(stage2, stage3):
    assert (pencil_grid(stage2).N, pencil_grid(stage2).k) == (2, 2)
    pg = pencil_grid(stage3)
    assert isinstance(pg, PencilGrid)
    assert (pg.N, pg.k) == (3, 3)
    assert pg.k == min(len(x) for x in stage3.point_lines) - 1
    assert family_intersection_count(pg) > 0
    # three pencils are too few for the bound
    assert pencil_incidence(stage3) is None


@pytest.mark.slow
def test_pencil_grid_from_stage_four(stage4):
    pg = pencil_grid(stage4)
    assert (pg.N, pg.k) == (7, 23)
    record = pencil_incidence(stage4)
    assert (record.k, record.N, record.lines_per_family) == (4, 7, 23)
    assert record.points == family_intersection_count(pg)
    assert record.ratio == pytest.approx(record.points / (23 ** 2 * 7 ** 0.5))


def test_pencil_grid_needs_degree_three(stage1):
    # every line of the first stage carries only two points
    assert pencil_grid(stage1) is None
