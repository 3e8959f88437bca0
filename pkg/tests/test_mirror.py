from math import comb

import pytest

from looijenga.errors import NoFormalBranch
from looijenga.mirror import curve_residual, disk_series, match_disk_to_vertex

from oracles import power_series_quadratic_branch


def test_residual_vanishes_to_order_12():
    for f in range(-2, 5):
        for sigma in (1, -1):
            assert not any(curve_residual(disk_series(f, 12, sigma)))


def test_quadratic_branch_oracle():
    series = disk_series(1, 12, 1)
    assert [series[d] for d in range(1, 13)] == power_series_quadratic_branch(12)


def test_examples():
    series = disk_series(1, 3)
    assert abs(series[1]) == 1 == comb(2, 1) // 2
    assert abs(series[3]) == 10 == comb(6, 3) // 2


def test_bad_seed_and_order():
    with pytest.raises(NoFormalBranch):
        disk_series(1, 3, seed=1)
    with pytest.raises(ValueError):
        disk_series(1, 0)


def test_match_f1_central_binomials():
    report = match_disk_to_vertex(1, 8)
    assert report.passed
    assert [abs(x) for x in report.rhs] == [comb(2 * d, d) // 2 for d in range(1, 9)]


def test_match_other_framings():
    for f, dmax in [(0, 3), (2, 4), (1, 1)]:
        report = match_disk_to_vertex(f, dmax)
        assert report.passed
        assert report.extra["sigma"] in (1, -1)
        assert "signed match" in report.note
