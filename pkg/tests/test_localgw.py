from fractions import Fraction
from math import comb, factorial

import pytest

from looijenga.errors import CalibrationMissing, UnsupportedGeometry
from looijenga.localgw import CohRing, Calibration, fit_calibration, ifunction, nloc, raw_coefficient


def test_nloc_examples():
    assert nloc("P2:H+Q", 1) == -1
    assert nloc("P2:H+Q", 2) == Fraction(3, 4)
    assert nloc("P2:3H", 3) == Fraction(1, 3)


def test_ifunction_degree_zero_is_prefactor():
    base, series = ifunction("P2:3H", (0,))
    assert base == 1
    assert series.terms == {((0,), 0, 0): 1}


def test_ifunction_p2hq_degree_one_fixture():
    base, series = ifunction("P2:H+Q", (1,))
    # lam^2 / z at the unit class: z^base * w^k with base - k = -1
    assert series.coefficient((0,), base + 1) == {2: 1}


def test_ifunction_p2_3h_degree_one_fixture():
    base, series = ifunction("P2:3H", (1,))
    assert series.coefficient((0,), base + 2) == {3: -1}


def test_ring_truncation_is_exact():
    ring = CohRing((3,), 4)
    h = ring.linear(0, 0, [1], 0)
    assert (h * h * h).terms == {}
    assert (h * h).terms == {((2,), 0, 0): 1}


def test_p2hq_closed_form_up_to_8():
    for d in range(1, 9):
        assert nloc("P2:H+Q", d) == Fraction((-1) ** d * comb(2 * d, d), 2 * d * d)


def test_p2_3h_closed_form_up_to_8():
    for d in range(1, 9):
        assert nloc("P2:3H", d) == Fraction((-1) ** (d + 1), d)


def test_p1xp1_values():
    for d1 in range(1, 5):
        for d2 in range(1, 5):
            expected = -Fraction(factorial(d1 + d2 - 1), factorial(d1) * factorial(d2))
            assert nloc("P1xP1:H1,H2,diag", (d1, d2)) == expected
    assert nloc("P1xP1:H1,H2,diag", (1, 0)) == 0


def test_calibration_fit_from_low_degrees():
    cal = fit_calibration("P2:H+Q", {(1,): -1, (2,): Fraction(3, 4)})
    assert cal == Calibration(Fraction(1), Fraction(1), (-1,))
    cal3 = fit_calibration("P2:3H", {(1,): 1, (2,): Fraction(-1, 2)})
    assert cal3.signs == (-1,)


def test_calibration_inconsistent():
    with pytest.raises(CalibrationMissing):
        fit_calibration("P2:H+Q", {(1,): -1, (2,): Fraction(3, 5)})
    with pytest.raises(CalibrationMissing):
        fit_calibration("P2:H+Q", {(1,): -1})


def test_unsupported_geometry():
    with pytest.raises(UnsupportedGeometry):
        nloc("dP3:D1+D2", (1, 1, 1, 1))
    with pytest.raises(UnsupportedGeometry):
        raw_coefficient("P(1,1,2):H+Q", (1,))
