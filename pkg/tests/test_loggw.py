from math import comb

import pytest

from looijenga.errors import NoClosedForm
from looijenga.loggw import (kontsevich, maximally_tangent_curves, nlog_closed, nlog_dp3_scattering,
                             tropical_p2_3h, tropical_p2_3h_q)
from looijenga.qcalc import q_binomial, q_int
from looijenga.vertex import open_dp3_closed

from oracles import kontsevich_by_table


def test_kontsevich_column():
    assert [kontsevich(d) for d in range(1, 7)] == kontsevich_by_table()


def test_kontsevich_rejects_nonpositive():
    with pytest.raises(ValueError):
        kontsevich(0)


def test_nlog_closed_examples():
    s = nlog_closed("P2:H+Q", 4)
    assert s.value == q_binomial(8, 4) and s.genus0 == 70
    assert nlog_closed("P2:3H", 5).genus0 == 25
    assert nlog_closed("P2:3H", 5).value is None
    assert nlog_closed("P(1,1,2):H+Q", 1).value == q_int(3)


def test_nlog_closed_central_binomials():
    for d in range(1, 9):
        assert nlog_closed("P2:H+Q", d).value.at_one() == comb(2 * d, d)


def test_nlog_closed_missing():
    with pytest.raises(NoClosedForm):
        nlog_closed("P1xP1:H1,H2,diag", (1, 1))


def test_tropical_count_is_square():
    for d in range(1, 13):
        assert tropical_p2_3h(d) == d * d == nlog_closed("P2:3H", d).genus0


def test_tropical_curve_structure():
    (curve,) = maximally_tangent_curves(3)
    assert curve.balanced()
    assert curve.vertices == ((1, -1),)
    assert curve.vertex_multiplicities() == [9]


def test_tropical_q_refinement():
    assert tropical_p2_3h_q(3) == q_int(9)
    assert tropical_p2_3h_q(4).at_one() == 16


def test_scattering_examples():
    assert nlog_dp3_scattering((0, 0, 0, 0)).at_one() == 1
    # the single admissible index tuple has k_{1,1} = 0, k_{2,1} = 1: the summand is [2]_q
    assert nlog_dp3_scattering((1, 1, 1, 1)) == q_int(2)
    assert nlog_dp3_scattering((2, 2, 1, 1)) == q_int(2) ** 2


def test_scattering_rejects_negative():
    with pytest.raises(ValueError):
        nlog_dp3_scattering((1, -1, 0, 0))


def test_scattering_positive_palindromic():
    for d0 in range(1, 4):
        for d1 in range(d0 + 1):
            for d2 in range(d0 + 1):
                for d3 in range(d0 + 1):
                    value = nlog_dp3_scattering((d0, d1, d2, d3))
                    assert value.is_palindromic()
                    assert all(c >= 0 and c.denominator == 1 for c in value.coeffs().values())


def test_scattering_against_closed_form_spot():
    d = (2, 1, 1, 1)
    factor = q_int(d[2] + d[3]) * d[1] * (-1) ** (d[1] + d[2] + d[3])
    assert (open_dp3_closed(d) * factor).as_laurent() == nlog_dp3_scattering(d)
