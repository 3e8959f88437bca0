from fractions import Fraction

import pytest

from looijenga.bps import (BpsRecord, common_divisors, dt_loop_quiver, kp, kp_from_log, lmov0, lmov_q,
                           log_bps, open_series_for, open_values_for)
from looijenga.errors import MissingLowerClass
from looijenga.qcalc import QLaurent, eval_q1
from looijenga.vertex import framed_c3_one_brane

DT_TWO_LOOP = [1, 1, 1, 2, 5, 13, 35, 100, 300, 925, 2915, 9386]


def c3(f):
    return lambda cls: eval_q1(framed_c3_one_brane(f, cls[0]))


def test_common_divisors():
    assert common_divisors((4, 6)) == [1, 2]
    with pytest.raises(ValueError):
        common_divisors((0, 0))


def test_kp_examples():
    assert kp("P2:H+Q", 1, 2) == -1
    assert kp("P2:H+Q", 2, 2) == 1
    assert kp("P(1,1,2):H+Q", 1) == 1


def test_kp_through_log_invariants():
    for d in range(1, 7):
        assert kp_from_log("P2:H+Q", d) == kp("P2:H+Q", d)
        assert kp_from_log("P2:3H", d) == kp("P2:3H", d)


def test_lmov0_examples():
    assert lmov0(c3(1), (1,), 2) == -1
    assert lmov0(c3(1), (2,), 2) == 1 == kp("P2:H+Q", 2)
    assert abs(lmov0(c3(1), (4,), 2)) == 2


def test_lmov0_missing_lower_class():
    with pytest.raises(MissingLowerClass):
        lmov0({(4,): Fraction(1)}, (4,), 2)


def test_lmov_q_examples():
    series = lambda cls: framed_c3_one_brane(1, cls[0])
    value, ok = lmov_q(series, (1,), (1,), 2)
    assert ok and value.as_laurent() == QLaurent.monomial(0) * -1
    assert lmov_q(series, (2,), (2,), 2)[1]
    unknot = lambda cls: framed_c3_one_brane(0, cls[0])
    assert all(lmov_q(unknot, (d,), (d,), 2)[1] for d in range(1, 7))


def test_dt_two_loop_sequence():
    assert [dt_loop_quiver(2, d) for d in range(1, 13)] == DT_TWO_LOOP


def test_dt_rejects_nonpositive():
    with pytest.raises(ValueError):
        dt_loop_quiver(0, 1)


def test_kp_equals_lmov_orbifolds():
    for n in (1, 2, 3):
        g = f"P(1,1,{n}):H+Q"
        for d in range(1, 6):
            value = kp(g, d)
            assert value == lmov0(open_values_for(g), (d,), 2)
            assert abs(value) == dt_loop_quiver(n + 1, d)


def test_log_bps_examples():
    value, ok = log_bps("P2:H+Q", 1)
    assert ok and abs(eval_q1(value)) == 1
    assert all(log_bps("P2:H+Q", d)[1] for d in range(1, 7))
    assert all(log_bps("P2:3H", d)[1] for d in range(1, 7))


def test_log_bps_rejects_degenerate_class():
    with pytest.raises(ValueError):
        log_bps("dP3:D1+D2", (1, 1, 0, 0))


def test_log_bps_equals_lmov_q():
    for g in ("P2:H+Q", "P(1,1,2):H+Q"):
        for d in range(1, 6):
            lq, _ = lmov_q(open_series_for(g), (d,), (d * (1 if g == "P2:H+Q" else 2),), 2)
            lb, _ = log_bps(g, d)
            assert abs(eval_q1(lq)) == abs(eval_q1(lb))


def test_bps_record():
    rec = BpsRecord("P2:H+Q", (1,), "KP", Fraction(-1), True).to_record()
    assert rec == {"geometry": "P2:H+Q", "class": [1], "kind": "KP", "value": "-1", "integral": True}
    with pytest.raises(ValueError):
        BpsRecord("P2:H+Q", (1,), "XYZ", 1, True)
