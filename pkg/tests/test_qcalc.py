from fractions import Fraction

import pytest

from looijenga.errors import NotSymmetric, PoleAtOne
from looijenga.qcalc import (ONE, QLaurent, QRational, S, eval_q1, genus_expansion,
                             is_integral_laurent, q_binomial, q_factorial, q_int,
                             substitute_power)


M = QLaurent.monomial


def test_q_int_small_values():
    assert q_int(1) == ONE
    assert q_int(2) == S + 1 / S
    assert q_int(3) == M(2) + 1 + M(-2)
    assert q_int(0).is_zero()
    assert q_int(-4) == -q_int(4)


def test_q_factorial_values():
    assert q_factorial(0) == ONE
    assert q_factorial(2) == q_int(2)
    assert q_factorial(3) == q_int(2) * q_int(3)
    with pytest.raises(ValueError):
        q_factorial(-1)


def test_q_binomial_values():
    assert q_binomial(2, 1) == q_int(2)
    assert q_binomial(4, 2).at_one() == 6
    assert q_binomial(1, 2).is_zero()
    assert q_binomial(3, -1).is_zero()


def test_substitute_power_examples():
    assert substitute_power(q_int(2), 2) == M(2) + M(-2)
    assert substitute_power(ONE, 7) == ONE
    assert substitute_power(q_int(2), 3) == M(3) + M(-3)
    with pytest.raises(ValueError):
        substitute_power(ONE, 0)


def test_eval_q1_examples():
    assert eval_q1(q_binomial(6, 3)) == 20
    assert eval_q1(QRational(q_int(5)) / q_int(1)) == 5
    assert eval_q1(QRational(q_int(2)) / q_int(4)) == Fraction(1, 2)


def test_eval_q1_pole():
    with pytest.raises(PoleAtOne):
        eval_q1(QRational(ONE) / (S - 1 / S))


def test_genus_expansion_examples():
    assert genus_expansion(q_binomial(2, 1), 2)[:2] == [2, Fraction(-1, 4)]
    assert genus_expansion(ONE, 2) == [1, 0, 0]
    assert genus_expansion(q_int(3), 1) == [3, -1]


def test_genus_expansion_rejects_asymmetric():
    with pytest.raises(NotSymmetric):
        genus_expansion(S, 2)


def test_is_integral_laurent_examples():
    ok, witness = is_integral_laurent(q_int(2) ** 2)
    assert ok and witness == M(2) + 2 + M(-2)
    assert is_integral_laurent(q_int(2)) == (False, None)
    assert is_integral_laurent(QRational(ONE) / q_int(2)) == (False, None)
    assert not is_integral_laurent(QRational(QLaurent({0: Fraction(1, 2)})))[0]


def test_qrational_normal_form_and_equality():
    a = QRational(q_int(4)) / q_int(2)
    assert a.is_laurent()
    assert a.as_laurent() == M(2) + M(-2)
    b = QRational(q_int(3)) / q_int(2)
    c = QRational(q_int(6)) / (q_int(2) * q_int(2) * (M(2) + M(-2))) * q_int(3) / q_int(3)
    assert b * c * q_int(2) == c * q_int(3)
    assert (b - b).is_zero()
    assert b.inverse() * b == QRational(ONE)


def test_qrational_substitution_matches_laurent():
    x = QRational(q_binomial(4, 2)) / q_int(4)
    y = QRational(substitute_power(q_binomial(4, 2), 3)) / substitute_power(q_int(4), 3)
    assert substitute_power(x, 3) == y


def test_json_uses_half_integer_units():
    assert q_int(2).to_json() == [[-1, "1"], [1, "1"]]
    assert QLaurent.from_json(q_int(3).to_json()) == q_int(3)
