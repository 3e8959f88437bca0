from fractions import Fraction

import mpmath
import pytest

from looijenga.errors import NotContained, SizeMismatch
from looijenga.partitions import (conjugate, contains, hook_lengths, hook_schur_closed, hooks,
                                  kappa, mn_character, partition, partitions_of, partitions_up_to,
                                  schur_principal)
from looijenga.qcalc import QLaurent, QRational, q_factorial, q_int

from oracles import evaluate_qrational, frobenius_character, principal_variables, skew_schur_numeric


def test_kappa_examples():
    assert kappa(()) == 0
    assert kappa((2,)) == 2
    assert kappa((1, 1)) == -2


def test_partition_validation():
    assert partition([3, 1, 0]) == (3, 1)
    with pytest.raises(ValueError):
        partition([1, 2])


def test_conjugate_involution_and_kappa_antisymmetry():
    for lam in partitions_up_to(8):
        assert conjugate(conjugate(lam)) == lam
        assert kappa(conjugate(lam)) == -kappa(lam)


def test_partition_counts():
    assert [len(partitions_of(n)) for n in range(9)] == [1, 1, 2, 3, 5, 7, 11, 15, 22]
    assert len(hooks(5)) == 5


def test_mn_character_examples():
    assert mn_character((2, 1, 1), (4,)) == 1
    assert mn_character((2, 2), (4,)) == 0
    assert mn_character((2,), (1, 1)) == 1
    with pytest.raises(SizeMismatch):
        mn_character((2,), (1,))


def test_mn_character_hook_rule():
    for d in range(1, 9):
        for s in range(d):
            assert mn_character((d - s,) + (1,) * s, (d,)) == (-1) ** s


def test_mn_character_against_frobenius_formula():
    for n in range(1, 6):
        for lam in partitions_of(n):
            for mu in partitions_of(n):
                assert mn_character(lam, mu) == frobenius_character(lam, mu), (lam, mu)


def test_schur_trivial_and_hook_examples():
    assert schur_principal(()) == QRational(1)
    expected = QRational(QLaurent.monomial(1)) / q_int(2)
    assert schur_principal((2,)) * (QLaurent.monomial(1) - QLaurent.monomial(-1)) ** 2 == expected


def test_schur_matches_hook_specialisation_up_to_8():
    ds = QLaurent.monomial(1) - QLaurent.monomial(-1)
    for d in range(1, 9):
        for s in range(d):
            lam = (d - s,) + (1,) * s
            assert schur_principal(lam) * ds ** d == hook_schur_closed(d, s)
            expo = d * (d - 1) // 2 - d * s
            assert hook_schur_closed(d, s) == QRational(QLaurent.monomial(expo)) / (
                q_int(d) * q_factorial(d - s - 1) * q_factorial(s))


def test_schur_not_contained():
    with pytest.raises(NotContained):
        schur_principal((1,), (2,))


def _numeric_limit(lam, mu, nu, q, n):
    return skew_schur_numeric(lam, mu, principal_variables(q, nu, n))


@pytest.mark.parametrize("q", [2, 3, Fraction(7, 3)])
def test_schur_single_box_with_nu(q):
    # s_(1) at x_1 = q^(1/2), x_i = q^(-i+1/2) for i >= 2: a geometric tail for q > 1
    with mpmath.workdps(40):
        x = mpmath.mpf(q.numerator) / q.denominator if isinstance(q, Fraction) else mpmath.mpf(q)
        value = evaluate_qrational(schur_principal((1,), (), (1,)), x)
        direct = mpmath.sqrt(x) + x ** mpmath.mpf(-1.5) / (1 - 1 / x)
        assert mpmath.almosteq(value, direct, rel_eps=mpmath.mpf(10) ** -30)


@pytest.mark.parametrize("lam,mu,nu", [((2, 1), (), ()), ((2, 1), (1,), ()), ((3, 1), (1,), (1,)),
                                       ((2, 2), (1,), (2, 1)), ((1, 1, 1), (), (1,))])
def test_schur_against_branching_rule(lam, mu, nu):
    with mpmath.workdps(40):
        for q in (2, 3, mpmath.mpf(7) / 3):
            value = evaluate_qrational(schur_principal(lam, mu, nu), q)
            # x_i decays like q^(-i): 60 variables leave a tail far below the tolerance
            numeric = _numeric_limit(lam, mu, nu, q, 60)
            assert mpmath.almosteq(value, numeric, rel_eps=mpmath.mpf(10) ** -12), (lam, mu, nu, q)


def test_hook_lengths_and_contains():
    assert sorted(hook_lengths((2, 1))) == [1, 1, 3]
    assert contains((3, 2), (2, 2)) and not contains((3,), (1, 1))
