from fractions import Fraction

import pytest

from parmac.qt import ONE, QT, QTZeroDivisionError, ZERO, q, sqrt_t, t


def test_canonical_text_is_stable_under_rewriting():
    a = (1 - q * t) / (1 - t)
    b = ((1 - q * t) * (1 + t)) / ((1 - t) * (1 + t))
    assert a == b
    assert str(a) == str(b)


def test_sign_normalized_denominator():
    assert str((t - 1) / (t - q)) == str((1 - t) / (q - t))


def test_half_integer_t_powers():
    assert sqrt_t * sqrt_t == t
    assert not sqrt_t.is_integral_qt()
    assert (t * q + 1).is_integral_qt()
    assert not (ONE / (1 - t)).is_integral_qt()


def test_star_inverts_t_and_fixes_q():
    x = (1 - q * t ** 2) / (1 - t)
    assert x.star() == (1 - q * t ** -2) / (1 - t ** -1)
    assert x.star().star() == x
    assert q.star() == q


def test_parse_roundtrip():
    for x in [ZERO, ONE, (1 - q) / ((1 - t) * (1 - q * t)), -q * t ** 3 + 2, sqrt_t * q / (1 + t)]:
        assert QT.parse(str(x)) == x


def test_evaluate():
    x = (1 - q * t) / (1 - t)
    assert x.evaluate(q=2, t=3) == QT.coerce(Fraction(5, 2))


def test_division_by_zero():
    with pytest.raises(QTZeroDivisionError):
        ONE / (t - t)
