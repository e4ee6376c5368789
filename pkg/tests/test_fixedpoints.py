import pytest

from parmac.fixedpoints import FixedPointVector, apply_word, h_normalize, h_scalar
from parmac.qt import q, t
from parmac.shapes import FixedPointLabel, parse_weights


def lab(mu, w):
    return FixedPointLabel(mu, parse_weights(w))


def test_h_scalar():
    assert h_scalar((2, 1)) == -q * t
    assert h_scalar((3, 1)) == q * t ** 3


def test_basis_switch_roundtrip():
    V = FixedPointVector.basis_vector(lab((2, 1), "t,q"), "H")
    assert h_normalize(h_normalize(V, "I"), "H") == V


def test_d_plus_on_I_vector():
    V = FixedPointVector.basis_vector(lab((2, 1), "t,q"), "I")
    out = apply_word(V, "d+")
    assert out == FixedPointVector.basis_vector(lab((3, 1), "t^2,t,q"), "I", -t ** 2)


def test_T_and_inverse_cancel():
    V = FixedPointVector.basis_vector(lab((3, 1), "t^2,t,q"), "H")
    assert apply_word(V, "T1,T1inv") == V
    assert apply_word(V, "T2inv,T2") == V


def test_quadratic_relation():
    # the geometric operator has eigenvalues 1 and -t
    V = FixedPointVector.basis_vector(lab((3, 1), "t^2,q,t"), "I")
    T1 = apply_word(V, "T1")
    assert apply_word(V, "T1,T1") == T1.scale(1 - t) + V.scale(t)


def test_bad_letter():
    V = FixedPointVector.basis_vector(lab((2, 1), "t,q"), "H")
    with pytest.raises(ValueError):
        apply_word(V, "zz")
