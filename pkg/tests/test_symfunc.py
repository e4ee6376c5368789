import pytest

from parmac.qt import ONE, QT, t
from parmac.shapes import partitions
from parmac.symfunc import (
    DegreeOverflowError, SymFunc, VkElement, alphabet_scale_sym, convert_basis, e_sym,
    from_finite_variables, rule_one_minus_t, specialize,
)
from parmac.xpoly import XPoly


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_basis_roundtrips(n):
    for lam in partitions(n):
        f = SymFunc({lam: ONE}, "monomial")
        for b in ("powersum", "elementary"):
            assert convert_basis(convert_basis(f, b), "monomial") == f


def test_e2_in_powersums():
    p = convert_basis(e_sym(2), "powersum")
    assert p == SymFunc({(1, 1): QT.coerce(1) / 2, (2,): QT.coerce(-1) / 2}, "powersum")


def test_plethystic_scaling_of_e1():
    assert alphabet_scale_sym(e_sym(1), rule_one_minus_t) == SymFunc({(1,): (1 - t).inverse()}, "monomial")


def test_degree_bound_enforced():
    with pytest.raises(DegreeOverflowError):
        VkElement(0, {((3,), ()): ONE}, D=2)


def test_finite_variable_lift_roundtrip():
    x = [XPoly.variable(4, i) for i in range(1, 5)]
    f = (x[0] + x[1] + x[2]) * x[3]
    F = from_finite_variables(f, 3, 1)
    assert F == VkElement.from_sym(e_sym(1), 1).y_mul(1)
    assert specialize(F, 3) == f


def test_e1_multiplication():
    F = VkElement.from_sym(e_sym(1), 0)
    assert F.e1_mul() == VkElement.from_sym(convert_basis(
        SymFunc({(1, 1): QT.coerce(2), (2,): ONE}, "monomial"), "monomial"), 0)
