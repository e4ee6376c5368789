import pytest

from parmac.nonsym import (
    NonReducedWordError, calibrate_raising, compute_E, dl_apply, dl_inverse_apply, evaluation_check,
    descent_relation_holds, one_row_P, t_word_apply,
)
from parmac.qt import ONE, q, t
from parmac.shapes import compositions
from parmac.xpoly import XPoly


def x(n, i):
    return XPoly.variable(n, i)


def test_two_variable_E():
    assert compute_E((1, 0)) == x(2, 1)
    assert compute_E((0, 1)) == x(2, 2) + x(2, 1).scale((1 - t) / (1 - q * t))


def test_leading_monomial_is_monic():
    for nu in compositions(3, 3):
        assert compute_E(nu).coefficient_of(nu) == ONE


def test_two_construction_paths_agree():
    for nu in compositions(3, 3):
        assert compute_E(nu, "canonical") == compute_E(nu, "sorted")


def test_raising_calibration_is_unique():
    assert calibrate_raising(max_size=2, max_n=3) == [("left", -1, 1)]


def test_symmetric_one_row_case():
    E = compute_E((0, 2))
    from parmac.partial import hecke_symmetrize

    S = hecke_symmetrize(E, 2)
    P = S.scale(S.coefficient_of((2, 0)).inverse())
    assert P == one_row_P(2)


@pytest.mark.parametrize("nu,i", [((1, 0, 2), 1), ((0, 2, 1), 2), ((2, 0, 1), 1)])
def test_descent_relation(nu, i):
    assert descent_relation_holds(nu, i)


def test_inverse_operator():
    f = compute_E((0, 1, 2))
    assert dl_inverse_apply(2, dl_apply(2, f)) == f


def test_non_reduced_word_rejected():
    with pytest.raises(NonReducedWordError):
        t_word_apply([1, 1], compute_E((0, 1)))


@pytest.mark.parametrize("lam", [(0, 1), (1, 0, 2), (2, 0, 1), (0, 0, 3), (1, 1, 0, 2)])
def test_evaluation_formula(lam):
    assert evaluation_check(lam)[2]
