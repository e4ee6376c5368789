import pytest

from parmac.partial import (
    build_J, build_P, check_integral, hecke_symmetrize, hecke_symmetrize_direct, j_scalar,
    stability_probe, tj_expansion,
)
from parmac.nonsym import compute_E, dl_apply
from parmac.qt import ONE
from parmac.shapes import SplitIndex


def test_symmetrizer_two_routes_agree():
    E = compute_E((0, 1, 2))
    assert hecke_symmetrize(E, 2) == hecke_symmetrize_direct(E, 2)


def test_P_is_monic_in_leading_term():
    idx = SplitIndex((1,), (0, 1), m=2)
    P = build_P(idx)
    assert P.body.coefficient_of((1, 0, 0, 1)) == ONE


def test_J_is_P_times_scalar():
    idx = SplitIndex((2,), (1, 0))
    assert build_J(idx).body == build_P(idx).body.scale(j_scalar(idx))


@pytest.mark.parametrize("idx", [SplitIndex((), (0, 1)), SplitIndex((1,), (1, 0)), SplitIndex((2, 1), (0,))])
def test_J_integral(idx):
    check_integral(build_J(idx).body)


@pytest.mark.parametrize("idx", [
    SplitIndex((), (0, 1, 0), m=2), SplitIndex((1,), (1, 1), m=2), SplitIndex((1,), (2, 0), m=2),
    SplitIndex((), (1, 0, 2), m=1),
])
def test_tj_expansion_matches_operator(idx):
    for i in range(1, idx.k):
        lhs = dl_apply(idx.m + i, build_J(idx).body)
        rhs = None
        for tgt, c in tj_expansion(i, idx).items():
            term = build_J(tgt).body.scale(c)
            rhs = term if rhs is None else rhs + term
        assert lhs == rhs


def test_stability():
    assert stability_probe(SplitIndex((1,), (0, 1)), 2, 3)
