import pytest

from parmac.pieri import (
    brute_force_expand, chain_terms, closed_expansion, coefficient_C_geom,
    cycled_weights, enumerate_support, match_check,
)
from parmac.qt import q, t
from parmac.shapes import FixedPointLabel, SplitIndex, parse_weights, phi_inverse, split_indices

SRC = SplitIndex((), (0, 1))


def test_support_targets():
    targets = [tgt for tgt, _ in enumerate_support(SRC)]
    assert set(targets) == {SplitIndex((2,), (0, 0)), SplitIndex((1,), (0, 1))}
    assert len(enumerate_support(SplitIndex((), (1, 0)))) == 3


def test_closed_coefficients():
    exp = closed_expansion(SRC)
    assert exp[SplitIndex((2,), (0, 0))] == 1 / (1 - q * t)
    assert exp[SplitIndex((1,), (0, 1))] == (1 - q) / ((1 - t) * (1 - q * t))


def test_datum_fields():
    d = dict(enumerate_support(SRC))[SplitIndex((1,), (0, 1))]
    assert d.target == SplitIndex((1,), (0, 1))
    assert d.to_json()["eta"] == [0, 1]


@pytest.mark.parametrize("size", [0, 1, 2, pytest.param(3, marks=pytest.mark.slow)])
def test_oracle_agrees(size):
    for k in (0, 1, 2):
        for src in split_indices(size, k):
            assert brute_force_expand(src) == closed_expansion(src), src


@pytest.mark.parametrize("src", [SplitIndex((1,), (0, 1)), SplitIndex((), (2, 0)), SplitIndex((1, 1), (0,))])
def test_oracle_at_larger_m(src):
    assert brute_force_expand(src, src.size + 3) == closed_expansion(src)


def test_cycled_weights_drop_last():
    w = parse_weights("t,q")
    assert cycled_weights((2, 0), w, ()) == w
    assert cycled_weights((2, 0), w, (1,)) == ((2, 0), (0, 1))


def test_chain_terms_closed_equals_direct():
    lab = FixedPointLabel((2, 1), parse_weights("t,q"))
    for tm in chain_terms(lab):
        assert tm.coeff == tm.simplified


def test_geometric_coefficient():
    lab = FixedPointLabel((2, 1), parse_weights("t,q"))
    assert coefficient_C_geom(lab, (2, 0), (1, 2)) == (t - 1) / (t - q)
    assert coefficient_C_geom(lab, (2, 0), (1,)) == (1 - q) / (t - q)


@pytest.mark.parametrize("src", [SRC, SplitIndex((), (1, 0)), SplitIndex((1,), (2, 0)), SplitIndex((2,), (0, 1))])
def test_match_predicate(src):
    for tgt, d in enumerate_support(src):
        r = match_check(src, tgt, d)
        assert r["match"] and r["closed_ok"] and r["c_r_ok"]


def test_phi_label_of_source():
    assert phi_inverse(SRC) == FixedPointLabel((2, 1), parse_weights("t,q"))
