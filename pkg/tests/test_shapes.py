import pytest

from parmac.qt import QT

from parmac.shapes import (
    FixedPointLabel, ShapeError, SplitIndex, arm, box_weight, c_I_shift, coleg, fixed_point_labels, leg,
    parse_weights, partitions, phi, phi_inverse, spectral_vector, split_indices, transpose,
)

NU = (1, 3, 2, 1, 3, 0, 1)


def test_leg_and_arm_variants():
    assert leg(NU, (3, 1)) == 1
    assert arm(NU, (3, 1), "a") == 4
    assert leg(NU, (2, 1)) == 2
    assert arm(NU, (2, 1), "a_tilde") == 4


def test_arm_with_taller_last_column():
    assert arm((1, 3, 2, 1, 3, 0, 2), (3, 1), "a") == 3


def test_coleg_and_spectral_vector():
    assert [coleg((0, 1), i) for i in (1, 2)] == [1, 0]
    assert spectral_vector((2, 0, 1)) == [(2, 0), (0, -2), (1, -1)]


def test_cyclic_shift():
    assert c_I_shift((3, 1, 2, 0), [1, 3]) == (2, 1, 4, 0)
    with pytest.raises(ShapeError):
        c_I_shift((1, 2), [])


def test_phi_examples():
    lab = FixedPointLabel((2, 1), parse_weights("q^0*t^1,q^1*t^0"))
    assert phi(lab) == SplitIndex((), (0, 1))
    assert phi_inverse(SplitIndex((), (1, 0))) == FixedPointLabel((2, 1), ((0, 1), (1, 0)))


def test_label_count_and_roundtrip():
    labs = fixed_point_labels(6, 3)
    assert len(labs) == 25
    for lab in labs:
        assert phi_inverse(phi(lab)) == lab


def test_split_index_normalizes_and_validates():
    assert SplitIndex((2, 0, 0), (1,)).lam == (2,)
    assert SplitIndex((2,), (1,)) == SplitIndex((2,), (1,), m=4)
    with pytest.raises(ShapeError):
        SplitIndex((1, 2), ())
    assert len(split_indices(2, 2)) == 2 + 2 + 3


def test_transpose():
    assert transpose((3, 1)) == (2, 1, 1)
    assert transpose(()) == ()


def test_weight_ratio_matches_arm_and_leg():
    checked = 0
    for size in range(7):
        for k in (2, 3):
            for idx in split_indices(size, k):
                w = phi_inverse(idx).w
                m = len(idx.lam)
                nu = idx.minus_composition(m)
                for i in range(1, k):
                    if idx.gamma[i - 1] > idx.gamma[i]:
                        u = (m + i, idx.gamma[i] + 1)
                        ratio = box_weight(w[i - 1]) / box_weight(w[i])
                        assert ratio == QT.monomial(leg(nu, u) + 1, -arm(nu, u, "a")), idx
                        checked += 1
    assert checked > 300


def test_arm_variants_agree_on_increasing_partitions():
    # partitions enter the diagrams in increasing order; there both counts see the same columns
    for n in range(1, 8):
        for lam in partitions(n):
            lam = lam[::-1]
            for i, h in enumerate(lam, start=1):
                for j in range(1, h + 1):
                    assert arm(lam, (i, j), "a") == arm(lam, (i, j), "a_tilde")
