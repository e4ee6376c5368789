import pytest

from parmac.polyrep import (
    J_vk, build_Htilde, dminus_poly, dplus_poly, e1_chain, modify, sfT_apply, sfT_inverse_apply,
    unmodify, w0_twist, w0_twist_inverse,
)
from parmac.shapes import SplitIndex
from parmac.symfunc import VkElement, e_sym
from parmac.verify import e1_sources


def test_d_minus_of_constant_is_e1():
    assert dminus_poly(VkElement.one(1)) == VkElement.from_sym(e_sym(1), 0)


def test_d_minus_of_y1_is_minus_e2():
    assert dminus_poly(VkElement.y_monomial((1,))) == VkElement.from_sym(e_sym(2), 0).scale(-1)


def test_d_plus_raises_k():
    assert dplus_poly(VkElement.one(1)).k == 2


def test_T_inverse():
    F = VkElement.y_monomial((2, 0, 1)) + VkElement.from_sym(e_sym(2), 3)
    for i in (1, 2):
        assert sfT_inverse_apply(i, sfT_apply(i, F)) == F


def test_twist_and_modify_invert():
    idx = SplitIndex((1,), (0, 1))
    J = J_vk(idx)
    assert w0_twist_inverse(w0_twist(J)) == J
    H = build_Htilde(idx)
    assert modify(unmodify(H, idx), idx) == H


def test_chain_is_e1_on_htilde():
    for src in e1_sources(4, 2):
        H = build_Htilde(src)
        assert e1_chain(H) == H.e1_mul(), src


@pytest.mark.parametrize("k", [1, 2, 3])
def test_htilde_normalization(k):
    assert build_Htilde(SplitIndex((), (0,) * k)) == VkElement.one(k)
    assert build_Htilde(SplitIndex((1,), (0,) * k)) == VkElement.from_sym(e_sym(1), k)
