"""Algebraic identities checked on generated inputs (derandomized, see conftest)."""

from hypothesis import given, strategies as st

from parmac.nonsym import dl_apply, evaluation_check
from parmac.partial import build_J, check_integral, stability_probe
from parmac.polyrep import dl_y_apply, e1_chain, sfT_apply, w0_twist, w0_twist_inverse
from parmac.qt import QT, t
from parmac.shapes import FixedPointLabel, compositions, phi, phi_inverse, split_indices
from parmac.symfunc import VkElement
from parmac.xpoly import XPoly

small_int = st.integers(-3, 3).filter(bool)
qt_coeff = st.builds(QT.monomial, st.integers(-1, 2), st.integers(-1, 2), small_int)


@st.composite
def xpolys(draw, n=3, max_deg=2):
    exps = draw(st.lists(st.tuples(*[st.integers(0, max_deg)] * n), min_size=1, max_size=4))
    return XPoly(n, {e: draw(qt_coeff) for e in exps})


@st.composite
def vk_elements(draw, k=3, max_x=2, max_y=2):
    lams = st.sampled_from([(), (1,), (2,), (1, 1)][: max_x + 2])
    keys = draw(st.lists(st.tuples(lams, st.tuples(*[st.integers(0, max_y)] * k)), min_size=1, max_size=4))
    return VkElement(k, {key: draw(qt_coeff) for key in keys})


def quadratic_gap(T, f, a, b):
    """T^2 f - a T f - b f, which vanishes when (T - r1)(T - r2) = 0 with r1 + r2 = a, r1 r2 = -b."""
    Tf = T(f)
    return T(Tf) - Tf.scale(a) - f.scale(b)


@given(xpolys(), st.sampled_from([1, 2]))
def test_x_side_quadratic(f, i):
    assert quadratic_gap(lambda g: dl_apply(i, g), f, t - 1, t).is_zero()


@given(xpolys())
def test_x_side_braid(f):
    T1, T2 = (lambda g: dl_apply(1, g)), (lambda g: dl_apply(2, g))
    assert T1(T2(T1(f))) == T2(T1(T2(f)))


@given(vk_elements(), st.sampled_from([1, 2]))
def test_y_side_quadratic(F, i):
    assert quadratic_gap(lambda g: dl_y_apply(i, g), F, t - 1, t).is_zero()
    assert quadratic_gap(lambda g: sfT_apply(i, g), F, 1 - t, t).is_zero()


@given(vk_elements())
def test_y_side_braid(F):
    for op in (dl_y_apply, sfT_apply):
        T1, T2 = (lambda g: op(1, g)), (lambda g: op(2, g))
        assert T1(T2(T1(F))) == T2(T1(T2(F)))


def starred(op):
    """op with t replaced by 1/t."""
    return lambda F: op(F.star()).star()


@given(vk_elements(), st.sampled_from([1, 2]))
def test_T_conversion(F, i):
    # t * (w0 T*_{w0}) T*_i (w0 T*_{w0})^{-1} agrees with the polynomial-representation T_i
    twist, untwist = starred(w0_twist), starred(w0_twist_inverse)
    T_star = starred(lambda G: dl_y_apply(i, G))
    assert twist(T_star(untwist(F))).scale(t) == sfT_apply(i, F)


@given(st.integers(0, 3).flatmap(lambda k: vk_elements(k=k)))
def test_chain_equals_e1_multiplication(F):
    assert e1_chain(F) == F.e1_mul()


SMALL_INDICES = [idx for n in range(4) for k in range(3) for idx in split_indices(n, k)]


@given(st.sampled_from(SMALL_INDICES), st.integers(0, 1))
def test_stability(idx, extra):
    m = max(len(idx.lam), 1) + extra
    assert stability_probe(idx, m, m + 1)


@given(st.sampled_from(SMALL_INDICES))
def test_J_integrality(idx):
    check_integral(build_J(idx).body)


ALL_INDICES = [idx for n in range(6) for k in range(4) for idx in split_indices(n, k)]


@given(st.sampled_from(ALL_INDICES))
def test_phi_roundtrip(idx):
    lab = phi_inverse(idx)
    assert isinstance(lab, FixedPointLabel)
    assert phi(lab) == idx
    assert phi_inverse(phi(lab)) == lab


EVAL_CASES = [c for n in range(1, 5) for s in range(6) for c in compositions(s, n)]


@given(st.sampled_from(EVAL_CASES))
def test_evaluation_formula(comp):
    assert evaluation_check(comp)[2]
