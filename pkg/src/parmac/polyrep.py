"""The polynomial representation on V = sum_k Lambda (x) K[y_1..y_k] and the modified functions H~."""

from __future__ import annotations

from .nonsym import longest_word
from .partial import build_J
from .qt import QT, t as T_VAR
from .shapes import SplitIndex, sort_and_n
from .symfunc import (
    VkElement, alphabet_scale, alphabet_shift, degree_bound, from_finite_variables,
    omega_extract, rule_tinv_minus_one,
)


def _check_index(i, k):
    if not 1 <= i < k:
        raise IndexError(f"operator index {i} out of range for k={k}")


def sfT_apply(i, F: VkElement) -> VkElement:
    """s_i F + (t-1) y_i (F - s_i F)/(y_{i+1} - y_i)."""
    _check_index(i, F.k)
    return F.y_swap(i) + F.y_divided_difference(i).y_mul(i).scale(T_VAR - 1)


def sfT_inverse_apply(i, F: VkElement) -> VkElement:
    """t^{-1}(T_i + t - 1), from (T_i - 1)(T_i + t) = 0."""
    return (sfT_apply(i, F) + F.scale(T_VAR - 1)).scale(T_VAR.inverse())


def sfY_apply(i, F: VkElement) -> VkElement:
    if not 1 <= i <= F.k:
        raise IndexError(f"y_{i} out of range for k={F.k}")
    return F.y_mul(i)


def dplus_poly(F: VkElement) -> VkElement:
    """T_1 ... T_k F(X + (t-1) y_{k+1})."""
    G = alphabet_shift(F, 1, F.k + 1)
    for i in range(F.k, 0, -1):
        G = sfT_apply(i, G)
    return G


def dminus_poly(F: VkElement) -> VkElement:
    return omega_extract(F)


def e1_chain(F: VkElement) -> VkElement:
    """d_- T_k^{-1} ... T_1^{-1} d_+ F."""
    G = dplus_poly(F)
    for i in range(1, F.k + 1):
        G = sfT_inverse_apply(i, G)
    return dminus_poly(G)


# --------------------------------------------------------------------------
# Demazure-Lusztig operators acting on the y-block of V_k

def dl_y_apply(i, F: VkElement) -> VkElement:
    """t s_i F + (t-1) y_{i+1} (F - s_i F)/(y_{i+1} - y_i)."""
    _check_index(i, F.k)
    return F.y_swap(i).scale(T_VAR) + F.y_divided_difference(i).y_mul(i + 1).scale(T_VAR - 1)


def dl_y_inverse_apply(i, F: VkElement) -> VkElement:
    return (dl_y_apply(i, F) + F.scale(1 - T_VAR)).scale(T_VAR.inverse())


def w0_twist(F: VkElement) -> VkElement:
    """t^{-l(w0)} w0 T_{w0} in the y-block."""
    k = F.k
    if k <= 1:
        return F
    word = longest_word(k)
    for i in reversed(word):
        F = dl_y_apply(i, F)
    F = F.y_permute([k - 1 - j for j in range(k)])
    return F.scale(QT.monomial(0, -len(word)))


def w0_twist_inverse(F: VkElement) -> VkElement:
    k = F.k
    if k <= 1:
        return F
    word = longest_word(k)
    F = F.scale(QT.monomial(0, len(word)))
    F = F.y_permute([k - 1 - j for j in range(k)])
    for i in word:
        F = dl_y_inverse_apply(i, F)
    return F


def lift_m(idx: SplitIndex):
    """Symmetric variable count used to lift J: enough for a unique lift."""
    return max(idx.size, len(idx.lam), 1)


def J_vk(idx: SplitIndex, D=None) -> VkElement:
    """J_(lam|gam) as an element of V_k."""
    m = lift_m(idx)
    J = build_J(idx.with_m(m))
    return from_finite_variables(J.body, m, idx.k, degree_bound(D))


def htilde_normalization(idx: SplitIndex) -> QT:
    _, nstat = sort_and_n(idx.lam + idx.gamma)
    return QT.monomial(0, nstat + idx.size)


def modify(F: VkElement, idx: SplitIndex) -> VkElement:
    """[F(X/(t^{-1}-1))]^* times the H~ normalization of idx."""
    G = alphabet_scale(F, rule_tinv_minus_one).star()
    return G.scale(htilde_normalization(idx))


def unmodify(H: VkElement, idx: SplitIndex) -> VkElement:
    """Inverse of modify."""
    G = H.scale(htilde_normalization(idx).inverse()).star()
    return alphabet_scale(G, lambda i: QT.monomial(0, -i) - 1)


def build_Htilde(idx: SplitIndex, D=None) -> VkElement:
    """t^{n(sort(lam,gam)) + |lam|+|gam|} [J^{w0}(X/(t^{-1}-1) | y)]^*."""
    D = degree_bound(D)
    if idx.size > D:
        raise ValueError(f"|lambda|+|gamma| = {idx.size} exceeds the degree bound D={D}")
    return modify(w0_twist(J_vk(idx, D)), idx)
