"""Partially symmetric Macdonald polynomials P, their integral forms J, and the T-action on J."""

from __future__ import annotations

from dataclasses import dataclass

from .nonsym import compute_E, dl_apply, dl_inverse_apply, longest_word
from .qt import ONE, QT, t as T_VAR
from .shapes import SplitIndex, arm, leg
from .xpoly import XPoly


class IntegralityError(ArithmeticError):
    pass


@dataclass(frozen=True)
class PartiallySymmetricPoly:
    index: SplitIndex
    n: int
    body: XPoly
    form: str = "P"


def hecke_symmetrize(f: XPoly, m: int) -> XPoly:
    """Sum over w in S_m of T_w f, using P+_m = P+_{m-1} (1 + T_{m-1} + T_{m-1}T_{m-2} + ...)."""
    if m > f.n:
        raise ValueError(f"block size {m} exceeds variable count {f.n}")
    for r in range(m, 1, -1):
        acc = f
        for j in range(1, r):
            acc = f + dl_apply(j, acc)
        f = acc
    return f


def hecke_symmetrize_direct(f: XPoly, m: int) -> XPoly:
    """Same sum by enumerating S_m; used to test the factored form."""
    from itertools import permutations

    total = XPoly(f.n)
    for perm in permutations(range(m)):
        word = _reduced_word(list(perm))
        g = f
        for i in reversed(word):
            g = dl_apply(i, g)
        total = total + g
    return total


def _reduced_word(perm):
    """A reduced word (bubble sort) whose product has one-line notation ``perm``."""
    perm = list(perm)
    word = []
    changed = True
    while changed:
        changed = False
        for i in range(len(perm) - 1):
            if perm[i] > perm[i + 1]:
                perm[i], perm[i + 1] = perm[i + 1], perm[i]
                word.append(i + 1)
                changed = True
    return word[::-1]


def t_int(j):
    return sum((QT.monomial(0, e) for e in range(j)), QT.coerce(0))


def t_factorial(j):
    out = ONE
    for i in range(1, j + 1):
        out = out * t_int(i)
    return out


def stabilizer_poincare(lam):
    """S_lam(t): product of t-factorials of the multiplicities of lam's parts."""
    out = ONE
    for v in set(lam):
        out = out * t_factorial(list(lam).count(v))
    return out


def build_P(idx: SplitIndex, n=None) -> PartiallySymmetricPoly:
    m = idx.m if n is None else n - idx.k
    lam = idx.padded(m)
    E = compute_E(lam + idx.gamma)
    body = hecke_symmetrize(E, m).scale(stabilizer_poincare(lam).inverse())
    return PartiallySymmetricPoly(idx.with_m(m), m + idx.k, body, "P")


def j_scalar(idx: SplitIndex) -> QT:
    """Product of (1 - q^l t^{a~+1}) over lambda^- boxes and (1 - q^{l+1} t^{a+1}) over gamma boxes."""
    nu = idx.minus_composition(len(idx.lam))
    m = len(idx.lam)
    out = ONE
    for i in range(1, len(nu) + 1):
        for j in range(1, nu[i - 1] + 1):
            box = (i, j)
            l = leg(nu, box)
            if i <= m:
                out = out * (1 - QT.monomial(l, arm(nu, box, "a_tilde") + 1))
            else:
                out = out * (1 - QT.monomial(l + 1, arm(nu, box, "a") + 1))
    return out


def check_integral(f: XPoly, label=""):
    for e, c in f.terms.items():
        if not c.is_integral_qt():
            raise IntegralityError(f"non-integral coefficient {c} at x^{e} {label}".rstrip())


def build_J(idx: SplitIndex, n=None, check=True) -> PartiallySymmetricPoly:
    P = build_P(idx, n)
    body = P.body.scale(j_scalar(idx))
    if check:
        check_integral(body, f"in J{idx}")
    return PartiallySymmetricPoly(P.index, P.n, body, "J")


def tj_stat(idx: SplitIndex, i):
    """(l, a) of u = (m+i, gamma_{i+1}+1) in dg(lambda^- | gamma)."""
    m = len(idx.lam)
    nu = idx.minus_composition(m)
    box = (m + i, idx.gamma[i] + 1)
    return leg(nu, box), arm(nu, box, "a")


def tj_action(i, idx: SplitIndex):
    """T_{m+i} J_(lam|gam) = c1 J_(lam|s_i gam) + c0 J_(lam|gam) for gamma_i > gamma_{i+1}."""
    g = idx.gamma
    if not 1 <= i < len(g):
        raise IndexError(f"slot {i} out of range for gamma={g}")
    if not g[i - 1] > g[i]:
        raise ValueError(f"tj_action needs gamma_{i} > gamma_{i + 1}, got {g}")
    l, a = tj_stat(idx, i)
    den = 1 - QT.monomial(l + 1, a)
    c1 = (1 - QT.monomial(l + 1, a + 1)) / den
    c0 = -(1 - T_VAR) / den
    sg = list(g)
    sg[i - 1], sg[i] = sg[i], sg[i - 1]
    return {SplitIndex(idx.lam, tuple(sg), idx.m): c1, idx: c0}


def tj_expansion(i, idx: SplitIndex):
    """T_{m+i} J in all three cases as {index: coefficient}."""
    g = idx.gamma
    if g[i - 1] > g[i]:
        return tj_action(i, idx)
    if g[i - 1] == g[i]:
        return {idx: T_VAR}
    # gamma_i < gamma_{i+1}: invert the two-term relation via the quadratic law
    sg = list(g)
    sg[i - 1], sg[i] = sg[i], sg[i - 1]
    src = SplitIndex(idx.lam, tuple(sg), idx.m)
    rel = tj_action(i, src)
    c1, c0 = rel[idx], rel[src]
    # T J_src = c1 J + c0 J_src  =>  T J = (T^2 J_src - c0 T J_src)/c1
    # with T^2 = (t-1) T + t
    out = {}
    coef_TJsrc = (T_VAR - 1 - c0) / c1
    coef_Jsrc = T_VAR / c1
    out[idx] = coef_TJsrc * c1
    out[src] = coef_TJsrc * c0 + coef_Jsrc
    return {k: v for k, v in out.items() if not v.is_zero()}


def stability_probe(idx: SplitIndex, m, m_plus) -> bool:
    """P at m_plus symmetric variables with the extra ones set to 0 equals P at m."""
    small = build_P(idx.with_m(m)).body
    big = build_P(idx.with_m(m_plus)).body
    k = idx.k
    terms = {}
    for e, c in big.terms.items():
        if any(e[m:m_plus]):
            continue
        terms[e[:m] + e[m_plus:]] = c
    return XPoly(m + k, terms) == small


def w0_twist_finite(f: XPoly, m, k) -> XPoly:
    """t^{-l(w0)} w0 T_{w0} on the variables m+1..m+k of f."""
    if k <= 1:
        return f
    word = longest_word(k, offset=m)
    for i in reversed(word):
        f = dl_apply(i, f)
    perm = list(range(f.n))
    for j in range(k):
        perm[m + j] = m + k - 1 - j
    f = f.permute_variables(perm)
    return f.scale(QT.monomial(0, -len(word)))


__all__ = [
    "hecke_symmetrize", "hecke_symmetrize_direct", "build_P", "j_scalar", "build_J", "tj_action", "tj_expansion",
    "stability_probe", "w0_twist_finite", "dl_inverse_apply", "IntegralityError",
]
