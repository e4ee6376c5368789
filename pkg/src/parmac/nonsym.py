"""Demazure-Lusztig operators and nonsymmetric Macdonald polynomials E_nu."""

from __future__ import annotations

import threading
from fractions import Fraction

from .qt import ONE, QT, t as T_VAR
from .shapes import arm, leg
from .xpoly import XPoly, divided_difference, shift_variable


class NonReducedWordError(ValueError):
    pass


def dl_apply(i, f: XPoly) -> XPoly:
    """T_i f = t s_i f + (t-1) x_{i+1} (f - s_i f)/(x_{i+1} - x_i)."""
    if not 1 <= i < f.n:
        raise IndexError(f"T_{i} needs 1 <= i < {f.n}")
    swapped = f.swap(i).scale(T_VAR)
    corr = shift_variable(divided_difference(f, i), i + 1).scale(T_VAR - 1)
    return swapped + corr


def dl_inverse_apply(i, f: XPoly) -> XPoly:
    """T_i^{-1} = t^{-1}(T_i + 1 - t)."""
    return (dl_apply(i, f) + f.scale(1 - T_VAR)).scale(T_VAR.inverse())


def word_permutation(word, n):
    """One-line notation of s_{i_1} ... s_{i_l} (0-based images)."""
    perm = list(range(n))
    for i in word:
        perm[i - 1], perm[i] = perm[i], perm[i - 1]
    return perm


def inversions(perm):
    return sum(1 for a in range(len(perm)) for b in range(a + 1, len(perm)) if perm[a] > perm[b])


def check_reduced(word, n):
    for i in word:
        if not 1 <= i < n:
            raise NonReducedWordError(f"index {i} out of range for n={n}")
    if inversions(word_permutation(word, n)) != len(word):
        raise NonReducedWordError(f"word {tuple(word)} is not reduced")


def t_word_apply(word, f: XPoly, apply=dl_apply) -> XPoly:
    """T_{i_1} ... T_{i_l} f; the rightmost letter acts first."""
    check_reduced(word, f.n)
    for i in reversed(tuple(word)):
        f = apply(i, f)
    return f


def longest_word(k, offset=0):
    """A reduced word of the longest element of S_k, letters shifted by ``offset``."""
    return tuple(offset + j for r in range(1, k) for j in range(r, 0, -1))


# --------------------------------------------------------------------------
# E_nu

def descent_coefficient(nu, i) -> QT:
    """(1-t)/(1-q^{l+1} t^a) for the box (i, nu_{i+1}+1); requires nu_i > nu_{i+1}."""
    if not nu[i - 1] > nu[i]:
        raise ValueError(f"position {i} is not a descent of {nu}")
    box = (i, nu[i] + 1)
    l, a = leg(nu, box), arm(nu, box, "a")
    return (1 - T_VAR) / (1 - QT.monomial(l + 1, a))


# Raising step, as (orientation, s, u):
#   "right": E_{(nu_2..nu_n, nu_1+1)} = q^{u nu_1} x_n E_nu(q^s x_n, x_1, ..., x_{n-1})
#   "left":  E_{(nu_n+1, nu_1..nu_{n-1})} = q^{u nu_n} x_1 E_nu(x_2, ..., x_n, q^s x_1)
# RAISING is the candidate selected by calibrate_raising(), frozen here.
RAISING = ("left", -1, 1)
RAISING_CANDIDATES = (
    ("right", -1, 1), ("right", 1, 0), ("right", 1, -1),
    ("left", -1, 1), ("left", 1, -1), ("left", 1, 0),
)


def raise_step(E: XPoly, nu, pair=RAISING) -> XPoly:
    orient, s, u = pair
    n = E.n
    out = {}
    if orient == "right":
        scale_by = nu[0]
        for e, c in E.terms.items():
            ne = e[1:] + (e[0] + 1,)
            out[ne] = c * QT.monomial(s * e[0], 0) if (s and e[0]) else c
    else:
        scale_by = nu[-1]
        for e, c in E.terms.items():
            ne = (e[-1] + 1,) + e[:-1]
            out[ne] = c * QT.monomial(s * e[-1], 0) if (s and e[-1]) else c
    res = XPoly(n, out, _clean=True)
    if u and scale_by:
        res = res.scale(QT.monomial(u * scale_by, 0))
    return res


class EMemo:
    """Thread-safe memo of E_nu keyed by (strategy, raising pair, nu)."""

    def __init__(self):
        self._data = {}
        self._lock = threading.Lock()

    def get(self, key):
        with self._lock:
            return self._data.get(key)

    def put(self, key, value):
        with self._lock:
            return self._data.setdefault(key, value)

    def clear(self):
        with self._lock:
            self._data.clear()

    def __len__(self):
        return len(self._data)


MEMO = EMemo()


def compute_E(nu, strategy="canonical", pair=RAISING) -> XPoly:
    """Nonsymmetric Macdonald polynomial E_nu in len(nu) variables.

    ``strategy`` picks the recursion path.  ``"canonical"`` lowers the degree
    as early as possible; ``"sorted"`` first sorts nu all the way to the
    arrangement the raising step consumes.  Both must agree.
    """
    nu = tuple(int(x) for x in nu)
    if any(x < 0 for x in nu):
        raise ValueError(f"negative entry in {nu}")
    if strategy not in ("canonical", "sorted"):
        raise ValueError(f"unknown strategy {strategy!r}")
    return _E(nu, strategy, tuple(pair))


def _E(nu, strategy, pair):
    key = (strategy, pair, nu)
    hit = MEMO.get(key)
    if hit is not None:
        return hit
    n = len(nu)
    if not any(nu):
        res = XPoly.constant(n, ONE)
    elif pair[0] == "right":
        res = _E_right(nu, strategy, pair)
    else:
        res = _E_left(nu, strategy, pair)
    return MEMO.put(key, res)


def _swapped(nu, j):
    mu = list(nu)
    mu[j - 1], mu[j] = mu[j], mu[j - 1]
    return tuple(mu)


def _E_right(nu, strategy, pair):
    n = len(nu)
    if strategy == "canonical":
        j = None if nu[-1] >= 1 else max(i for i in range(1, n + 1) if nu[i - 1] > 0)
    else:
        j = next((i for i in range(1, n) if nu[i - 1] > nu[i]), None)
    if j is None:
        prev = (nu[-1] - 1,) + nu[:-1]
        return raise_step(_E(prev, strategy, pair), prev, pair)
    # nu has a descent at j; E_{s_j nu} = (T_j + c) E_nu, invert the quadratic factor
    Emu = _E(_swapped(nu, j), strategy, pair)
    c = descent_coefficient(nu, j)
    num = dl_apply(j, Emu) - Emu.scale(T_VAR - 1 + c)
    return num.scale(((1 - c) * (T_VAR + c)).inverse())


def _E_left(nu, strategy, pair):
    n = len(nu)
    if strategy == "canonical":
        j = None if nu[0] >= 1 else min(i for i in range(1, n + 1) if nu[i - 1] > 0) - 1
    else:
        j = next((i for i in range(n - 1, 0, -1) if nu[i - 1] < nu[i]), None)
    if j is None:
        prev = nu[1:] + (nu[0] - 1,)
        return raise_step(_E(prev, strategy, pair), prev, pair)
    # nu has an ascent at j; mu = s_j nu has a descent there and E_nu = (T_j + c) E_mu
    mu = _swapped(nu, j)
    Emu = _E(mu, strategy, pair)
    return dl_apply(j, Emu) + Emu.scale(descent_coefficient(mu, j))


def descent_relation_holds(nu, i, pair=RAISING):
    """Check T_i E_nu = E_{s_i nu} - c E_nu at a descent i."""
    E = compute_E(nu, pair=pair)
    mu = list(nu)
    mu[i - 1], mu[i] = mu[i], mu[i - 1]
    lhs = dl_apply(i, E)
    rhs = compute_E(tuple(mu), pair=pair) - E.scale(descent_coefficient(nu, i))
    return lhs == rhs


def _qpoch(a: QT, r):
    out = ONE
    for i in range(r):
        out = out * (1 - a * QT.monomial(i, 0))
    return out


def one_row_P(r) -> XPoly:
    """Two-variable P_(r) from the q-binomial sum of g_r; an oracle independent of E."""
    qq, tt = QT.monomial(1, 0), T_VAR
    terms = {}
    norm = _qpoch(qq, r) / _qpoch(tt, r)
    for i in range(r + 1):
        c = _qpoch(tt, i) / _qpoch(qq, i) * _qpoch(tt, r - i) / _qpoch(qq, r - i)
        terms[(i, r - i)] = c * norm
    return XPoly(2, terms)


def _pair_ok(pair, max_size, max_n):
    from .shapes import compositions

    for n in range(1, max_n + 1):
        for size in range(max_size + 1):
            for nu in compositions(size, n):
                E = compute_E(nu, pair=pair)
                if E.coefficient_of(nu) != ONE:
                    return False
                if compute_E(nu, "sorted", pair) != E:
                    return False
                for i in range(1, n):
                    if nu[i - 1] > nu[i] and not descent_relation_holds(nu, i, pair):
                        return False
    for r in range(1, max_size + 1):
        E = compute_E((r, 0), pair=pair)
        if E + dl_apply(1, E) != one_row_P(r):
            return False
    return True


def calibrate_raising(max_size=3, max_n=3):
    """Raising candidates passing monicity, both recursion paths, every descent
    relation and the two-variable one-row P oracle."""
    return [pair for pair in RAISING_CANDIDATES if _pair_ok(pair, max_size, max_n)]


# --------------------------------------------------------------------------
# evaluation formula

def rho(n):
    return [Fraction(n - 1 - 2 * i, 2) for i in range(n)]


def sorting_permutation(lam):
    """u with u(lam) = lam_- (weakly increasing), shortest: stable sort positions (0-based)."""
    order = sorted(range(len(lam)), key=lambda i: (lam[i], i))
    u = [0] * len(lam)
    for pos, i in enumerate(order):
        u[i] = pos
    return u


def inversion_set(lam):
    """[(i, j, k)] for alpha = e_j - e_i (i < j, 0-based) with alpha + k delta in Inv(m_lam)."""
    n = len(lam)
    lam_minus = sorted(lam)
    u = sorting_permutation(lam)
    uinv = [0] * n
    for i, p in enumerate(u):
        uinv[p] = i
    out = []
    for i in range(n):
        for j in range(i + 1, n):
            pairing = lam_minus[j] - lam_minus[i]
            # u^{-1}(e_j - e_i) = e_{uinv[j]} - e_{uinv[i]} is positive iff uinv[j] < uinv[i]
            positive = uinv[j] < uinv[i]
            top = pairing - 1 if positive else pairing
            for k in range(1, top + 1):
                out.append((i, j, k))
    return out


def evaluation_rhs(lam) -> QT:
    n = len(lam)
    r = rho(n)
    lam_minus = sorted(lam)
    val = QT.monomial(0, sum(a * b for a, b in zip(r, lam_minus)))
    for i, j, k in inversion_set(lam):
        ar = r[j] - r[i]
        val = val * (1 - QT.monomial(k, 1 - ar)) / (1 - QT.monomial(k, -ar))
    return val


def evaluation_lhs(lam) -> QT:
    n = len(lam)
    E = compute_E(lam)
    point = [QT.monomial(0, -x) for x in rho(n)]
    return E.evaluate(point)


def evaluation_check(lam):
    lam = tuple(int(x) for x in lam)
    lhs = evaluation_lhs(lam)
    rhs = evaluation_rhs(lam)
    return lhs, rhs, lhs == rhs


__all__ = [
    "dl_apply", "dl_inverse_apply", "t_word_apply", "compute_E", "evaluation_check",
    "descent_coefficient", "descent_relation_holds", "calibrate_raising", "RAISING", "longest_word",
    "inversion_set", "NonReducedWordError", "one_row_P",
]
