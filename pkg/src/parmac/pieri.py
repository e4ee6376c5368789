"""Pieri rule for e_1 on the integral forms J, its geometric counterpart, and an independent oracle."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .fixedpoints import (
    FixedPointVector, Q_VAR, e1_geom, macdonald_pieri_d,
)
from .linsolve import solve_columns
from .partial import build_J
from .qt import ONE, QT, ZERO, t as T_VAR
from .shapes import (
    FixedPointLabel, SplitIndex, add_box, addable_boxes, arm, box_weight, leg,
    phi_inverse, plane_arm, plane_leg, sort_and_n, spectral_value, split_indices,
)
from .xpoly import XPoly

TINV = T_VAR.inverse()


@dataclass(frozen=True)
class PieriDatum:
    """One (chosen entry, I_1) choice and the compositions built from it."""

    source: SplitIndex
    chosen_entry: int
    I1: tuple
    eta: tuple
    mu_tilde: tuple
    h: int
    lambda_tilde: tuple

    @property
    def m(self):
        return len(self.mu_tilde)

    @property
    def target(self) -> SplitIndex:
        return SplitIndex(tuple(sorted(self.mu_tilde, reverse=True)), self.eta)

    def to_json(self):
        return {"chosen_entry": self.chosen_entry, "I1": list(self.I1), "eta": list(self.eta),
                "mu_tilde": list(self.mu_tilde), "h": self.h, "lambda_tilde": list(self.lambda_tilde)}


def build_datum(src: SplitIndex, m, chosen, I1) -> PieriDatum:
    """Assemble eta, mu~, h and lambda~ for one choice of entry and cycling set."""
    gam = src.gamma
    I1 = tuple(sorted(I1))
    eta = list(gam)
    prev = chosen
    for tu in I1:
        eta[tu - 1] = prev
        prev = gam[tu - 1]
    new_col = prev + 1
    rest = list(src.padded(m))
    rest.remove(chosen)
    low = sorted(v for v in rest if v != new_col)
    same = [v for v in rest if v == new_col]
    mu_tilde = tuple(low + same + [new_col])
    h = len(low) + 1
    lambda_tilde = mu_tilde[:-1] + (chosen,)
    return PieriDatum(src.with_m(m), chosen, I1, tuple(eta), mu_tilde, h, lambda_tilde)


def is_maximal(d: PieriDatum) -> bool:
    eta, I1 = d.eta, d.I1
    bounds = (0,) + I1
    for u in range(len(I1)):
        for j in range(bounds[u] + 1, I1[u]):
            if eta[j - 1] == eta[I1[u] - 1]:
                return False
    last = I1[-1] if I1 else 0
    top = d.mu_tilde[-1] - 1
    return all(eta[j - 1] != top for j in range(last + 1, len(eta) + 1))


def support_m(src: SplitIndex):
    """Symmetric block size: one spare zero so the entry 0 can always be chosen."""
    return len(src.lam) + 1


def enumerate_support(src: SplitIndex):
    """[(target, datum)] over distinct chosen entries and maximal I_1, one datum per target."""
    m = support_m(src)
    k = src.k
    seen = {}
    for chosen in sorted(set(src.padded(m))):
        for r in range(k + 1):
            for I1 in combinations(range(1, k + 1), r):
                d = build_datum(src, m, chosen, I1)
                if not is_maximal(d):
                    continue
                tgt = d.target
                if tgt in seen:
                    raise AssertionError(f"two data reach {tgt} from {src}")
                seen[tgt] = d
    return sorted(seen.items(), key=lambda kv: (kv[0].lam, kv[0].gamma))


# --------------------------------------------------------------------------
# closed-form coefficient

def _row_product(d: PieriDatum):
    """Boxes of dg(lambda^-) in the row just above the chosen column height."""
    src = d.source
    nu = src.minus_composition(d.m)
    row = d.chosen_entry + 1
    out = ONE
    for i in range(1, d.m + 1):
        if nu[i - 1] >= row:
            box = (i, row)
            l, a = leg(nu, box), arm(nu, box, "a")
            num = T_VAR - QT.monomial(l + 1, a + 1)
            out = out * num / (1 - QT.monomial(l + 1, a + 1))
    return out


def _column_product(d: PieriDatum):
    """j_C: the rightmost column of dg(lambda^-) with the chosen height.

    The extra t-power counts the gamma columns of height j-1 under each box.
    """
    c = d.chosen_entry
    if c == 0:
        return ONE
    nu = d.source.minus_composition(d.m)
    col = max(i for i in range(1, d.m + 1) if nu[i - 1] == c)
    out = ONE
    for j in range(1, c + 1):
        box = (col, j)
        l, a = leg(nu, box), arm(nu, box, "a_tilde")
        mult = sum(1 for e in d.source.gamma if e == j - 1)
        out = out * (1 - QT.monomial(l, a + 1)) / (1 - QT.monomial(l + 1, a + 1 + mult))
    return out


def _p_prime(d: PieriDatum):
    m, k, I1 = d.m, d.source.k, d.I1
    nu = d.mu_tilde + d.eta
    ev = lambda j: spectral_value(nu, m + j)  # noqa: E731
    mu_h = spectral_value(nu, d.h) * Q_VAR.inverse()
    out = ONE
    if I1:
        out = out * (T_VAR - 1) * mu_h / (mu_h - ev(I1[-1]))
    for u in range(len(I1) - 1):
        a, b = ev(I1[u]), ev(I1[u + 1])
        out = out * (T_VAR - 1) * b / (b - a)
    last = I1[-1] if I1 else 0
    for j in range(last + 1, k + 1):
        out = out * (T_VAR * mu_h - ev(j)) / (mu_h - ev(j))
    bounds = (0,) + I1
    for u in range(len(I1)):
        top = ev(I1[u])
        for j in range(bounds[u] + 1, I1[u]):
            out = out * (T_VAR * top - ev(j)) / (top - ev(j))
    return out


def coefficient_A(d: PieriDatum) -> QT:
    """Coefficient of J_target in e_1 J_source for one datum."""
    lt = d.lambda_tilde + d.source.gamma
    return (_row_product(d) * _column_product(d) * _p_prime(d) / (1 - T_VAR)
            * QT.monomial(1 - d.mu_tilde[d.h - 1], 0) * spectral_value(lt, d.m))


def closed_expansion(src: SplitIndex):
    return {tgt: coefficient_A(d) for tgt, d in enumerate_support(src)}


# --------------------------------------------------------------------------
# brute-force oracle

def oracle_m(src: SplitIndex):
    return src.size + 2


def brute_force_expand(src: SplitIndex, m=None):
    """Solve e_1(x_1..x_m) J_src = sum c J_target over every index one degree up."""
    m = oracle_m(src) if m is None else m
    k = src.k
    J = build_J(src.with_m(m)).body
    e1 = XPoly(m + k, {tuple(int(i == j) for i in range(m + k)): ONE for j in range(m)})
    rhs = (e1 * J).terms
    cands = [c for c in split_indices(src.size + 1, k) if len(c.lam) <= m]
    cols = [build_J(c.with_m(m)).body.terms for c in cands]
    sol = solve_columns(cols, rhs, [str(c) for c in cands])
    return {c: v for c, v in zip(cands, sol) if not v.is_zero()}


# --------------------------------------------------------------------------
# geometric side: d_- T_k^{-1} ... T_1^{-1} d_+ on H_{xi,w}

def cycled_weights(x, w, I1):
    """(v(xw))': x bubbles right, stopping at each position of I1 and continuing with the displaced label."""
    seq = [x] + list(w)
    for i in range(1, len(w) + 1):
        if i not in I1:
            seq[i - 1], seq[i] = seq[i], seq[i - 1]
    return tuple(seq[:-1])


def p_tilde(x, w, I1) -> QT:
    """Product of the T^{-1} coefficients along the path fixed by I1."""
    xv = box_weight(x)
    wv = [box_weight(b) for b in w]
    k = len(w)
    I1 = tuple(sorted(I1))
    out = ONE
    if I1:
        out = out * (1 - TINV) * xv / (xv - wv[I1[0] - 1])
    for u in range(len(I1) - 1):
        a, b = wv[I1[u] - 1], wv[I1[u + 1] - 1]
        out = out * (1 - TINV) * a / (a - b)
    first = I1[0] if I1 else k + 1
    for j in range(1, first):
        out = out * (TINV * xv - wv[j - 1]) / (xv - wv[j - 1])
    bounds = I1 + (k + 1,)
    for u in range(len(I1)):
        mover = wv[I1[u] - 1]
        for j in range(I1[u] + 1, bounds[u + 1]):
            out = out * (TINV * mover - wv[j - 1]) / (mover - wv[j - 1])
    return out


def _weight_product(x, w):
    xv = box_weight(x)
    out = ONE
    for b in w:
        wv = box_weight(b)
        out = out * (xv - Q_VAR * wv) / (xv - Q_VAR * T_VAR * wv)
    return out


def dplus_H_coefficient(lab: FixedPointLabel, x) -> QT:
    """Coefficient of H_{xi+x, xw} in d_+ H_{xi,w}."""
    return QT.monomial(0, lab.k) * macdonald_pieri_d(lab.xi, x) * _weight_product(x, lab.w)


def dplus_H_simplified(lab: FixedPointLabel, x) -> QT:
    """Same coefficient after cancelling labelled-column factors of the row and the column."""
    c, r = x
    xi, big = lab.xi, add_box(lab.xi, x)
    cols = {b[0]: b for b in lab.w}
    right = [b for b in lab.w if b[0] > c]
    out = QT.monomial(0, len(right))
    for cc in range(c):
        if cc in cols:
            continue
        a, l = plane_arm(xi, (cc, r)), plane_leg(xi, (cc, r))
        out = out * (QT.monomial(0, a) - QT.monomial(l + 1, 0)) / (QT.monomial(0, a + 1) - QT.monomial(l + 1, 0))
    for rr in range(r):
        box = (c, rr)
        a, l = plane_arm(big, box), plane_leg(big, box)
        b = sum(1 for lb in right if lb[1] == rr)
        out = out * (QT.monomial(0, a + 1 - b) - QT.monomial(l - 1, 0)) / (QT.monomial(0, a + 1) - QT.monomial(l, 0))
    return out


@dataclass(frozen=True)
class ChainTerm:
    x: tuple
    I1: tuple
    target: FixedPointLabel
    coeff: QT
    simplified: QT
    dropped: tuple

    @property
    def column(self):
        """Column index of the label removed by d_-."""
        return self.dropped[0]


def chain_terms(lab: FixedPointLabel):
    """Every surviving (x, I_1) path of d_- T_k^{-1}...T_1^{-1} d_+ on H_{xi,w}, with both coefficient forms."""
    out = []
    for x in addable_boxes(lab.xi):
        if _weight_product(x, lab.w).is_zero():
            continue
        full = dplus_H_coefficient(lab, x)
        simple = dplus_H_simplified(lab, x)
        for r in range(lab.k + 1):
            for I1 in combinations(range(1, lab.k + 1), r):
                p = p_tilde(x, lab.w, I1)
                if p.is_zero():
                    continue
                tgt = FixedPointLabel(add_box(lab.xi, x), cycled_weights(x, lab.w, I1))
                dropped = lab.w[I1[-1] - 1] if I1 else x
                out.append(ChainTerm(x, I1, tgt, full * p, simple * p, dropped))
    return out


def coefficient_C_geom(src_label: FixedPointLabel, x, I1) -> QT:
    """Coefficient of H_{xi+x,(v(xw))'} by literal composition, checked against the closed form."""
    I1 = tuple(sorted(I1))
    tgt = FixedPointLabel(add_box(src_label.xi, x), cycled_weights(x, src_label.w, I1))
    literal = e1_geom(FixedPointVector.basis_vector(src_label, "H")).coefficient(tgt)
    closed = sum((tm.simplified for tm in chain_terms(src_label) if tm.target == tgt), ZERO)
    if literal != closed:
        raise ArithmeticError(f"chain coefficient mismatch at {tgt}: {literal} vs {closed}")
    return literal


# --------------------------------------------------------------------------
# matching the two sides

def c_r_from_n(src: SplitIndex, target: SplitIndex) -> int:
    return sort_and_n(target.lam + target.gamma)[1] - sort_and_n(src.lam + src.gamma)[1]


def match_check(src: SplitIndex, target: SplitIndex, datum=None):
    """Compare A (closed) with the geometric chain coefficient C through phi."""
    if datum is None:
        datum = dict(enumerate_support(src)).get(target)
    A = coefficient_A(datum) if datum is not None else ZERO
    lab, tlab = phi_inverse(src), phi_inverse(target)
    literal = e1_geom(FixedPointVector.basis_vector(lab, "H")).coefficient(tlab)
    terms = [tm for tm in chain_terms(lab) if tm.target == tlab]
    closed = sum((tm.simplified for tm in terms), ZERO)
    direct = sum((tm.coeff for tm in terms), ZERO)
    cols = sorted({tm.column for tm in terms})
    c_col = cols[0] if len(cols) == 1 else None
    c_n = c_r_from_n(src, target)
    predicate = QT.monomial(0, -c_n) * (A * (1 - T_VAR)).star()
    return {
        "source": src, "target": target, "A": A, "C": literal,
        "C_closed": closed, "C_direct": direct,
        "c_r_column": c_col, "c_r_n": c_n,
        "closed_ok": literal == closed == direct,
        "c_r_ok": c_col == c_n,
        "match": literal == predicate and not literal.is_zero(),
    }
