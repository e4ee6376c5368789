"""Operators on formal combinations of fixed-point classes [I_{mu,w}]."""

from __future__ import annotations

from .qt import ONE, QT, ZERO, t as T_VAR
from .shapes import (
    FixedPointLabel, ShapeError, add_box, addable_boxes, box_weight, n_stat,
    plane_arm, plane_leg, transpose,
)

Q_VAR = QT.monomial(1, 0)


class LabelInvariantError(AssertionError):
    """A nonzero coefficient landed on an invalid fixed-point label."""


class FixedPointVector:
    """Finite Q(q,t)-combination of fixed-point labels sharing one k, in the I- or H-basis."""

    __slots__ = ("k", "terms", "basis")

    def __init__(self, k, terms=None, basis="I"):
        if basis not in ("I", "H"):
            raise ValueError(f"unknown basis {basis!r}")
        self.k = int(k)
        self.basis = basis
        out = {}
        for lab, c in (terms or {}).items():
            if lab.k != self.k:
                raise ValueError(f"label {lab} does not have k={self.k}")
            c = QT.coerce(c)
            s = out.get(lab)
            out[lab] = c if s is None else s + c
        self.terms = {lab: c for lab, c in out.items() if not c.is_zero()}

    @classmethod
    def basis_vector(cls, label: FixedPointLabel, basis="I", c=ONE):
        return cls(label.k, {label: c}, basis)

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for lab, c in other.terms.items():
            out[lab] = out.get(lab, ZERO) + c
        return FixedPointVector(self.k, out, self.basis)

    def __neg__(self):
        return FixedPointVector(self.k, {lab: -c for lab, c in self.terms.items()}, self.basis)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = QT.coerce(c)
        return FixedPointVector(self.k, {lab: v * c for lab, v in self.terms.items()}, self.basis)

    def _check(self, other):
        if self.k != other.k or self.basis != other.basis:
            raise ValueError("vectors differ in k or basis")

    def __eq__(self, other):
        if not isinstance(other, FixedPointVector):
            return NotImplemented
        return self.k == other.k and self.basis == other.basis and self.terms == other.terms

    def __hash__(self):
        return hash((self.k, self.basis, frozenset(self.terms.items())))

    def coefficient(self, label) -> QT:
        return self.terms.get(label, ZERO)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: (kv[0].xi, kv[0].w))

    def to_json(self):
        return [{"mu": list(lab.xi), "w": [_wtext(b) for b in lab.w], "coeff": str(c)}
                for lab, c in self.sorted_terms()]

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*{self.basis}{lab}" for lab, c in self.sorted_terms())

    __repr__ = __str__


def _wtext(box):
    c, r = box
    return f"q^{r}*t^{c}"


def _linear(V: FixedPointVector, fn, new_k, basis="I"):
    """Apply a per-label map returning {label: coeff} and merge deterministically."""
    out = {}
    for lab, c in V.sorted_terms():
        for new_lab, d in fn(lab).items():
            s = out.get(new_lab)
            v = c * d
            out[new_lab] = v if s is None else s + v
    return FixedPointVector(new_k, out, basis)


# --------------------------------------------------------------------------
# the generators in the I-basis

def macdonald_pieri_d(xi, box) -> QT:
    """d_{xi+x,xi}: products over the row and the column of xi meeting the added corner."""
    xi = tuple(xi)
    if box not in addable_boxes(xi):
        raise ShapeError(f"box {box} is not addable to {xi}")
    c, r = box
    out = ONE
    for cc in range(c):
        b = (cc, r)
        a, l = plane_arm(xi, b), plane_leg(xi, b)
        out = out * (QT.monomial(0, a) - QT.monomial(l + 1, 0)) / (QT.monomial(0, a + 1) - QT.monomial(l + 1, 0))
    for rr in range(r):
        b = (c, rr)
        a, l = plane_arm(xi, b), plane_leg(xi, b)
        out = out * (QT.monomial(0, a + 1) - QT.monomial(l, 0)) / (QT.monomial(0, a + 1) - QT.monomial(l + 1, 0))
    return out


def dplus_label(lab: FixedPointLabel):
    """d_+ [I_{mu,w}] as {label: coeff} in the I-basis."""
    k = lab.k
    ws = lab.weights()
    out = {}
    for box in addable_boxes(lab.xi):
        x = box_weight(box)
        prod = ONE
        for w in ws:
            num = x - Q_VAR * w
            if num.is_zero():
                prod = ZERO
                break
            prod = prod * num / (x - Q_VAR * T_VAR * w)
        if prod.is_zero():
            continue
        coeff = -QT.monomial(0, k) * x * macdonald_pieri_d(lab.xi, box) * prod
        new = FixedPointLabel(add_box(lab.xi, box), (box,) + lab.w)
        if not new.is_valid():
            raise LabelInvariantError(f"d+ produced invalid label {new} with coefficient {coeff}")
        out[new] = coeff
    return out


def dminus_label(lab: FixedPointLabel):
    if lab.k < 1:
        raise ValueError("d- needs k >= 1")
    return {FixedPointLabel(lab.xi, lab.w[:-1]): ONE}


def tgeom_label(i, lab: FixedPointLabel, inverse=False):
    if not 1 <= i < lab.k:
        raise IndexError(f"T_{i} needs 1 <= i < k={lab.k}")
    wi, wj = box_weight(lab.w[i - 1]), box_weight(lab.w[i])
    den = wi - wj
    if inverse:
        stay = (1 - T_VAR.inverse()) * wi / den
        swap = (T_VAR.inverse() * wi - wj) / den
    else:
        stay = (T_VAR - 1) * wj / den
        swap = (wi - T_VAR * wj) / den
    out = {lab: stay}
    if not swap.is_zero():
        new = lab.swapped(i)
        if not new.is_valid():
            raise LabelInvariantError(f"T_{i} swap produced invalid label {new} with coefficient {swap}")
        out[new] = out.get(new, ZERO) + swap
    return out


# --------------------------------------------------------------------------
# basis handling

def h_scalar(xi) -> QT:
    """H_{mu,w} = (-1)^{|mu|} q^{n(mu)} t^{n(mu')} [I_{mu,w}]."""
    sign = -1 if sum(xi) % 2 else 1
    return QT.monomial(n_stat(xi), n_stat(transpose(xi)), sign)


def h_normalize(V: FixedPointVector, target="H") -> FixedPointVector:
    """Rewrite V in the requested basis."""
    if V.basis == target:
        return V
    out = {}
    for lab, c in V.terms.items():
        s = h_scalar(lab.xi)
        out[lab] = c / s if target == "H" else c * s
    return FixedPointVector(V.k, out, target)


def _in_I(fn):
    def wrapped(V):
        return h_normalize(fn(h_normalize(V, "I")), V.basis)

    wrapped.__name__ = fn.__name__
    wrapped.__doc__ = fn.__doc__
    return wrapped


@_in_I
def dplus_geom(V: FixedPointVector) -> FixedPointVector:
    return _linear(V, dplus_label, V.k + 1)


@_in_I
def dminus_geom(V: FixedPointVector) -> FixedPointVector:
    return _linear(V, dminus_label, V.k - 1)


def tgeom_apply(i, V: FixedPointVector, inverse=False) -> FixedPointVector:
    W = h_normalize(V, "I")
    W = _linear(W, lambda lab: tgeom_label(i, lab, inverse), W.k)
    return h_normalize(W, V.basis)


def y2_geom(V: FixedPointVector) -> FixedPointVector:
    """y_2 = T_1^{-1} (d_+ d_- - d_- d_+)/(t-1) on k = 2."""
    if V.k != 2:
        raise ValueError("y2_geom is defined for k = 2")
    comm = dplus_geom(dminus_geom(V)) - dminus_geom(dplus_geom(V))
    return tgeom_apply(1, comm.scale((T_VAR - 1).inverse()), inverse=True)


def e1_geom(V: FixedPointVector) -> FixedPointVector:
    """d_- T_k^{-1} ... T_1^{-1} d_+ V."""
    W = dplus_geom(V)
    for i in range(1, V.k + 1):
        W = tgeom_apply(i, W, inverse=True)
    return dminus_geom(W)


def apply_word(V: FixedPointVector, word):
    """Apply a comma-separated word such as ``"d-,T2inv,T1inv,d+"`` (rightmost acts first)."""
    letters = [w.strip() for w in word.split(",") if w.strip()] if isinstance(word, str) else list(word)
    for letter in reversed(letters):
        V = apply_letter(V, letter)
    return V


def apply_letter(V, letter):
    s = letter.lstrip("-")
    if s == "d+":
        return dplus_geom(V)
    if s == "d-":
        return dminus_geom(V)
    if s == "y2":
        return y2_geom(V)
    if s.startswith("T"):
        inverse = s.endswith("inv")
        i = int(s[1:-3] if inverse else s[1:])
        return tgeom_apply(i, V, inverse)
    raise ValueError(f"unknown operator {letter!r}")
