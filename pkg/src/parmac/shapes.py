"""Compositions, split indices, diagram statistics and fixed-point labels.

Two box conventions are used and never mixed:

* composition diagrams ``dg(nu)``: 1-based ``(column, row)`` pairs, column ``i``
  has height ``nu[i-1]``;
* plane diagrams of a partition ``xi`` (French, rows of lengths xi_1, xi_2, ...):
  0-based ``(c, r)`` pairs, the box ``(c, r)`` has weight ``q^r t^c``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .qt import QT


class ShapeError(ValueError):
    pass


# --------------------------------------------------------------------------
# partitions and compositions

def partitions(n, max_part=None):
    """All partitions of ``n`` as decreasing tuples."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def compositions(total, length):
    """All weak compositions of ``total`` into ``length`` parts."""
    if length == 0:
        if total == 0:
            yield ()
        return
    for first in range(total, -1, -1):
        for rest in compositions(total - first, length - 1):
            yield (first,) + rest


def strip_zeros(lam):
    lam = tuple(lam)
    while lam and lam[-1] == 0:
        lam = lam[:-1]
    return lam


def transpose(lam):
    lam = strip_zeros(lam)
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))


def n_stat(lam):
    """n(lam) = sum (i-1) lam_i."""
    return sum(i * p for i, p in enumerate(lam))


def sort_and_n(nu):
    part = tuple(sorted(nu, reverse=True))
    return part, n_stat(part)


def is_partition(nu):
    return all(a >= b for a, b in zip(nu, nu[1:])) and all(a >= 0 for a in nu)


# --------------------------------------------------------------------------
# composition diagrams

def _check_box(nu, box):
    i, j = box
    if not (1 <= i <= len(nu) and 1 <= j <= nu[i - 1]):
        raise ShapeError(f"box {box} is not in dg({tuple(nu)})")


def leg(nu, box):
    _check_box(nu, box)
    i, j = box
    return nu[i - 1] - j


def arm(nu, box, variant="a"):
    """Arm length of ``box`` in dg(nu); ``variant`` is ``"a"`` or ``"a_tilde"``."""
    _check_box(nu, box)
    i, j = box
    h = nu[i - 1]
    left = sum(1 for r in range(i - 1) if j <= nu[r] <= h)
    low = j - 1 if variant == "a" else j
    if variant not in ("a", "a_tilde"):
        raise ValueError(f"unknown arm variant {variant!r}")
    right = sum(1 for r in range(i, len(nu)) if low <= nu[r] < h)
    return left + right


def coleg(nu, i):
    """l'_nu(i) for 1-based position ``i``."""
    v = nu[i - 1]
    return (sum(1 for j in range(i - 1) if nu[j] > v)
            + sum(1 for j in range(i, len(nu)) if nu[j] >= v))


def spectral_vector(nu):
    """[(q-exponent, t-exponent)] of the eigenvalues q^{nu_i} t^{-l'(i)}."""
    return [(nu[i - 1], -coleg(nu, i)) for i in range(1, len(nu) + 1)]


def spectral_value(nu, i) -> QT:
    return QT.monomial(nu[i - 1], -coleg(nu, i))


def c_I_shift(lam, I):
    """Cyclically shift entries of ``lam`` at positions ``I`` (1-based) left, +1 on the wrap."""
    lam = tuple(lam)
    I = sorted(I)
    if not I:
        raise ShapeError("I must be nonempty")
    if I[0] < 1 or I[-1] > len(lam) or len(set(I)) != len(I):
        raise ShapeError(f"positions {I} out of range for length {len(lam)}")
    out = list(lam)
    for a, b in zip(I, I[1:]):
        out[a - 1] = lam[b - 1]
    out[I[-1] - 1] = lam[I[0] - 1] + 1
    return tuple(out)


# --------------------------------------------------------------------------
# split indices

@dataclass(frozen=True)
class SplitIndex:
    """(lambda | gamma); ``lam`` is stored without trailing zeros, ``m`` is the padding."""

    lam: tuple
    gamma: tuple
    m: int = field(default=None, compare=False)

    def __post_init__(self):
        lam = tuple(int(x) for x in self.lam)
        if not is_partition(lam):
            raise ShapeError(f"lambda={lam} is not a partition")
        object.__setattr__(self, "lam", strip_zeros(lam))
        object.__setattr__(self, "gamma", tuple(int(x) for x in self.gamma))
        if any(g < 0 for g in self.gamma):
            raise ShapeError("gamma entries must be nonnegative")
        m = len(self.lam) if self.m is None else int(self.m)
        if m < len(self.lam):
            raise ShapeError(f"m={m} is smaller than the length of lambda={self.lam}")
        object.__setattr__(self, "m", m)

    @property
    def k(self):
        return len(self.gamma)

    @property
    def n(self):
        return self.m + self.k

    @property
    def size(self):
        return sum(self.lam) + sum(self.gamma)

    def padded(self, m=None):
        m = self.m if m is None else m
        if m < len(self.lam):
            raise ShapeError(f"cannot pad {self.lam} to {m} parts")
        return self.lam + (0,) * (m - len(self.lam))

    def with_m(self, m):
        return SplitIndex(self.lam, self.gamma, m)

    def composition(self, m=None):
        """(lambda | gamma) as one composition, lambda decreasing."""
        return self.padded(m) + self.gamma

    def minus_composition(self, m=None):
        """(lambda^- | gamma) with lambda^- the increasing rearrangement."""
        return tuple(sorted(self.padded(m))) + self.gamma

    def __str__(self):
        return f"({','.join(map(str, self.lam))}|{','.join(map(str, self.gamma))})"

    def to_json(self):
        return {"lambda": list(self.lam), "gamma": list(self.gamma)}


def split_indices(size, k, max_lam_len=None):
    """All (lambda|gamma) with |lambda|+|gamma| = size and len(gamma) = k."""
    out = []
    for s in range(size + 1):
        for lam in partitions(size - s):
            if max_lam_len is not None and len(lam) > max_lam_len:
                continue
            for gam in compositions(s, k):
                out.append(SplitIndex(lam, gam))
    return out


# --------------------------------------------------------------------------
# plane partitions / fixed points

def conjugate_heights(xi):
    """Column heights of the French diagram of xi."""
    return transpose(xi)


def plane_arm(xi, box):
    c, r = box
    return xi[r] - c - 1


def plane_leg(xi, box):
    c, r = box
    return transpose(xi)[c] - r - 1


def in_plane(xi, box):
    c, r = box
    return 0 <= r < len(xi) and 0 <= c < xi[r]


def addable_boxes(xi):
    """Outer corners of the French diagram of xi as 0-based (c, r)."""
    xi = strip_zeros(xi)
    out = []
    for r in range(len(xi) + 1):
        length = xi[r] if r < len(xi) else 0
        if r == 0 or xi[r - 1] > length:
            out.append((length, r))
    return out


def removable_boxes(xi):
    xi = strip_zeros(xi)
    out = []
    for r, length in enumerate(xi):
        if r + 1 == len(xi) or xi[r + 1] < length:
            out.append((length - 1, r))
    return out


def add_box(xi, box):
    c, r = box
    xi = list(strip_zeros(xi))
    if box not in addable_boxes(xi):
        raise ShapeError(f"box {box} is not addable to {tuple(xi)}")
    if r == len(xi):
        xi.append(1)
    else:
        xi[r] += 1
    return tuple(xi)


def remove_box(xi, box):
    c, r = box
    if box not in removable_boxes(xi):
        raise ShapeError(f"box {box} is not removable from {tuple(xi)}")
    xi = list(xi)
    xi[r] -= 1
    return strip_zeros(xi)


def box_weight(box) -> QT:
    c, r = box
    return QT.monomial(r, c)


@dataclass(frozen=True)
class FixedPointLabel:
    """(xi, w): partition xi and the ordered removed boxes w (0-based (c, r))."""

    xi: tuple
    w: tuple

    def __post_init__(self):
        object.__setattr__(self, "xi", strip_zeros(tuple(int(x) for x in self.xi)))
        object.__setattr__(self, "w", tuple((int(c), int(r)) for c, r in self.w))

    @property
    def k(self):
        return len(self.w)

    @property
    def size(self):
        return sum(self.xi)

    def weights(self):
        return [box_weight(b) for b in self.w]

    def validate(self):
        xi = self.xi
        if not is_partition(xi):
            raise ShapeError(f"xi={xi} is not a partition")
        cols = [c for c, _ in self.w]
        if len(set(cols)) != len(cols):
            raise ShapeError(f"w={self.w} has two boxes in one column")
        heights = transpose(xi)
        for c, r in self.w:
            if not in_plane(xi, (c, r)) or heights[c] != r + 1:
                raise ShapeError(f"w-box {(c, r)} is not the top of its column in {xi}")
        cur = xi
        for b in self.w:
            if b not in removable_boxes(cur):
                raise ShapeError(f"w-box {b} is not a corner when removed from {cur}")
            cur = remove_box(cur, b)
        return self

    def is_valid(self):
        try:
            self.validate()
        except ShapeError:
            return False
        return True

    def swapped(self, i):
        """s_i applied to w (1-based i)."""
        w = list(self.w)
        w[i - 1], w[i] = w[i], w[i - 1]
        return FixedPointLabel(self.xi, tuple(w))

    def __str__(self):
        ws = ",".join(_weight_text(b) for b in self.w)
        return f"(({','.join(map(str, self.xi))}),({ws}))"

    def to_json(self):
        return {"mu": list(self.xi), "w": [list(b) for b in self.w]}


def _weight_text(box):
    c, r = box
    return f"q^{r}*t^{c}"


def fixed_point_labels(size, k):
    """Every valid (xi, w) with |xi| = size and len(w) = k, in a deterministic order."""
    out = []
    for xi in partitions(size):
        _extend_labels(xi, xi, (), k, set(), out)
    return out


def _extend_labels(xi, cur, w, k, used_cols, out):
    if len(w) == k:
        out.append(FixedPointLabel(xi, w))
        return
    for b in removable_boxes(cur):
        if b[0] in used_cols:
            continue
        # the box must be the top of its column in the original xi
        if transpose(xi)[b[0]] != b[1] + 1:
            continue
        _extend_labels(xi, remove_box(cur, b), w + (b,), k, used_cols | {b[0]}, out)


def phi(fp: FixedPointLabel) -> SplitIndex:
    """Fixed-point label -> split index."""
    fp.validate()
    heights = transpose(fp.xi)
    labelled = {c for c, _ in fp.w}
    gamma = tuple(r for _, r in fp.w)
    lam = tuple(sorted((h for c, h in enumerate(heights) if c not in labelled), reverse=True))
    return SplitIndex(lam, gamma)


def label_columns(idx: SplitIndex):
    """0-based column positions c_i of the labelled columns for phi_inverse."""
    lam, gam = idx.lam, idx.gamma
    out = []
    for i, g in enumerate(gam):
        c = (sum(1 for x in lam if x >= g + 1)
             + sum(1 for j in range(i + 1, len(gam)) if gam[j] == g)
             + sum(1 for x in gam if x > g))
        out.append(c)
    return out


def phi_inverse(idx: SplitIndex) -> FixedPointLabel:
    """Split index -> fixed-point label, inserting labelled columns of heights gamma_i + 1."""
    heights = sorted(list(idx.lam) + [g + 1 for g in idx.gamma], reverse=True)
    xi = transpose(heights)
    cols = label_columns(idx)
    w = tuple((c, g) for c, g in zip(cols, idx.gamma))
    return FixedPointLabel(xi, w).validate()


# --------------------------------------------------------------------------
# parsing helpers for the command line

def parse_composition(text):
    text = (text or "").strip()
    if not text:
        return ()
    return tuple(int(x) for x in text.split(","))


def parse_split(text):
    """``"lambda;gamma"`` -> SplitIndex."""
    if ";" not in text:
        raise ShapeError(f"expected 'lambda;gamma', got {text!r}")
    a, b = text.split(";", 1)
    return SplitIndex(parse_composition(a), parse_composition(b))


def parse_weight(text):
    """``"q^r*t^c"`` (either factor optional) or ``"(c,r)"`` -> 0-based box (c, r)."""
    s = text.strip().replace(" ", "")
    if s.startswith("("):
        c, r = s.strip("()").split(",")
        return int(c), int(r)
    r = c = 0
    if s in ("1", ""):
        return 0, 0
    for fac in s.split("*"):
        if fac.startswith("q"):
            r += int(fac[2:]) if "^" in fac else 1
        elif fac.startswith("t"):
            c += int(fac[2:]) if "^" in fac else 1
        elif fac != "1":
            raise ShapeError(f"cannot parse weight {text!r}")
    return c, r


def parse_weights(text):
    """Comma-separated weights; box pairs ``(c,r)`` may also be used."""
    s = (text or "").strip()
    if not s:
        return ()
    if "(" in s:
        items, depth, cur = [], 0, ""
        for ch in s:
            depth += ch == "("
            depth -= ch == ")"
            if ch == "," and depth == 0:
                items.append(cur)
                cur = ""
            else:
                cur += ch
        items.append(cur)
    else:
        items = s.split(",")
    return tuple(parse_weight(x) for x in items)


def t_half(x) -> Fraction:
    return Fraction(x, 2)


def subsets(k):
    """All subsets of [1, k] as sorted tuples, by size."""
    for r in range(k + 1):
        yield from combinations(range(1, k + 1), r)
