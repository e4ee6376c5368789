"""Truncated symmetric functions over Q(q,t) and the carrier Lambda (x) K[y_1..y_k].

Symmetric parts are stored in the monomial basis.  Plethystic substitutions
go through the power-sum basis, where they act diagonally.
"""

from __future__ import annotations

import os
import threading
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .qt import ONE, QT, ZERO
from .shapes import partitions
from .xpoly import XPoly

DEFAULT_DEGREE = 8


class DegreeOverflowError(ArithmeticError):
    pass


class AsymmetricInputError(ValueError):
    pass


def degree_bound(D=None):
    if D is not None:
        return int(D)
    env = os.environ.get("MACD_DEGREE_BOUND")
    return int(env) if env else DEFAULT_DEGREE


# --------------------------------------------------------------------------
# transition matrices, cached per degree

_lock = threading.Lock()


def _count_assignments(lam, mu):
    """Coefficient of m_mu in p_lam: maps parts(lam) -> parts(mu) with matching block sums."""
    target = list(mu)

    def rec(i, rem):
        if i == len(lam):
            return 1 if not any(rem) else 0
        total = 0
        for j in range(len(rem)):
            if rem[j] >= lam[i]:
                rem[j] -= lam[i]
                total += rec(i + 1, rem)
                rem[j] += lam[i]
        return total

    return rec(0, target)


@lru_cache(maxsize=None)
def p_in_m(lam):
    """p_lam in the monomial basis, {mu: int}."""
    n = sum(lam)
    out = {}
    for mu in partitions(n):
        c = _count_assignments(lam, mu)
        if c:
            out[mu] = c
    return out


@lru_cache(maxsize=None)
def _m_in_p_degree(n):
    """{mu: {lam: Fraction}} with m_mu = sum_lam c p_lam, by back substitution."""
    parts = list(partitions(n))
    # p_lam = m_lam * (leading count) + sum over coarser mu; process coarsest first
    parts.sort(key=len)
    res = {}
    for mu in parts:
        pm = p_in_m(mu)
        lead = Fraction(pm[mu])
        expr = {mu: 1 / lead}
        for nu, c in pm.items():
            if nu == mu:
                continue
            for lam, d in res[nu].items():
                expr[lam] = expr.get(lam, 0) - Fraction(c) * d / lead
        res[mu] = {k: v for k, v in expr.items() if v}
    return res


def m_in_p(mu):
    with _lock:
        return _m_in_p_degree(sum(mu))[tuple(mu)]


def z_lambda(lam):
    out = 1
    for v, c in Counter(lam).items():
        out *= v ** c * factorial(c)
    return out


@lru_cache(maxsize=None)
def e_in_p(n):
    """e_n = sum_lam (-1)^{n - len(lam)} p_lam / z_lam."""
    return {lam: Fraction((-1) ** (n - len(lam)), z_lambda(lam)) for lam in partitions(n)}


def _p_product(a, b):
    out = {}
    for l1, c1 in a.items():
        for l2, c2 in b.items():
            lam = tuple(sorted(l1 + l2, reverse=True))
            out[lam] = out.get(lam, 0) + c1 * c2
    return {k: v for k, v in out.items() if v}


@lru_cache(maxsize=None)
def e_partition_in_p(lam):
    out = {(): Fraction(1)}
    for part in lam:
        out = _p_product(out, e_in_p(part))
    return out


@lru_cache(maxsize=None)
def _p_in_e_degree(n):
    """{lam: {mu: Fraction}} with p_lam = sum_mu c e_mu (inverse of e -> p)."""
    parts = list(partitions(n))
    # e_mu in p has leading term on transpose-refinement; solve by generic elimination
    index = {lam: i for i, lam in enumerate(parts)}
    size = len(parts)
    mat = [[Fraction(0)] * size for _ in range(size)]
    for j, mu in enumerate(parts):
        for lam, c in e_partition_in_p(mu).items():
            mat[index[lam]][j] = c
    inv = _invert(mat)
    return {lam: {parts[j]: inv[j][i] for j in range(size) if inv[j][i]} for lam, i in index.items()}


def _invert(mat):
    n = len(mat)
    aug = [row[:] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(mat)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col])
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [v * inv for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def p_in_e(lam):
    with _lock:
        return _p_in_e_degree(sum(lam))[tuple(lam)]


# --------------------------------------------------------------------------
# SymFunc

BASES = ("monomial", "powersum", "elementary")


class SymFunc:
    """Symmetric function of degree <= D in one of the m/p/e bases."""

    __slots__ = ("D", "basis", "coeffs")

    def __init__(self, coeffs=None, basis="monomial", D=None):
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}")
        self.D = degree_bound(D)
        self.basis = basis
        clean = {}
        for lam, c in (coeffs or {}).items():
            lam = tuple(sorted((int(x) for x in lam if x), reverse=True))
            if sum(lam) > self.D:
                raise DegreeOverflowError(f"partition {lam} exceeds degree bound {self.D}")
            c = QT.coerce(c)
            if not c.is_zero():
                clean[lam] = clean.get(lam, ZERO) + c
        self.coeffs = {k: v for k, v in clean.items() if not v.is_zero()}

    def __eq__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        return convert_basis(self, "monomial").coeffs == convert_basis(other, "monomial").coeffs

    def __hash__(self):
        return hash(frozenset(convert_basis(self, "monomial").coeffs.items()))

    def __str__(self):
        letter = {"monomial": "m", "powersum": "p", "elementary": "e"}[self.basis]
        if not self.coeffs:
            return "0"
        return " + ".join(f"({c})*{letter}{list(lam)}" for lam, c in sorted(self.coeffs.items()))

    __repr__ = __str__


def _accumulate(out, lam, c):
    s = out.get(lam)
    out[lam] = c if s is None else s + c


def _m_to_p(coeffs):
    out = {}
    for mu, c in coeffs.items():
        for lam, f in m_in_p(mu).items():
            _accumulate(out, lam, c * QT.from_fraction(f))
    return {k: v for k, v in out.items() if not v.is_zero()}


def _p_to_m(coeffs):
    out = {}
    for lam, c in coeffs.items():
        for mu, f in p_in_m(lam).items():
            _accumulate(out, mu, c * f)
    return {k: v for k, v in out.items() if not v.is_zero()}


def _p_to_e(coeffs):
    out = {}
    for lam, c in coeffs.items():
        for mu, f in p_in_e(lam).items():
            _accumulate(out, mu, c * QT.from_fraction(f))
    return {k: v for k, v in out.items() if not v.is_zero()}


def _e_to_p(coeffs):
    out = {}
    for mu, c in coeffs.items():
        for lam, f in e_partition_in_p(mu).items():
            _accumulate(out, lam, c * QT.from_fraction(f))
    return {k: v for k, v in out.items() if not v.is_zero()}


def convert_basis(f: SymFunc, target) -> SymFunc:
    if target not in BASES:
        raise ValueError(f"unknown basis {target!r}")
    if f.basis == target:
        return f
    coeffs = f.coeffs
    if f.basis == "monomial":
        coeffs = _m_to_p(coeffs)
    elif f.basis == "elementary":
        coeffs = _e_to_p(coeffs)
    if target == "monomial":
        coeffs = _p_to_m(coeffs)
    elif target == "elementary":
        coeffs = _p_to_e(coeffs)
    return SymFunc(coeffs, target, f.D)


def alphabet_scale_sym(f: SymFunc, rule) -> SymFunc:
    """Each p_i picks up the factor rule(i)."""
    p = convert_basis(f, "powersum")
    out = {}
    for lam, c in p.coeffs.items():
        fac = ONE
        for part in lam:
            fac = fac * rule(part)
        out[lam] = c * fac
    return convert_basis(SymFunc(out, "powersum", f.D), f.basis)


def rule_one_minus_t(i):
    """p_i -> p_i / (1 - t^i)."""
    return (1 - QT.monomial(0, i)).inverse()


def rule_tinv_minus_one(i):
    """p_i -> p_i / (t^{-i} - 1)."""
    return (QT.monomial(0, -i) - 1).inverse()


# --------------------------------------------------------------------------
# V_k elements

class VkElement:
    """Finite sum of c * m_lam(X) y^a; ``terms`` maps (lam, a) -> QT."""

    __slots__ = ("k", "D", "terms")

    def __init__(self, k, terms=None, D=None, _clean=False):
        self.k = int(k)
        self.D = degree_bound(D)
        if _clean:
            self.terms = terms
            return
        out = {}
        for (lam, a), c in (terms or {}).items():
            lam = tuple(sorted((int(x) for x in lam if x), reverse=True))
            a = tuple(int(x) for x in a)
            if len(a) != self.k:
                raise ValueError(f"y-exponent {a} does not have length {self.k}")
            if sum(lam) > self.D:
                raise DegreeOverflowError(
                    f"x-degree {sum(lam)} exceeds bound D={self.D}; raise --degree or MACD_DEGREE_BOUND")
            c = QT.coerce(c)
            key = (lam, a)
            s = out.get(key)
            out[key] = c if s is None else s + c
        self.terms = {key: c for key, c in out.items() if not c.is_zero()}

    @classmethod
    def one(cls, k=0, D=None):
        return cls(k, {((), (0,) * k): ONE}, D)

    @classmethod
    def from_sym(cls, f: SymFunc, k=0, yexp=None):
        f = convert_basis(f, "monomial")
        a = tuple(yexp) if yexp is not None else (0,) * k
        return cls(k, {(lam, a): c for lam, c in f.coeffs.items()}, f.D)

    @classmethod
    def y_monomial(cls, a, D=None, c=1):
        a = tuple(a)
        return cls(len(a), {((), a): c}, D)

    def is_zero(self):
        return not self.terms

    def _like(self, terms, k=None):
        return VkElement(self.k if k is None else k, terms, self.D, _clean=True)

    def _check(self, other):
        if self.k != other.k:
            raise ValueError(f"k mismatch: {self.k} vs {other.k}")

    def __add__(self, other):
        if not isinstance(other, VkElement):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for key, c in other.terms.items():
            s = out.get(key)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(key, None)
            else:
                out[key] = s
        return VkElement(self.k, out, max(self.D, other.D), _clean=True)

    def __neg__(self):
        return self._like({key: -c for key, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = QT.coerce(c)
        if c.is_zero():
            return self._like({})
        return self._like({key: v * c for key, v in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, VkElement):
            return NotImplemented
        return self.k == other.k and self.terms == other.terms

    def __hash__(self):
        return hash((self.k, frozenset(self.terms.items())))

    def map_coefficients(self, fn):
        return VkElement(self.k, {key: fn(c) for key, c in self.terms.items()}, self.D)

    def star(self):
        return self.map_coefficients(lambda c: c.star())

    def x_degree(self):
        return max((sum(lam) for lam, _ in self.terms), default=-1)

    def y_degree(self):
        return max((sum(a) for _, a in self.terms), default=-1)

    def with_degree(self, D):
        return VkElement(self.k, dict(self.terms), D)

    def coefficient(self, lam, a) -> QT:
        return self.terms.get((tuple(lam), tuple(a)), ZERO)

    # y-side -------------------------------------------------------------
    def y_mul(self, i, power=1):
        out = {}
        for (lam, a), c in self.terms.items():
            b = list(a)
            b[i - 1] += power
            out[(lam, tuple(b))] = c
        return self._like(out)

    def y_swap(self, i):
        out = {}
        for (lam, a), c in self.terms.items():
            b = list(a)
            b[i - 1], b[i] = b[i], b[i - 1]
            out[(lam, tuple(b))] = c
        return self._like(out)

    def y_permute(self, perm):
        """Move the exponent of y_{j+1} to position perm[j] (0-based)."""
        out = {}
        for (lam, a), c in self.terms.items():
            b = [0] * self.k
            for j, e in enumerate(a):
                b[perm[j]] = e
            out[(lam, tuple(b))] = c
        return self._like(out)

    def y_divided_difference(self, i):
        """(f - s_i f)/(y_{i+1} - y_i)."""
        out = {}
        ia, ib = i - 1, i
        for (lam, a), c in self.terms.items():
            u, v = a[ia], a[ib]
            if u == v:
                continue
            lo, d = min(u, v), abs(u - v)
            sign = c if u < v else -c
            for j in range(d):
                b = list(a)
                b[ia] = lo + j
                b[ib] = lo + d - 1 - j
                key = (lam, tuple(b))
                s = out.get(key)
                out[key] = sign if s is None else s + sign
        return self._like({key: c for key, c in out.items() if not c.is_zero()})

    # x-side -------------------------------------------------------------
    def e1_mul(self):
        """Multiply by e_1(X) using the monomial-basis rule."""
        out = {}
        for (lam, a), c in self.terms.items():
            if sum(lam) + 1 > self.D:
                raise DegreeOverflowError(
                    f"e1 multiplication exceeds degree bound D={self.D}; raise the bound")
            for mu in _increments(lam):
                mult = mu.count(mu[_changed_value_index(lam, mu)])
                key = (mu, a)
                v = c * mult
                s = out.get(key)
                out[key] = v if s is None else s + v
        return self._like({key: c for key, c in out.items() if not c.is_zero()})

    def to_powersum(self):
        """{(p-partition, a): QT}."""
        out = {}
        for (mu, a), c in self.terms.items():
            for lam, f in m_in_p(mu).items():
                key = (lam, a)
                v = c * QT.from_fraction(f)
                s = out.get(key)
                out[key] = v if s is None else s + v
        return {key: c for key, c in out.items() if not c.is_zero()}

    @classmethod
    def from_powersum(cls, k, pterms, D=None):
        out = {}
        for (lam, a), c in pterms.items():
            for mu, f in p_in_m(lam).items():
                key = (mu, a)
                v = c * f
                s = out.get(key)
                out[key] = v if s is None else s + v
        return cls(k, out, D)

    def mul_sym(self, f: SymFunc):
        """Multiply the x-part by a symmetric function."""
        fp = convert_basis(f, "powersum").coeffs
        out = {}
        for (lam, a), c in self.to_powersum().items():
            for mu, d in fp.items():
                key = (tuple(sorted(lam + mu, reverse=True)), a)
                v = c * d
                s = out.get(key)
                out[key] = v if s is None else s + v
        return VkElement.from_powersum(self.k, out, self.D)

    def x_part(self, a):
        """The symmetric function multiplying y^a."""
        a = tuple(a)
        return SymFunc({lam: c for (lam, b), c in self.terms.items() if b == a}, "monomial", self.D)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: (list(kv[0][0]), list(kv[0][1])))

    def to_json(self):
        return [{"partition": list(lam), "y_exponents": list(a), "coeff": str(c)}
                for (lam, a), c in self.sorted_terms()]

    @classmethod
    def from_json(cls, rows, k=None, D=None):
        terms = {}
        for r in rows:
            terms[(tuple(r["partition"]), tuple(r["y_exponents"]))] = QT.parse(r["coeff"])
        if k is None:
            k = len(rows[0]["y_exponents"]) if rows else 0
        return cls(k, terms, D)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (lam, a), c in self.sorted_terms():
            ys = "*".join(f"y{i + 1}^{e}" for i, e in enumerate(a) if e)
            parts.append(f"({c})*m{list(lam)}" + (f"*{ys}" if ys else ""))
        return " + ".join(parts)

    __repr__ = __str__


def _increments(lam):
    seen = set()
    lam = list(lam)
    for i in range(len(lam)):
        mu = lam[:]
        mu[i] += 1
        mu = tuple(sorted(mu, reverse=True))
        if mu not in seen:
            seen.add(mu)
            yield mu
    mu = tuple(lam + [1])
    if mu not in seen:
        yield mu


def _changed_value_index(lam, mu):
    """Index in mu of a part whose value was created by the increment."""
    cl, cm = Counter(lam), Counter(mu)
    for i, v in enumerate(mu):
        if cm[v] > cl.get(v, 0):
            return i
    raise AssertionError("increment not found")


def e_sym(n, D=None) -> SymFunc:
    return SymFunc({(1,) * n: ONE} if n else {(): ONE}, "monomial", D)


# --------------------------------------------------------------------------
# finite variables <-> stable carrier

def from_finite_variables(f: XPoly, m, k=None, D=None, check=True) -> VkElement:
    """Lift f in x_1..x_m, y_1..y_k (symmetric in the x-block) to Lambda (x) K[y]."""
    D = degree_bound(D)
    k = f.n - m if k is None else k
    if m + k != f.n:
        raise ValueError(f"m + k = {m + k} does not match {f.n} variables")
    out = {}
    maxdeg = 0
    for e, c in f.terms.items():
        x, a = e[:m], e[m:]
        maxdeg = max(maxdeg, sum(x))
        if check:
            key = tuple(sorted(x, reverse=True)) + a
            other = f.terms.get(key)
            if other is None or other != c:
                raise AsymmetricInputError(f"x-block is not symmetric at exponent {e}")
        if all(x[i] >= x[i + 1] for i in range(m - 1)):
            out[(tuple(v for v in x if v), a)] = c
    if maxdeg > D:
        raise DegreeOverflowError(f"x-degree {maxdeg} exceeds bound D={D}")
    if maxdeg > m:
        raise ValueError(f"m={m} symmetric variables cannot determine a lift of x-degree {maxdeg}")
    return VkElement(k, out, D)


def specialize(F: VkElement, m) -> XPoly:
    """Evaluate the symmetric parts in m variables."""
    from itertools import permutations

    out = {}
    for (lam, a), c in F.terms.items():
        if len(lam) > m:
            continue
        padded = lam + (0,) * (m - len(lam))
        for perm in set(permutations(padded)):
            key = perm + a
            s = out.get(key)
            out[key] = c if s is None else s + c
    return XPoly(m + F.k, {e: c for e, c in out.items() if not c.is_zero()})


# --------------------------------------------------------------------------
# plethystic operations on V_k

def alphabet_scale(F: VkElement, rule) -> VkElement:
    out = {}
    for (lam, a), c in F.to_powersum().items():
        fac = ONE
        for part in lam:
            fac = fac * rule(part)
        out[(lam, a)] = c * fac
    return VkElement.from_powersum(F.k, out, F.D)


def alphabet_shift(F: VkElement, sign, slot) -> VkElement:
    """p_i -> p_i + sign (t^i - 1) y_slot^i.

    ``slot == k + 1`` appends a new y-variable; otherwise ``slot`` must be an
    existing index.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    new_k = F.k + 1 if slot == F.k + 1 else F.k
    if not 1 <= slot <= new_k:
        raise ValueError(f"slot {slot} out of range for k={F.k}")
    out = {}
    for (lam, a), c in F.to_powersum().items():
        a = a + (0,) * (new_k - F.k)
        # expand prod_i (p_{lam_i} + sign (t^{lam_i} - 1) y^{lam_i}) over subsets of parts
        expansions = {((), 0): c}
        for part in lam:
            shift = (QT.monomial(0, part) - 1) * sign
            nxt = {}
            for (kept, ydeg), v in expansions.items():
                k1 = (tuple(sorted(kept + (part,), reverse=True)), ydeg)
                nxt[k1] = nxt.get(k1, ZERO) + v
                k2 = (kept, ydeg + part)
                nxt[k2] = nxt.get(k2, ZERO) + v * shift
            expansions = nxt
        for (kept, ydeg), v in expansions.items():
            if v.is_zero():
                continue
            b = list(a)
            b[slot - 1] += ydeg
            key = (kept, tuple(b))
            s = out.get(key)
            out[key] = v if s is None else s + v
    return VkElement.from_powersum(new_k, {k: v for k, v in out.items() if not v.is_zero()}, F.D)


def omega_extract(F: VkElement) -> VkElement:
    """-[y_{k+1}^{-1}] ( F(X - (t-1) y_{k+1}) Omega(-y_{k+1}^{-1} X) ), landing in V_k."""
    if F.k < 1:
        raise ValueError("omega_extract needs at least one y-variable")
    g = alphabet_shift(F, -1, F.k)
    return pair_last_y(g)


def pair_last_y(g: VkElement) -> VkElement:
    """sum_j (-1)^j e_{j+1}(X) g_j where g = sum_j g_j y_{last}^j."""
    k = g.k - 1
    pieces = {}
    for (lam, a), c in g.terms.items():
        pieces.setdefault(a[-1], {})[(lam, a[:-1])] = c
    total = VkElement(k, {}, g.D)
    for j, terms in sorted(pieces.items()):
        part = VkElement(k, terms, g.D)
        if part.x_degree() + j + 1 > g.D:
            raise DegreeOverflowError(
                f"d- needs x-degree {part.x_degree() + j + 1} > D={g.D}; raise the degree bound")
        prod = part.mul_sym(e_sym(j + 1, g.D))
        total = total + (prod if j % 2 == 0 else -prod)
    return total
