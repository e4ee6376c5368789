"""Sparse polynomials in x_1..x_n with Q(q,t) coefficients."""

from __future__ import annotations

from .qt import ONE, QT, ZERO


class XPoly:
    """Immutable sparse polynomial; ``terms`` maps exponent tuples to nonzero QT."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=None, _clean=False):
        if n < 0:
            raise ValueError("variable count must be nonnegative")
        self.n = n
        if terms is None:
            terms = {}
        if not _clean:
            cleaned = {}
            for e, c in terms.items():
                e = tuple(e)
                if len(e) != n:
                    raise ValueError(f"exponent {e} does not have length {n}")
                c = QT.coerce(c)
                if not c.is_zero():
                    cleaned[e] = c
            terms = cleaned
        self.terms = terms

    @classmethod
    def constant(cls, n, c=1) -> XPoly:
        c = QT.coerce(c)
        return cls(n, {(0,) * n: c} if not c.is_zero() else {}, _clean=True)

    @classmethod
    def monomial(cls, exps, c=1) -> XPoly:
        exps = tuple(exps)
        return cls(len(exps), {exps: c})

    @classmethod
    def variable(cls, n, i, c=1) -> XPoly:
        """``c * x_i`` (1-based)."""
        e = [0] * n
        e[i - 1] = 1
        return cls.monomial(e, c)

    def is_zero(self):
        return not self.terms

    def _check(self, other):
        if self.n != other.n:
            raise ValueError(f"variable count mismatch: {self.n} vs {other.n}")

    def __add__(self, other):
        if not isinstance(other, XPoly):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(e, None)
            else:
                out[e] = s
        return XPoly(self.n, out, _clean=True)

    def __neg__(self):
        return XPoly(self.n, {e: -c for e, c in self.terms.items()}, _clean=True)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> XPoly:
        c = QT.coerce(c)
        if c.is_zero():
            return XPoly(self.n, {}, _clean=True)
        if c.is_one():
            return self
        return XPoly(self.n, {e: v * c for e, v in self.terms.items()}, _clean=True)

    def __mul__(self, other):
        if isinstance(other, (QT, int)):
            return self.scale(other)
        if not isinstance(other, XPoly):
            return NotImplemented
        self._check(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e)
                out[e] = c1 * c2 if s is None else s + c1 * c2
        return XPoly(self.n, {e: c for e, c in out.items() if not c.is_zero()}, _clean=True)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, XPoly):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms)))

    def coefficient_of(self, exps) -> QT:
        return self.terms.get(tuple(exps), ZERO)

    def permute_variables(self, perm) -> XPoly:
        """Move exponent of x_{i+1} to position ``perm[i]`` (0-based images)."""
        perm = tuple(perm)
        if sorted(perm) != list(range(self.n)):
            raise ValueError(f"{perm} is not a permutation of 0..{self.n - 1}")
        out = {}
        for e, c in self.terms.items():
            ne = [0] * self.n
            for i, a in enumerate(e):
                ne[perm[i]] = a
            out[tuple(ne)] = c
        return XPoly(self.n, out, _clean=True)

    def swap(self, i) -> XPoly:
        """s_i: exchange x_i and x_{i+1} (1-based)."""
        out = {}
        for e, c in self.terms.items():
            ne = list(e)
            ne[i - 1], ne[i] = ne[i], ne[i - 1]
            out[tuple(ne)] = c
        return XPoly(self.n, out, _clean=True)

    def substitute_variable(self, index, target, factor) -> XPoly:
        """Replace x_index by ``factor * x_target`` (1-based, factor a monomial scalar)."""
        factor = QT.coerce(factor)
        out = {}
        for e, c in self.terms.items():
            a = e[index - 1]
            ne = list(e)
            ne[index - 1] = 0
            ne[target - 1] += a
            ne = tuple(ne)
            v = c * factor ** a if a else c
            s = out.get(ne)
            out[ne] = v if s is None else s + v
        return XPoly(self.n, {e: c for e, c in out.items() if not c.is_zero()}, _clean=True)

    def evaluate(self, point) -> QT:
        """Substitute x_i = point[i] (QT values)."""
        point = [QT.coerce(p) for p in point]
        total = ZERO
        for e, c in self.terms.items():
            v = c
            for p, a in zip(point, e):
                if a:
                    v = v * p ** a
            total = total + v
        return total

    def map_coefficients(self, fn) -> XPoly:
        return XPoly(self.n, {e: fn(c) for e, c in self.terms.items()})

    def degree(self):
        return max((sum(e) for e in self.terms), default=-1)

    def sorted_terms(self):
        return sorted(self.terms.items(), reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(f"x{i + 1}^{a}" for i, a in enumerate(e) if a) or "1"
            parts.append(f"({c})*{mono}")
        return " + ".join(parts)

    __repr__ = __str__


def xpoly_arith(f: XPoly, g, op: str) -> XPoly:
    if op == "add":
        return f + g
    if op == "mul":
        return f * g
    if op == "scalar_mul":
        return f.scale(g)
    raise ValueError(f"unknown op {op!r}")


def divided_difference(f: XPoly, i: int) -> XPoly:
    """(f - s_i f) / (x_{i+1} - x_i), computed monomial by monomial."""
    out = {}
    a_idx, b_idx = i - 1, i
    for e, c in f.terms.items():
        a, b = e[a_idx], e[b_idx]
        if a == b:
            continue
        lo, d = min(a, b), abs(a - b)
        sign = c if a < b else -c
        base = list(e)
        for j in range(d):
            ne = base[:]
            ne[a_idx] = lo + j
            ne[b_idx] = lo + d - 1 - j
            ne = tuple(ne)
            s = out.get(ne)
            out[ne] = sign if s is None else s + sign
    return XPoly(f.n, {e: c for e, c in out.items() if not c.is_zero()}, _clean=True)


def shift_variable(f: XPoly, i: int, power=1) -> XPoly:
    """Multiply by x_i^power (1-based)."""
    out = {}
    for e, c in f.terms.items():
        ne = list(e)
        ne[i - 1] += power
        out[tuple(ne)] = c
    return XPoly(f.n, out, _clean=True)


def one(n) -> XPoly:
    return XPoly.constant(n, ONE)
