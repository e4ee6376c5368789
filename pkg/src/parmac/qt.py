"""Exact arithmetic in the field Q(q, t).

Elements are stored as a reduced fraction of integer polynomials in ``q`` and
``v`` where ``v**2 == t``.  This lets t-exponents live in (1/2)Z while every
stored exponent stays an integer (the t-exponent doubled).  Polynomial gcds are
delegated to FLINT.

Canonical form: ``gcd(num, den) == 1`` (integer content included), both
polynomials have nonnegative exponents and the leading coefficient of ``den``
under the order (q-exponent desc, t-exponent desc) is positive.  Zero is
``0 / 1``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Union

import flint

CTX = flint.fmpz_mpoly_ctx.get(("q", "v"), "lex")
_ZERO = CTX.from_dict({})
_ONE = CTX.from_dict({(0, 0): 1})

Scalar = Union[int, Fraction, "QT"]


class QTZeroDivisionError(ZeroDivisionError):
    """Raised for division by an exactly-zero element of Q(q,t)."""


class QTEvaluationError(ArithmeticError):
    """Raised when a substitution makes the denominator vanish."""

    def __init__(self, message, factor=None):
        super().__init__(message)
        self.factor = factor


def _shift(p, dq, dv):
    """Multiply polynomial ``p`` by q^dq v^dv (dq, dv >= 0)."""
    if dq == 0 and dv == 0:
        return p
    return p * CTX.from_dict({(dq, dv): 1})


class QT:
    """Element of Q(q,t); immutable."""

    __slots__ = ("num", "den")

    def __init__(self, num=_ZERO, den=_ONE, _reduced=False):
        if not _reduced:
            num, den = _canonical(num, den)
        self.num = num
        self.den = den

    # construction ---------------------------------------------------------
    @classmethod
    def from_int(cls, c) -> QT:
        return cls(CTX.from_dict({(0, 0): int(c)}) if c else _ZERO, _ONE, _reduced=True)

    @classmethod
    def from_fraction(cls, fr: Fraction) -> QT:
        fr = Fraction(fr)
        if fr.denominator == 1:
            return cls.from_int(fr.numerator)
        return cls(CTX.from_dict({(0, 0): fr.numerator}),
                   CTX.from_dict({(0, 0): fr.denominator}))

    @classmethod
    def monomial(cls, qexp=0, texp=0, coeff=1) -> QT:
        """``coeff * q**qexp * t**texp``; ``texp`` may be a half-integer."""
        vexp = Fraction(texp) * 2
        if vexp.denominator != 1:
            raise ValueError(f"t-exponent {texp} is not in (1/2)Z")
        return cls.from_vmonomial(int(qexp), int(vexp), coeff)

    @classmethod
    def from_vmonomial(cls, qexp: int, vexp: int, coeff=1) -> QT:
        if coeff == 0:
            return ZERO
        nq, dq = (qexp, 0) if qexp >= 0 else (0, -qexp)
        nv, dv = (vexp, 0) if vexp >= 0 else (0, -vexp)
        c = Fraction(coeff)
        num = CTX.from_dict({(nq, nv): c.numerator})
        den = CTX.from_dict({(dq, dv): c.denominator})
        return cls(num, den, _reduced=(c.denominator == 1))

    @classmethod
    def coerce(cls, x: Scalar) -> QT:
        if isinstance(x, QT):
            return x
        if isinstance(x, int):
            return cls.from_int(x)
        if isinstance(x, Fraction):
            return cls.from_fraction(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to QT")

    # predicates -----------------------------------------------------------
    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.num.is_one() and self.den.is_one()

    def is_laurent_integral(self) -> bool:
        """True iff the value is an integer Laurent polynomial in q and t^(1/2)."""
        coeffs = self.den.coeffs()
        return len(coeffs) == 1 and abs(int(coeffs[0])) == 1

    def is_integral_qt(self) -> bool:
        """True iff the value lies in Z[q, t] (no negative or half t powers)."""
        if not self.den.is_one():
            return False
        return all(int(ev) % 2 == 0 for _, ev in self.num.monoms())

    # arithmetic -----------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, QT):
            if isinstance(other, (int, Fraction)):
                other = QT.coerce(other)
            else:
                return NotImplemented
        if other.num.is_zero():
            return self
        if self.num.is_zero():
            return other
        if self.den == other.den:
            if self.den.is_one():
                return QT(self.num + other.num, _ONE, _reduced=True)
            return QT(self.num + other.num, self.den)
        if self.den.is_one():
            return QT(self.num * other.den + other.num, other.den, _reduced=True)
        if other.den.is_one():
            return QT(other.num * self.den + self.num, self.den, _reduced=True)
        g = self.den.gcd(other.den)
        if g.is_one():
            return QT(self.num * other.den + other.num * self.den, self.den * other.den)
        d1 = self.den // g
        d2 = other.den // g
        return QT(self.num * d2 + other.num * d1, d1 * other.den)

    __radd__ = __add__

    def __neg__(self):
        return QT(-self.num, self.den, _reduced=True)

    def __sub__(self, other):
        if not isinstance(other, QT):
            if isinstance(other, (int, Fraction)):
                other = QT.coerce(other)
            else:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, QT):
            if isinstance(other, int):
                if other == 0:
                    return ZERO
                return QT(self.num * other, self.den)
            if isinstance(other, Fraction):
                other = QT.from_fraction(other)
            else:
                return NotImplemented
        if self.num.is_zero() or other.num.is_zero():
            return ZERO
        if self.den.is_one() and other.den.is_one():
            return QT(self.num * other.num, _ONE, _reduced=True)
        # cross-cancel before multiplying
        g1 = self.num.gcd(other.den)
        g2 = other.num.gcd(self.den)
        n1, d2 = (self.num, other.den) if g1.is_one() else (self.num // g1, other.den // g1)
        n2, d1 = (other.num, self.den) if g2.is_one() else (other.num // g2, self.den // g2)
        return QT(n1 * n2, d1 * d2, _reduced=True)._fix_sign()

    __rmul__ = __mul__

    def inverse(self) -> QT:
        if self.num.is_zero():
            raise QTZeroDivisionError("division by zero in Q(q,t)")
        return QT(self.den, self.num, _reduced=True)._fix_sign()

    def __truediv__(self, other):
        if not isinstance(other, QT):
            if isinstance(other, (int, Fraction)):
                other = QT.coerce(other)
            else:
                return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return QT.coerce(other) * self.inverse()

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse() ** (-e)
        return QT(self.num ** e, self.den ** e, _reduced=True)

    def _fix_sign(self):
        if int(self.den.leading_coefficient()) < 0:
            return QT(-self.num, -self.den, _reduced=True)
        return self

    # comparison / hashing -------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QT.coerce(other)
        if not isinstance(other, QT):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __hash__(self):
        return hash((tuple(self.num.to_dict().items()), tuple(self.den.to_dict().items())))

    def __reduce__(self):
        return (_rebuild, (self.num.to_dict(), self.den.to_dict()))

    # field automorphisms / substitution -----------------------------------
    def star(self) -> QT:
        """Apply t -> 1/t (q fixed)."""
        n, en = _reverse_v(self.num)
        d, ed = _reverse_v(self.den)
        # num(q,1/v)/den(q,1/v) = (n / v^en) / (d / v^ed) = n v^ed / (d v^en)
        m = min(en, ed)
        return QT(_shift(n, 0, ed - m), _shift(d, 0, en - m))

    def evaluate(self, q=None, t=None, sqrt_t=None) -> QT:
        """Substitute values for q and/or t (or for t^(1/2) via ``sqrt_t``)."""
        if t is not None and sqrt_t is not None:
            raise ValueError("give at most one of t and sqrt_t")
        Q = None if q is None else QT.coerce(q)
        if sqrt_t is not None:
            V, halve = QT.coerce(sqrt_t), False
        elif t is not None:
            V, halve = QT.coerce(t), True
        else:
            V, halve = None, False
        den = _subs_poly(self.den, Q, V, halve)
        if den.is_zero():
            bad = None
            for fac, _mult in self.den.factor()[1]:
                if _subs_poly(fac, Q, V, halve).is_zero():
                    bad = QT(fac, _ONE, _reduced=True)
                    break
            raise QTEvaluationError(
                f"denominator vanishes at the evaluation point (factor {bad})", bad)
        return _subs_poly(self.num, Q, V, halve) / den

    # text ------------------------------------------------------------------
    def __str__(self):
        return f"{_poly_text(self.num)} / {_poly_text(self.den)}"

    def __repr__(self):
        return f"QT({self})"

    @classmethod
    def parse(cls, text: str) -> QT:
        """Inverse of ``str``; also accepts a bare polynomial."""
        if "/" in text.replace("(1/2)", "").replace("/2)", ""):
            left, right = _split_fraction(text)
            return _parse_poly(left) / _parse_poly(right)
        return _parse_poly(text)

    def terms(self):
        """Numerator and denominator as lists of (coeff, qexp, texp)."""
        return _terms(self.num), _terms(self.den)


def _rebuild(nd, dd):
    return QT(CTX.from_dict(nd), CTX.from_dict(dd), _reduced=True)


def _canonical(num, den):
    if den.is_zero():
        raise QTZeroDivisionError("zero denominator")
    if num.is_zero():
        return _ZERO, _ONE
    if not den.is_one():
        g = num.gcd(den)
        if not g.is_one():
            num = num // g
            den = den // g
    if int(den.leading_coefficient()) < 0:
        num, den = -num, -den
    return num, den


def _reverse_v(p):
    """Return (p(q, 1/v) * v^d, d) with d the v-degree of p."""
    items = p.to_dict()
    if not items:
        return p, 0
    d = max(int(ev) for _, ev in items)
    return CTX.from_dict({(int(eq), d - int(ev)): c for (eq, ev), c in items.items()}), d


def _subs_poly(p, Q, V, halve) -> QT:
    total = ZERO
    for (eq, ev), c in p.to_dict().items():
        eq, ev = int(eq), int(ev)
        term = QT.from_int(int(c))
        if Q is None:
            term = term * QT.from_vmonomial(eq, 0)
        elif eq:
            term = term * Q ** eq
        if V is None:
            term = term * QT.from_vmonomial(0, ev)
        elif halve:
            if ev % 2:
                raise QTEvaluationError("cannot substitute t into an odd power of t^(1/2); use sqrt_t")
            term = term * V ** (ev // 2)
        elif ev:
            term = term * V ** ev
        total = total + term
    return total


def _terms(p):
    out = []
    for (eq, ev), c in p.to_dict().items():
        out.append((int(c), int(eq), Fraction(int(ev), 2)))
    out.sort(key=lambda x: (-x[1], -x[2]))
    return out


def _texp_text(te: Fraction) -> str:
    if te.denominator == 1:
        return f"t^{te.numerator}"
    return f"t^({te.numerator}/2)"


def _poly_text(p) -> str:
    if p.is_zero():
        return "0"
    parts = []
    for c, eq, te in _terms(p):
        factors = [str(c)]
        if eq:
            factors.append(f"q^{eq}")
        if te:
            factors.append(_texp_text(te))
        parts.append("*".join(factors))
    return "+".join(parts)


def _split_fraction(text):
    # the top-level " / " separator (half exponents are parenthesised)
    depth = 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "/" and depth == 0:
            return text[:i], text[i + 1:]
    raise ValueError(f"no fraction bar in {text!r}")


_TERM_RE = re.compile(r"^([+-]?\d+)?((?:\*?[qt](?:\^(?:-?\d+|\(-?\d+/2\)))?)*)$")
_FACTOR_RE = re.compile(r"([qt])(?:\^(-?\d+|\(-?\d+/2\)))?")


def _parse_poly(text: str) -> QT:
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty polynomial")
    # split on '+' that are not inside parentheses
    terms, depth, cur = [], 0, ""
    for ch in s:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "+" and depth == 0 and cur:
            terms.append(cur)
            cur = ""
        else:
            cur += ch
    terms.append(cur)
    total = ZERO
    for term in terms:
        m = _TERM_RE.match(term)
        if not m:
            raise ValueError(f"cannot parse term {term!r}")
        coeff = int(m.group(1)) if m.group(1) not in (None, "+", "-") else (-1 if m.group(1) == "-" else 1)
        qe, te = 0, Fraction(0)
        for var, exp in _FACTOR_RE.findall(m.group(2) or ""):
            if not exp:
                val = Fraction(1)
            elif exp.startswith("("):
                a, b = exp[1:-1].split("/")
                val = Fraction(int(a), int(b))
            else:
                val = Fraction(int(exp))
            if var == "q":
                qe += int(val)
            else:
                te += val
        total = total + QT.monomial(qe, te, coeff)
    return total


ZERO = QT(_ZERO, _ONE, _reduced=True)
ONE = QT(_ONE, _ONE, _reduced=True)
q = QT.from_vmonomial(1, 0)
t = QT.from_vmonomial(0, 2)
sqrt_t = QT.from_vmonomial(0, 1)


def qt_arith(a: QT, b: QT, op: str) -> QT:
    """Dispatch one of add/sub/mul/div."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown op {op!r}")


def tpow(e) -> QT:
    return QT.monomial(0, e)


def qpow(e) -> QT:
    return QT.monomial(e, 0)


def qt_mono(qexp, texp) -> QT:
    return QT.monomial(qexp, texp)


def binomial(qexp, texp, sign=-1, const=1) -> QT:
    """``const + sign * q^qexp t^texp``, e.g. the factor 1 - q^a t^b."""
    return QT.from_int(const) + QT.monomial(qexp, texp, sign)
