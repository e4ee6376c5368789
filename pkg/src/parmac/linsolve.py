"""Exact sparse linear solves over Q(q,t)."""

from __future__ import annotations

from .qt import QT, ZERO


class SingularSystemError(ArithmeticError):
    pass


class InconsistentSystemError(ArithmeticError):
    pass


def solve_columns(columns, rhs, names=None):
    """Solve sum_j x_j columns[j] = rhs exactly.

    ``columns`` is a list of dicts row_key -> QT, ``rhs`` a dict of the same
    shape.  Returns the list of x_j.  Raises if the solution is not unique or
    the system is inconsistent.
    """
    ncols = len(columns)
    rows = {}
    for j, col in enumerate(columns):
        for r, v in col.items():
            if not v.is_zero():
                rows.setdefault(r, {})[j] = v
    for r in rhs:
        rows.setdefault(r, {})
    eqs = [(dict(coeffs), rhs.get(r, ZERO)) for r, coeffs in rows.items()]

    pivots = {}  # column -> (coeffs, value) with coeffs[column] == 1
    pending = eqs
    while pending:
        # pivot on the sparsest equation first; singleton rows resolve directly
        pending.sort(key=lambda e: len(e[0]))
        coeffs, val = pending[0]
        rest = pending[1:]
        if not coeffs:
            if not val.is_zero():
                raise InconsistentSystemError("right-hand side is not in the column span")
            pending = rest
            continue
        col = min(coeffs, key=lambda c: (_weight(coeffs[c]), c))
        inv = coeffs[col].inverse()
        coeffs = {c: v * inv for c, v in coeffs.items()}
        val = val * inv
        pending = [_eliminate(e, col, coeffs, val) for e in rest]
        for c, (pc, pv) in list(pivots.items()):
            if col in pc:
                pivots[c] = _eliminate((pc, pv), col, coeffs, val)
        pivots[col] = (coeffs, val)

    missing = [j for j in range(ncols) if j not in pivots]
    if missing:
        label = [names[j] for j in missing] if names else missing
        raise SingularSystemError(f"solution is not unique; free unknowns {label}")
    out = [None] * ncols
    for c, (pc, pv) in pivots.items():
        if len(pc) != 1:
            raise SingularSystemError("elimination left coupled unknowns")
        out[c] = pv
    return out


def _weight(v: QT):
    return len(v.num.coeffs()) + len(v.den.coeffs())


def _eliminate(eq, col, pcoeffs, pval):
    coeffs, val = eq
    f = coeffs.get(col)
    if f is None:
        return eq
    out = dict(coeffs)
    for c, v in pcoeffs.items():
        nv = out.get(c, ZERO) - f * v
        if nv.is_zero():
            out.pop(c, None)
        else:
            out[c] = nv
    out.pop(col, None)
    return out, val - f * pval
