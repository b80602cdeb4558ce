"""Exact sparse linear algebra over the rationals.

Rows are dicts ``{column: value}``.  Columns may be any hashable, ordered
by an optional key.  Rank computations on large matrices go through
``integer_rank``, a fraction-free elimination that keeps rows primitive.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Dict, Hashable, Iterable, List, Optional, Sequence, Tuple

Row = Dict[Hashable, Fraction]


def rref(rows: Iterable[Row], key=None) -> Dict[Hashable, Row]:
    """Reduced row echelon form as ``{pivot column: monic row}``.

    The pivot of a row is its largest column under ``key``.
    """
    key = key or (lambda c: c)
    pivots: Dict[Hashable, Row] = {}
    for r in rows:
        r = {c: Fraction(v) for c, v in r.items() if v}
        while r:
            lead = max(r, key=key)
            p = pivots.get(lead)
            if p is None:
                break
            f = r[lead]
            for c, v in p.items():
                s = r.get(c, 0) - f * v
                if s:
                    r[c] = s
                else:
                    r.pop(c, None)
        if not r:
            continue
        lc = r[lead]
        pivots[lead] = {c: v / lc for c, v in r.items()}
    leads = sorted(pivots, key=key)
    for i, li in enumerate(leads):
        pi = pivots[li]
        for lj in leads[i + 1:]:
            pj = pivots[lj]
            f = pj.get(li)
            if f:
                for c, v in pi.items():
                    s = pj.get(c, 0) - f * v
                    if s:
                        pj[c] = s
                    else:
                        pj.pop(c, None)
    return pivots


def rank(rows: Iterable[Row]) -> int:
    return integer_rank(rows)


def span_equal(a: Sequence[Row], b: Sequence[Row]) -> bool:
    """Whether two row lists span the same space."""
    ra, rb = rank(a), rank(b)
    return ra == rb == rank(list(a) + list(b))


def in_span(v: Row, rows: Sequence[Row]) -> bool:
    return rank(list(rows) + [v]) == rank(rows)


def nullspace(matrix: Sequence[Sequence], ncols: int) -> List[List[Fraction]]:
    """Basis of ``{x : M x = 0}`` for a dense matrix, one vector per free column."""
    rows = [{j: Fraction(v) for j, v in enumerate(r) if v} for r in matrix]
    # pivot on the smallest column so free columns are the trailing ones
    piv = rref(rows, key=lambda c: -c)
    pivot_cols = set(piv)
    basis = []
    for f in range(ncols):
        if f in pivot_cols:
            continue
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for pc, row in piv.items():
            x[pc] = -row.get(f, Fraction(0))
        basis.append(x)
    return basis


def solve(columns: Sequence[Row], target: Row) -> Optional[List[Fraction]]:
    """Find ``c`` with ``sum_k c[k] * columns[k] == target``.

    Free variables are set to zero, giving the particular solution supported
    on the earliest possible columns.  Returns ``None`` if inconsistent.
    """
    # Build rows indexed by coordinate; unknowns are columns.
    coords = set(target)
    for col in columns:
        coords.update(col)
    n = len(columns)
    rows = []
    for coord in coords:
        r = {k: col[coord] for k, col in enumerate(columns) if col.get(coord)}
        rhs = target.get(coord, 0)
        if rhs:
            r["rhs"] = Fraction(rhs)
        if r:
            rows.append(r)
    # Pivot on the lowest unknown index; the rhs column sorts last.
    piv = rref(rows, key=lambda c: -(n + 1) if c == "rhs" else -c)
    if "rhs" in piv:
        return None
    x = [Fraction(0)] * n
    for pc, row in piv.items():
        x[pc] = row.get("rhs", Fraction(0))
    return x


def _primitive(row: Dict[Hashable, int]) -> Dict[Hashable, int]:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    if g > 1:
        return {c: v // g for c, v in row.items()}
    return row


def _to_integer_row(r: Row) -> Dict[Hashable, int]:
    den = 1
    for v in r.values():
        if isinstance(v, Fraction):
            den = den * v.denominator // gcd(den, v.denominator)
    out = {}
    for c, v in r.items():
        if v:
            iv = v * den
            out[c] = int(iv) if not isinstance(iv, Fraction) else iv.numerator
    return out


def integer_rank(rows: Iterable[Row]) -> int:
    """Exact rank via fraction-free elimination on primitive integer rows."""
    pivots: Dict[Hashable, Dict[Hashable, int]] = {}
    for r in rows:
        r = _to_integer_row(r)
        while r:
            lead = min(r)
            p = pivots.get(lead)
            if p is None:
                pivots[lead] = _primitive(r)
                break
            a, b = r[lead], p[lead]
            g = gcd(a, b)
            fa, fb = b // g, a // g
            new = {}
            for c, v in r.items():
                new[c] = v * fa
            for c, v in p.items():
                s = new.get(c, 0) - v * fb
                if s:
                    new[c] = s
                else:
                    new.pop(c, None)
            r = _primitive(new) if new else new
    return len(pivots)
