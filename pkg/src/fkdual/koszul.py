"""Bigraded Ext tables from the normalized bar complex.

For a connected graded algebra ``A`` generated in degree one, the internal
degree ``j`` strand of the normalized bar complex has ``i``-th term
``sum over compositions j = d1 + ... + di`` of ``A_d1 (x) ... (x) A_di``.  Its
homology is ``Tor_{i,j}(k, k)``, whose dimensions agree with ``Ext^{i,j}``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import product
from typing import Dict, List, Optional, Tuple

from . import linalg
from .errors import InvalidInputError, ResourceError, TruncationError
from .invariants import TruncatedSeries, hilbert_truncation
from .rewrite import ReductionSystem

DEFAULT_MAX_COLUMNS = 200_000


@dataclass
class ExtTable:
    name: str
    I: int
    J: int
    dims: Dict[Tuple[int, int], int] = field(default_factory=dict)

    def __getitem__(self, ij: Tuple[int, int]) -> int:
        i, j = ij
        if not (0 <= i <= self.I and 0 <= j <= self.J):
            raise TruncationError(f"bidegree {ij} outside the table bounds ({self.I}, {self.J})")
        if i == 0:
            return int(j == 0)
        return self.dims.get((i, j), 0)

    def off_diagonal(self) -> List[Tuple[int, int, int]]:
        """Nonzero entries with ``i < j``, sorted by ``(j, i)``."""
        out = [(i, j, v) for (i, j), v in self.dims.items() if i < j and v]
        return sorted(out, key=lambda e: (e[1], e[0]))

    def euler_characteristic(self, j: int) -> int:
        if self.I < j:
            raise TruncationError(f"Euler characteristic at degree {j} needs I >= {j}")
        return sum((-1) ** i * self[i, j] for i in range(0, j + 1))

    def to_dict(self) -> dict:
        return {
            "algebra": self.name,
            "I": self.I,
            "J": self.J,
            "dims": [[self[i, j] for j in range(1, self.J + 1)] for i in range(1, self.I + 1)],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def grid(self) -> str:
        head = ["i\\j"] + [str(j) for j in range(1, self.J + 1)]
        rows = [head]
        for i in range(1, self.I + 1):
            rows.append([str(i)] + [str(self[i, j]) for j in range(1, self.J + 1)])
        w = max(len(c) for r in rows for c in r)
        return "\n".join(" ".join(c.rjust(w) for c in r) for r in rows)


def compositions(j: int, i: int, top: int | None = None):
    """Compositions of ``j`` into ``i`` positive parts, each at most ``top``."""
    top = j if top is None else top
    if i == 0:
        if j == 0:
            yield ()
        return
    for first in range(1, min(j - i + 1, top) + 1):
        for rest in compositions(j - first, i - 1, top):
            yield (first,) + rest


class _Multiplication:
    """Structure constants of ``A`` in its normal-word basis."""

    def __init__(self, sys: ReductionSystem, J: int):
        self.sys = sys
        self.basis = [sys.normal_basis(d) for d in range(J + 1)]
        self.index = [{w: k for k, w in enumerate(b)} for b in self.basis]
        self._cache: Dict[Tuple[int, int, int, int], Dict[int, object]] = {}

    def dim(self, d: int) -> int:
        return len(self.basis[d])

    def mul(self, d1: int, k1: int, d2: int, k2: int) -> Dict[int, object]:
        key = (d1, k1, d2, k2)
        hit = self._cache.get(key)
        if hit is None:
            w = self.basis[d1][k1] + self.basis[d2][k2]
            nf = self.sys.reduce_terms({w: 1})
            idx = self.index[d1 + d2]
            hit = {idx[u]: c for u, c in nf.items()}
            self._cache[key] = hit
        return hit


def _strand_basis(m: _Multiplication, i: int, j: int, top: int):
    out = []
    for comp in compositions(j, i, top):
        ranges = [range(m.dim(d)) for d in comp]
        for idxs in product(*ranges):
            out.append((comp, idxs))
    return out


def _differential_rank(m: _Multiplication, i: int, j: int, top: int, limit: int) -> int:
    """Rank of the bar differential from the ``i``-th to the ``(i-1)``-th term."""
    src = _strand_basis(m, i, j, top)
    tgt: Dict[Tuple, int] = {}
    rows = []
    for comp, idxs in src:
        row: Dict[int, int] = {}
        for k in range(i - 1):
            d = comp[k] + comp[k + 1]
            if d > top:
                continue
            prod_ = m.mul(comp[k], idxs[k], comp[k + 1], idxs[k + 1])
            if not prod_:
                continue
            sign = -1 if k % 2 == 0 else 1
            ncomp = comp[:k] + (d,) + comp[k + 2:]
            for u, c in prod_.items():
                key = (ncomp, idxs[:k] + (u,) + idxs[k + 2:])
                col = tgt.setdefault(key, len(tgt))
                v = row.get(col, 0) + sign * c
                if v:
                    row[col] = v
                else:
                    row.pop(col, None)
        if row:
            rows.append(row)
    return linalg.integer_rank(rows)


def strand_dimension(m: _Multiplication, i: int, j: int, top: int) -> int:
    total = 0
    for comp in compositions(j, i, top):
        p = 1
        for d in comp:
            p *= m.dim(d)
        total += p
    return total


def ext_table(sys: ReductionSystem, I: int, J: int, *, name: str | None = None,
              max_columns: int = DEFAULT_MAX_COLUMNS) -> ExtTable:
    """Dimensions of ``Ext^{i,j}(k, k)`` for ``1 <= i <= I``, ``1 <= j <= J``."""
    if not sys.homogeneous or not sys.gens.all_degree_one:
        raise InvalidInputError("Ext tables need a graded algebra generated in degree 1")
    if not sys.exact_through(J):
        raise TruncationError(f"Ext table to degree {J} needs completion to {J}, have {sys.complete_to}")
    if I < 1 or J < 1:
        raise InvalidInputError("I and J must be positive")
    m = _Multiplication(sys, J)
    # the largest nonzero degree; parts beyond it contribute nothing
    top = max((d for d in range(1, J + 1) if m.dim(d)), default=0)
    table = ExtTable(name or getattr(sys, "name", "algebra"), I, J)
    for j in range(1, J + 1):
        hi = min(I + 1, j)
        sizes = {i: strand_dimension(m, i, j, top) for i in range(1, hi + 1)}
        for i, s in sizes.items():
            if s > max_columns:
                raise ResourceError(
                    f"strand (i={i}, j={j}) has dimension {s}, above the limit {max_columns}"
                )
        ranks = {1: 0}
        for i in range(2, hi + 1):
            ranks[i] = _differential_rank(m, i, j, top, max_columns)
        for i in range(1, min(I, j) + 1):
            v = sizes[i] - ranks[i] - ranks.get(i + 1, 0)
            if v:
                table.dims[(i, j)] = v
    return table


def euler_check(table: ExtTable, series: TruncatedSeries) -> List[Tuple[int, int, object]]:
    """Per degree ``j``: the alternating Ext sum against ``[t^j] 1 / H(t)``."""
    inv = series.inverse()
    out = []
    for j in range(1, min(table.J, series.D) + 1):
        out.append((j, table.euler_characteristic(j), inv[j]))
    return out


@dataclass(frozen=True)
class KoszulBound:
    p: int
    at_least: bool
    violation: Optional[Tuple[int, int]] = None

    def __str__(self):
        if self.at_least:
            return f">= {self.p}"
        i, j = self.violation
        return f"{self.p} (first nonzero off-diagonal entry at i={i}, j={j})"


def p_koszul_bound(t: ExtTable) -> KoszulBound:
    """Largest ``p <= J`` with ``Ext^{i,j} = 0`` for all ``i < j <= p``.

    Only rows ``i <= I`` are inspected; take ``I >= J - 1`` for a complete answer.
    """
    for j in range(2, t.J + 1):
        for i in range(1, min(j - 1, t.I) + 1):
            if t[i, j]:
                return KoszulBound(j - 1, False, (i, j))
    return KoszulBound(t.J, True)


@dataclass
class PairingReport:
    p: int
    comparisons: List[Tuple[int, int, int]]

    @property
    def passed(self) -> bool:
        return all(a == b for _, a, b in self.comparisons)

    def __bool__(self):
        return self.passed


def pairing_dim_check(tA: ExtTable, tDual: ExtTable, p: int) -> PairingReport:
    """Compare ``dim Ext_A^{i,p}`` with ``dim Ext_{A^!}^{p-i+2,p}`` for ``2 < i < p``.

    Both tables must share their bounds, reach degree ``p`` and show
    ``(p-1)``-Koszulity; otherwise nothing is compared.
    """
    if (tA.I, tA.J) != (tDual.I, tDual.J):
        raise InvalidInputError("tables have mismatched truncations")
    if tA.J < p or tA.I < p - 1:
        raise InvalidInputError(f"tables must reach i = {p - 1}, j = {p}")
    for t in (tA, tDual):
        if p_koszul_bound(t).p < p - 1:
            raise InvalidInputError(f"{t.name} is not {p - 1}-Koszul by its table")
    comps = [(i, tA[i, p], tDual[p - i + 2, p]) for i in range(3, p)]
    return PairingReport(p, comps)
