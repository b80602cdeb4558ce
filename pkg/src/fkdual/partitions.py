"""Set partitions and the monomial combinatorics of the commutative algebra D_n.

D_n is generated by commuting ``a_ij`` (``i < j``) with
``a_ij a_jk = a_ij a_ik``.  A monomial there is pinned down by its graph
on ``[n]``: the connected components and the number of edges in each.
This module is the combinatorial side, independent of the rewriting engine.
"""

from __future__ import annotations

import csv
import io
from collections import Counter
from dataclasses import dataclass
from math import comb
from typing import Iterable, Iterator, List, Sequence, Tuple

from .errors import InvalidInputError
from .invariants import TruncatedSeries

Pair = Tuple[int, int]

MAX_N = 12


def _check_range(n: int):
    if not 1 <= n <= MAX_N:
        raise InvalidInputError(f"n must be between 1 and {MAX_N}, got {n}")


@dataclass(frozen=True)
class SetPartition:
    """Blocks of ``[n]``, each sorted, ordered by their minimum."""

    n: int
    blocks: Tuple[Tuple[int, ...], ...]

    @classmethod
    def from_blocks(cls, n: int, blocks: Iterable[Iterable[int]]) -> "SetPartition":
        bl = [tuple(sorted(b)) for b in blocks]
        if any(not b for b in bl):
            raise InvalidInputError("blocks must be nonempty")
        flat = sorted(x for b in bl for x in b)
        if flat != list(range(1, n + 1)):
            raise InvalidInputError(f"blocks do not form a partition of 1..{n}")
        return cls(n, tuple(sorted(bl)))

    @classmethod
    def trivial(cls, n: int) -> "SetPartition":
        return cls(n, tuple((i,) for i in range(1, n + 1)))

    def __len__(self):
        return len(self.blocks)

    def refines(self, other: "SetPartition") -> bool:
        """Every block of ``self`` lies inside a block of ``other``."""
        where = {x: k for k, b in enumerate(other.blocks) for x in b}
        return all(len({where[x] for x in b}) == 1 for b in self.blocks)

    def __str__(self):
        return "{" + ", ".join("{" + ",".join(map(str, b)) + "}" for b in self.blocks) + "}"


@dataclass(frozen=True)
class PartitionStats:
    rank: int
    singletons: int
    big_blocks: int


def partition_stats(pi: SetPartition) -> PartitionStats:
    singles = sum(1 for b in pi.blocks if len(b) == 1)
    return PartitionStats(pi.n - len(pi.blocks), singles, len(pi.blocks) - singles)


def iter_set_partitions(n: int) -> Iterator[SetPartition]:
    """Partitions of ``[n]`` in restricted-growth-string order."""
    _check_range(n)

    def rec(k, blocks):
        if k > n:
            yield SetPartition(n, tuple(tuple(b) for b in blocks))
            return
        for b in blocks:
            b.append(k)
            yield from rec(k + 1, blocks)
            b.pop()
        blocks.append([k])
        yield from rec(k + 1, blocks)
        blocks.pop()

    # blocks are created in order of their minimum, so output is canonical
    return rec(1, [])


def enum_set_partitions(n: int) -> List[SetPartition]:
    return list(iter_set_partitions(n))


def stats_census(n: int) -> Counter:
    """How many partitions of ``[n]`` share each (rank, big_blocks) pair.

    Elements are added one at a time; only the numbers of singleton and
    larger blocks matter for where the next element can go.
    """
    _check_range(n)
    states = Counter({(0, 0): 1})  # (singletons, big blocks)
    for _ in range(n):
        nxt = Counter()
        for (s, b), c in states.items():
            nxt[(s + 1, b)] += c  # new block
            if s:
                nxt[(s - 1, b + 1)] += c * s  # join a singleton
            if b:
                nxt[(s, b)] += c * b  # join a larger block
        states = nxt
    out = Counter()
    for (s, b), c in states.items():
        out[(n - s - b, b)] += c
    return out


def dn_hilbert_closed_form(n: int, D: int) -> TruncatedSeries:
    """Sum over partitions of ``t**rank / (1 - t)**big_blocks``, to degree ``D``."""
    out = [0] * (D + 1)
    for (r, b), mult in stats_census(n).items():
        for d in range(r, D + 1):
            # [t^(d-r)] (1-t)^(-b)
            out[d] += mult * (comb(d - r + b - 1, b - 1) if b else int(d == r))
    return TruncatedSeries(out)


def partitions_csv(n: int) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["partition", "rank", "singletons", "big_blocks"])
    for pi in iter_set_partitions(n):
        s = partition_stats(pi)
        w.writerow([str(pi), s.rank, s.singletons, s.big_blocks])
    return buf.getvalue()


# ---------------------------------------------------------------------------
# monomial graphs


@dataclass(frozen=True)
class MonomialType:
    """Components of a monomial graph as ``(vertex set, edge count)``.

    Singletons appear with edge count 0 so the components cover ``[n]``.
    """

    n: int
    components: Tuple[Tuple[Tuple[int, ...], int], ...]

    @property
    def support(self) -> SetPartition:
        return SetPartition(self.n, tuple(v for v, _ in self.components))

    @property
    def degree(self) -> int:
        return sum(m for _, m in self.components)

    @property
    def nontrivial(self) -> Tuple[Tuple[Tuple[int, ...], int], ...]:
        return tuple(c for c in self.components if len(c[0]) > 1)


def _check_pair(p: Pair, n: int) -> Pair:
    i, j = p
    if not (1 <= i < j <= n):
        raise InvalidInputError(f"invalid index pair {p} for n = {n}")
    return (i, j)


def monomial_graph(word: Sequence[Pair], n: int) -> MonomialType:
    """Type of the monomial whose letters are the index pairs in ``word``."""
    parent = list(range(n + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    edges = [_check_pair(p, n) for p in word]
    for i, j in edges:
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[max(ri, rj)] = min(ri, rj)
    verts = {}
    for v in range(1, n + 1):
        verts.setdefault(find(v), []).append(v)
    count = Counter(find(i) for i, _ in edges)
    comps = sorted((tuple(vs), count.get(root, 0)) for root, vs in verts.items())
    return MonomialType(n, tuple(comps))


def block_representative(block: Sequence[int], m: int) -> List[Pair]:
    """``a_{i1 i2}^(m-q+2) a_{i1 i3} ... a_{i1 iq}`` for a block of size ``q``."""
    b = sorted(block)
    q = len(b)
    if q < 2 or m < q - 1:
        raise InvalidInputError(f"block {b} needs at least {q - 1} edges, got {m}")
    i1 = b[0]
    return [(i1, b[1])] * (m - q + 2) + [(i1, x) for x in b[2:]]


def canonical_from_type(t: MonomialType) -> List[Pair]:
    out: List[Pair] = []
    for verts, m in t.nontrivial:
        out.extend(block_representative(verts, m))
    return out


def dn_canonical_form(word: Sequence[Pair], n: int) -> List[Pair]:
    """The representative monomial sharing ``word``'s type."""
    return canonical_from_type(monomial_graph(word, n))


def type_compare(t1: MonomialType, t2: MonomialType) -> str:
    """``less``, ``greater``, ``equal`` or ``incomparable``.

    Types with the same support compare lexicographically on their edge
    counts; otherwise a proper refinement of supports is smaller.
    """
    if t1.n != t2.n:
        raise InvalidInputError("types over different n")
    if t1.degree != t2.degree:
        raise InvalidInputError("types of different degree")
    if t1 == t2:
        return "equal"
    s1, s2 = t1.support, t2.support
    if s1 == s2:
        m1 = [m for _, m in t1.components]
        m2 = [m for _, m in t2.components]
        return "less" if m1 < m2 else "greater"
    if s1.refines(s2):
        return "less"
    if s2.refines(s1):
        return "greater"
    return "incomparable"
