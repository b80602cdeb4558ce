"""Degree-truncated noncommutative Groebner bases (Bergman's Diamond Lemma).

A ``ReductionSystem`` is a set of monic rewrite rules ``lhs -> rhs`` whose
left-hand sides are leading words under a degree-lexicographic order.
``complete`` resolves overlap ambiguities in increasing degree, FIFO within
a degree, and inter-reduces after each degree batch.  For homogeneous input
the result is the unique reduced Groebner basis truncated at the cap, so the
output does not depend on the processing schedule.

Internally polynomials are plain ``{word: Fraction}`` dicts; the public
surface speaks ``NcPoly``.
"""

from __future__ import annotations

import heapq
import logging
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, NamedTuple, Optional, Sequence, Tuple

from .errors import InconsistentError, InvalidInputError, TruncationError
from .ncpoly import EMPTY, GeneratorSet, MonomialOrder, NcPoly, Word

log = logging.getLogger(__name__)

Terms = Dict[Word, Fraction]


class RewriteRule(NamedTuple):
    lhs: Word
    rhs: NcPoly

    def as_poly(self) -> NcPoly:
        """The relation ``lhs - rhs``."""
        return NcPoly.word(self.rhs.gens, self.lhs) - self.rhs


def _add_scaled(target: Terms, src: Terms, c: Fraction, prefix: Word = EMPTY, suffix: Word = EMPTY):
    for w, v in src.items():
        w = prefix + w + suffix
        s = target.get(w, 0) + c * v
        if s:
            target[w] = s
        else:
            target.pop(w, None)


class _Matcher:
    """Subword lookup of rule left-hand sides."""

    def __init__(self):
        self.lhs: Dict[Word, Terms] = {}
        self._lengths: Dict[int, int] = defaultdict(int)
        self.lengths: List[int] = []

    def add(self, lhs: Word, rhs: Terms):
        self.lhs[lhs] = rhs
        self._lengths[len(lhs)] += 1
        self.lengths = sorted(k for k, v in self._lengths.items() if v)

    def remove(self, lhs: Word):
        del self.lhs[lhs]
        self._lengths[len(lhs)] -= 1
        self.lengths = sorted(k for k, v in self._lengths.items() if v)

    def find(self, w: Word) -> Optional[Tuple[int, int]]:
        """Leftmost occurrence ``(start, length)`` of a left-hand side in ``w``."""
        lhs = self.lhs
        lengths = self.lengths
        n = len(w)
        for i in range(n):
            for k in lengths:
                if i + k > n:
                    break
                if w[i:i + k] in lhs:
                    return i, k
        return None


def _reduce(terms: Terms, matcher: _Matcher, order: MonomialOrder, trace=None) -> Terms:
    """Full normal form: rewrite the largest reducible word first, leftmost match."""
    if not matcher.lhs:
        return {w: c for w, c in terms.items() if c}
    neg_key = order.neg_key
    pending = {w: c for w, c in terms.items() if c}
    heap = [(neg_key(w), w) for w in pending]
    heapq.heapify(heap)
    out: Terms = {}
    lhs_map = matcher.lhs
    while heap:
        _, w = heapq.heappop(heap)
        c = pending.pop(w, None)
        if not c:
            continue
        hit = matcher.find(w)
        if hit is None:
            out[w] = c
            continue
        i, k = hit
        pre, suf = w[:i], w[i + k:]
        rhs = lhs_map[w[i:i + k]]
        if trace is not None:
            trace.append((w, i, k))
        for v, d in rhs.items():
            nw = pre + v + suf
            old = pending.get(nw)
            if old is None:
                pending[nw] = c * d
                heapq.heappush(heap, (neg_key(nw), nw))
            else:
                pending[nw] = old + c * d
    return out


@dataclass
class ReductionSystem:
    """A (possibly truncated) Groebner basis together with its order."""

    gens: GeneratorSet
    order: MonomialOrder
    rules: Tuple[RewriteRule, ...]
    complete_to: int
    terminated: bool
    homogeneous: bool = True
    _matcher: _Matcher = field(default=None, repr=False, compare=False)
    _automaton: object = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        if self._matcher is None:
            m = _Matcher()
            for r in self.rules:
                m.add(r.lhs, r.rhs.terms)
            self._matcher = m

    # -- queries ----------------------------------------------------------
    def __len__(self):
        return len(self.rules)

    def exact_through(self, d: int) -> bool:
        return self.terminated or d <= self.complete_to

    def _guard(self, d: int, what: str):
        if not self.exact_through(d):
            raise TruncationError(
                f"{what} needs degree {d} but the system is only complete to degree {self.complete_to}"
            )

    def is_reducible(self, w: Word) -> bool:
        return self._matcher.find(tuple(w)) is not None

    def reduce_terms(self, terms: Terms, trace=None) -> Terms:
        return _reduce(terms, self._matcher, self.order, trace)

    def normal_form(self, p: NcPoly, strict: bool = False) -> NcPoly:
        """Normal form of ``p``; with ``strict`` refuse degrees beyond the cap."""
        if p.gens != self.gens:
            raise InvalidInputError("polynomial and reduction system use different generators")
        if strict:
            self._guard(p.degree(), "normal form")
        return NcPoly._raw(self.gens, self.reduce_terms(p.terms))

    def contains(self, p: NcPoly) -> bool:
        """Ideal membership, exact for degrees within the cap."""
        self._guard(p.degree(), "ideal membership")
        return not self.reduce_terms(p.terms)

    def normal_basis(self, d: int) -> List[Word]:
        """Irreducible words of degree ``d`` in increasing order."""
        self._guard(d, "normal basis")
        words = list(self.automaton().words_of_degree(d))
        words.sort(key=self.order.key)
        return words

    def automaton(self):
        if self._automaton is None:
            from .automaton import NormalWordAutomaton

            self._automaton = NormalWordAutomaton(self.gens, [r.lhs for r in self.rules])
        return self._automaton

    def dimension(self, d: int) -> int:
        self._guard(d, "dimension count")
        return self.automaton().count_by_degree(d)[d]

    def rule_table(self) -> List[str]:
        return [f"{self.gens.format_word(r.lhs)} -> {r.rhs.to_str(self.order)}" for r in self.rules]

    def polys(self) -> List[NcPoly]:
        return [r.as_poly() for r in self.rules]


def _overlap_words(a: Word, b: Word):
    """Proper overlaps: suffix of ``a`` equal to a prefix of ``b``."""
    for k in range(1, min(len(a), len(b))):
        if a[-k:] == b[:k]:
            yield k


class _Completion:
    def __init__(self, gens: GeneratorSet, order: MonomialOrder, cap: int, max_rules: int | None):
        self.gens = gens
        self.order = order
        self.cap = cap
        self.max_rules = max_rules
        self.matcher = _Matcher()
        self.prefix_index: Dict[Word, set] = defaultdict(set)
        self.suffix_index: Dict[Word, set] = defaultdict(set)
        self.queue: list = []
        self.seq = 0
        self.beyond_cap = False
        self.homogeneous = True

    def deg(self, w: Word) -> int:
        return self.gens.word_degree(w)

    def push(self, d: int, kind: str, payload):
        self.seq += 1
        heapq.heappush(self.queue, (d, self.seq, kind, payload))

    def push_poly(self, terms: Terms):
        if not terms:
            return
        lead = max(terms, key=self.order.key)
        self.push(self.deg(lead), "poly", terms)

    # -- rule bookkeeping -------------------------------------------------
    def _index(self, lhs: Word, add: bool):
        for k in range(1, len(lhs)):
            pre, suf = lhs[:k], lhs[-k:]
            if add:
                self.prefix_index[pre].add(lhs)
                self.suffix_index[suf].add(lhs)
            else:
                self.prefix_index[pre].discard(lhs)
                self.suffix_index[suf].discard(lhs)

    def add_rule(self, lhs: Word, rhs: Terms):
        if not self.homogeneous:
            # Existing rules whose lhs contains the new one are demoted to pending polys.
            doomed = [
                old for old in self.matcher.lhs
                if len(old) >= len(lhs) and old != lhs and _contains(old, lhs)
            ]
            for old in doomed:
                old_rhs = self.matcher.lhs[old]
                self.remove_rule(old)
                poly = {old: Fraction(1)}
                _add_scaled(poly, old_rhs, Fraction(-1))
                self.push_poly(poly)
        self.matcher.add(lhs, rhs)
        self._index(lhs, True)
        L = len(lhs)
        for k in range(1, L):
            for other in self.prefix_index.get(lhs[-k:], ()):
                if len(other) > k:
                    self._push_overlap(lhs, other, k)
            for other in self.suffix_index.get(lhs[:k], ()):
                if len(other) > k and other != lhs:
                    self._push_overlap(other, lhs, k)

    def remove_rule(self, lhs: Word):
        self.matcher.remove(lhs)
        self._index(lhs, False)

    def _push_overlap(self, a: Word, b: Word, k: int):
        d = self.deg(a + b[k:])
        if d > self.cap:
            self.beyond_cap = True
            self.push(d, "overlap", (a, b, k))
            return
        self.push(d, "overlap", (a, b, k))

    # -- main loop ----------------------------------------------------------
    def s_poly(self, a: Word, b: Word, k: int) -> Terms | None:
        lhs = self.matcher.lhs
        if a not in lhs or b not in lhs:
            return None
        out: Terms = {}
        _add_scaled(out, lhs[a], Fraction(1), EMPTY, b[k:])
        _add_scaled(out, lhs[b], Fraction(-1), a[:-k], EMPTY)
        return out

    def run(self):
        key = self.order.key
        while self.queue and self.queue[0][0] <= self.cap:
            d = self.queue[0][0]
            batch = []
            while self.queue and self.queue[0][0] == d:
                _, _, kind, payload = heapq.heappop(self.queue)
                if kind == "poly":
                    terms = payload
                else:
                    terms = self.s_poly(*payload)
                    if terms is None:
                        continue
                red = _reduce(terms, self.matcher, self.order)
                if red:
                    batch.append(red)
            if not batch:
                continue
            pivots = _echelon(batch, key)
            if EMPTY in pivots:
                raise InconsistentError(
                    f"relations reduce to a nonzero scalar while resolving degree {d}; "
                    f"the quotient algebra is zero"
                )
            for lead in sorted(pivots, key=key):
                row = pivots[lead]
                rhs = {w: -c for w, c in row.items() if w != lead}
                self.add_rule(lead, rhs)
            if not self.homogeneous:
                self.interreduce()
            if self.max_rules is not None and len(self.matcher.lhs) > self.max_rules:
                from .errors import ResourceError

                raise ResourceError(f"completion exceeded {self.max_rules} rules at degree {d}")
            log.debug("degree %d: %d rules", d, len(self.matcher.lhs))

    def interreduce(self):
        changed = True
        while changed:
            changed = False
            for lhs in sorted(self.matcher.lhs, key=self.order.key):
                if lhs not in self.matcher.lhs:
                    continue
                rhs = self.matcher.lhs[lhs]
                # reduce rhs by every rule
                new = _reduce(rhs, self.matcher, self.order)
                if new != rhs:
                    self.matcher.lhs[lhs] = new
                    changed = True


def _contains(big: Word, small: Word) -> bool:
    k = len(small)
    return any(big[i:i + k] == small for i in range(len(big) - k + 1))


def _echelon(rows: List[Terms], key) -> Dict[Word, Terms]:
    """Reduced row echelon form of a batch, as ``{leading word: monic row}``."""
    pivots: Dict[Word, Terms] = {}
    for r in rows:
        r = dict(r)
        while r:
            lead = max(r, key=key)
            p = pivots.get(lead)
            if p is None:
                break
            _add_scaled(r, p, -r[lead])
        if not r:
            continue
        lc = r[lead]
        if lc != 1:
            r = {w: c / lc for w, c in r.items()}
        pivots[lead] = r
    leads = sorted(pivots, key=key)
    for i, li in enumerate(leads):
        pi = pivots[li]
        for lj in leads[i + 1:]:
            pj = pivots[lj]
            c = pj.get(li)
            if c:
                _add_scaled(pj, pi, -c)
    return pivots


def _relation_terms(relations: Iterable[NcPoly], gens: GeneratorSet) -> List[Terms]:
    out = []
    for r in relations:
        if r.gens != gens:
            raise InvalidInputError("relation uses a different generator set")
        if r.is_zero():
            raise InvalidInputError("zero relation")
        out.append(dict(r.terms))
    return out


def complete(pres, order: MonomialOrder | None = None, degree_cap: int = 8, *, max_rules: int | None = None) -> ReductionSystem:
    """Complete the relations of ``pres`` into a reduction system up to ``degree_cap``.

    ``pres`` needs ``gens`` (a ``GeneratorSet``) and ``relations`` (``NcPoly``
    list).  Overlaps are resolved in increasing degree; anything above the
    cap is left pending and ``terminated`` is false in that case.
    """
    gens = pres.gens
    order = order or MonomialOrder(gens)
    if order.gens != gens:
        raise InvalidInputError("order and presentation use different generators")
    rels = _relation_terms(pres.relations, gens)
    if rels:
        top = max(gens.word_degree(w) for r in rels for w in r)
        if degree_cap < top:
            raise InvalidInputError(f"degree cap {degree_cap} is below the relation degree {top}")
    comp = _Completion(gens, order, degree_cap, max_rules)
    comp.homogeneous = all(len({gens.word_degree(w) for w in r}) == 1 for r in rels)
    for r in rels:
        comp.push_poly(r)
    comp.run()
    if not comp.homogeneous:
        comp.interreduce()
    rules = tuple(
        RewriteRule(lhs, NcPoly._raw(gens, dict(comp.matcher.lhs[lhs])))
        for lhs in sorted(comp.matcher.lhs, key=order.key)
    )
    terminated = not comp.queue
    return ReductionSystem(
        gens=gens,
        order=order,
        rules=rules,
        complete_to=degree_cap,
        terminated=terminated,
        homogeneous=comp.homogeneous,
    )


def normal_form(p: NcPoly, sys: ReductionSystem, strict: bool = False) -> NcPoly:
    return sys.normal_form(p, strict=strict)


def normal_basis(sys: ReductionSystem, d: int) -> List[Word]:
    return sys.normal_basis(d)
