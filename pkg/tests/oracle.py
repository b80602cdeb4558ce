"""Brute-force dimension oracle, independent of the rewriting engine.

dim A_d = (number of words of degree d) - dim span{u r v}, where r runs over
the relations and u, v over words with deg u + deg r + deg v = d.  Only
plain dictionaries and Fraction elimination are used here.
"""

from fractions import Fraction
from itertools import product


def _words(G, degs, d):
    if d == 0:
        yield ()
        return
    for g in range(G):
        if degs[g] <= d:
            for rest in _words(G, degs, d - degs[g]):
                yield (g,) + rest


def _rank(rows):
    pivots = {}
    for r in rows:
        r = dict(r)
        while r:
            lead = max(r)
            p = pivots.get(lead)
            if p is None:
                c = r[lead]
                pivots[lead] = {k: v / c for k, v in r.items()}
                break
            f = r[lead]
            for k, v in p.items():
                s = r.get(k, 0) - f * v
                if s:
                    r[k] = s
                else:
                    r.pop(k, None)
    return len(pivots)


def dims(relations, G, D, degs=None):
    """Dimensions h_0..h_D for relations given as ``{word: coefficient}`` dicts."""
    degs = degs or [1] * G
    rels = []
    for r in relations:
        rd = {sum(degs[x] for x in w) for w in r}
        assert len(rd) == 1, "oracle needs homogeneous relations"
        rels.append((rd.pop(), {w: Fraction(c) for w, c in r.items()}))
    out = []
    for d in range(D + 1):
        words = list(_words(G, degs, d))
        index = {w: k for k, w in enumerate(words)}
        rows = []
        for rdeg, r in rels:
            if rdeg > d:
                continue
            for a in range(d - rdeg + 1):
                for u in _words(G, degs, a):
                    for v in _words(G, degs, d - rdeg - a):
                        rows.append({index[u + w + v]: c for w, c in r.items()})
        out.append(len(words) - _rank(rows))
    return out


def presentation_dims(pres, D):
    rels = [dict(r.terms) for r in pres.relations]
    return dims(rels, len(pres.gens), D, list(pres.gens.degrees))


def word_is_zero(relations, G, word):
    """Whether a single word lies in the ideal (same brute-force span)."""
    d = len(word)
    rows = []
    words = list(product(range(G), repeat=d))
    index = {w: k for k, w in enumerate(words)}
    for r in relations:
        rdeg = len(next(iter(r)))
        for a in range(d - rdeg + 1):
            for u in product(range(G), repeat=a):
                for v in product(range(G), repeat=d - rdeg - a):
                    rows.append({index[u + w + v]: Fraction(c) for w, c in r.items()})
    base = _rank(rows)
    return _rank(rows + [{index[tuple(word)]: Fraction(1)}]) == base
