"""Presentations of graded algebras: text format, catalog, quadratic duals.

The text grammar is::

    name: E_dual_3;            # optional
    gens: y12 y13 y23;
    degrees: 1 1 1;            # optional, defaults to all 1
    rels:
      y12*y23 + y23*y13;
      y13^2 - 1;

Relations are separated by ``;`` or newlines and may use ``+ - * ^``,
integer and rational literals (``1/2``) and parentheses.  ``#`` starts a
comment.
"""

from __future__ import annotations

import hashlib
import re
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, permutations
from math import gcd
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from . import linalg
from .errors import InvalidInputError, ParseError
from .ncpoly import Generator, GeneratorSet, NcPoly, Word, signed_generator

FORMAT_VERSION = 1


@dataclass(frozen=True)
class Presentation:
    name: str
    gens: GeneratorSet
    relations: Tuple[NcPoly, ...]
    pairs: Optional[Mapping[Tuple[int, int], Generator]] = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        for r in self.relations:
            if r.gens != self.gens:
                raise InvalidInputError(f"relation {r} uses undeclared generators")

    @property
    def homogeneous(self) -> bool:
        return all(r.is_homogeneous() for r in self.relations)

    @property
    def grading_note(self) -> Tuple[int, ...]:
        return self.gens.degrees

    def gen(self, g) -> NcPoly:
        return NcPoly.gen(self.gens, g)

    def pair(self, i: int, j: int) -> NcPoly:
        """The pair generator ``(i, j)`` with the sign rule for ``i > j``."""
        if self.pairs is None:
            raise InvalidInputError(f"{self.name} has no pair-indexed generators")
        sign, g = signed_generator(i, j, self.pairs)
        return NcPoly.gen(self.gens, g.id).scale(sign)

    def sym_pair(self, i: int, j: int) -> NcPoly:
        """The pair generator for ``{i, j}`` without a sign (symmetric labels)."""
        if self.pairs is None:
            raise InvalidInputError(f"{self.name} has no pair-indexed generators")
        if i == j:
            raise InvalidInputError("pair indices must differ")
        return NcPoly.gen(self.gens, self.pairs[(min(i, j), max(i, j))].id)

    def parse(self, text: str) -> NcPoly:
        """Parse a polynomial over this presentation's generators."""
        return parse_polynomial(text, self.gens)

    def to_text(self) -> str:
        return format_presentation(self)

    def digest(self) -> str:
        return hashlib.sha256(self.to_text().encode()).hexdigest()


# ---------------------------------------------------------------------------
# parsing

_TOKEN = re.compile(
    r"(?P<ws>[ \t\r]+)|(?P<nl>\n)|(?P<comment>#[^\n]*)|(?P<num>\d+)|"
    r"(?P<ident>[A-Za-z_][A-Za-z0-9_']*)|(?P<op>[-+*^/();:<])"
)


class _Tok:
    __slots__ = ("kind", "text", "line", "col")

    def __init__(self, kind, text, line, col):
        self.kind, self.text, self.line, self.col = kind, text, line, col

    def __repr__(self):
        return f"{self.kind}:{self.text!r}@{self.line}:{self.col}"


def _tokenize(text: str) -> List[_Tok]:
    toks = []
    pos, line, col = 0, 1, 1
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup
        s = m.group()
        if kind == "nl":
            toks.append(_Tok("sep", "\n", line, col))
            line, col = line + 1, 1
        elif kind in ("ws", "comment"):
            col += len(s)
        else:
            if kind == "op" and s == ";":
                kind = "sep"
            toks.append(_Tok(kind, s, line, col))
            col += len(s)
        pos = m.end()
    toks.append(_Tok("eof", "", line, col))
    return toks


class _ExprParser:
    def __init__(self, toks: List[_Tok], gens: GeneratorSet):
        self.toks = toks
        self.i = 0
        self.gens = gens

    def peek(self) -> _Tok:
        return self.toks[self.i]

    def take(self) -> _Tok:
        t = self.toks[self.i]
        self.i += 1
        return t

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        raise ParseError(msg, tok.line, tok.col)

    def expr(self) -> NcPoly:
        t = self.peek()
        if t.kind == "op" and t.text in "+-":
            self.take()
            val = self.term()
            if t.text == "-":
                val = -val
        else:
            val = self.term()
        while True:
            t = self.peek()
            if t.kind == "op" and t.text in "+-":
                self.take()
                rhs = self.term()
                val = val + rhs if t.text == "+" else val - rhs
            else:
                return val

    def term(self) -> NcPoly:
        val = self.factor()
        while True:
            t = self.peek()
            if t.kind == "op" and t.text == "*":
                self.take()
                val = val * self.factor()
            elif t.kind == "op" and t.text == "/":
                self.take()
                tok = self.peek()
                d = self.factor()
                if d.degree() > 0 or d.is_zero():
                    self.error("division only by nonzero rational constants", tok)
                val = val.scale(1 / d.coefficient(()))
            else:
                return val

    def factor(self) -> NcPoly:
        t = self.peek()
        if t.kind == "op" and t.text == "-":
            self.take()
            return -self.factor()
        base = self.atom()
        t = self.peek()
        if t.kind == "op" and t.text == "^":
            self.take()
            e = self.take()
            if e.kind != "num":
                self.error("exponent must be a nonnegative integer", e)
            base = base ** int(e.text)
        return base

    def atom(self) -> NcPoly:
        t = self.take()
        if t.kind == "num":
            return NcPoly.constant(self.gens, int(t.text))
        if t.kind == "ident":
            if t.text not in self.gens:
                self.error(f"unknown generator {t.text!r}", t)
            return NcPoly.gen(self.gens, t.text)
        if t.kind == "op" and t.text == "(":
            val = self.expr()
            c = self.take()
            if not (c.kind == "op" and c.text == ")"):
                self.error("expected ')'", c)
            return val
        self.error(f"unexpected token {t.text!r}", t)


def parse_polynomial(text: str, gens: GeneratorSet) -> NcPoly:
    toks = [t for t in _tokenize(text) if t.kind != "sep"]
    p = _ExprParser(toks, gens)
    val = p.expr()
    if p.peek().kind != "eof":
        p.error(f"unexpected token {p.peek().text!r}")
    return val


def parse_presentation(text: str) -> Presentation:
    """Parse the presentation grammar described in the module docstring."""
    toks = _tokenize(text)
    i = 0
    name = "presentation"
    labels: List[str] = []
    degrees: Optional[List[int]] = None
    rel_toks: List[List[_Tok]] = []

    def skip_seps():
        nonlocal i
        while toks[i].kind == "sep":
            i += 1

    def header(expected):
        nonlocal i
        t = toks[i]
        if t.kind == "ident" and t.text == expected and toks[i + 1].kind == "op" and toks[i + 1].text == ":":
            i += 2
            return True
        return False

    skip_seps()
    if header("name"):
        parts = []
        while toks[i].kind not in ("sep", "eof"):
            parts.append(toks[i].text)
            i += 1
        name = "".join(parts)
        skip_seps()
    if not header("gens"):
        t = toks[i]
        raise ParseError("expected 'gens:'", t.line, t.col)
    while toks[i].kind == "ident":
        labels.append(toks[i].text)
        i += 1
    if toks[i].kind not in ("sep", "eof"):
        t = toks[i]
        raise ParseError(f"unexpected token {t.text!r} in generator list", t.line, t.col)
    if not labels:
        t = toks[i]
        raise ParseError("empty generator list", t.line, t.col)
    skip_seps()
    if header("degrees"):
        degrees = []
        while toks[i].kind == "num":
            degrees.append(int(toks[i].text))
            i += 1
        if len(degrees) != len(labels):
            t = toks[i]
            raise ParseError("degree list length does not match generators", t.line, t.col)
        skip_seps()
    try:
        gens = GeneratorSet.from_labels(labels, degrees)
    except InvalidInputError as e:
        raise ParseError(str(e), toks[0].line, toks[0].col) from None
    if header("rels"):
        cur: List[_Tok] = []
        while toks[i].kind != "eof":
            t = toks[i]
            if t.kind == "sep":
                if cur:
                    rel_toks.append(cur)
                cur = []
            else:
                cur.append(t)
            i += 1
        if cur:
            rel_toks.append(cur)
    elif toks[i].kind != "eof":
        t = toks[i]
        raise ParseError("expected 'rels:'", t.line, t.col)
    rels = []
    for rt in rel_toks:
        p = _ExprParser(rt + [toks[-1]], gens)
        val = p.expr()
        if p.peek().kind != "eof":
            p.error(f"unexpected token {p.peek().text!r}")
        if val.is_zero():
            raise ParseError("relation is zero", rt[0].line, rt[0].col)
        rels.append(val)
    return Presentation(name, gens, tuple(rels))


def format_presentation(p: Presentation) -> str:
    lines = [f"name: {p.name};", "gens: " + " ".join(p.gens.labels) + ";"]
    if not p.gens.all_degree_one:
        lines.append("degrees: " + " ".join(map(str, p.gens.degrees)) + ";")
    lines.append("rels:")
    for r in p.relations:
        lines.append(f"  {r.to_str()};")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# catalog


def _check_n(n):
    if n is None or n < 2:
        raise InvalidInputError("n must be >= 2")


def pair_list(n: int) -> List[Tuple[int, int]]:
    """Index pairs in the base order: (i,j) < (k,l) iff j < l, or j == l and i < k."""
    return [(i, j) for j in range(2, n + 1) for i in range(1, j)]


def _pair_label(prefix: str, i: int, j: int, n: int) -> str:
    return f"{prefix}{i}{j}" if n < 10 else f"{prefix}{i}_{j}"


def _pair_gens(prefix: str, n: int, degree: int = 1):
    pairs = pair_list(n)
    gens = GeneratorSet([Generator(k, _pair_label(prefix, i, j, n), degree) for k, (i, j) in enumerate(pairs)])
    table = {pq: gens[k] for k, pq in enumerate(pairs)}
    return gens, table


def _disjoint_pairs(n):
    pairs = pair_list(n)
    for p, q in combinations(pairs, 2):
        if not set(p) & set(q):
            yield p, q


def fomin_kirillov(n: int) -> Presentation:
    """The Fomin-Kirillov algebra on ``x_{i,j}``."""
    _check_n(n)
    gens, table = _pair_gens("x", n)
    x = lambda i, j: NcPoly.gen(gens, table[(i, j)].id)
    rels = [x(i, j) * x(i, j) for (i, j) in pair_list(n)]
    for i, j, k in combinations(range(1, n + 1), 3):
        rels.append(x(i, j) * x(j, k) - x(j, k) * x(i, k) - x(i, k) * x(i, j))
        rels.append(x(j, k) * x(i, j) - x(i, k) * x(j, k) - x(i, j) * x(i, k))
    for p, q in _disjoint_pairs(n):
        rels.append(x(*p) * x(*q) - x(*q) * x(*p))
    return Presentation(f"E_{n}", gens, tuple(rels), table)


def fk_dual(n: int) -> Presentation:
    """The quadratic dual of the Fomin-Kirillov algebra, relations listed verbatim.

    One anticommutation-type relation per ordered triple of distinct indices
    (sign rule ``y_{j,i} = -y_{i,j}``) plus anticommutators of disjoint pairs.
    """
    _check_n(n)
    gens, table = _pair_gens("y", n)
    pres = Presentation(f"E_dual_{n}", gens, (), table)
    y = pres.pair
    rels = []
    for i, j, k in permutations(range(1, n + 1), 3):
        rels.append(y(i, j) * y(j, k) + y(j, k) * y(i, k))
    for p, q in _disjoint_pairs(n):
        rels.append(y(*p) * y(*q) + y(*q) * y(*p))
    return Presentation(pres.name, gens, tuple(rels), table)


def _triple_block(y, i, j, k):
    """The four-relation form used for the triple i<j<k in the at-1 quotient."""
    return [
        y(i, j) * y(j, k) + y(j, k) * y(i, k),
        y(i, j) * y(j, k) + y(i, k) * y(i, j),
        y(j, k) * y(i, j) + y(i, k) * y(j, k),
        y(j, k) * y(i, j) + y(i, j) * y(i, k),
    ]


def fk_dual_at_one(n: int) -> Presentation:
    """Quotient of the dual by ``y_{i,j}^2 - 1`` for every pair."""
    _check_n(n)
    gens, table = _pair_gens("y", n)
    pres = Presentation(f"E_dual_at_1_{n}", gens, (), table)
    y = pres.pair
    one = NcPoly.one(gens)
    rels = [y(i, j) * y(i, j) - one for (i, j) in pair_list(n)]
    for i, j, k in combinations(range(1, n + 1), 3):
        rels.extend(_triple_block(y, i, j, k))
    for p, q in _disjoint_pairs(n):
        rels.append(y(*p) * y(*q) + y(*q) * y(*p))
    return Presentation(pres.name, gens, tuple(rels), table)


def dn_algebra(n: int, degree: int = 1) -> Presentation:
    """The commutative algebra on ``a_{i,j}`` with ``a_ij a_jk = a_ij a_ik``.

    Commutators of all generator pairs are included explicitly.
    """
    _check_n(n)
    gens, table = _pair_gens("a", n, degree)
    pres = Presentation(f"D_{n}", gens, (), table)

    def a(i, j):
        return NcPoly.gen(gens, table[(min(i, j), max(i, j))].id)

    rels = []
    for g, h in combinations(range(len(gens)), 2):
        rels.append(NcPoly.word(gens, (h, g)) - NcPoly.word(gens, (g, h)))
    for i, j, k in permutations(range(1, n + 1), 3):
        rels.append(a(i, j) * a(j, k) - a(i, j) * a(i, k))
    return Presentation(pres.name, gens, tuple(rels), table)


def s_two_gen() -> Presentation:
    return parse_presentation("name: S; gens: x12 x13; rels: x12^2 + x13^2;")


def c_prime() -> Presentation:
    return parse_presentation(
        """name: C_prime
        gens: x12 x13 x23
        rels:
          x12^2 + x13^2
          x12*x23 - x23*x13 - x13*x12
          x23*x12 - x13*x23 - x12*x13
        """
    )


def b_three() -> Presentation:
    return parse_presentation("name: B; gens: a b; rels: a^2*b - b*a^2; a*b^2 - b^2*a;")


def c_double_prime() -> Presentation:
    return parse_presentation(
        "name: C_dprime; gens: a b c; rels: c*a + a*c; c*b - b*c; a^2*b - b*a^2; a*b^2 - b^2*a;"
    )


def schur_quotient(n: int) -> Presentation:
    """Schur-cover group algebra of S_n with the central involution set to -1."""
    _check_n(n)
    gens = GeneratorSet.from_labels([f"s{i}" for i in range(1, n)])
    s = lambda i: NcPoly.gen(gens, i - 1)
    one = NcPoly.one(gens)
    rels = [s(i) * s(i) - one for i in range(1, n)]
    for i in range(1, n - 1):
        rels.append(s(i + 1) * s(i) * s(i + 1) - s(i) * s(i + 1) * s(i))
    for i in range(1, n):
        for j in range(i + 2, n):
            rels.append(s(j) * s(i) + s(i) * s(j))
    return Presentation(f"schur_quotient_{n}", gens, tuple(rels))


def e3_dual_abc() -> Presentation:
    """The dual for n = 3 rewritten in ``a = y13 + y23, b = y13 - y23, c = y12``."""
    base = fk_dual(3)
    return change_of_variables(
        base,
        {"a": base.parse("y13 + y23"), "b": base.parse("y13 - y23"), "c": base.parse("y12")},
        name="E_dual_3_abc",
    )


def fk3_sequence(p: Presentation) -> List[NcPoly]:
    """The three elements x23^2, x12 x23 x13 - x13 x23 x12, x13^2 over ``p``."""
    return [p.parse("x23^2"), p.parse("x12*x23*x13 - x13*x23*x12"), p.parse("x13^2")]


def dual3_sequence(p: Presentation) -> List[NcPoly]:
    """(ab+ba)c, -2bc+a^2-b^2, -2ac+(ab-ba), 1/2(a^2+b^2)+c^2 over ``p``."""
    return [
        p.parse("(a*b + b*a)*c"),
        p.parse("-2*b*c + a^2 - b^2"),
        p.parse("-2*a*c + (a*b - b*a)"),
        p.parse("1/2*(a^2 + b^2) + c^2"),
    ]


_FAMILIES = {
    "e": fomin_kirillov,
    "e_dual": fk_dual,
    "d": dn_algebra,
    "dn": dn_algebra,
    "c_prime": lambda n=None: c_prime(),
    "c_dprime": lambda n=None: c_double_prime(),
    "s2gen": lambda n=None: s_two_gen(),
    "b3dim": lambda n=None: b_three(),
    "b": lambda n=None: b_three(),
    "e_dual_at_1": fk_dual_at_one,
    "schur_quotient": schur_quotient,
    "e3_dual_abc": lambda n=None: e3_dual_abc(),
}

FAMILIES = ("E", "E_dual", "D", "C_prime", "C_dprime", "S2gen", "B3dim", "E_dual_at_1", "schur_quotient", "E3_dual_abc")
_NEEDS_N = {"e", "e_dual", "d", "dn", "e_dual_at_1", "schur_quotient"}


def catalog(family: str, n: int | None = None) -> Presentation:
    """Built-in presentation by family name (``E``, ``E_dual``, ``D``, ...)."""
    key = family.lower().replace("-", "_")
    if key not in _FAMILIES:
        raise InvalidInputError(f"unknown algebra family {family!r}; known: {', '.join(FAMILIES)}")
    if key in _NEEDS_N:
        _check_n(n)
        return _FAMILIES[key](n)
    return _FAMILIES[key]()


# ---------------------------------------------------------------------------
# quadratic data and duals


@dataclass(frozen=True)
class QuadraticData:
    """Degree-one generators and a relation subspace of V (x) V.

    ``R`` holds linearly independent rows of length ``G**2``; column
    ``a * G + b`` is the coefficient of the word ``g_a g_b``.
    """

    gens: GeneratorSet
    R: Tuple[Tuple[Fraction, ...], ...]

    @property
    def dim_R(self) -> int:
        return len(self.R)

    def row_dicts(self):
        return [{k: v for k, v in enumerate(r) if v} for r in self.R]

    def to_presentation(self, name: str = "quadratic") -> Presentation:
        G = len(self.gens)
        rels = []
        for row in self.R:
            terms = {(k // G, k % G): v for k, v in enumerate(row) if v}
            rels.append(NcPoly(self.gens, terms))
        return Presentation(name, self.gens, tuple(rels))


def quadratic_data(p: Presentation) -> QuadraticData:
    G = len(p.gens)
    if not p.gens.all_degree_one:
        raise InvalidInputError("quadratic data needs all generators in degree 1")
    rows = []
    for r in p.relations:
        if any(len(w) != 2 for w in r.terms):
            raise InvalidInputError(f"relation {r} is not homogeneous quadratic")
        rows.append({w[0] * G + w[1]: c for w, c in r.terms.items()})
    piv = linalg.rref(rows, key=lambda c: -c)
    R = []
    for lead in sorted(piv):
        row = piv[lead]
        R.append(tuple(Fraction(row.get(k, 0)) for k in range(G * G)))
    return QuadraticData(p.gens, tuple(R))


def _dual_label(label: str) -> str:
    if label.startswith("x"):
        return "y" + label[1:]
    if label.startswith("y"):
        return "x" + label[1:]
    return label + "_d"


def quadratic_dual(q: QuadraticData, labels: Sequence[str] | None = None) -> QuadraticData:
    """Orthogonal complement of ``R`` under the untwisted pairing.

    ``<u* v*, x y> = u*(x) v*(y)``, so in word coordinates the complement
    is the null space of the relation matrix.
    """
    G = len(q.gens)
    labels = list(labels) if labels is not None else [_dual_label(l) for l in q.gens.labels]
    dual_gens = GeneratorSet.from_labels(labels)
    basis = linalg.nullspace(q.R, G * G) if q.R else [
        [Fraction(int(k == j)) for k in range(G * G)] for j in range(G * G)
    ]
    return QuadraticData(dual_gens, tuple(tuple(v) for v in basis))


def dual_presentation(p: Presentation, name: str | None = None, labels=None) -> Presentation:
    q = quadratic_dual(quadratic_data(p), labels)
    out = q.to_presentation(name or f"{p.name}_dual")
    if p.pairs is not None:
        table = {pq: out.gens[g.id] for pq, g in p.pairs.items()}
        out = Presentation(out.name, out.gens, out.relations, table)
    return out


def relation_span_equal(p1: Presentation, p2: Presentation) -> bool:
    """Whether two presentations on the same generator ids have equal relation spans."""
    if len(p1.gens) != len(p2.gens):
        return False
    rows1 = [{w: c for w, c in r.terms.items()} for r in p1.relations]
    rows2 = [{w: c for w, c in r.terms.items()} for r in p2.relations]
    return linalg.span_equal(rows1, rows2)


# ---------------------------------------------------------------------------
# transformations


def _primitive_integer(p: NcPoly) -> NcPoly:
    den = 1
    for c in p.terms.values():
        den = den * c.denominator // gcd(den, c.denominator)
    q = p.scale(den)
    g = 0
    for c in q.terms.values():
        g = gcd(g, c.numerator)
    return q.scale(Fraction(1, g)) if g > 1 else q


def change_of_variables(p: Presentation, new_gens: Mapping[str, NcPoly], name: str | None = None) -> Presentation:
    """Rewrite ``p`` in new generators given as linear forms in the old ones.

    ``new_gens`` maps each new label to a homogeneous linear combination of
    old generators of a single degree.  The substitution must be invertible.
    """
    old = p.gens
    G = len(old)
    if len(new_gens) != G:
        raise InvalidInputError("change of variables must have as many new generators as old ones")
    labels = list(new_gens)
    rows = []
    degrees = []
    for lab in labels:
        form = new_gens[lab]
        if form.gens != old or any(len(w) != 1 for w in form.terms) or form.is_zero():
            raise InvalidInputError(f"{lab} is not a linear form in the old generators")
        degs = {old.degrees[w[0]] for w in form.terms}
        if len(degs) != 1:
            raise InvalidInputError(f"{lab} mixes generator degrees")
        degrees.append(degs.pop())
        rows.append([form.coefficient((g,)) for g in range(G)])
    if linalg.rank([{j: v for j, v in enumerate(r) if v} for r in rows]) < G:
        raise InvalidInputError("change of variables is singular")
    inv = _invert(rows)
    new = GeneratorSet.from_labels(labels, degrees)
    # old generator g = sum_k inv[g][k] * new_k
    images = {
        g: NcPoly(new, {(k,): inv[g][k] for k in range(G) if inv[g][k]}) for g in range(G)
    }
    rels = tuple(_primitive_integer(r.substitute(images, new)) for r in p.relations)
    return Presentation(name or f"{p.name}_cv", new, rels)


def _invert(m: List[List[Fraction]]) -> List[List[Fraction]]:
    """Inverse of a square matrix; ``m[i]`` expresses new_i in old coordinates."""
    G = len(m)
    # Solve M^T: old_g = sum_k X[g][k] new_k where new_k = sum_g m[k][g] old_g.
    # So X = (M)^{-1} transposed appropriately: sum_k X[g][k] m[k][h] = delta_gh.
    aug = [[Fraction(m[k][h]) for k in range(G)] + [Fraction(int(h == g)) for g in range(G)] for h in range(G)]
    # rows indexed by h: sum_k m[k][h] X[g][k] = delta(h, g) for each g (columns)
    for col in range(G):
        piv = next(r for r in range(col, G) if aug[r][col])
        aug[col], aug[piv] = aug[piv], aug[col]
        f = aug[col][col]
        aug[col] = [v / f for v in aug[col]]
        for r in range(G):
            if r != col and aug[r][col]:
                c = aug[r][col]
                aug[r] = [a - c * b for a, b in zip(aug[r], aug[col])]
    # aug[k][G + g] = X[g][k]
    return [[aug[k][G + g] for k in range(G)] for g in range(G)]


def quotient_by(p: Presentation, elems: Sequence[NcPoly], name: str | None = None) -> Presentation:
    """Append ``elems`` to the relations (the two-sided ideal quotient)."""
    for e in elems:
        if e.gens != p.gens:
            raise InvalidInputError("quotient element uses different generators")
        if e.is_zero():
            raise InvalidInputError("cannot quotient by the zero element")
    return Presentation(name or f"{p.name}/({len(elems)})", p.gens, p.relations + tuple(elems), p.pairs)
