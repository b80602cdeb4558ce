"""Exact-arithmetic free associative algebra over the rationals.

Words are plain tuples of dense generator ids; an ``NcPoly`` is a mapping
from words to nonzero ``Fraction`` coefficients over a fixed
``GeneratorSet``.  Monomial orders are degree-lexicographic with respect to
a ranking of the generators.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Dict, Iterable, Iterator, Mapping, Sequence, Tuple

from .errors import InvalidInputError

Word = Tuple[int, ...]

EMPTY: Word = ()


@dataclass(frozen=True)
class Generator:
    id: int
    label: str
    degree: int = 1


class GeneratorSet:
    """An ordered, immutable collection of generators with dense ids."""

    __slots__ = ("gens", "_by_label", "_degrees", "_unit")

    def __init__(self, gens: Sequence[Generator]):
        gens = tuple(gens)
        labels = set()
        for pos, g in enumerate(gens):
            if g.id != pos:
                raise InvalidInputError(f"generator ids must be 0..G-1, got {g.id} at {pos}")
            if g.degree < 1:
                raise InvalidInputError(f"generator {g.label} has degree {g.degree} < 1")
            if g.label in labels:
                raise InvalidInputError(f"duplicate generator label {g.label!r}")
            labels.add(g.label)
        self.gens = gens
        self._by_label = {g.label: g for g in gens}
        self._degrees = tuple(g.degree for g in gens)
        self._unit = all(d == 1 for d in self._degrees)

    @classmethod
    def from_labels(cls, labels: Iterable[str], degrees: Iterable[int] | None = None):
        labels = list(labels)
        degrees = [1] * len(labels) if degrees is None else list(degrees)
        return cls([Generator(i, lab, d) for i, (lab, d) in enumerate(zip(labels, degrees))])

    def __len__(self):
        return len(self.gens)

    def __iter__(self) -> Iterator[Generator]:
        return iter(self.gens)

    def __getitem__(self, key) -> Generator:
        if isinstance(key, str):
            try:
                return self._by_label[key]
            except KeyError:
                raise InvalidInputError(f"unknown generator {key!r}") from None
        if not 0 <= key < len(self.gens):
            raise InvalidInputError(f"unknown generator id {key}")
        return self.gens[key]

    def __contains__(self, label) -> bool:
        return label in self._by_label

    def __eq__(self, other):
        return isinstance(other, GeneratorSet) and self.gens == other.gens

    def __hash__(self):
        return hash(self.gens)

    def __repr__(self):
        return f"GeneratorSet({[g.label for g in self.gens]})"

    @property
    def labels(self):
        return [g.label for g in self.gens]

    @property
    def degrees(self):
        return self._degrees

    @property
    def all_degree_one(self) -> bool:
        return self._unit

    def word_degree(self, w: Word) -> int:
        if self._unit:
            return len(w)
        degs = self._degrees
        return sum(degs[x] for x in w)

    def check_word(self, w: Word) -> None:
        n = len(self.gens)
        for x in w:
            if not (isinstance(x, int) and 0 <= x < n):
                raise InvalidInputError(f"unknown generator id {x!r}")

    def format_word(self, w: Word) -> str:
        if not w:
            return "1"
        parts = []
        i = 0
        while i < len(w):
            j = i
            while j < len(w) and w[j] == w[i]:
                j += 1
            lab = self.gens[w[i]].label
            parts.append(lab if j - i == 1 else f"{lab}^{j - i}")
            i = j
        return "*".join(parts)


class MonomialOrder:
    """Degree-lexicographic order on words.

    ``rank[g]`` is the position of generator ``g`` in the base order, so
    ``rank = (0, 1, 2, ...)`` orders generators by id.
    """

    kind = "deglex"

    def __init__(self, gens: GeneratorSet, rank: Sequence[int] | None = None):
        n = len(gens)
        rank = tuple(range(n)) if rank is None else tuple(rank)
        if sorted(rank) != list(range(n)):
            raise InvalidInputError(f"generator rank {rank} is not a permutation of 0..{n - 1}")
        self.gens = gens
        self.rank = rank
        self._neg = tuple(-r for r in rank)

    @classmethod
    def from_labels(cls, gens: GeneratorSet, labels_low_to_high: Sequence[str]):
        """Build an order from generator labels listed smallest first."""
        if sorted(labels_low_to_high) != sorted(gens.labels):
            raise InvalidInputError("order must list every generator exactly once")
        rank = [0] * len(gens)
        for pos, lab in enumerate(labels_low_to_high):
            rank[gens[lab].id] = pos
        return cls(gens, rank)

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and self.gens == other.gens and self.rank == other.rank

    def __hash__(self):
        return hash((self.gens, self.rank))

    def __repr__(self):
        low_to_high = sorted(range(len(self.rank)), key=self.rank.__getitem__)
        return "MonomialOrder(" + " < ".join(self.gens[g].label for g in low_to_high) + ")"

    def key(self, w: Word):
        rank = self.rank
        return (self.gens.word_degree(w), tuple(rank[x] for x in w))

    def neg_key(self, w: Word):
        """A key that sorts words in decreasing order (for heaps)."""
        neg = self._neg
        return (-self.gens.word_degree(w),) + tuple(neg[x] for x in w)

    def compare(self, u: Word, v: Word) -> int:
        self.gens.check_word(u)
        self.gens.check_word(v)
        ku, kv = self.key(u), self.key(v)
        return (ku > kv) - (ku < kv)

    def leading_word(self, terms: Iterable[Word]) -> Word:
        return max(terms, key=self.key)


def compare_words(u: Word, v: Word, order: MonomialOrder) -> str:
    """Compare two words, returning ``"less"``, ``"equal"`` or ``"greater"``."""
    c = order.compare(tuple(u), tuple(v))
    return ("less", "equal", "greater")[c + 1]


def _scalar(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, Rational)):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c)
    raise InvalidInputError(f"scalars must be exact rationals, got {type(c).__name__}")


class NcPoly:
    """Noncommutative polynomial with exact rational coefficients."""

    __slots__ = ("gens", "terms")

    def __init__(self, gens: GeneratorSet, terms: Mapping[Word, object] | None = None):
        self.gens = gens
        clean: Dict[Word, Fraction] = {}
        if terms:
            for w, c in terms.items():
                w = tuple(w)
                gens.check_word(w)
                c = _scalar(c)
                if c:
                    clean[w] = clean.get(w, 0) + c
                    if not clean[w]:
                        del clean[w]
        self.terms = clean

    @classmethod
    def _raw(cls, gens, terms: Dict[Word, Fraction]) -> "NcPoly":
        p = cls.__new__(cls)
        p.gens = gens
        p.terms = terms
        return p

    # -- constructors -----------------------------------------------------
    @classmethod
    def zero(cls, gens):
        return cls._raw(gens, {})

    @classmethod
    def one(cls, gens):
        return cls.constant(gens, 1)

    @classmethod
    def constant(cls, gens, c):
        c = _scalar(c)
        return cls._raw(gens, {EMPTY: c} if c else {})

    @classmethod
    def gen(cls, gens, g):
        """The generator ``g`` given by label or id."""
        return cls._raw(gens, {(gens[g].id,): Fraction(1)})

    @classmethod
    def word(cls, gens, w, c=1):
        return cls(gens, {tuple(w): c})

    # -- inspection -------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def coefficient(self, w) -> Fraction:
        return self.terms.get(tuple(w), Fraction(0))

    def degree(self) -> int:
        """Largest degree of a word in the support (-1 for zero)."""
        if not self.terms:
            return -1
        return max(self.gens.word_degree(w) for w in self.terms)

    def degrees(self):
        return {self.gens.word_degree(w) for w in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def leading_word(self, order: MonomialOrder) -> Word:
        if not self.terms:
            raise InvalidInputError("zero polynomial has no leading word")
        return order.leading_word(self.terms)

    def leading_coefficient(self, order: MonomialOrder) -> Fraction:
        return self.terms[self.leading_word(order)]

    def homogeneous_part(self, d: int) -> "NcPoly":
        wd = self.gens.word_degree
        return NcPoly._raw(self.gens, {w: c for w, c in self.terms.items() if wd(w) == d})

    # -- arithmetic -------------------------------------------------------
    def _check(self, other):
        if not isinstance(other, NcPoly):
            return NcPoly.constant(self.gens, other)
        if other.gens is not self.gens and other.gens != self.gens:
            raise InvalidInputError("polynomials live over different generator sets")
        return other

    def __add__(self, other):
        other = self._check(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            s = out.get(w, 0) + c
            if s:
                out[w] = s
            else:
                out.pop(w, None)
        return NcPoly._raw(self.gens, out)

    __radd__ = __add__

    def __neg__(self):
        return NcPoly._raw(self.gens, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def scale(self, c) -> "NcPoly":
        c = _scalar(c)
        if not c:
            return NcPoly.zero(self.gens)
        return NcPoly._raw(self.gens, {w: c * v for w, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, NcPoly):
            return self.scale(other)
        other = self._check(other)
        out: Dict[Word, Fraction] = {}
        for u, a in self.terms.items():
            for v, b in other.terms.items():
                w = u + v
                s = out.get(w, 0) + a * b
                if s:
                    out[w] = s
                else:
                    del out[w]
        return NcPoly._raw(self.gens, out)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k: int):
        if k < 0:
            raise InvalidInputError("negative powers are not supported")
        out = NcPoly.one(self.gens)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, NcPoly):
            return self.gens == other.gens and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == NcPoly.constant(self.gens, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.gens, frozenset(self.terms.items())))

    # -- substitution -----------------------------------------------------
    def substitute(self, images: Mapping[int, "NcPoly"], target: GeneratorSet | None = None) -> "NcPoly":
        """Apply the algebra map sending generator id ``g`` to ``images[g]``."""
        target = target or self.gens
        out = NcPoly.zero(target)
        cache: Dict[Word, NcPoly] = {}
        for w, c in self.terms.items():
            img = cache.get(w)
            if img is None:
                img = NcPoly.one(target)
                for x in w:
                    img = img * images[x]
                cache[w] = img
            out = out + img.scale(c)
        return out

    def reverse(self) -> "NcPoly":
        return NcPoly._raw(self.gens, {w[::-1]: c for w, c in self.terms.items()})

    # -- display ----------------------------------------------------------
    def sorted_terms(self, order: MonomialOrder | None = None):
        key = order.key if order is not None else (lambda w: (self.gens.word_degree(w), w))
        return sorted(self.terms.items(), key=lambda wc: key(wc[0]), reverse=True)

    def to_str(self, order: MonomialOrder | None = None) -> str:
        if not self.terms:
            return "0"
        out = []
        for k, (w, c) in enumerate(self.sorted_terms(order)):
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if not w:
                body = str(mag)
            elif mag == 1:
                body = self.gens.format_word(w)
            else:
                body = f"{mag}*{self.gens.format_word(w)}"
            if k == 0:
                out.append(("-" if sign == "-" else "") + body)
            else:
                out.append(f" {sign} {body}")
        return "".join(out)

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"NcPoly({self.to_str()!r})"


def signed_generator(i: int, j: int, table: Mapping[Tuple[int, int], Generator]):
    """Resolve the pair generator ``(i, j)`` under ``y_{j,i} = -y_{i,j}``.

    ``table`` maps ordered pairs ``(i, j)`` with ``i < j`` to generators.
    Returns ``(sign, generator)``.
    """
    if i == j:
        raise InvalidInputError(f"diagonal index pair ({i}, {j})")
    key = (i, j) if i < j else (j, i)
    if key not in table:
        raise InvalidInputError(f"no generator for index pair {key}")
    return (1 if i < j else -1), table[key]
