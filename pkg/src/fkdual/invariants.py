"""Hilbert series, growth estimates and element certificates.

Everything here is computed from a ``ReductionSystem`` and is exact for
degrees up to the system's completion cap.  Certificates never claim more
than was checked: degree guards raise ``TruncationError`` instead.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from . import linalg
from .errors import InvalidInputError, TruncationError
from .ncpoly import MonomialOrder, NcPoly, Word
from .rewrite import ReductionSystem, complete


@dataclass(frozen=True)
class TruncatedSeries:
    """Coefficients ``h_0..h_D`` of a power series."""

    coeffs: Tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(self.coeffs))

    @property
    def D(self) -> int:
        return len(self.coeffs) - 1

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, k):
        return self.coeffs[k]

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, TruncatedSeries):
            return self.coeffs == other.coeffs
        if isinstance(other, (list, tuple)):
            return self.coeffs == tuple(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __str__(self):
        return " ".join(str(c) for c in self.coeffs)

    def truncate(self, D: int) -> "TruncatedSeries":
        return TruncatedSeries(self.coeffs[: D + 1])

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        D = min(self.D, other.D)
        out = [0] * (D + 1)
        for i, a in enumerate(self.coeffs[: D + 1]):
            if a:
                for j, b in enumerate(other.coeffs[: D + 1 - i]):
                    out[i + j] += a * b
        return TruncatedSeries(out)

    def inverse(self) -> "TruncatedSeries":
        """Exact reciprocal series; needs a nonzero constant term."""
        h = self.coeffs
        if not h or h[0] == 0:
            raise InvalidInputError("series with zero constant term is not invertible")
        inv = [Fraction(1) / h[0]]
        for d in range(1, len(h)):
            s = sum(h[k] * inv[d - k] for k in range(1, d + 1))
            inv.append(-s / h[0])
        return TruncatedSeries(tuple(_simplify(c) for c in inv))

    def substitute_power(self, k: int) -> "TruncatedSeries":
        """The series in ``t**k`` (e.g. ``k = 2`` for a doubled grading)."""
        out = [0] * (k * self.D + 1)
        for i, c in enumerate(self.coeffs):
            out[k * i] = c
        return TruncatedSeries(out)

    def total(self):
        return sum(self.coeffs)


def _simplify(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


def series_from_rational(numer: Sequence[int], denom_factors: Sequence[int], D: int) -> TruncatedSeries:
    """Expand ``numer(t) / prod_k (1 - t**k)`` to degree ``D``.

    ``numer`` lists coefficients from the constant term up; each entry ``k``
    of ``denom_factors`` contributes a factor ``1 - t**k``.
    """
    out = [Fraction(0)] * (D + 1)
    for i, c in enumerate(numer):
        if i <= D:
            out[i] = Fraction(c)
    for k in denom_factors:
        if k < 1:
            raise InvalidInputError("denominator factors must be 1 - t^k with k >= 1")
        # multiply by 1/(1 - t^k): running sum with stride k
        for d in range(k, D + 1):
            out[d] += out[d - k]
    return TruncatedSeries(tuple(_simplify(c) for c in out))


def poly_product(*polys: Sequence[int]) -> List[int]:
    out = [1]
    for p in polys:
        new = [0] * (len(out) + len(p) - 1)
        for i, a in enumerate(out):
            for j, b in enumerate(p):
                new[i + j] += a * b
        out = new
    return out


def hilbert_truncation(sys: ReductionSystem, D: int) -> TruncatedSeries:
    """Dimensions ``dim A_0 .. dim A_D`` counted from the normal words."""
    if not sys.homogeneous:
        raise InvalidInputError("Hilbert series need a graded (homogeneous) presentation")
    if not sys.exact_through(D):
        raise TruncationError(f"requested degree {D} exceeds completion degree {sys.complete_to}")
    return TruncatedSeries(sys.automaton().count_by_degree(D))


def hilbert_series(pres, D: int, order: MonomialOrder | None = None) -> TruncatedSeries:
    return hilbert_truncation(complete(pres, order, D), D)


def total_dimension(sys: ReductionSystem) -> int:
    """Dimension of a finite-dimensional quotient; needs a terminated system."""
    if not sys.terminated:
        raise TruncationError("total dimension needs a terminated reduction system")
    aut = sys.automaton()
    if not aut.is_finite():
        raise InvalidInputError("the quotient is infinite dimensional")
    return len(aut.all_words())


# ---------------------------------------------------------------------------
# growth


@dataclass(frozen=True)
class GkEstimate:
    degree: Optional[int]
    window: Tuple[int, int]
    stable: bool
    differences: Tuple = ()

    def __str__(self):
        lo, hi = self.window
        if not self.stable:
            return f"inconclusive on degrees {lo}..{hi}"
        return f"GK ~ {self.degree} (finite differences vanish on degrees {lo}..{hi})"


def gk_estimate(s: TruncatedSeries, tail: int = 6, min_agree: int = 4) -> GkEstimate:
    """Growth degree from the tail of a Hilbert truncation.

    Takes the last ``tail`` coefficients and finds the smallest ``k`` whose
    ``k``-th finite differences vanish on at least ``min_agree`` consecutive
    values; cumulative dimensions then grow like ``d**k``.  Returns an
    unstable estimate (``degree=None``) when no such ``k`` exists.
    """
    if tail < 4:
        raise InvalidInputError("tail must be at least 4")
    D = s.D
    lo = max(0, D - tail + 1)
    window = list(s.coeffs[lo:])
    diffs = window
    for k in range(0, len(window)):
        if len(diffs) < min_agree:
            break
        if all(v == 0 for v in diffs):
            return GkEstimate(k, (lo, D), True, tuple(diffs))
        diffs = [b - a for a, b in zip(diffs, diffs[1:])]
    return GkEstimate(None, (lo, D), False, tuple(diffs))


# ---------------------------------------------------------------------------
# element checks


def _guard(sys: ReductionSystem, d: int, what: str):
    if not sys.exact_through(d):
        raise TruncationError(f"{what} needs degree {d}, system complete to {sys.complete_to}")


@dataclass
class CentralityResult:
    passed: bool
    failing: Dict[str, NcPoly] = field(default_factory=dict)

    def __bool__(self):
        return self.passed

    @property
    def failing_generator(self) -> Optional[str]:
        return next(iter(self.failing), None)


def centrality_check(z: NcPoly, sys: ReductionSystem) -> CentralityResult:
    """Pass iff ``NF(z g - g z) = 0`` for every generator ``g``.

    On failure every offending generator is listed with its reduced commutator.
    """
    top = max(sys.gens.degrees)
    _guard(sys, z.degree() + top, "centrality check")
    bad = {}
    for g in sys.gens:
        x = NcPoly.gen(sys.gens, g.id)
        c = sys.normal_form(z * x - x * z)
        if not c.is_zero():
            bad[g.label] = c
    return CentralityResult(not bad, bad)


@dataclass
class NormalityCertificate:
    """Witnesses ``g z = z h_g`` (left) and ``z g = h'_g z`` (right)."""

    element: NcPoly
    normal: bool
    left: Dict[str, NcPoly] = field(default_factory=dict)
    right: Dict[str, NcPoly] = field(default_factory=dict)
    failing: Optional[Tuple[str, str]] = None
    verified_to: int = 0

    def __bool__(self):
        return self.normal

    def table(self) -> List[str]:
        rows = []
        for lab, h in self.right.items():
            rows.append(f"z*{lab} = ({h})*z")
        for lab, h in self.left.items():
            rows.append(f"{lab}*z = z*({h})")
        return rows


def _witness(sys: ReductionSystem, z: NcPoly, g: int, side: str) -> Optional[NcPoly]:
    gens = sys.gens
    x = NcPoly.gen(gens, g)
    e = gens.degrees[g]
    basis = sys.normal_basis(e)
    if side == "left":  # g z = z h
        target = sys.normal_form(x * z).terms
        cols = [sys.normal_form(z * NcPoly.word(gens, w)).terms for w in basis]
    else:  # z g = h z
        target = sys.normal_form(z * x).terms
        cols = [sys.normal_form(NcPoly.word(gens, w) * z).terms for w in basis]
    sol = linalg.solve(cols, target)
    if sol is None:
        return None
    return NcPoly(gens, {w: c for w, c in zip(basis, sol) if c})


def normality_witness(z: NcPoly, sys: ReductionSystem) -> NormalityCertificate:
    """Solve for per-generator witnesses showing ``zA = Az``.

    Each witness is the particular solution of an exact linear system over
    the normal basis, with free coordinates set to zero.
    """
    top = max(sys.gens.degrees)
    d = z.degree() + top
    _guard(sys, d, "normality check")
    cert = NormalityCertificate(z, True, verified_to=d)
    for g in sys.gens:
        for side in ("right", "left"):
            h = _witness(sys, z, g.id, side)
            if h is None:
                cert.normal = False
                cert.failing = (g.label, side)
                return cert
            (cert.right if side == "right" else cert.left)[g.label] = h
    return cert


@dataclass
class SequenceStep:
    index: int
    element: str
    certificate: NormalityCertificate
    series_after: TruncatedSeries

    @property
    def passed(self):
        return self.certificate.normal


@dataclass
class NormalSequenceReport:
    steps: List[SequenceStep]
    initial_series: TruncatedSeries
    failed_at: Optional[int] = None

    @property
    def passed(self) -> bool:
        return self.failed_at is None and all(s.passed for s in self.steps)

    @property
    def final_series(self) -> TruncatedSeries:
        return self.steps[-1].series_after if self.steps else self.initial_series


def normal_sequence_check(pres, elements: Sequence[NcPoly], D: int, order: MonomialOrder | None = None) -> NormalSequenceReport:
    """Check each element is normal modulo its predecessors, tracking series."""
    from .quadratic import quotient_by

    for w in elements:
        if w.degree() <= 0 or not w.is_homogeneous():
            raise InvalidInputError("normal sequence elements must be homogeneous of positive degree")
    cur = pres
    sys = complete(cur, order, D)
    report = NormalSequenceReport([], hilbert_truncation(sys, D))
    for k, w in enumerate(elements, 1):
        cert = normality_witness(w, sys)
        cur = quotient_by(cur, [w])
        sys = complete(cur, order, D)
        report.steps.append(SequenceStep(k, str(w), cert, hilbert_truncation(sys, D)))
        if not cert.normal:
            report.failed_at = k
            break
    return report


@dataclass
class AnnihilationCertificate:
    a_nonzero: bool
    z_nonzero: bool
    product_zero: bool
    z_central: bool
    degree: int

    @property
    def certified(self) -> bool:
        return self.a_nonzero and self.z_nonzero and self.product_zero and self.z_central

    def __bool__(self):
        return self.certified


def verify_annihilation(a: NcPoly, z: NcPoly, sys: ReductionSystem) -> AnnihilationCertificate:
    """Certify ``a != 0``, ``z != 0``, ``a z = 0`` with ``z`` central, so ``a A z = 0``."""
    d = a.degree() + z.degree()
    _guard(sys, max(d, z.degree() + max(sys.gens.degrees)), "annihilation certificate")
    return AnnihilationCertificate(
        a_nonzero=not sys.normal_form(a).is_zero(),
        z_nonzero=not sys.normal_form(z).is_zero(),
        product_zero=sys.normal_form(a * z).is_zero(),
        z_central=centrality_check(z, sys).passed,
        degree=d,
    )


@dataclass
class DerivationCheck:
    passed: bool
    sigma_ok: bool
    delta_ok: bool
    failures: List[str] = field(default_factory=list)

    def __bool__(self):
        return self.passed


def leibniz_image(p: NcPoly, sigma: Mapping[int, NcPoly], delta: Mapping[int, NcPoly]) -> NcPoly:
    """Extend ``delta`` by ``delta(uv) = delta(u) v + sigma(u) delta(v)``."""
    gens = p.gens
    out = NcPoly.zero(gens)
    for w, c in p.terms.items():
        for m, x in enumerate(w):
            left = NcPoly.one(gens)
            for y in w[:m]:
                left = left * sigma[y]
            term = left * delta[x] * NcPoly.word(gens, w[m + 1:])
            out = out + term.scale(c)
    return out


def sigma_derivation_check(base, sigma: Mapping, delta: Mapping, order: MonomialOrder | None = None) -> DerivationCheck:
    """Check that ``sigma`` is an endomorphism and ``delta`` a sigma-derivation of ``base``.

    ``sigma`` and ``delta`` map generator labels (or ids) to polynomials over
    the base generators; ``delta`` must raise degree by one.
    """
    gens = base.gens
    sig = {gens[k].id: v for k, v in sigma.items()}
    dl = {gens[k].id: v for k, v in delta.items()}
    for g in gens:
        if g.id not in sig or g.id not in dl:
            raise InvalidInputError(f"sigma and delta must be given on generator {g.label}")
        s, d = sig[g.id], dl[g.id]
        if not s.is_zero() and (not s.is_homogeneous() or s.degree() != g.degree):
            raise InvalidInputError(f"sigma({g.label}) is not homogeneous of degree {g.degree}")
        if not d.is_zero() and (not d.is_homogeneous() or d.degree() != g.degree + 1):
            raise InvalidInputError(f"delta({g.label}) is not homogeneous of degree {g.degree + 1}")
    top = max((r.degree() for r in base.relations), default=1) + 1
    sys = complete(base, order, top)
    res = DerivationCheck(True, True, True)
    for r in base.relations:
        if not sys.normal_form(r.substitute(sig)).is_zero():
            res.sigma_ok = False
            res.failures.append(f"sigma({r}) is not in the ideal")
        if not sys.normal_form(leibniz_image(r, sig, dl)).is_zero():
            res.delta_ok = False
            res.failures.append(f"delta({r}) is not in the ideal")
    res.passed = res.sigma_ok and res.delta_ok
    return res


@dataclass
class IsoCheck:
    passed: bool
    relations_ok: bool
    series1: TruncatedSeries
    series2: TruncatedSeries
    failing_relation: Optional[str] = None

    def __bool__(self):
        return self.passed


def presentation_iso_check(p1, p2, mapping: Mapping, D: int, order1=None, order2=None) -> IsoCheck:
    """Graded isomorphism to degree ``D``: relations map into the ideal and dimensions agree.

    ``mapping`` sends each generator of ``p1`` (label or id) to a polynomial
    over ``p2``.
    """
    images = {p1.gens[k].id: v for k, v in mapping.items()}
    for g in p1.gens:
        img = images.get(g.id)
        if img is None:
            raise InvalidInputError(f"no image for generator {g.label}")
        if img.gens != p2.gens:
            raise InvalidInputError("images must be polynomials over the target generators")
        if not img.is_zero() and (not img.is_homogeneous() or img.degree() != g.degree):
            raise InvalidInputError(f"image of {g.label} is not degree preserving")
    sys1 = complete(p1, order1, D)
    sys2 = complete(p2, order2, D)
    failing = None
    for r in p1.relations:
        if r.degree() > D:
            continue
        if not sys2.normal_form(r.substitute(images, p2.gens)).is_zero():
            failing = str(r)
            break
    s1, s2 = hilbert_truncation(sys1, D), hilbert_truncation(sys2, D)
    ok = failing is None
    return IsoCheck(ok and s1 == s2, ok, s1, s2, failing)
