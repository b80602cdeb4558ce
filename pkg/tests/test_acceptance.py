"""Acceptance criteria 1-13, each at exact equality.

Every criterion prints one ``PASS``/``FAIL`` line (visible even under
output capture).  Run on its own with ``python tests/test_acceptance.py``.
"""

import random
import sys
import time
from contextlib import contextmanager
from itertools import combinations_with_replacement, permutations, product

import pytest

from fkdual import NcPoly, complete
from fkdual import linalg
from fkdual.invariants import (
    centrality_check,
    gk_estimate,
    hilbert_series,
    hilbert_truncation,
    normal_sequence_check,
    poly_product,
    presentation_iso_check,
    series_from_rational,
    sigma_derivation_check,
    total_dimension,
    verify_annihilation,
)
from fkdual.koszul import euler_check, ext_table, p_koszul_bound, pairing_dim_check
from fkdual.ncpoly import MonomialOrder
from fkdual.partitions import dn_hilbert_closed_form
from fkdual.quadratic import (
    Presentation,
    b_three,
    c_double_prime,
    c_prime,
    dn_algebra,
    dual_presentation,
    e3_dual_abc,
    fk_dual,
    fk_dual_at_one,
    fomin_kirillov,
    dual3_sequence,
    fk3_sequence,
    pair_list,
    quotient_by,
    relation_span_equal,
    s_two_gen,
    schur_quotient,
)
from fkdual.suites import REFERENCE_BASIS


@pytest.fixture
def criterion(request):
    capman = request.config.pluginmanager.getplugin("capturemanager")

    @contextmanager
    def run(num, title, limit=None):
        start = time.perf_counter()
        ok, detail = False, ""
        try:
            yield
            ok = True
        except AssertionError as exc:
            detail = f" ({exc})" if str(exc) else ""
            raise
        finally:
            dt = time.perf_counter() - start
            if ok and limit is not None and dt > limit:
                ok, detail = False, f" (took {dt:.1f}s, limit {limit}s)"
            line = f"criterion {num:>2}: {'PASS' if ok else 'FAIL'}  {title}  [{dt:.2f}s]{detail}"
            with capman.global_and_fixture_disabled():
                print("\n" + line, flush=True)
        assert limit is None or dt <= limit, f"criterion {num} exceeded {limit}s"

    return run


def test_01_dual_series_closed_form(criterion):
    with criterion(1, "dual series for n = 3 equals (1+t)(1+t+t^2)/(1-t) to degree 12", limit=5):
        h = hilbert_truncation(complete(fk_dual(3), None, 12), 12)
        closed = series_from_rational(poly_product([1, 1], [1, 1, 1]), [1], 12)
        assert h == closed
        assert list(h) == [1, 3, 5] + [6] * 10


def test_02_finite_quotient_basis(criterion):
    with criterion(2, "finite quotient: basis spans the listed ideal, series 1 3 4 3 1, dimension 12", limit=5):
        A = e3_dual_abc()
        order = MonomialOrder.from_labels(A.gens, ["a", "b", "c"])
        Q = quotient_by(A, dual3_sequence(A)[3:])
        sys_ = complete(Q, order, 8)
        ref = [A.parse(t) for t in REFERENCE_BASIS]
        ref_sys = complete(Presentation("reference", A.gens, tuple(ref)), order, 8)
        assert all(ref_sys.normal_form(p).is_zero() for p in sys_.polys())
        assert all(sys_.normal_form(p).is_zero() for p in ref)
        assert list(hilbert_truncation(sys_, 8)) == [1, 3, 4, 3, 1, 0, 0, 0, 0]
        assert sys_.terminated and total_dimension(sys_) == 12


def test_03_specialization_dimension(criterion):
    with criterion(3, "squares set to 1: dimension 6 and 24, same as the Schur-cover quotient", limit=60):
        for n, expected in ((3, 6), (4, 24)):
            s = complete(fk_dual_at_one(n), None, 10)
            assert s.terminated and total_dimension(s) == expected
            q = complete(schur_quotient(n), None, 10)
            assert q.terminated and total_dimension(q) == expected


def test_04_partition_closed_form(criterion):
    with criterion(4, "partition closed form equals the rewriting series of D_n, n = 2..5, D = 10", limit=120):
        for n in range(2, 6):
            assert dn_hilbert_closed_form(n, 10) == hilbert_series(dn_algebra(n), 10), n


def test_05_growth_degree(criterion):
    with criterion(5, "growth estimates 1, 1, 2, 2 (stable) for n = 2..5 at D = 14", limit=180):
        got = []
        for n in range(2, 6):
            est = gk_estimate(hilbert_series(fk_dual(n), 14))
            assert est.stable, (n, est)
            got.append(est.degree)
        assert got == [1, 1, 2, 2]


def test_06_zero_divisors(criterion):
    with criterion(6, "y_jk (a_ij - a_ik) = 0 certificates for every triple, n = 3, 4, 5"):
        for n in (3, 4, 5):
            pres = fk_dual(n)
            sys_ = complete(pres, None, 4)
            y = pres.pair
            for i, j, k in permutations(range(1, n + 1), 3):
                z = y(i, j) * y(i, j) - y(i, k) * y(i, k)
                assert verify_annihilation(y(j, k), z, sys_).certified, (n, i, j, k)


def test_07_relation_suites(criterion):
    with criterion(7, "central squares, exchange relations and the cubic relation of D_n, n <= 5"):
        for n in range(2, 6):
            pres = fk_dual(n)
            sys_ = complete(pres, None, 5)
            y = pres.pair
            sq = lambda i, j: y(i, j) * y(i, j)
            for i, j in pair_list(n):
                assert centrality_check(sq(i, j), sys_).passed, (n, i, j)
            for i, j, k in permutations(range(1, n + 1), 3):
                nf = sys_.normal_form
                assert nf(sq(i, j) * y(j, k) - y(j, k) * sq(i, k)).is_zero(), (n, i, j, k)
                assert nf(sq(i, j) * sq(j, k) - sq(i, j) * sq(i, k)).is_zero(), (n, i, j, k)
            dn = dn_algebra(n)
            dsys = complete(dn, None, 4)
            a = dn.sym_pair
            for i, j, k in permutations(range(1, n + 1), 3):
                r = a(i, j) * a(i, j) * a(i, k) - a(i, j) * a(i, k) * a(i, k)
                assert dsys.normal_form(r).is_zero(), (n, i, j, k)


def test_08_normal_sequences(criterion):
    with criterion(8, "both normal sequences, quotients to degree 8, auxiliary series to degree 10"):
        C = c_prime()
        rep = normal_sequence_check(C, fk3_sequence(C), 8)
        assert rep.passed
        Q = quotient_by(C, fk3_sequence(C))
        assert presentation_iso_check(fomin_kirillov(3), Q, {l: Q.parse(l) for l in Q.gens.labels}, 8).passed
        Cd = c_double_prime()
        om = dual3_sequence(Cd)[:3]
        rep = normal_sequence_check(Cd, om, 8)
        assert rep.passed
        Qd = quotient_by(Cd, om)
        assert presentation_iso_check(e3_dual_abc(), Qd, {l: Qd.parse(l) for l in "abc"}, 8).passed
        assert hilbert_series(c_double_prime(), 10) == series_from_rational([1], [1, 1, 1, 2], 10)
        assert hilbert_series(b_three(), 10) == series_from_rational([1], [1, 1, 2], 10)


def test_09_twisted_derivation(criterion):
    with criterion(9, "twisted derivation passes, sign-flipped mutant fails"):
        S = s_two_gen()
        sigma = {"x12": S.parse("x13"), "x13": S.parse("x12")}
        good = {"x12": S.parse("x12*x13"), "x13": S.parse("-x13*x12")}
        mutant = {"x12": S.parse("x12*x13"), "x13": S.parse("x13*x12")}
        assert sigma_derivation_check(S, sigma, good).passed
        assert not sigma_derivation_check(S, sigma, mutant).passed


def test_10_quadratic_dual(criterion):
    with criterion(10, "machine dual equals the listed dual and the double dual recovers E_n, n = 3, 4, 5"):
        for n in (3, 4, 5):
            E = fomin_kirillov(n)
            dual = dual_presentation(E)
            assert relation_span_equal(dual, fk_dual(n)), n
            assert relation_span_equal(dual_presentation(dual), E), n


def test_11_product_orbit(criterion):
    with criterion(11, "a_ij g = a_12 g and the cyclic module over g has dimension 1 in degrees 2..8, n = 3, 4"):
        for n in (3, 4):
            dn = dn_algebra(n)
            pairs = pair_list(n)
            sys_ = complete(dn, None, len(pairs) + 9)
            g = NcPoly.one(dn.gens)
            for i, j in pairs:
                g = g * dn.sym_pair(i, j)
            a12g = dn.sym_pair(1, 2) * g
            for i, j in pairs:
                assert sys_.normal_form(dn.sym_pair(i, j) * g - a12g).is_zero(), (n, i, j)
            for d in range(2, 9):
                rows = []
                for mono in combinations_with_replacement(pairs, d):
                    m = NcPoly.one(dn.gens)
                    for p in mono:
                        m = m * dn.sym_pair(*p)
                    rows.append(dict(sys_.normal_form(m * g).terms))
                assert linalg.rank(rows) == 1, (n, d)


def test_12_ext_tables(criterion):
    with criterion(12, "Euler identity for E_2, E_3, E_3 dual; E_2 diagonal; E_3 off-diagonal; pairing", limit=600):
        J = 6
        tables = {}
        for label, pres in (("E2", fomin_kirillov(2)), ("E3", fomin_kirillov(3)), ("E3d", fk_dual(3))):
            s = complete(pres, None, J)
            t = ext_table(s, J, J, name=label)
            rows = euler_check(t, hilbert_truncation(s, J))
            assert all(a == b for _, a, b in rows), (label, rows)
            tables[label] = t
        e2 = ext_table(complete(fomin_kirillov(2), None, 5), 5, 5)
        assert not e2.off_diagonal()
        hits = [(i, j) for i, j, _ in tables["E3"].off_diagonal() if i <= 4 and j <= 6]
        assert hits, "no off-diagonal entry for E3"
        bound = p_koszul_bound(tables["E3"])
        p = bound.violation[1]
        assert pairing_dim_check(tables["E3"], tables["E3d"], p).passed


def _nonzero_upto(sys_, letters, max_degree):
    # normal forms propagate from prefixes: NF(w x) = NF(NF(w) x)
    bad = 0
    stack = [{(): 1}]
    while stack:
        nf = stack.pop()
        depth = len(next(iter(nf)))
        if depth == max_degree:
            continue
        for x in range(letters):
            red = sys_.reduce_terms({u + (x,): c for u, c in nf.items()})
            if not red:
                bad += 1
            else:
                stack.append(red)
    return bad


def test_13_monomial_nonvanishing(criterion):
    with criterion(13, "no word of the dual or monomial of D_n vanishes: exhaustive to 6, random to 8, n <= 4"):
        rng = random.Random(2011)
        for n in (2, 3, 4):
            dual = fk_dual(n)
            sys_ = complete(dual, None, 8)
            G = len(dual.gens)
            assert _nonzero_upto(sys_, G, 6) == 0, n
            for _ in range(300):
                w = tuple(rng.randrange(G) for _ in range(rng.randint(7, 8)))
                assert sys_.reduce_terms({w: 1}), (n, w)
            dn = dn_algebra(n)
            dsys = complete(dn, None, 8)
            ids = [dn.pairs[p].id for p in pair_list(n)]
            for d in range(7):
                for mono in combinations_with_replacement(ids, d):
                    assert dsys.reduce_terms({mono: 1}), (n, mono)
            for _ in range(300):
                w = tuple(rng.choice(ids) for _ in range(rng.randint(7, 8)))
                assert dsys.reduce_terms({w: 1}), (n, w)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
