from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fkdual import InvalidInputError, NcPoly, TruncationError, complete, parse_presentation
from fkdual.invariants import (
    TruncatedSeries,
    centrality_check,
    gk_estimate,
    hilbert_series,
    hilbert_truncation,
    leibniz_image,
    normal_sequence_check,
    normality_witness,
    poly_product,
    presentation_iso_check,
    series_from_rational,
    sigma_derivation_check,
    total_dimension,
    verify_annihilation,
)
from fkdual.quadratic import (
    b_three,
    c_double_prime,
    c_prime,
    e3_dual_abc,
    fk_dual,
    fk_dual_at_one,
    fomin_kirillov,
    dual3_sequence,
    fk3_sequence,
    quotient_by,
    s_two_gen,
    schur_quotient,
)

# values frozen from the brute-force oracle in tests/oracle.py
ORACLE_C_DPRIME = [1, 3, 7, 13, 22, 34]
ORACLE_B = [1, 2, 4, 6, 9, 12, 16]


def test_series_examples():
    assert series_from_rational(poly_product([1, 1], [1, 1, 1]), [1], 6) == [1, 3, 5, 6, 6, 6, 6]
    assert series_from_rational([1], [1, 1], 4) == [1, 2, 3, 4, 5]
    assert series_from_rational([1], [1, 1, 2], 5) == [1, 2, 4, 6, 9, 12]


def test_hilbert_examples():
    assert hilbert_series(fk_dual(2), 6) == [1] * 7
    assert hilbert_series(fk_dual(3), 8) == [1, 3, 5, 6, 6, 6, 6, 6, 6]


def test_auxiliary_series_against_oracle_and_closed_form():
    cd = hilbert_series(c_double_prime(), 10)
    assert list(cd)[:6] == ORACLE_C_DPRIME
    assert cd == series_from_rational([1], [1, 1, 1, 2], 10)
    b = hilbert_series(b_three(), 10)
    assert list(b)[:7] == ORACLE_B
    assert b == series_from_rational([1], [1, 1, 2], 10)


def test_hilbert_guards():
    sys = complete(fk_dual(3), None, 4)
    with pytest.raises(TruncationError):
        hilbert_truncation(sys, 6)
    with pytest.raises(InvalidInputError):
        hilbert_truncation(complete(fk_dual_at_one(3), None, 6), 4)


@pytest.mark.parametrize("pres, dim", [(fk_dual_at_one(3), 6), (schur_quotient(3), 6), (schur_quotient(4), 24)],
                         ids=["at1_3", "schur3", "schur4"])
def test_total_dimension(pres, dim):
    assert total_dimension(complete(pres, None, 10)) == dim


def test_total_dimension_needs_termination():
    with pytest.raises(TruncationError):
        total_dimension(complete(fk_dual(4), None, 4))
    with pytest.raises(InvalidInputError):
        total_dimension(complete(fk_dual(2), None, 4))


nonneg = st.lists(st.integers(-3, 3), min_size=1, max_size=4).filter(lambda p: p[0] != 0)


@settings(max_examples=60, deadline=None)
@given(nonneg, st.lists(st.integers(1, 3), max_size=4), st.integers(0, 12))
def test_series_times_denominator_is_numerator(numer, factors, D):
    s = series_from_rational(numer, factors, D)
    back = s
    for k in factors:
        back = back * TruncatedSeries([1] + [0] * (k - 1) + [-1] + [0] * D).truncate(D)
    expected = (list(numer) + [0] * (D + 1))[: D + 1]
    assert back == expected


@settings(max_examples=60, deadline=None)
@given(nonneg, st.integers(0, 10))
def test_inverse(numer, D):
    s = series_from_rational(numer, [1], D)
    prod = s * s.inverse()
    assert prod == [1] + [0] * D


def test_inverse_needs_constant_term():
    with pytest.raises(InvalidInputError):
        TruncatedSeries([0, 1]).inverse()


def test_substitute_power():
    assert TruncatedSeries([1, 3, 4]).substitute_power(2) == [1, 0, 3, 0, 4]


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_gk_on_binomial_growth(k):
    s = TruncatedSeries([comb(d + k - 1, k - 1) for d in range(15)])
    est = gk_estimate(s, tail=k + 4)
    assert est.stable and est.degree == k
    if k > 2:
        # a six-term tail cannot certify k differences on four values
        assert not gk_estimate(s, tail=6).stable


def test_gk_examples():
    assert gk_estimate(hilbert_series(fk_dual(2), 8)).degree == 1
    e3 = gk_estimate(hilbert_series(fk_dual(3), 12))
    assert (e3.degree, e3.stable) == (1, True)
    e4 = gk_estimate(hilbert_series(fk_dual(4), 12))
    assert (e4.degree, e4.stable) == (2, True)
    assert gk_estimate(TruncatedSeries([1, 3] + [0] * 8)).degree == 0


def test_gk_inconclusive_on_short_window():
    est = gk_estimate(TruncatedSeries([1, 2, 4, 8, 16, 32, 64]))
    assert not est.stable and est.degree is None
    assert "inconclusive" in str(est)
    with pytest.raises(InvalidInputError):
        gk_estimate(TruncatedSeries([1, 1, 1]), tail=3)


@pytest.fixture(scope="module")
def e3d():
    pres = fk_dual(3)
    return pres, complete(pres, None, 8)


def test_centrality(e3d):
    pres, sys = e3d
    y12 = pres.pair(1, 2)
    assert centrality_check(y12 * y12, sys).passed
    res = centrality_check(y12, sys)
    assert not res.passed
    assert "y23" in res.failing and set(res.failing) == {"y13", "y23"}
    A = e3_dual_abc()
    assert centrality_check(dual3_sequence(A)[3], complete(A, None, 6)).passed


def test_centrality_guard():
    pres = fk_dual(3)
    sys = complete(pres, None, 2)
    with pytest.raises(TruncationError):
        centrality_check(pres.pair(1, 2) ** 2, sys)


def test_normality_witness_prime_sequence():
    C = c_prime()
    om = fk3_sequence(C)
    sys = complete(quotient_by(C, om[:1]), None, 6)
    cert = normality_witness(om[1], sys)
    assert cert.normal
    assert cert.right["x12"] == C.parse("x13")
    assert "z*x12 = (x13)*z" in cert.table()


def test_normality_witness_double_prime_sequence():
    Cd = c_double_prime()
    om = dual3_sequence(Cd)
    sys = complete(quotient_by(Cd, om[:2]), None, 6)
    cert = normality_witness(om[2], sys)
    assert cert.normal
    for lab in "abc":
        assert cert.right[lab] == Cd.parse(f"-{lab}")
        assert cert.left[lab] == Cd.parse(f"-{lab}")


def test_normality_fails_in_free_algebra():
    free = parse_presentation("gens: u v;")
    sys = complete(free, None, 4)
    cert = normality_witness(free.gen("u"), sys)
    assert not cert.normal and cert.failing is not None
    one = parse_presentation("gens: u;")
    assert normality_witness(one.gen("u"), complete(one, None, 4)).normal


def test_normal_sequences():
    C = c_prime()
    rep = normal_sequence_check(C, fk3_sequence(C), 8)
    assert rep.passed and len(rep.steps) == 3
    assert rep.final_series == hilbert_series(fomin_kirillov(3), 8)
    Cd = c_double_prime()
    rep = normal_sequence_check(Cd, dual3_sequence(Cd)[:3], 8)
    assert rep.passed
    assert rep.final_series == [1, 3, 5, 6, 6, 6, 6, 6, 6]
    free = parse_presentation("gens: u v;")
    rep = normal_sequence_check(free, [free.gen("u")], 4)
    assert not rep.passed and rep.failed_at == 1


def test_annihilation(e3d):
    pres, sys = e3d
    y = pres.pair
    assert verify_annihilation(y(2, 3), y(1, 2) ** 2 - y(1, 3) ** 2, sys).certified
    p4 = fk_dual(4)
    s4 = complete(p4, None, 5)
    assert verify_annihilation(p4.pair(3, 4), p4.pair(1, 3) ** 2 - p4.pair(1, 4) ** 2, s4).certified
    p2 = fk_dual(2)
    cert = verify_annihilation(p2.pair(1, 2), p2.pair(1, 2), complete(p2, None, 4))
    assert not cert.certified and not cert.product_zero


def test_sigma_derivation():
    S = s_two_gen()
    sigma = {"x12": S.parse("x13"), "x13": S.parse("x12")}
    good = {"x12": S.parse("x12*x13"), "x13": S.parse("-x13*x12")}
    bad = {"x12": S.parse("x12*x13"), "x13": S.parse("x13*x12")}
    assert sigma_derivation_check(S, sigma, good).passed
    res = sigma_derivation_check(S, sigma, bad)
    assert not res.passed and res.sigma_ok and not res.delta_ok
    ident = {l: S.parse(l) for l in S.gens.labels}
    zero = {l: NcPoly.zero(S.gens) for l in S.gens.labels}
    assert sigma_derivation_check(S, ident, zero).passed
    assert sigma_derivation_check(fk_dual(3), {l: fk_dual(3).parse(l) for l in ("y12", "y13", "y23")},
                                  {l: NcPoly.zero(fk_dual(3).gens) for l in ("y12", "y13", "y23")}).passed


def test_sigma_derivation_degree_bookkeeping():
    S = s_two_gen()
    sigma = {"x12": S.parse("x13"), "x13": S.parse("x12")}
    with pytest.raises(InvalidInputError):
        sigma_derivation_check(S, sigma, {"x12": S.parse("x12"), "x13": S.parse("x13")})


def test_leibniz_rule_on_products():
    S = s_two_gen()
    sigma = {0: S.parse("x13"), 1: S.parse("x12")}
    delta = {0: S.parse("x12*x13"), 1: S.parse("-x13*x12")}
    u, v = S.parse("x12*x13"), S.parse("x13 + x12")
    lhs = leibniz_image(u * v, sigma, delta)
    rhs = leibniz_image(u, sigma, delta) * v + u.substitute(sigma) * leibniz_image(v, sigma, delta)
    assert lhs == rhs


def test_iso_checks():
    C = c_prime()
    Q = quotient_by(C, fk3_sequence(C))
    assert presentation_iso_check(fomin_kirillov(3), Q, {g.label: Q.parse(g.label) for g in Q.gens}, 8).passed
    Cd = c_double_prime()
    Qd = quotient_by(Cd, dual3_sequence(Cd)[:3])
    assert presentation_iso_check(e3_dual_abc(), Qd, {l: Qd.parse(l) for l in "abc"}, 8).passed
    E2, E3 = fomin_kirillov(2), fomin_kirillov(3)
    res = presentation_iso_check(E2, E3, {"x12": E3.parse("x12")}, 2)
    assert not res.passed and res.series1[1] != res.series2[1]
