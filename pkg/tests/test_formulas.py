"""Tests for the generating-series formulas."""

import math
from fractions import Fraction

import pytest

from wondermodels.formulas import (
    D3_DEGENERATE_NOTE,
    big_gamma,
    cal_k,
    euler_from_bd,
    euler_from_x,
    euler_series_bd,
    f_cy,
    f_typeA,
    fvector_from_fcy,
    gamma_series,
    k_series,
    kirkman_cayley,
    phi_full_monomial,
    phi_rr,
    poincare_from_phi,
    poincare_from_psi,
    psi_series,
    tilde_big_gamma,
    tilde_gamma,
    x_typeA,
)
from wondermodels.series import TruncatedSeries, coeff


def zslice(s, ez, et):
    """q-coefficients of the z^ez t^et slice, scaled by et!."""
    return {eq: c * math.factorial(et)
            for (eq, et2, ez2, ew), c in s.terms.items()
            if (et2, ez2, ew) == (et, ez, 0)}


# ---------------------------------------------------------------------------
# the symmetric group series


def test_psi_starts_exp_t():
    s = psi_series(4)
    assert coeff(s, et=0) == 1
    assert coeff(s, et=1) == 1
    assert coeff(s, et=2) == Fraction(1, 2)
    # first z term arrives at t^3 from the i = 3 factor
    assert coeff(s, eq=1, et=3, ez=1) == Fraction(1, 6)


def test_psi_counts_single_block():
    # 6! times the z t^6 coefficient: nested sets made of one block on
    # 6 points, graded by q-degree of the corresponding monomials
    assert zslice(psi_series(6), 1, 6) == {1: 42, 2: 22, 3: 7, 4: 1}


def test_psi_counts_two_blocks():
    assert zslice(psi_series(7), 2, 7) == {2: 105, 3: 35}


@pytest.mark.parametrize("n,pairs", [
    (2, [(0, 1)]),
    (3, [(0, 1), (1, 1)]),
    (4, [(0, 1), (1, 5), (2, 1)]),
    (5, [(0, 1), (1, 16), (2, 16), (3, 1)]),
    (6, [(0, 1), (1, 42), (2, 127), (3, 42), (4, 1)]),
    (7, [(0, 1), (1, 99), (2, 715), (3, 715), (4, 99), (5, 1)]),
])
def test_poincare_from_psi(n, pairs):
    assert poincare_from_psi(n).as_pairs() == pairs


def test_poincare_from_psi_domain():
    with pytest.raises(ValueError):
        poincare_from_psi(1)


def test_k_series_extends_psi():
    assert k_series(1, 6).terms == psi_series(6).terms
    # i = 3 factor carries r^(i-1)/i! = 4/6
    assert coeff(k_series(2, 4), eq=1, et=3, ez=1) == Fraction(2, 3)


# ---------------------------------------------------------------------------
# gamma, Gamma, calK and the Poincare series


def test_gamma_lowest_terms():
    g = gamma_series(2, 4)
    assert coeff(g, et=0) == 0
    assert coeff(g, eq=1, et=1) == 1
    assert coeff(g, eq=1, et=2) == Fraction(1, 2)
    assert coeff(g, eq=2, et=2) == Fraction(1, 2)


def test_big_gamma_lowest_terms():
    bg = big_gamma(2, 4)
    assert coeff(bg, et=0) == 0
    assert coeff(bg, et=1) == 0
    assert coeff(bg, eq=1, et=2) == Fraction(1, 2)


def test_cal_k_starts_one_plus_t():
    ck = cal_k(2, 5)
    assert coeff(ck, et=0) == 1
    assert coeff(ck, et=1) == 1


def test_phi_full_monomial_known_polynomials():
    phi2 = phi_full_monomial(2, 4)
    assert poincare_from_phi(phi2, 2).as_pairs() == [(0, 1), (1, 1)]
    assert poincare_from_phi(phi2, 3).as_pairs() == [(0, 1), (1, 8), (2, 1)]
    assert poincare_from_phi(phi2, 4).as_pairs() == \
        [(0, 1), (1, 35), (2, 35), (3, 1)]
    phi3 = phi_full_monomial(3, 3)
    assert poincare_from_phi(phi3, 3).as_pairs() == [(0, 1), (1, 13), (2, 1)]
    phi4 = phi_full_monomial(4, 3)
    assert poincare_from_phi(phi4, 3).as_pairs() == [(0, 1), (1, 20), (2, 1)]


def test_phi_rr_known_polynomials():
    phi = phi_rr(2, 4)
    assert poincare_from_phi(phi, 3).as_pairs() == [(0, 1), (1, 5), (2, 1)]
    assert poincare_from_phi(phi, 4).as_pairs() == \
        [(0, 1), (1, 29), (2, 29), (3, 1)]


def test_phi_rr_equals_full_for_r_at_least_3():
    assert phi_rr(3, 5).terms == phi_full_monomial(3, 5).terms
    assert phi_rr(4, 4).terms == phi_full_monomial(4, 4).terms


def test_phi_domain():
    with pytest.raises(ValueError):
        phi_full_monomial(1, 4)
    with pytest.raises(ValueError):
        phi_rr(1, 4)


def test_literal_reading_agrees_through_n3():
    for r in (2, 3):
        a = phi_full_monomial(r, 3)
        b = phi_full_monomial(r, 3, literal_reading=True)
        for n in (2, 3):
            assert poincare_from_phi(a, n) == poincare_from_phi(b, n)


def test_literal_reading_breaks_at_n4():
    bad = phi_full_monomial(2, 4, literal_reading=True)
    with pytest.raises(ArithmeticError):
        poincare_from_phi(bad, 4)


def test_poincare_from_phi_needs_depth():
    with pytest.raises(ValueError):
        poincare_from_phi(phi_full_monomial(2, 3), 4)


# ---------------------------------------------------------------------------
# type A faces and Euler characteristics


def test_f_typeA_no_constant_term():
    s = f_typeA(5)
    assert coeff(s, et=0) == 0
    assert coeff(s, et=2, ez=1) == 1


def test_kirkman_cayley_values():
    assert [kirkman_cayley(4, s) for s in (1, 2, 3)] == [1, 5, 5]
    assert [kirkman_cayley(5, s) for s in (1, 2, 3, 4)] == [1, 9, 21, 14]
    assert [kirkman_cayley(6, s) for s in range(1, 6)] == [1, 14, 56, 84, 42]
    with pytest.raises(ValueError):
        kirkman_cayley(4, 4)
    with pytest.raises(ValueError):
        kirkman_cayley(1, 1)


def test_f_typeA_matches_kirkman_cayley():
    s = f_typeA(12)
    for n in range(2, 8):
        for k in range(1, n):
            got = coeff(s, et=n + k - 1, ez=k) \
                * math.factorial(n + k - 1) / math.factorial(n)
            assert got == kirkman_cayley(n, k), (n, k)


def test_x_typeA_vanishing_and_values():
    # closed odd-dimensional manifolds: zero Euler characteristic
    assert [euler_from_x(n) for n in range(2, 9)] == [1, 0, -3, 0, 45, 0, -1575]
    with pytest.raises(ValueError):
        euler_from_x(1)


def test_x_typeA_skips_integration():
    s = x_typeA(3)
    # t^1 coefficient is the n = 2 model: a single point
    assert coeff(s, et=1) == 1


# ---------------------------------------------------------------------------
# type B/D faces and Euler characteristics


def test_tilde_gamma_lowest_terms():
    tg = tilde_gamma(3)
    assert coeff(tg, et=0) == 2
    assert coeff(tg, et=1) == 8
    assert coeff(tg, et=2, ez=1, ew=1) == 4


def test_tilde_big_gamma_lowest_terms():
    # the z -> d/dt substitution consumes z; w survives
    tbg = tilde_big_gamma(3)
    assert all(ez == 0 for (_, _, ez, _) in tbg.terms)
    assert coeff(tbg, et=1) == 2
    assert coeff(tbg, et=2) == 4
    assert coeff(tbg, et=2, ew=1) == 4


def test_f_cy_B_expansion():
    s = f_cy("B", 4)
    # 1 + 2wt + (2w^2+w)4t^2 + (5w^3+5w^2+w)8t^3 + (14w^4+21w^3+9w^2+w)16t^4
    expected = {
        (1, 1): 2, (2, 1): 4, (2, 2): 8, (3, 1): 8, (3, 2): 40, (3, 3): 40,
        (4, 1): 16, (4, 2): 144, (4, 3): 336, (4, 4): 224,
    }
    assert coeff(s, et=0) == 1
    for (et, ew), v in expected.items():
        assert coeff(s, et=et, ew=ew) == v, (et, ew)
    # nothing else below t^5
    assert sum(1 for (_, et, _, _) in s.terms if et <= 4) == len(expected) + 1


def test_f_cy_D_expansion():
    s = f_cy("D", 4)
    # t^3 slice 4(5w^3+5w^2+w), t^4 slice 8(16w^4+24w^3+10w^2+w)
    expected = {
        (3, 1): 4, (3, 2): 20, (3, 3): 20,
        (4, 1): 8, (4, 2): 80, (4, 3): 192, (4, 4): 128,
    }
    for (et, ew), v in expected.items():
        assert coeff(s, et=et, ew=ew) == v, (et, ew)


def test_f_cy_domain():
    with pytest.raises(ValueError):
        f_cy("E", 4)


@pytest.mark.parametrize("n,expected", [
    (1, [1]),
    (2, [1, 2]),
    (3, [1, 5, 5]),
    (4, [1, 9, 21, 14]),
    (5, [1, 14, 56, 84, 42]),
])
def test_fvector_B(n, expected):
    # entry s-1 counts the codimension-(s-1) faces; entry 0 is always 1
    assert fvector_from_fcy("B", n) == expected


@pytest.mark.parametrize("n,expected", [
    (3, [1, 5, 5]),
    (4, [1, 10, 24, 16]),
    (5, [1, 16, 67, 102, 51]),
])
def test_fvector_D(n, expected):
    assert fvector_from_fcy("D", n) == expected


def test_fvector_domain_and_note():
    with pytest.raises(ValueError):
        fvector_from_fcy("B", 0)
    with pytest.raises(ValueError):
        fvector_from_fcy("D", 2)
    assert "n = 3" in D3_DEGENERATE_NOTE


def test_euler_bd_values():
    assert [euler_from_bd("B", n) for n in range(1, 6)] == [1, 0, -6, 0, 240]
    assert [euler_from_bd("D", n) for n in (3, 4, 5)] == [-3, 0, 180]
    with pytest.raises(ValueError):
        euler_from_bd("B", 0)
    with pytest.raises(ValueError):
        euler_from_bd("D", 2)


def test_euler_series_is_w_free():
    s = euler_series_bd("B", 4)
    assert all(ew == 0 for (_, _, _, ew) in s.terms)
    assert isinstance(s, TruncatedSeries)
