from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wondermodels.series import (
    QPolynomial,
    TruncatedSeries,
    add,
    assert_degree_bounds,
    coeff,
    dump_json,
    eval_w,
    exp,
    format_series,
    integrate_t,
    invert_one_minus,
    mul,
    negate_t,
    q_analog,
    qpoly_one_to,
    scale,
    scale_t,
    subst_z_derivative,
    to_records,
    truncated,
)

T = TruncatedSeries


def geom_t(trunc):
    # 1/(1-t)
    return invert_one_minus(T.monomial(trunc, 1, et=1))


def test_construction_drops_zero_and_overflow():
    s = T(3, {(0, 1, 0, 0): Fraction(2), (0, 4, 0, 0): Fraction(5),
              (1, 2, 0, 0): Fraction(0)})
    assert s.terms == {(0, 1, 0, 0): Fraction(2)}
    with pytest.raises(ValueError):
        T(3, {(0, -1, 0, 0): Fraction(1)})


def test_add_requires_equal_trunc():
    with pytest.raises(ValueError):
        add(T.one(3), T.one(4))


def test_add_cancellation():
    a = T.monomial(5, 3, et=2)
    b = T.monomial(5, -3, et=2)
    assert add(a, b) == T.zero(5)


def test_mul_truncates():
    t = T.monomial(2, 1, et=1)
    t2 = mul(t, t)
    assert t2 == T.monomial(2, 1, et=2)
    assert mul(t2, t) == T.zero(2)


def test_mul_collects_cross_terms():
    # (1 + t)(1 - t) = 1 - t^2
    a = add(T.one(4), T.monomial(4, 1, et=1))
    b = add(T.one(4), T.monomial(4, -1, et=1))
    assert mul(a, b) == add(T.one(4), T.monomial(4, -1, et=2))


def test_exp_of_t():
    s = exp(T.monomial(4, 1, et=1))
    assert coeff(s, et=0) == 1
    assert coeff(s, et=3) == Fraction(1, 6)
    assert coeff(s, et=4) == Fraction(1, 24)


def test_exp_rejects_constant():
    with pytest.raises(ValueError):
        exp(T.one(3))
    # t-free z term would never terminate under t-truncation
    with pytest.raises(ValueError):
        exp(T.monomial(3, 1, ez=1))


def test_invert_one_minus_geometric():
    g = geom_t(5)
    assert all(coeff(g, et=m) == 1 for m in range(6))


def test_q_analog():
    assert q_analog(0) == {}
    assert q_analog(1) == {0: 1}
    assert q_analog(3) == {0: 1, 1: 1, 2: 1}
    assert qpoly_one_to(3) == QPolynomial({0: 1, 1: 1, 2: 1})
    with pytest.raises(ValueError):
        q_analog(-1)


def test_subst_z_derivative_basic():
    # z t^3 -> 3 t^2,  z^2 t^2 -> 2,  z^2 t -> dropped
    s = T(5, {(0, 3, 1, 0): Fraction(1), (0, 2, 2, 0): Fraction(1),
              (0, 1, 2, 0): Fraction(1)})
    out = subst_z_derivative(s)
    assert out == T(5, {(0, 2, 0, 0): Fraction(3), (0, 0, 0, 0): Fraction(2)})


def test_subst_z_derivative_keeps_q_and_w():
    s = T.monomial(6, Fraction(1, 2), eq=2, et=4, ez=2, ew=1)
    out = subst_z_derivative(s)
    # 4!/2! = 12, halved
    assert out == T.monomial(6, 6, eq=2, et=2, ew=1)


def test_integrate_t():
    s = T(3, {(1, 0, 0, 0): Fraction(1), (0, 2, 0, 0): Fraction(3)})
    out = integrate_t(s)
    assert out == T(3, {(1, 1, 0, 0): Fraction(1), (0, 3, 0, 0): Fraction(1)})
    with pytest.raises(ValueError):
        integrate_t(T.monomial(3, 1, et=1, ez=1))


def test_coeff_guard():
    s = T.one(2)
    assert coeff(s, et=2) == 0
    with pytest.raises(ValueError):
        coeff(s, et=3)


def test_negate_t():
    s = add(T.monomial(3, 1, et=1), T.monomial(3, 2, et=2))
    out = negate_t(s)
    assert coeff(out, et=1) == -1
    assert coeff(out, et=2) == 2


def test_eval_w():
    s = add(T.monomial(3, 4, et=1, ew=2), T.monomial(3, 1, et=1))
    out = eval_w(s, Fraction(-1, 2))
    assert out == T.monomial(3, 2, et=1)


def test_eval_w_merges():
    s = add(T.monomial(3, 1, et=1, ew=1), T.monomial(3, 1, et=1))
    assert eval_w(s, -1) == T.zero(3)


def test_scale_t():
    s = add(T.one(3), T.monomial(3, 1, et=2))
    assert scale_t(s, 2) == add(T.one(3), T.monomial(3, 4, et=2))


def test_truncated():
    s = add(T.monomial(5, 1, et=5), T.one(5))
    cut = truncated(s, 3)
    assert cut.trunc == 3 and cut == T.one(3)
    with pytest.raises(ValueError):
        truncated(cut, 4)


def test_degree_bound_check():
    assert_degree_bounds(T.monomial(4, 1, et=3, ez=2, ew=1))
    with pytest.raises(AssertionError):
        assert_degree_bounds(T.monomial(4, 1, et=1, ez=2))


def test_serialization_order_and_content():
    s = T(4, {(1, 2, 0, 0): Fraction(-3, 7), (0, 1, 0, 0): Fraction(2),
              (0, 2, 1, 0): Fraction(1)})
    recs = to_records(s)
    assert recs == [
        {"q": 0, "t": 1, "z": 0, "w": 0, "num": 2, "den": 1},
        {"q": 1, "t": 2, "z": 0, "w": 0, "num": -3, "den": 7},
        {"q": 0, "t": 2, "z": 1, "w": 0, "num": 1, "den": 1},
    ]
    # byte-stable: same input, same string
    assert dump_json(s, "x") == dump_json(T(4, dict(s.terms)), "x")


def test_format_series():
    s = T(3, {(1, 1, 0, 0): Fraction(1, 2), (0, 0, 0, 0): Fraction(1)})
    assert format_series(s) == "1 + 1/2*q*t"
    assert format_series(T.zero(2)) == "0"


def test_qpolynomial_arithmetic():
    p = QPolynomial({0: 1, 1: 1})
    assert p * p == QPolynomial({0: 1, 1: 2, 2: 1})
    assert p + QPolynomial({1: -1}) == QPolynomial({0: 1})
    assert QPolynomial({0: 1, 1: 5, 2: 1}).is_palindromic()
    assert not QPolynomial({0: 1, 1: 5}).is_palindromic()
    assert str(QPolynomial({0: 1, 1: 42, 2: 127})) == "1 + 42*q + 127*q^2"
    assert QPolynomial({}) == 0
    assert QPolynomial({0: 1}) == 1


# small random series over a fixed exponent box, coefficients in a tame range
@st.composite
def small_series(draw, trunc=4, allow_zw=True):
    n_terms = draw(st.integers(0, 6))
    terms = {}
    for _ in range(n_terms):
        et = draw(st.integers(1, trunc))
        eq = draw(st.integers(0, 2))
        ez = draw(st.integers(0, et)) if allow_zw else 0
        ew = draw(st.integers(0, et)) if allow_zw else 0
        num = draw(st.integers(-4, 4))
        den = draw(st.integers(1, 4))
        terms[(eq, et, ez, ew)] = Fraction(num, den)
    return TruncatedSeries(trunc, terms)


@given(small_series())
@settings(max_examples=150, deadline=None)
def test_exp_of_negation_inverts(s):
    assert mul(exp(s), exp(scale(s, -1))) == TruncatedSeries.one(s.trunc)


@given(small_series())
@settings(max_examples=150, deadline=None)
def test_invert_one_minus_is_inverse(s):
    one_minus = add(TruncatedSeries.one(s.trunc), scale(s, -1))
    assert mul(invert_one_minus(s), one_minus) == TruncatedSeries.one(s.trunc)


@given(small_series(allow_zw=False), small_series(allow_zw=False))
@settings(max_examples=100, deadline=None)
def test_mul_commutes_and_distributes(a, b):
    assert mul(a, b) == mul(b, a)
    c = TruncatedSeries.monomial(a.trunc, Fraction(1, 3), eq=1, et=1)
    assert mul(add(a, b), c) == add(mul(a, c), mul(b, c))
