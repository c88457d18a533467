"""Closed generating series for Poincare polynomials and face counts.

Everything here is an exponential generating series in t (degree n enters
as t^n/n!), with q recording cohomological degree, z marking nested-set
size before the derivative substitution, and w marking face dimension in
the type B/D series.  The basic objects:

  psi_series      weak-support basis monomials for the symmetric group
  k_series        same for G(r,1,n), r-fold cover of the t-line
  gamma_series    blocks containing the distinguished point of a chain
  big_gamma       gamma after z -> d/dt and one t-integration
  cal_k           1 + integrated-derivative of k_series
  phi_*           full Poincare series 1/(1-Gamma) * calK (+ r=2 twist)
  f_typeA / x_typeA     plane-tree faces and the Euler series for type A
  tilde_gamma / f_cy    type B/D analogues over the doubled line

Each series is built at an internal working truncation large enough that
the z -> d/dt substitution is exact through the requested t-order: a z^s
term always rides with at least 3s powers of t here (2s in the B/D and
type A Euler series), which bounds how far above the target the source
terms can sit.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .series import (
    QPolynomial,
    TruncatedSeries,
    add,
    assert_degree_bounds,
    coeff,
    eval_w,
    exp,
    integrate_t,
    invert_one_minus,
    mul,
    negate_t,
    q_analog,
    scale,
    subst_z_derivative,
    truncated,
)

T = TruncatedSeries


def _exp_product(trunc: int, factor_terms) -> TruncatedSeries:
    """prod_i exp(arg_i) for arg_i given as term dicts, i up to trunc."""
    out = T.one(trunc)
    for terms in factor_terms:
        arg = T(trunc, terms)
        if not arg.is_zero():
            out = mul(out, exp(arg))
    return out


def psi_series(trunc: int) -> TruncatedSeries:
    """e^t * prod_{i>=3} exp(z q [i-2]_q t^i / i!).

    The t^(n+s-1) z^s coefficient times (n+s-1)! is the q-count of basis
    monomials over nested sets of s blocks on n points.
    """
    factors = []
    for i in range(3, trunc + 1):
        c = Fraction(1, math.factorial(i))
        factors.append({(e + 1, i, 1, 0): c for e in q_analog(i - 2)})
    out = mul(exp(T.monomial(trunc, 1, et=1)), _exp_product(trunc, factors))
    return assert_degree_bounds(out)


def k_series(r: int, trunc: int) -> TruncatedSeries:
    """e^t * prod_{i>=3} exp((z/r) q [i-2]_q (rt)^i / i!); k_series(1,.) is psi."""
    factors = []
    for i in range(3, trunc + 1):
        c = Fraction(r ** (i - 1), math.factorial(i))
        factors.append({(e + 1, i, 1, 0): c for e in q_analog(i - 2)})
    out = mul(exp(T.monomial(trunc, 1, et=1)), _exp_product(trunc, factors))
    return assert_degree_bounds(out)


def gamma_series(r: int, trunc: int, literal_reading: bool = False) -> TruncatedSeries:
    """Blocks through the marked point: prefactor sum_{i>=2} q[i-1]_q t^(i-1)/(i-1)!
    times the same infinite product as k_series.

    literal_reading swaps the product exponent (rt)^i/i! for (tr/i!)^i, a
    transcription that breaks the structural match with k_series; it is kept
    only so the discrepancy can be demonstrated (it fails the brute-force
    cross-check at n = 4).
    """
    pre_terms = {}
    for i in range(2, trunc + 2):
        c = Fraction(1, math.factorial(i - 1))
        for e in q_analog(i - 1):
            pre_terms[(e + 1, i - 1, 0, 0)] = pre_terms.get((e + 1, i - 1, 0, 0), 0) + c
    pre = T(trunc, pre_terms)
    factors = []
    for i in range(3, trunc + 1):
        if literal_reading:
            c = Fraction(r ** (i - 1), math.factorial(i) ** i)
        else:
            c = Fraction(r ** (i - 1), math.factorial(i))
        factors.append({(e + 1, i, 1, 0): c for e in q_analog(i - 2)})
    return assert_degree_bounds(mul(pre, _exp_product(trunc, factors)))


def _working_trunc_3(trunc: int) -> int:
    # z^s terms ride with >= 3s powers of t, so source degree m feeding the
    # substitution at target degree d <= trunc-1 satisfies m <= 3(trunc-1)/2
    return max(trunc, -(-3 * (trunc - 1) // 2))


def big_gamma(r: int, trunc: int, literal_reading: bool = False) -> TruncatedSeries:
    """Gamma = integral of gamma with z replaced by d/dt."""
    w = _working_trunc_3(trunc)
    g = gamma_series(r, w, literal_reading)
    return truncated(integrate_t(subst_z_derivative(g)), trunc)


def cal_k(r: int, trunc: int) -> TruncatedSeries:
    """1 + integral of k_series with z replaced by d/dt; starts 1 + t."""
    w = _working_trunc_3(trunc)
    k = k_series(r, w)
    out = truncated(integrate_t(subst_z_derivative(k)), trunc)
    return add(T.one(trunc), out)


def phi_full_monomial(r: int, trunc: int,
                      literal_reading: bool = False) -> TruncatedSeries:
    """Poincare series of the models Y_{G(r,p,n)}, p < r: 1/(1-Gamma) * calK."""
    if r < 2:
        raise ValueError("full monomial series needs r >= 2")
    return mul(invert_one_minus(big_gamma(r, trunc, literal_reading)),
               cal_k(r, trunc))


def phi_rr(r: int, trunc: int) -> TruncatedSeries:
    """Poincare series of the models Y_{G(r,r,n)}.

    For r >= 3 this coincides with the full monomial series; for r = 2 the
    zero sets of size two leave the building set and the series picks up
    the factor (1 - q t^2/2).
    """
    if r < 2:
        raise ValueError("rr series needs r >= 2")
    full = phi_full_monomial(r, trunc)
    if r >= 3:
        return full
    twist = add(T.one(trunc), T.monomial(trunc, Fraction(-1, 2), eq=1, et=2))
    return mul(twist, full)


def poincare_from_psi(n: int) -> QPolynomial:
    """Poincare polynomial of the model for the symmetric group S_n.

    Reads every z^s t^(n+s-1) coefficient of psi (s can reach (n-1)/2) and
    scales by (n+s-1)!.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    smax = (n - 1) // 2
    s_psi = psi_series(n - 1 + smax)
    out: dict[int, int] = {}
    for s in range(smax + 1):
        et = n + s - 1
        fact = math.factorial(et)
        for (eq, et2, ez, ew), c in s_psi.terms.items():
            if (et2, ez, ew) == (et, s, 0):
                val = c * fact
                if val.denominator != 1:
                    raise ArithmeticError(f"non-integer count at q^{eq} z^{s}")
                out[eq] = out.get(eq, 0) + val.numerator
    return QPolynomial(out)


def poincare_from_phi(phi: TruncatedSeries, n: int) -> QPolynomial:
    """n! times the t^n coefficient of a Poincare series, as a q-polynomial."""
    if n > phi.trunc:
        raise ValueError(f"series truncated at {phi.trunc}, need t^{n}")
    out: dict[int, int] = {}
    fact = math.factorial(n)
    for (eq, et, ez, ew), c in phi.terms.items():
        if et == n:
            assert ez == 0 and ew == 0, "Poincare series must be z- and w-free"
            val = c * fact
            if val.denominator != 1:
                raise ArithmeticError(f"non-integer count at q^{eq} t^{n}")
            out[eq] = out.get(eq, 0) + val.numerator
    return QPolynomial(out)


def f_typeA(trunc: int) -> TruncatedSeries:
    """exp(z t^2/(1-t)) - 1: faces of type A nestohedra via plane trees.

    (n+s-1)! times the z^s t^(n+s-1) coefficient counts plane rooted forests
    with s internal vertices on n labeled leaves.
    """
    arg = T(trunc, {(0, i, 1, 0): Fraction(1) for i in range(2, trunc + 1)})
    return add(exp(arg), scale(T.one(trunc), -1))


def kirkman_cayley(n: int, s: int) -> int:
    """Faces of codimension s-1 of the (n-2)-dimensional associahedron:
    (1/s) C(n-2, s-1) C(n+s-1, s-1)."""
    if n < 2 or not 1 <= s <= n - 1:
        raise ValueError(f"kirkman_cayley needs n >= 2 and 1 <= s <= n-1, got ({n},{s})")
    val = Fraction(math.comb(n - 2, s - 1) * math.comb(n + s - 1, s - 1), s)
    if val.denominator != 1:
        raise ArithmeticError(f"kirkman_cayley({n},{s}) is not integral")
    return val.numerator


def fvector_typeA(n: int) -> list[int]:
    """f-vector [codim 0 .. codim n-2 faces] of the (n-2)-dimensional
    associahedron, read off f_typeA."""
    if n < 2:
        raise ValueError("need n >= 2")
    s = f_typeA(2 * n - 2)
    out = []
    for k in range(1, n):
        val = coeff(s, et=n + k - 1, ez=k) \
            * Fraction(math.factorial(n + k - 1), math.factorial(n))
        if val.denominator != 1:
            raise ArithmeticError(f"non-integer face count at z^{k}")
        out.append(val.numerator)
    return out


def x_typeA(trunc: int) -> TruncatedSeries:
    """Euler series of the real type A models: exp((z/2) t^2/(1+t)) - 1 with
    z replaced by d/dt (no integration step here).

    (n-1)! times the t^(n-1) coefficient is the Euler characteristic of the
    n-point model; it vanishes for odd n >= 3, these being odd-dimensional
    closed manifolds.
    """
    w = 2 * trunc
    arg = T(w, {(0, i, 1, 0): Fraction((-1) ** i, 2) for i in range(2, w + 1)})
    src = add(exp(arg), scale(T.one(w), -1))
    return truncated(subst_z_derivative(src), trunc)


def euler_from_x(n: int) -> int:
    """Euler characteristic of the real type A model on n points."""
    if n < 2:
        raise ValueError("need n >= 2")
    val = coeff(x_typeA(n - 1), et=n - 1) * math.factorial(n - 1)
    if val.denominator != 1:
        raise ArithmeticError(f"non-integer Euler characteristic at n={n}")
    return val.numerator


def tilde_gamma(trunc: int) -> TruncatedSeries:
    """2/(1-2t)^2 * prod_{j>=2} exp(w z (2t)^j / 2), the type B block series."""
    inv = invert_one_minus(T.monomial(trunc, 2, et=1))
    pre = scale(mul(inv, inv), 2)
    factors = [{(0, j, 1, 1): Fraction(2 ** (j - 1))} for j in range(2, trunc + 1)]
    return assert_degree_bounds(mul(pre, _exp_product(trunc, factors)))


def tilde_big_gamma(trunc: int) -> TruncatedSeries:
    """Integrated derivative of tilde_gamma (z^s rides with >= 2s t's here)."""
    w = max(trunc, 2 * (trunc - 1))
    g = tilde_gamma(w)
    return truncated(integrate_t(subst_z_derivative(g)), trunc)


def f_cy(variant: str, trunc: int) -> TruncatedSeries:
    """Face series of the compact real B/D models: t^n w^s coefficient times
    n! counts faces of codimension s across all chambers.

    B: 1/(1 - w Gamma~).
    D: ((1-t) w Gamma~ - 2tw - 2t^2 w - 2t^2 w^2) / (1 - w Gamma~).
    """
    tg = tilde_big_gamma(trunc)
    wtg = mul(T.monomial(trunc, 1, ew=1), tg)
    inv = invert_one_minus(wtg)
    if variant == "B":
        return inv
    if variant == "D":
        one_minus_t = add(T.one(trunc), T.monomial(trunc, -1, et=1))
        num = mul(one_minus_t, wtg)
        num = add(num, T(trunc, {(0, 1, 0, 1): Fraction(-2),
                                 (0, 2, 0, 1): Fraction(-2),
                                 (0, 2, 0, 2): Fraction(-2)}))
        return mul(num, inv)
    raise ValueError(f"variant must be 'B' or 'D', got {variant!r}")


def fvector_from_fcy(variant: str, n: int) -> list[int]:
    """f-vector [codim 1 .. codim n faces] of one nestohedron chamber.

    Chamber counts divide out: 2^n for B, 2^(n-1) for D.  D with n = 3 is
    the degenerate reducible case; the series still returns the type A
    values [1, 5, 5] there (see D3_DEGENERATE_NOTE).
    """
    if variant == "B" and n < 1:
        raise ValueError("type B needs n >= 1")
    if variant == "D" and n < 3:
        raise ValueError("type D needs n >= 3")
    s_cy = f_cy(variant, n)
    divisor = 2 ** n if variant == "B" else 2 ** (n - 1)
    out = []
    for s in range(1, n + 1):
        val = coeff(s_cy, et=n, ew=s) / divisor
        if val.denominator != 1:
            raise ArithmeticError(f"non-integer face count at w^{s} t^{n}")
        out.append(val.numerator)
    return out


D3_DEGENERATE_NOTE = ("D with n = 3 is reducible; the reported values are "
                      "those of the type A model on 4 points")


def euler_series_bd(variant: str, trunc: int) -> TruncatedSeries:
    """Euler characteristics of the real B/D models: t -> -t, w -> -1/2 in
    f_cy; n! times the t^n coefficient is the Euler characteristic."""
    return eval_w(negate_t(f_cy(variant, trunc)), Fraction(-1, 2))


def euler_from_bd(variant: str, n: int) -> int:
    if variant == "B" and n < 1:
        raise ValueError("type B needs n >= 1")
    if variant == "D" and n < 3:
        raise ValueError("type D needs n >= 3")
    val = coeff(euler_series_bd(variant, n), et=n) * math.factorial(n)
    if val.denominator != 1:
        raise ArithmeticError(f"non-integer Euler characteristic at n={n}")
    return val.numerator
