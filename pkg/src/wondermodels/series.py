"""Exact truncated power series in q, t, z, w over the rationals.

A series is a finite dict mapping exponent tuples (eq, et, ez, ew) to
nonzero Fractions, together with a truncation order: every term with
t-degree above the truncation is discarded, terms of any q/z/w degree
are kept.  Truncation is driven by t alone because in every series this
package builds, z and w only ever enter in the company of at least as
many powers of t, so a t-bound caps the whole computation.

All arithmetic is exact; nothing here ever touches a float.
"""

from __future__ import annotations

import json
import math
from fractions import Fraction

# exponent order inside a key: (eq, et, ez, ew)
Key = tuple[int, int, int, int]


class TruncatedSeries:
    """Finite table of monomials c * q^eq t^et z^ez w^ew, exact through t^trunc.

    Instances are treated as immutable: operations return new series and
    never mutate `terms` after construction.
    """

    __slots__ = ("trunc", "terms")

    def __init__(self, trunc: int, terms: dict[Key, Fraction] | None = None):
        if trunc < 0:
            raise ValueError("truncation order must be >= 0")
        self.trunc = trunc
        clean: dict[Key, Fraction] = {}
        for key, c in (terms or {}).items():
            eq, et, ez, ew = key
            if min(eq, et, ez, ew) < 0:
                raise ValueError(f"negative exponent in {key}")
            if et > trunc:
                continue
            c = Fraction(c)
            if c != 0:
                clean[key] = c
        self.terms = clean

    @classmethod
    def zero(cls, trunc: int) -> "TruncatedSeries":
        return cls(trunc, {})

    @classmethod
    def one(cls, trunc: int) -> "TruncatedSeries":
        return cls(trunc, {(0, 0, 0, 0): Fraction(1)})

    @classmethod
    def monomial(cls, trunc: int, coeff, eq: int = 0, et: int = 0,
                 ez: int = 0, ew: int = 0) -> "TruncatedSeries":
        return cls(trunc, {(eq, et, ez, ew): Fraction(coeff)})

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.trunc == other.trunc and self.terms == other.terms

    def __hash__(self):
        return hash((self.trunc, frozenset(self.terms.items())))

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return add(self, other)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return add(self, scale(other, -1))

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return mul(self, other)

    def __repr__(self):
        return f"TruncatedSeries(trunc={self.trunc}, {len(self.terms)} terms)"

    def __str__(self):
        return format_series(self)

    def is_zero(self) -> bool:
        return not self.terms


def _sort_key(key: Key):
    eq, et, ez, ew = key
    return (et, ez, ew, eq)


def format_series(s: TruncatedSeries) -> str:
    """Human-readable form, terms sorted by (t, z, w, q) degree."""
    if not s.terms:
        return "0"
    parts = []
    for key in sorted(s.terms, key=_sort_key):
        eq, et, ez, ew = key
        c = s.terms[key]
        factors = []
        if c != 1 or (eq, et, ez, ew) == (0, 0, 0, 0):
            factors.append(str(c))
        for name, e in (("q", eq), ("t", et), ("z", ez), ("w", ew)):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        parts.append("*".join(factors))
    return " + ".join(parts)


def add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Sum of two series with identical truncation order."""
    if a.trunc != b.trunc:
        raise ValueError(f"truncation mismatch: {a.trunc} != {b.trunc}")
    terms = dict(a.terms)
    for key, c in b.terms.items():
        new = terms.get(key, 0) + c
        if new:
            terms[key] = new
        else:
            terms.pop(key, None)
    return TruncatedSeries(a.trunc, terms)


def scale(s: TruncatedSeries, c) -> TruncatedSeries:
    c = Fraction(c)
    return TruncatedSeries(s.trunc, {k: v * c for k, v in s.terms.items()})


def mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product, truncated in t."""
    if a.trunc != b.trunc:
        raise ValueError(f"truncation mismatch: {a.trunc} != {b.trunc}")
    trunc = a.trunc
    terms: dict[Key, Fraction] = {}
    # iterate over the smaller operand's terms in the outer loop
    small, big = (a.terms, b.terms) if len(a.terms) <= len(b.terms) else (b.terms, a.terms)
    for (q1, t1, z1, w1), c1 in small.items():
        for (q2, t2, z2, w2), c2 in big.items():
            et = t1 + t2
            if et > trunc:
                continue
            key = (q1 + q2, et, z1 + z2, w1 + w2)
            new = terms.get(key, 0) + c1 * c2
            if new:
                terms[key] = new
            else:
                terms.pop(key, None)
    return TruncatedSeries(trunc, terms)


def _require_positive_t_valuation(s: TruncatedSeries, op: str) -> None:
    # A t-free term (constant included) would make the geometric/exponential
    # sum below run forever under t-truncation.
    for (eq, et, ez, ew) in s.terms:
        if et == 0:
            raise ValueError(f"{op} needs every term to carry positive t-degree, "
                             f"found q^{eq} z^{ez} w^{ew} term")


def exp(s: TruncatedSeries) -> TruncatedSeries:
    """exp(s) = sum s^k / k!  for s with zero constant term."""
    _require_positive_t_valuation(s, "exp")
    result = TruncatedSeries.one(s.trunc)
    power = TruncatedSeries.one(s.trunc)
    for k in range(1, s.trunc + 1):
        power = scale(mul(power, s), Fraction(1, k))
        if power.is_zero():
            break
        result = add(result, power)
    return result


def invert_one_minus(s: TruncatedSeries) -> TruncatedSeries:
    """1 / (1 - s) = sum s^k  for s with zero constant term."""
    _require_positive_t_valuation(s, "invert_one_minus")
    result = TruncatedSeries.one(s.trunc)
    power = TruncatedSeries.one(s.trunc)
    for _ in range(s.trunc):
        power = mul(power, s)
        if power.is_zero():
            break
        result = add(result, power)
    return result


def q_analog(j: int) -> dict[int, int]:
    """[j]_q = 1 + q + ... + q^(j-1) as {exponent: 1}; [0]_q = 0."""
    if j < 0:
        raise ValueError("q-analog of a negative integer")
    return {e: 1 for e in range(j)}


def subst_z_derivative(s: TruncatedSeries) -> TruncatedSeries:
    """Replace each power of z by the matching t-derivative.

    Per term: c q^a z^k t^m w^b  ->  c q^a w^b * m!/(m-k)! * t^(m-k),
    dropped entirely when k > m.
    """
    terms: dict[Key, Fraction] = {}
    for (eq, et, ez, ew), c in s.terms.items():
        if ez > et:
            continue
        key = (eq, et - ez, 0, ew)
        new = terms.get(key, 0) + c * math.perm(et, ez)
        if new:
            terms[key] = new
        else:
            terms.pop(key, None)
    return TruncatedSeries(s.trunc, terms)


def integrate_t(s: TruncatedSeries) -> TruncatedSeries:
    """Term-wise t-integral with zero constant; input must be z-free."""
    terms: dict[Key, Fraction] = {}
    for (eq, et, ez, ew), c in s.terms.items():
        if ez:
            raise ValueError("integrate_t on a series still containing z")
        if et + 1 > s.trunc:
            continue
        terms[(eq, et + 1, 0, ew)] = c / (et + 1)
    return TruncatedSeries(s.trunc, terms)


def coeff(s: TruncatedSeries, eq: int = 0, et: int = 0, ez: int = 0,
          ew: int = 0) -> Fraction:
    """Coefficient of q^eq t^et z^ez w^ew; t-degree must be within trunc."""
    if et > s.trunc:
        raise ValueError(f"t-degree {et} beyond truncation {s.trunc}")
    return s.terms.get((eq, et, ez, ew), Fraction(0))


def negate_t(s: TruncatedSeries) -> TruncatedSeries:
    """t -> -t."""
    return TruncatedSeries(
        s.trunc, {k: (-c if k[1] % 2 else c) for k, c in s.terms.items()})


def eval_w(s: TruncatedSeries, v) -> TruncatedSeries:
    """Substitute a rational value for w."""
    v = Fraction(v)
    terms: dict[Key, Fraction] = {}
    for (eq, et, ez, ew), c in s.terms.items():
        key = (eq, et, ez, 0)
        new = terms.get(key, 0) + c * v ** ew
        if new:
            terms[key] = new
        else:
            terms.pop(key, None)
    return TruncatedSeries(s.trunc, terms)


def scale_t(s: TruncatedSeries, c) -> TruncatedSeries:
    """t -> c*t for rational c."""
    c = Fraction(c)
    return TruncatedSeries(s.trunc, {k: v * c ** k[1] for k, v in s.terms.items()})


def truncated(s: TruncatedSeries, trunc: int) -> TruncatedSeries:
    """The same series re-truncated to a lower (or equal) order."""
    if trunc > s.trunc:
        raise ValueError(f"cannot extend truncation {s.trunc} to {trunc}")
    return TruncatedSeries(trunc, {k: c for k, c in s.terms.items() if k[1] <= trunc})


def assert_degree_bounds(s: TruncatedSeries) -> TruncatedSeries:
    """Check ez <= et and ew <= et on every stored term.

    Holds for every series the formula layer produces; enforced there as a
    cheap structural sanity check (it is what makes t-truncation sound).
    """
    for (eq, et, ez, ew) in s.terms:
        assert ez <= et and ew <= et, \
            f"term q^{eq} t^{et} z^{ez} w^{ew} breaks the z/w <= t bound"
    return s


def to_records(s: TruncatedSeries) -> list[dict]:
    """JSON-ready term list, sorted by (t, z, w, q) exponents."""
    out = []
    for key in sorted(s.terms, key=_sort_key):
        eq, et, ez, ew = key
        c = s.terms[key]
        out.append({"q": eq, "t": et, "z": ez, "w": ew,
                    "num": c.numerator, "den": c.denominator})
    return out


def dump_json(s: TruncatedSeries, name: str = "") -> str:
    doc = {"name": name, "trunc": s.trunc, "terms": to_records(s)}
    return json.dumps(doc, separators=(",", ":"), sort_keys=True)


class QPolynomial:
    """Polynomial in q with integer coefficients, e.g. a Poincare polynomial."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: dict[int, int] | None = None):
        clean = {}
        for e, c in (coeffs or {}).items():
            if e < 0:
                raise ValueError("negative q-exponent")
            if c:
                clean[e] = int(c)
        self.coeffs = clean

    @classmethod
    def from_list(cls, values) -> "QPolynomial":
        return cls({e: c for e, c in enumerate(values)})

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.coeffs == ({0: other} if other else {})
        if not isinstance(other, QPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other: "QPolynomial") -> "QPolynomial":
        coeffs = dict(self.coeffs)
        for e, c in other.coeffs.items():
            coeffs[e] = coeffs.get(e, 0) + c
        return QPolynomial(coeffs)

    def __mul__(self, other: "QPolynomial") -> "QPolynomial":
        coeffs: dict[int, int] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                coeffs[e1 + e2] = coeffs.get(e1 + e2, 0) + c1 * c2
        return QPolynomial(coeffs)

    def degree(self) -> int:
        return max(self.coeffs, default=0)

    def __getitem__(self, e: int) -> int:
        return self.coeffs.get(e, 0)

    def as_pairs(self) -> list[tuple[int, int]]:
        return sorted(self.coeffs.items())

    def is_palindromic(self) -> bool:
        d = self.degree()
        return all(self[e] == self[d - e] for e in range(d + 1))

    def __repr__(self):
        return f"QPolynomial({self.coeffs!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e, c in self.as_pairs():
            if e == 0:
                parts.append(str(c))
            else:
                head = "" if c == 1 else f"{c}*"
                parts.append(f"{head}q" if e == 1 else f"{head}q^{e}")
        return " + ".join(parts)


def qpoly_one_to(d: int) -> QPolynomial:
    """1 + q + ... + q^(d-1), the q-analog of d as a polynomial; 0 for d <= 0."""
    return QPolynomial({e: 1 for e in range(max(d, 0))})
