"""Ordered expansions of powers and exponentials of boson words.

The central objects are words w = ad^L a ad^R with a single annihilator,
classified by their excess e = L + R - 1 >= 0.  Two entirely separate
computation routes exist for exp(lambda w) and w^n:

* the ORACLE route: concatenate letters and normal-order by brute-force
  rewriting (:mod:`.weyl`); no series, no arrays, integer arithmetic;

* the CLOSED route: the coefficients form Hsu-Shiue triangles, and the
  s-ordered symbol of exp(lambda w) is the two-point bivariate EGF
  evaluated at (t, z) = (x* x, lambda x*^e) with parameters
  (A, B, r, r') = (e, 1, -L, R).

The two routes share nothing but the scalar types, and every verification
suite drives them onto the same normal forms.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .scalars import SPoly, as_s, as_spoly, binomial
from .series import BiSeries, Series
from .riordan import SHEFFER, RiordanPair, pair_to_egf
from .hsu_shiue import HSParams, hs_egf, hs_triangle_rec
from .two_point import TwoPointParams, two_point_egf
from .weyl import (AntiNormalForm, ClassicalPoly, NormalForm, Word,
                   anti_normal_order, normal_order, s_quantize)


@dataclass(frozen=True)
class SingleAnnihilatorWord:
    """The word ad^L a ad^R; excess e = L + R - 1 must be >= 0."""

    L: int
    R: int

    def __post_init__(self):
        if self.L < 0 or self.R < 0 or self.L + self.R < 1:
            raise ValueError("need L, R >= 0 with L + R >= 1")

    @property
    def e(self) -> int:
        return self.L + self.R - 1

    def word(self) -> Word:
        return Word("c" * self.L + "a" + "c" * self.R)

    def two_point_params(self, s) -> TwoPointParams:
        """The parameter map (A, B, r, r') = (e, 1, -L, R)."""
        return TwoPointParams(self.e, 1, -self.L, self.R, as_s(s))


class OperatorSeries:
    """Truncated series in lambda whose coefficients are normal forms."""

    __slots__ = ("terms", "order")

    def __init__(self, terms, order: int):
        ts = list(terms)
        if len(ts) != order + 1:
            raise ValueError("need exactly order+1 coefficient tables")
        object.__setattr__(self, "terms", tuple(ts))
        object.__setattr__(self, "order", order)

    def __setattr__(self, name, value):
        raise AttributeError("OperatorSeries is immutable")

    def __getitem__(self, n: int) -> NormalForm:
        return self.terms[n]

    def __eq__(self, other):
        if not isinstance(other, OperatorSeries):
            return NotImplemented
        return self.order == other.order and self.terms == other.terms

    def to_json(self) -> dict:
        return {"trunc_order": self.order,
                "terms": [t.to_json() for t in self.terms]}


class SymbolSeries:
    """Truncated series in lambda whose coefficients are classical symbols,
    tagged with the ordering parameter s they belong to."""

    __slots__ = ("terms", "order", "s")

    def __init__(self, terms, order: int, s):
        ts = list(terms)
        if len(ts) != order + 1:
            raise ValueError("need exactly order+1 coefficient polynomials")
        object.__setattr__(self, "terms", tuple(ts))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "s", as_s(s))

    def __setattr__(self, name, value):
        raise AttributeError("SymbolSeries is immutable")

    def __getitem__(self, n: int) -> ClassicalPoly:
        return self.terms[n]

    def quantize(self) -> OperatorSeries:
        """s-quantize every lambda coefficient at this series' own s."""
        return OperatorSeries([s_quantize(t, self.s) for t in self.terms],
                              self.order)

    def eval_s(self, value) -> "SymbolSeries":
        return SymbolSeries([t.eval_s(value) for t in self.terms],
                            self.order, Fraction(value))

    def __eq__(self, other):
        if not isinstance(other, SymbolSeries):
            return NotImplemented
        return (self.order == other.order and self.s == other.s
                and self.terms == other.terms)

    def to_json(self) -> dict:
        return {"trunc_order": self.order, "s": self.s.to_json(),
                "terms": [t.to_json() for t in self.terms]}


# ---------------------------------------------------------------------------
# Oracle route: pure word rewriting.
# ---------------------------------------------------------------------------

def oracle_exponential(w: SingleAnnihilatorWord, N: int) -> OperatorSeries:
    """exp(lambda w) to lambda-order N by rewriting each power w^n afresh.

    Deliberately touches no triangle or series machinery: the n-th
    coefficient is normal_order(w^n)/n!, nothing else.
    """
    word = w.word()
    terms = []
    for n in range(N + 1):
        nf = normal_order(word.power(n))
        terms.append(nf.scale(Fraction(1, factorial(n))))
    return OperatorSeries(terms, N)


def oracle_exponential_anti(w: SingleAnnihilatorWord, N: int) -> list:
    """Anti-normal companion oracle: [anti_normal_order(w^n)/n!]."""
    word = w.word()
    return [anti_normal_order(word.power(n)).scale(Fraction(1, factorial(n)))
            for n in range(N + 1)]


# ---------------------------------------------------------------------------
# Closed route: triangles and EGFs.
# ---------------------------------------------------------------------------

def power_normal_form(w: SingleAnnihilatorWord, n: int, variant: str = "normal"):
    """w^n by the generalized-Stirling power theorem.

    normal:      w^n = ad^(en) sum_k HS_{n,k}(-e, 1, R) ad^k a^k
    antinormal:  w^n = sum_k HS_{n,k}(e, -1, -L) a^k ad^k ad^(en)

    Coefficients come from the triangle recurrence (valid for every
    parameter sign); returns a NormalForm or an AntiNormalForm.
    """
    if n < 0:
        raise ValueError("power must be nonnegative")
    e = w.e
    if variant == "normal":
        tri = hs_triangle_rec(HSParams(-e, 1, w.R), n)
        return NormalForm(((e * n + k, k), tri.entry(n, k))
                          for k in range(n + 1))
    if variant == "antinormal":
        tri = hs_triangle_rec(HSParams(e, -1, -w.L), n)
        return AntiNormalForm(((k, k + e * n), tri.entry(n, k))
                              for k in range(n + 1))
    raise ValueError("variant must be 'normal' or 'antinormal'")


def laguerre_power(n: int, variant: str = "normal"):
    """(ad a ad)^n in closed Laguerre form.

    normal:      ad^n sum_k [n!^2 / (k!^2 (n-k)!)] ad^k a^k
    antinormal:  sum_k (-1)^(n-k) [n!^2 / (k!^2 (n-k)!)] a^k ad^k ad^n

    The row polynomial is n! L_n(-t) with L_n the Laguerre polynomial.
    """
    if n < 0:
        raise ValueError("power must be nonnegative")
    nf2 = factorial(n) ** 2
    if variant == "normal":
        return NormalForm(((n + k, k), Fraction(nf2, factorial(k) ** 2 * factorial(n - k)))
                          for k in range(n + 1))
    if variant == "antinormal":
        return AntiNormalForm(
            ((k, k + n),
             (-1) ** (n - k) * Fraction(nf2, factorial(k) ** 2 * factorial(n - k)))
            for k in range(n + 1))
    raise ValueError("variant must be 'normal' or 'antinormal'")


def _egf_to_symbols(egf, e: int, upto: int) -> list:
    """Map z^n coefficients t^k -> x*^(e n + k) x^k (t = x* x, z = lam x*^e)."""
    out = []
    for n in range(upto + 1):
        row = egf.zcoeffs[n]
        out.append(ClassicalPoly(((e * n + k, k), row[k])
                                 for k in range(len(row))))
    return out


def s_ordered_symbol(w: SingleAnnihilatorWord, s, N: int) -> SymbolSeries:
    """The s-ordered symbol series of exp(lambda w), via the two-point EGF.

    The lambda^n coefficient is x*^(en) T_n(x* x)/n!, with T_n the n-th
    two-point row polynomial at (A, B, r, r') = (e, 1, -L, R).
    """
    s = as_s(s)
    egf = two_point_egf(w.two_point_params(s), N)
    return SymbolSeries(_egf_to_symbols(egf, w.e, N), N, s)


def power_symbol(w: SingleAnnihilatorWord, n: int, s) -> ClassicalPoly:
    """The s-ordered symbol of the single power w^n: x*^(en) T_n(x* x)."""
    if n < 0:
        raise ValueError("power must be nonnegative")
    s = as_s(s)
    egf = two_point_egf(w.two_point_params(s), n)
    row = egf.row_poly(n)
    return ClassicalPoly(((w.e * n + k, k), row[k]) for k in range(len(row)))


def exp_word_closed_form(w: SingleAnnihilatorWord, variant: str, N: int) -> SymbolSeries:
    """The endpoint closed forms of exp(lambda w), expanded from the
    one-point Hsu-Shiue EGF rather than by reversion.

    normal (s = -1):      (1 - e lam x*^e)^(-R/e) *
                          exp[((1 - e lam x*^e)^(-1/e) - 1) x* x]
    antinormal (s = +1):  exp[-x x* ((1 + e lam x*^e)^(-1/e) - 1)] *
                          (1 + e lam x*^e)^(-L/e)

    both with the e -> 0 limits taken analytically; these are exactly the
    EGFs of HS(-e, 1, R) and HS(e, -1, -L).
    """
    e = w.e
    if variant == "normal":
        egf = hs_egf(HSParams(-e, 1, w.R), N)
        s = Fraction(-1)
    elif variant == "antinormal":
        egf = hs_egf(HSParams(e, -1, -w.L), N)
        s = Fraction(1)
    else:
        raise ValueError("variant must be 'normal' or 'antinormal'")
    return SymbolSeries(_egf_to_symbols(egf, e, N), N, s)


def exp_number_closed_form(s, N: int) -> SymbolSeries:
    """The classical s-ordered expansion of exp(lambda ad a) in closed form:

        exp(lambda ad a) = :  2/(1 + E - s(1 - E)) *
                              exp[ 2(E - 1)/(1 + E - s(1 - E)) x* x ] :_s

    with E = e^lambda.  The prefactor/exponent pair is itself a Riordan
    pair in lambda, so the expansion reuses the array machinery verbatim.
    """
    s = as_s(s)
    lam = Series.variable(N)
    E = lam.exp()
    den = 1 + E - s * (1 - E)
    pref = 2 / den
    expo = (2 * (E - 1)) / den
    egf = pair_to_egf(RiordanPair(pref, expo, "riordan"), N)
    return SymbolSeries(_egf_to_symbols(egf, 0, N), N, s)


def weyl_power_aaa(n: int) -> ClassicalPoly:
    """The Weyl-ordered symbol of (ad a ad)^n:

        sum over k = n, n-2, n-4, ... of
        (-1)^((n-k)/2) 2^(k-n) C(n, (n-k)/2) (n!/k!)  x*^n (x* x)^k

    The interior triangle (without the n!/k!) is an ordinary Riordan array;
    see the weyl-power verification suite.
    """
    if n < 0:
        raise ValueError("power must be nonnegative")
    items = []
    for k in range(n % 2, n + 1, 2):
        j = (n - k) // 2
        c = Fraction((-1) ** j * binomial(n, j), 2 ** (n - k)) \
            * Fraction(factorial(n), factorial(k))
        items.append(((n + k, k), c))
    return ClassicalPoly(items)


# ---------------------------------------------------------------------------
# The Sheffer-pair exponential identity (single annihilator, general pair).
# ---------------------------------------------------------------------------

def blasiak_identity_check(p: RiordanPair, nd: int, nl: int) -> dict:
    """Check, coefficient by coefficient, the normally ordered form of
    exp(lambda X) for the raising-type element

        X = (1/f'(ad)) [a - g'(ad)/g(ad)]

    of a genuine Sheffer pair [g, f]: with bbar = fbar(f(ad) + lambda),

        exp(lambda X) = : g(ad)/g(bbar) exp[(bbar - ad) a] :_N

    Both sides are expanded in the double truncation (ad-degree <= nd,
    lambda-order <= nl): the left side by the operator recursion
    a^m f(ad) = sum_j C(m,j) f^(j)(ad) a^(m-j), the right side by bivariate
    composition.  Returns {"equal": bool, "mismatches": [(n, m), ...]}.

    The pair must carry truncation order at least nd + nl + 1 so that every
    derivative and composition stays exact on the compared window.
    """
    if p.convention != SHEFFER:
        raise ValueError("expected a Sheffer-convention pair [g, f]")
    work = nd + nl
    if p.order < work + 1:
        raise ValueError(f"pair truncation order must be >= {work + 1}")
    g, f = p.first, p.second

    # Left side: lambda^n coefficient is X^n/n!, kept as {a-power: series in ad}.
    u = f.deriv().truncate(work).reciprocal()
    v = -(u * (g.deriv().truncate(work) / g.truncate(work)))
    us = [u]
    vs = [v]
    for _ in range(nl):
        us.append(us[-1].deriv())
        vs.append(vs[-1].deriv())
    states = [{0: Series.one(work)}]
    for _ in range(nl):
        new: dict[int, Series] = {}
        for m, cm in states[-1].items():
            for j in range(m + 1):
                w = binomial(m, j)
                t_raise = cm * us[j] * w
                new[m - j + 1] = new.get(m - j + 1, 0) + t_raise
                t_low = cm * vs[j] * w
                new[m - j] = new.get(m - j, 0) + t_low
        states.append(new)

    # Right side: bivariate in (ad, lambda).
    fbar = f.revert()
    f_bi = BiSeries.from_series(f.truncate(nd), nd, nl)
    bbar = (f_bi + BiSeries.var_u(nd, nl)).compose_series(fbar.truncate(work))
    g_bi = BiSeries.from_series(g.truncate(nd), nd, nl)
    ratio = g_bi * bbar.compose_series(g.truncate(work)).reciprocal()
    diff = bbar - BiSeries.var_x(nd, nl)

    mismatches = []
    rhs_m = BiSeries.const(1, nd, nl)  # (bbar - ad)^m / m!, built incrementally
    for m in range(nl + 1):
        if m > 0:
            rhs_m = rhs_m * diff * Fraction(1, m)
        coeff_m = ratio * rhs_m
        for n in range(nl + 1):
            rhs_slice = coeff_m.x_slice(n)
            lhs_series = states[n].get(m)
            if lhs_series is None:
                lhs_slice = Series.zero(nd)
            else:
                lhs_slice = (lhs_series * Fraction(1, factorial(n))).truncate(nd)
            if not (lhs_slice - rhs_slice).is_zero():
                mismatches.append((n, m))
    return {"equal": not mismatches, "ad_order": nd, "lambda_order": nl,
            "mismatches": mismatches}
