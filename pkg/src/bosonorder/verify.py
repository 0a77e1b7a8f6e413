"""Exact verification suites for every headline identity in the package.

Each suite function returns a plain dict

    {"suite": <name>, "cases": [{"params": {...},
                                 "status": "pass" | "fail",
                                 "residual": "0" | <where it broke>}, ...]}

ready for JSON dumping.  A suite passes iff every case does.  All checks are
exact -- rational or polynomial-in-s arithmetic throughout -- so "residual"
is literally the string "0" on success, and on failure a pointer at the
first discrepancy (key, got, expected).  Randomized suites draw all inputs
from random.Random(seed); the same seed reproduces the same report byte for
byte.
"""

from __future__ import annotations

import random
from fractions import Fraction
from math import factorial

from .scalars import SPoly, binomial, format_rational
from .series import Series
from .weyl import (ClassicalPoly, NormalForm, Word, anti_normal_order,
                   convert_order, normal_order, s_quantize,
                   weyl_quantize_monomial)
from .riordan import (RiordanPair, array_coeffs, as_riordan, catalog,
                      group_inverse, group_product, identity_pair,
                      ladder_apply, ordinary_array_coeffs)
from .hsu_shiue import (HSParams, hs_coeff_sum, hs_egf, hs_pair,
                        hs_pde_residual, hs_triangle_rec)
from .two_point import (TwoPointParams, closed_form_e1, quartic_leading_coeffs,
                        quartic_residual, two_point_pair)
from .ordering import (SingleAnnihilatorWord, blasiak_identity_check,
                       exp_number_closed_form, laguerre_power,
                       oracle_exponential, power_normal_form,
                       s_ordered_symbol, weyl_power_aaa)

SYMBOLIC = SPoly.s()
CATALOG_NAMES = ("touchard", "hermite", "laguerre", "abel")


# ---------------------------------------------------------------------------
# Report plumbing.
# ---------------------------------------------------------------------------

def _check(params: dict, residual: str) -> dict:
    return {"params": params,
            "status": "pass" if residual == "0" else "fail",
            "residual": residual}


def _first_fail(*residuals: str) -> str:
    for r in residuals:
        if r != "0":
            return r
    return "0"


def _diff_tables(got, want, label: str = "") -> str:
    """First differing (n, m) entry of two coefficient tables, or "0"."""
    keys = sorted(set(got.table) | set(want.table))
    for n, m in keys:
        a, b = got.coeff(n, m), want.coeff(n, m)
        if a != b:
            return f"{label}({n},{m}): {a} != {b}"
    return "0"


def _diff_operator_series(got, want) -> str:
    if got.order != want.order:
        return f"order: {got.order} != {want.order}"
    for n in range(got.order + 1):
        r = _diff_tables(got[n], want[n], label=f"lambda^{n} ")
        if r != "0":
            return r
    return "0"


def _diff_series(got: Series, want: Series, label: str = "z") -> str:
    upto = min(got.order, want.order)
    for n in range(upto + 1):
        if got[n] != want[n]:
            return f"{label}^{n}: {got[n]} != {want[n]}"
    return "0"


def _diff_pairs(got: RiordanPair, want: RiordanPair) -> str:
    if got.convention != want.convention:
        return f"convention: {got.convention} != {want.convention}"
    return _first_fail(_diff_series(got.first, want.first, label="first z"),
                       _diff_series(got.second, want.second, label="second z"))


def _series_nonzero(res: Series, label: str = "z") -> str:
    for n in range(res.order + 1):
        if not res[n].is_zero():
            return f"{label}^{n}: {res[n]} != 0"
    return "0"


def _rand_frac(rng, lo: int = -6, hi: int = 6, dens=(1, 1, 2, 3)) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.choice(dens))


def _rand_nonzero(rng, lo: int = -6, hi: int = 6) -> Fraction:
    while True:
        q = _rand_frac(rng, lo, hi)
        if q != 0:
            return q


# ---------------------------------------------------------------------------
# The suites.
# ---------------------------------------------------------------------------

def suite_main_theorem(seed: int = 0, lam_order: int = 6) -> dict:
    """exp(lambda ad^L a ad^R) == :two-point EGF:_s for every word with
    1 <= L + R <= 4, at fully symbolic s: quantizing the s-ordered symbol
    series must reproduce the brute-force rewriting oracle exactly."""
    cases = []
    for total in range(1, 5):
        for L in range(total + 1):
            w = SingleAnnihilatorWord(L, total - L)
            got = s_ordered_symbol(w, SYMBOLIC, lam_order).quantize()
            want = oracle_exponential(w, lam_order)
            cases.append(_check({"L": w.L, "R": w.R, "s": "symbolic",
                                 "lambda_order": lam_order},
                                _diff_operator_series(got, want)))
    return {"suite": "main-theorem", "cases": cases}


def suite_cahill_glauber(seed: int = 0, lam_order: int = 8) -> dict:
    """The closed s-ordered form of exp(lambda ad a), prefactor times
    Gaussian in x* x, against both the two-point route and the oracle."""
    w = SingleAnnihilatorWord(1, 0)
    closed = exp_number_closed_form(SYMBOLIC, lam_order)
    direct = s_ordered_symbol(w, SYMBOLIC, lam_order)
    res = "0"
    for n in range(lam_order + 1):
        res = _diff_tables(closed[n], direct[n], label=f"lambda^{n} ")
        if res != "0":
            break
    cases = [_check({"check": "closed form vs two-point EGF", "s": "symbolic",
                     "lambda_order": lam_order}, res)]
    got = closed.quantize()
    want = oracle_exponential(w, lam_order)
    cases.append(_check({"check": "quantized vs rewriting oracle",
                         "s": "symbolic", "lambda_order": lam_order},
                        _diff_operator_series(got, want)))
    return {"suite": "cahill-glauber", "cases": cases}


def _stirling2(rows: int) -> list:
    """Stirling subset numbers by their own recurrence; the independent
    reference the katriel suite is judged against."""
    table = [[Fraction(1)]]
    for n in range(1, rows + 1):
        prev = table[-1]
        row = [Fraction(0)] * (n + 1)
        for k in range(1, n + 1):
            row[k] = prev[k - 1] + (k * prev[k] if k < n else 0)
        table.append(row)
    return table


def suite_katriel(seed: int = 0, nmax: int = 10) -> dict:
    """(ad a)^n = sum_k S(n,k) ad^k a^k and (a ad)^n = sum_k S(n+1,k+1)
    ad^k a^k, n <= nmax, against brute-force rewriting and against Stirling
    numbers recomputed here from scratch."""
    stirling = _stirling2(nmax + 1)
    ada = SingleAnnihilatorWord(1, 0)
    aad = SingleAnnihilatorWord(0, 1)
    cases = []
    for n in range(nmax + 1):
        got = power_normal_form(ada, n)
        brute = normal_order(ada.word().power(n))
        ref = NormalForm(((k, k), stirling[n][k]) for k in range(n + 1))
        cases.append(_check({"word": "ad a", "n": n},
                            _first_fail(_diff_tables(got, brute),
                                        _diff_tables(got, ref))))
        got = power_normal_form(aad, n)
        brute = normal_order(aad.word().power(n))
        ref = NormalForm(((k, k), stirling[n + 1][k + 1])
                         for k in range(n + 1))
        cases.append(_check({"word": "a ad", "n": n},
                            _first_fail(_diff_tables(got, brute),
                                        _diff_tables(got, ref))))
    return {"suite": "katriel", "cases": cases}


def suite_laguerre(seed: int = 0, nmax: int = 8) -> dict:
    """(ad a ad)^n in both orderings, n <= nmax: the closed Laguerre
    coefficients n!^2/(k!^2 (n-k)!) and the triangle route must both match
    the rewriting oracle, normal and anti-normal alike."""
    w = SingleAnnihilatorWord(1, 1)
    cases = []
    for n in range(nmax + 1):
        brute_n = normal_order(w.word().power(n))
        brute_a = anti_normal_order(w.word().power(n))
        res = _first_fail(
            _diff_tables(laguerre_power(n, "normal"), brute_n, "normal "),
            _diff_tables(power_normal_form(w, n, "normal"), brute_n, "normal "),
            _diff_tables(laguerre_power(n, "antinormal"), brute_a, "anti "),
            _diff_tables(power_normal_form(w, n, "antinormal"), brute_a, "anti "))
        cases.append(_check({"n": n}, res))
    return {"suite": "laguerre", "cases": cases}


def suite_hsu_shiue(seed: int = 0, count: int = 50, nmax: int = 10) -> dict:
    """Random (A, B, r), B != 0: the defining double sum, the triangle
    recurrence and the EGF expansion must agree entry by entry (n <= nmax);
    the group inverse must realize the (B, A, -r) duality; and the EGF must
    annihilate the characterizing PDE through order 9."""
    rng = random.Random(seed)
    cases = []
    for _ in range(count):
        p = HSParams(_rand_frac(rng), _rand_nonzero(rng), _rand_frac(rng))
        tri = hs_triangle_rec(p, nmax)
        res = "0"
        for n in range(nmax + 1):
            for k in range(n + 1):
                if tri.entry(n, k) != hs_coeff_sum(p, n, k):
                    res = (f"sum ({n},{k}): {tri.entry(n, k)} != "
                           f"{hs_coeff_sum(p, n, k)}")
                    break
            if res != "0":
                break
        if res == "0":
            egf_tri = hs_egf(p, nmax).to_triangle()
            for n in range(nmax + 1):
                for k in range(n + 1):
                    if tri.entry(n, k) != egf_tri.entry(n, k):
                        res = (f"egf ({n},{k}): {egf_tri.entry(n, k)} != "
                               f"{tri.entry(n, k)}")
                        break
                if res != "0":
                    break
        if res == "0":
            res = _diff_pairs(group_inverse(hs_pair(p, nmax)),
                              hs_pair(p.dual(), nmax))
        if res == "0":
            pde = hs_pde_residual(p, 10)
            if not pde.is_zero():
                res = "pde residual != 0"
        cases.append(_check({"A": format_rational(p.A),
                             "B": format_rational(p.B),
                             "r": format_rational(p.r)}, res))
    return {"suite": "hsu-shiue", "cases": cases}


def suite_two_point_reduction(seed: int = 0, count: int = 25,
                              order: int = 8) -> dict:
    """At the endpoints the two-point family collapses to one-point arrays:
    T(A,B,r,r'; -1) = HS(-A,B,r') and T(A,B,r,r'; +1) = HS(A,-B,r), checked
    as equality of the generating pairs.  The first draws pin the A = 0 and
    B = 0 limit branches; the rest are generic."""
    rng = random.Random(seed)
    cases = []
    for i in range(count):
        A = Fraction(0) if i in (0, 2) else _rand_nonzero(rng)
        B = Fraction(0) if i in (1, 2) else _rand_nonzero(rng)
        r, rp = _rand_frac(rng), _rand_frac(rng)
        minus = as_riordan(two_point_pair(TwoPointParams(A, B, r, rp, -1),
                                          order))
        plus = as_riordan(two_point_pair(TwoPointParams(A, B, r, rp, 1),
                                         order))
        res = _first_fail(
            _diff_pairs(minus, hs_pair(HSParams(-A, B, rp), order)),
            _diff_pairs(plus, hs_pair(HSParams(A, -B, r), order)))
        cases.append(_check({"A": format_rational(A), "B": format_rational(B),
                             "r": format_rational(r),
                             "r_prime": format_rational(rp)}, res))
    return {"suite": "two-point-reduction", "cases": cases}


def suite_e1_closed_forms(seed: int = 0, order: int = 10) -> dict:
    """Excess e = 1: the radical closed forms of [gbar, fbar] against the
    pair obtained by group inversion (reversion), symbolic s throughout."""
    cases = []
    for L, R in ((2, 0), (1, 1), (0, 2)):
        w = SingleAnnihilatorWord(L, R)
        closed = closed_form_e1(L, R, SYMBOLIC, order)
        inverted = as_riordan(two_point_pair(w.two_point_params(SYMBOLIC),
                                             order))
        cases.append(_check({"L": L, "R": R, "s": "symbolic", "order": order},
                            _diff_pairs(closed, inverted)))
    return {"suite": "e1-closed-forms", "cases": cases}


def suite_e2_quartic(seed: int = 0, order: int = 8) -> dict:
    """Excess e = 2: fbar is a root of the degree-4 polynomial constraint
    for all four words, symbolic s and both endpoints; at s = +-1 the two
    leading coefficients vanish so the constraint degenerates to the
    quadratic that the endpoint root still satisfies."""
    cases = []
    svals = (("symbolic", SYMBOLIC), ("-1", Fraction(-1)), ("1", Fraction(1)))
    for L in range(4):
        R = 3 - L
        for label, s in svals:
            res = quartic_residual(L, R, s, order)
            cases.append(_check({"L": L, "R": R, "s": label, "order": order},
                                _series_nonzero(res)))
    for label, s in svals[1:]:
        c4, c3 = quartic_leading_coeffs(s)
        ok = c4.is_zero() and c3.is_zero()
        cases.append(_check({"check": "degenerate leading coefficients",
                             "s": label},
                            "0" if ok else f"({c4}, {c3}) != (0, 0)"))
    return {"suite": "e2-quartic", "cases": cases}


def suite_weyl_power(seed: int = 0, nmax: int = 6, triangle_N: int = 12) -> dict:
    """The Weyl-ordered (ad a ad)^n formula: quantizing the symbol at s = 0
    must reproduce the rewriting oracle (n <= nmax), and the interior
    triangle must equal the ordinary Riordan array
    [1/sqrt(1+4z^2), 2z/(1+sqrt(1+4z^2))], i.e. signed central binomials."""
    word = Word("cac")
    cases = []
    for n in range(nmax + 1):
        got = s_quantize(weyl_power_aaa(n), 0)
        want = normal_order(word.power(n))
        cases.append(_check({"n": n, "s": "0"}, _diff_tables(got, want)))

    z = Series.variable(triangle_N)
    root = (1 + 4 * z * z).pow_rational(Fraction(1, 2))
    tri = ordinary_array_coeffs(root.reciprocal(), (2 * z) / (1 + root),
                                triangle_N)
    res = "0"
    for n in range(triangle_N + 1):
        for k in range(n + 1):
            if (n - k) % 2 == 0:
                want = Fraction((-1) ** ((n - k) // 2)
                                * binomial(n, (n - k) // 2))
            else:
                want = Fraction(0)
            if tri.entry(n, k) != want:
                res = f"({n},{k}): {tri.entry(n, k)} != {want}"
                break
        if res != "0":
            break
    cases.append(_check({"check": "interior triangle is ordinary Riordan",
                         "N": triangle_N}, res))

    res = "0"
    for n in range(nmax + 1):
        sym = weyl_power_aaa(n)
        for k in range(n + 1):
            want = (tri.entry(n, k) * Fraction(1, 2 ** (n - k))
                    * Fraction(factorial(n), factorial(k)))
            if sym.coeff(n + k, k) != want:
                res = f"n={n} k={k}: {sym.coeff(n + k, k)} != {want}"
                break
        if res != "0":
            break
    cases.append(_check({"check": "symbol coefficients vs triangle",
                         "nmax": nmax}, res))
    return {"suite": "weyl-power", "cases": cases}


def _random_symbol(rng, max_exp: int = 4, terms: int = 5) -> ClassicalPoly:
    tab: dict = {}
    for _ in range(terms):
        key = (rng.randint(0, max_exp), rng.randint(0, max_exp))
        tab[key] = tab.get(key, 0) + _rand_nonzero(rng, -4, 4)
    return ClassicalPoly(tab)


def suite_conversion(seed: int = 0, count: int = 10) -> dict:
    """The conversion kernel between orderings: round trips are exact,
    conversion laws compose, the symbolic-target family solves the heat
    equation dF/ds = -(1/2) d^2 F/(dx dx*), and at s = 0 the heat
    propagator agrees with brute-force symmetrization (n + m <= 10)."""
    rng = random.Random(seed)
    cases = []
    for i in range(count):
        F = _random_symbol(rng)
        s1, s2, s3 = (_rand_frac(rng, -4, 4) for _ in range(3))
        G = convert_order(F, s1, s2)
        round_trip = _diff_tables(convert_order(G, s2, s1), F, "round trip ")
        composed = _diff_tables(convert_order(G, s2, s3),
                                convert_order(F, s1, s3), "composition ")
        H = convert_order(F, s1, SYMBOLIC)
        heat = _diff_tables(H.deriv_s(),
                            H.mixed_second().scale(Fraction(-1, 2)), "heat ")
        cases.append(_check({"draw": i, "degree": F.total_degree(),
                             "s": [format_rational(s1), format_rational(s2),
                                   format_rational(s3)]},
                            _first_fail(round_trip, composed, heat)))

    res = "0"
    for total in range(11):
        for n in range(total + 1):
            m = total - n
            got = weyl_quantize_monomial(n, m)
            want = s_quantize(ClassicalPoly.monomial(n, m), 0)
            res = _diff_tables(got, want, label=f"x*^{n} x^{m}: ")
            if res != "0":
                break
        if res != "0":
            break
    cases.append(_check({"check": "shuffle average vs heat propagator",
                         "max_degree": 10}, res))
    return {"suite": "conversion", "cases": cases}


def _random_pair(rng, order: int) -> RiordanPair:
    d = Series([1] + [_rand_frac(rng, -3, 3) for _ in range(order)], order)
    h = Series([0, 1] + [_rand_frac(rng, -3, 3) for _ in range(order - 1)],
               order)
    return RiordanPair(d, h)


def suite_riordan_group(seed: int = 0, order: int = 10, draws: int = 5,
                        ladder_nmax: int = 8) -> dict:
    """Group axioms on random proper pairs at truncation order 10, then the
    ladder actions P s_n = n s_(n-1), M s_n = s_(n+1) on the four catalog
    Sheffer sequences for n <= 8."""
    rng = random.Random(seed)
    ident = identity_pair(order)
    cases = []
    for i in range(draws):
        p1 = _random_pair(rng, order)
        p2 = _random_pair(rng, order)
        p3 = _random_pair(rng, order)
        assoc = _diff_pairs(group_product(group_product(p1, p2), p3),
                            group_product(p1, group_product(p2, p3)))
        unit = _first_fail(_diff_pairs(group_product(p1, ident), p1),
                           _diff_pairs(group_product(ident, p1), p1))
        inv = group_inverse(p1)
        inverse = _first_fail(_diff_pairs(group_product(p1, inv), ident),
                              _diff_pairs(group_product(inv, p1), ident))
        cases.append(_check({"draw": i, "order": order},
                            _first_fail(assoc, unit, inverse)))

    for name in CATALOG_NAMES:
        pair = catalog(name, order)
        tri = array_coeffs(pair, ladder_nmax + 1)
        res = "0"
        for n in range(ladder_nmax + 1):
            sn = tri.row_poly(n)
            sn1 = tri.row_poly(n + 1)
            low = ladder_apply(pair, "lowering", sn1)
            want_low = [(n + 1) * c for c in sn]
            while want_low and want_low[-1].is_zero():
                want_low.pop()
            up = ladder_apply(pair, "raising", sn)
            want_up = list(sn1)
            while want_up and want_up[-1].is_zero():
                want_up.pop()
            if low != want_low:
                res = f"lowering at n={n + 1}"
                break
            if up != want_up:
                res = f"raising at n={n}"
                break
        cases.append(_check({"sequence": name, "nmax": ladder_nmax}, res))
    return {"suite": "riordan-group", "cases": cases}


def suite_blasiak(seed: int = 0, nd: int = 6, nl: int = 6) -> dict:
    """The normally ordered exponential of the Sheffer raising element,
    exp(lambda X) = :g(ad)/g(bbar) exp[(bbar - ad) a]:, coefficient by
    coefficient through ad-degree nd and lambda-order nl for each catalog
    pair."""
    cases = []
    for name in CATALOG_NAMES:
        pair = catalog(name, nd + nl + 1)
        out = blasiak_identity_check(pair, nd, nl)
        res = "0" if out["equal"] else f"mismatches at {out['mismatches'][:4]}"
        cases.append(_check({"pair": name, "ad_order": nd, "lambda_order": nl},
                            res))
    return {"suite": "blasiak", "cases": cases}


# ---------------------------------------------------------------------------
# Registry.
# ---------------------------------------------------------------------------

SUITES = {
    "main-theorem": suite_main_theorem,
    "cahill-glauber": suite_cahill_glauber,
    "katriel": suite_katriel,
    "laguerre": suite_laguerre,
    "hsu-shiue": suite_hsu_shiue,
    "two-point-reduction": suite_two_point_reduction,
    "e1-closed-forms": suite_e1_closed_forms,
    "e2-quartic": suite_e2_quartic,
    "weyl-power": suite_weyl_power,
    "conversion": suite_conversion,
    "riordan-group": suite_riordan_group,
    "blasiak": suite_blasiak,
}


def run_suite(name: str, seed: int = 0) -> dict:
    try:
        fn = SUITES[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; choose one of "
                         f"{', '.join(SUITES)}") from None
    return fn(seed=seed)


def suite_passed(report: dict) -> bool:
    return all(case["status"] == "pass" for case in report["cases"])


def run_all(seed: int = 0) -> list:
    return [run_suite(name, seed) for name in SUITES]
