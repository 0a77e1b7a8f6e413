"""Exponential Riordan arrays, the group operations, and Sheffer ladders.

Catalog sequences are judged against their own classical recurrences
(Stirling, Hermite, Lah, Abel), recomputed here from scratch so the array
machinery never grades its own homework.
"""

from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from bosonorder.riordan import (BivariateEGF, RiordanPair, Triangle,
                                apply_to_egf, array_coeffs, as_riordan,
                                as_sheffer, catalog, group_inverse,
                                group_product, identity_pair, ladder_apply,
                                ordinary_array_coeffs, pair_to_egf)
from bosonorder.scalars import SPoly, binomial
from bosonorder.series import Series

N = 8

coeff_st = st.fractions(min_value=-4, max_value=4, max_denominator=3)
pair_st = st.tuples(st.lists(coeff_st, max_size=N - 1),
                    st.lists(coeff_st, max_size=N - 2)).map(
    lambda t: RiordanPair(Series([1] + t[0], N), Series([0, 1] + t[1], N)))


def test_pair_validation():
    z = Series.variable(4)
    with pytest.raises(ValueError):
        RiordanPair(2 + z, z)          # d(0) != 1
    with pytest.raises(ValueError):
        RiordanPair(1 + z, 1 + z)      # h(0) != 0
    with pytest.raises(ValueError):
        RiordanPair(1 + z, 2 * z)      # h'(0) != 1
    with pytest.raises(ValueError):
        RiordanPair(Series.one(3), Series.variable(4))  # mixed orders
    with pytest.raises(ValueError):
        RiordanPair(1 + z, z, "weird")


def test_identity_pair():
    e = identity_pair(5)
    assert e.first == Series.one(5)
    assert e.second == Series.variable(5)


@given(pair_st, pair_st, pair_st)
@settings(max_examples=30)
def test_group_axioms(p1, p2, p3):
    e = identity_pair(N)
    assert group_product(group_product(p1, p2), p3) == \
        group_product(p1, group_product(p2, p3))
    assert group_product(p1, e) == p1
    assert group_product(e, p1) == p1
    q = group_inverse(p1)
    assert group_product(p1, q) == e
    assert group_product(q, p1) == e


@given(pair_st)
def test_convention_flip_is_involutive(p):
    assert as_riordan(as_sheffer(p)) == p


def test_group_inverse_order_zero():
    p = RiordanPair(Series.one(0), Series.zero(0))
    assert group_inverse(p) == p


def test_array_entry_definition():
    # s_{n,k} = (n!/k!) [z^n] d h^k, spot-checked against direct expansion
    z = Series.variable(6)
    p = RiordanPair((1 + z).reciprocal(), z * (1 + z))
    tri = array_coeffs(p, 6)
    for n in range(7):
        for k in range(n + 1):
            direct = (p.first * p.second ** k)[n]
            assert tri.entry(n, k) == Fraction(factorial(n), factorial(k)) * \
                direct.as_rational()


def _stirling2_rows(nmax):
    rows = [[Fraction(1)]]
    for n in range(1, nmax + 1):
        prev = rows[-1]
        row = [Fraction(0)] * (n + 1)
        for k in range(1, n + 1):
            row[k] = prev[k - 1] + (k * prev[k] if k < n else 0)
        rows.append(row)
    return rows


def test_touchard_is_stirling():
    pair = catalog("touchard", 8)
    z = Series.variable(8)
    inv = as_riordan(pair)
    assert inv.first == Series.one(8)
    assert inv.second == z.exp() - 1
    tri = array_coeffs(pair, 8)
    ref = _stirling2_rows(8)
    for n in range(9):
        for k in range(n + 1):
            assert tri.entry(n, k) == ref[n][k]


def test_hermite_rows_satisfy_recurrence():
    # He_{n+1}(t) = t He_n(t) - n He_{n-1}(t)
    tri = array_coeffs(catalog("hermite", 9), 8)
    he = [[Fraction(1)], [Fraction(0), Fraction(1)]]
    for n in range(1, 8):
        nxt = [Fraction(0)] + he[n]
        for j, c in enumerate(he[n - 1]):
            nxt[j] -= n * c
        he.append(nxt)
    for n in range(9):
        for k in range(n + 1):
            assert tri.entry(n, k) == he[n][k]


def test_laguerre_rows_closed_form():
    # row n is n! L_n(-t): entries C(n,k) n!/k!
    tri = array_coeffs(catalog("laguerre", 9), 8)
    for n in range(9):
        for k in range(n + 1):
            want = binomial(n, k) * Fraction(factorial(n), factorial(k))
            assert tri.entry(n, k) == want


def test_abel_rows():
    # A_n(t) = t (t - n)^(n-1)
    tri = array_coeffs(catalog("abel", 9), 8)
    assert tri.entry(0, 0) == 1
    for n in range(1, 9):
        want = [Fraction(0)] * (n + 1)
        for j in range(n):
            want[j + 1] = binomial(n - 1, j) * Fraction((-n) ** (n - 1 - j))
        assert tri.row_poly(n) == want


@pytest.mark.parametrize("name", ["touchard", "hermite", "laguerre", "abel"])
def test_ladder_actions(name):
    pair = catalog(name, 8)
    tri = array_coeffs(pair, 6)
    for n in range(6):
        sn, sn1 = tri.row_poly(n), tri.row_poly(n + 1)
        low = ladder_apply(pair, "lowering", sn1)
        want = [(n + 1) * c for c in sn]
        while want and want[-1].is_zero():
            want.pop()
        assert low == want
        up = ladder_apply(pair, "raising", sn)
        want = list(sn1)
        while want and want[-1].is_zero():
            want.pop()
        assert up == want


def test_ladder_guards():
    pair = catalog("touchard", 8)
    with pytest.raises(ValueError):
        ladder_apply(as_riordan(pair), "lowering", [SPoly.const(1)])
    with pytest.raises(ValueError):
        ladder_apply(pair, "sideways", [SPoly.const(1)])
    with pytest.raises(ValueError):
        # polynomial too long for the carried truncation order
        ladder_apply(pair, "raising", [SPoly.const(1)] * 12)


def test_catalog_unknown_name():
    with pytest.raises(ValueError):
        catalog("chebyshev", 6)


def test_ordinary_pascal():
    z = Series.variable(8)
    d = (1 - z).reciprocal()
    h = z * d
    tri = ordinary_array_coeffs(d, h, 8)
    for n in range(9):
        for k in range(n + 1):
            assert tri.entry(n, k) == binomial(n, k)


def test_apply_to_egf_gives_bell_numbers():
    bell = [Fraction(1)]
    for n in range(8):
        bell.append(sum(binomial(n, k) * bell[k] for k in range(n + 1)))
    z = Series.variable(8)
    out = apply_to_egf(catalog("touchard", 8), z.exp())
    for n in range(9):
        assert out[n] * factorial(n) == bell[n]


def test_triangle_serialization():
    tri = array_coeffs(identity_pair(3), 3)
    assert tri.entry(2, 2) == 1 and tri.entry(2, 0) == 0
    assert tri.entry(1, 3) == 0  # outside the triangle
    assert Triangle.from_json(tri.to_json()) == tri
    assert tri.to_csv() == "1\n0,1\n0,0,1\n0,0,0,1\n"


def test_egf_triangle_needs_polynomial_rows():
    bad = BivariateEGF([(SPoly.const(1),),
                        (SPoly(), SPoly(), SPoly.const(1))], 1)
    with pytest.raises(ValueError):
        bad.to_triangle()


def test_eval_s_on_symbolic_pair():
    s = SPoly.s()
    p = RiordanPair(Series((1, s), 3), Series((0, 1, s * s), 3))
    q = p.eval_s(Fraction(1, 2))
    assert q.first[1] == Fraction(1, 2)
    assert q.second[2] == Fraction(1, 4)
