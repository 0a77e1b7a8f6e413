"""Truncated power series: ring structure, composition, reversion, exp/log."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from bosonorder.scalars import SPoly
from bosonorder.series import BiSeries, Series

N = 8

coeff_st = st.fractions(min_value=-6, max_value=6, max_denominator=4)
series_st = st.lists(coeff_st, max_size=N + 1).map(lambda cs: Series(cs, N))
# composable: zero constant term
inner_st = st.lists(coeff_st, max_size=N).map(lambda cs: Series([0] + cs, N))
# revertible: f = z + O(z^2) after the unit-linear normalization
monic_inner_st = st.lists(coeff_st, max_size=N - 1).map(
    lambda cs: Series([0, 1] + cs, N))


def test_constructors_and_indexing():
    z = Series.variable(4)
    assert z[1] == 1 and z[0] == 0 and z[4] == 0
    with pytest.raises(IndexError):
        z[5]
    assert Series.const(Fraction(2, 3), 2)[0] == Fraction(2, 3)
    assert Series.zero(3).is_zero()
    with pytest.raises(ValueError):
        Series((), -1)


def test_exp_log_frozen_coefficients():
    z = Series.variable(6)
    e = z.exp()
    assert [e[n] for n in range(5)] == [1, 1, Fraction(1, 2), Fraction(1, 6),
                                        Fraction(1, 24)]
    lg = (1 + z).log()
    assert [lg[n] for n in range(5)] == [0, 1, Fraction(-1, 2),
                                        Fraction(1, 3), Fraction(-1, 4)]


def test_sqrt_frozen_coefficients():
    z = Series.variable(4)
    r = (1 + z).pow_rational(Fraction(1, 2))
    assert [r[n] for n in range(5)] == [1, Fraction(1, 2), Fraction(-1, 8),
                                        Fraction(1, 16), Fraction(-5, 128)]
    assert (r * r - (1 + z)).is_zero()


def test_geometric_reciprocal():
    z = Series.variable(6)
    g = (1 - z).reciprocal()
    assert all(g[n] == 1 for n in range(7))
    with pytest.raises(ValueError):
        z.reciprocal()


def test_reversion_of_exp_minus_one():
    z = Series.variable(6)
    f = z.exp() - 1
    assert f.revert().agrees((1 + z).log(), 6)


def test_reversion_guards():
    z = Series.variable(4)
    with pytest.raises(ValueError):
        (1 + z).revert()  # nonzero constant
    with pytest.raises(ValueError):
        (z * z).revert()  # zero linear coefficient
    with pytest.raises(ValueError):
        Series.zero(0).revert()


def test_compose_requires_zero_constant():
    z = Series.variable(4)
    with pytest.raises(ValueError):
        z.compose(1 + z)


def test_valuation_and_truncate():
    z = Series.variable(5)
    assert (z * z * 3).valuation() == 2
    assert Series.zero(5).valuation() == 6
    t = (1 + z).truncate(2)
    assert t.order == 2


@given(series_st, series_st, series_st)
def test_series_ring_axioms(f, g, h):
    assert f + g == g + f
    assert f * g == g * f
    assert (f + g) * h == f * h + g * h
    assert (f * g) * h == f * (g * h)


@given(series_st)
def test_reciprocal_inverts(f):
    if f[0].is_zero() or not f[0].is_rational():
        return
    assert (f * f.reciprocal()).agrees(Series.one(N), N)


@settings(max_examples=30)
@given(series_st, inner_st, inner_st)
def test_composition_is_associative(f, g, h):
    assert f.compose(g).compose(h).agrees(f.compose(g.compose(h)), N)


@given(monic_inner_st)
def test_reversion_round_trip(f):
    fbar = f.revert()
    z = Series.variable(N)
    assert f.compose(fbar).agrees(z, N)
    assert fbar.compose(f).agrees(z, N)


@given(inner_st)
def test_log_inverts_exp(u):
    assert u.exp().log().agrees(u, N)


@given(st.fractions(min_value=-5, max_value=5, max_denominator=3),
       st.fractions(min_value=-5, max_value=5, max_denominator=3), inner_st)
def test_rational_powers_add(a, b, u):
    f = 1 + u
    lhs = f.pow_rational(a) * f.pow_rational(b)
    assert lhs.agrees(f.pow_rational(a + b), N)


def test_pow_rational_needs_unit_constant():
    z = Series.variable(3)
    with pytest.raises(ValueError):
        (2 + z).pow_rational(Fraction(1, 2))


def test_json_round_trip():
    s = SPoly.s()
    f = Series((1, s, 2 * s * s - 1), 4)
    assert Series.from_json(f.to_json()) == f


# -- bivariate boxes ------------------------------------------------------

def test_biseries_product_and_slices():
    x = BiSeries.var_x(3, 3)
    u = BiSeries.var_u(3, 3)
    w = (x + u) * (x - u)
    assert w.coeff(2, 0) == 1
    assert w.coeff(0, 2) == -1
    assert w.coeff(1, 1) == 0
    sl = (x * u).x_slice(1)
    assert sl[1] == 1 and sl[0] == 0


def test_biseries_exp_splits():
    x = BiSeries.var_x(4, 4)
    u = BiSeries.var_u(4, 4)
    assert (x + u).exp() == x.exp() * u.exp()


def test_biseries_compose_series():
    # g(w) for univariate g must reduce to ordinary composition on the
    # diagonal-free slice u = 0.
    g = (1 + Series.variable(8)).log()
    w = BiSeries.var_x(4, 4) + BiSeries.var_u(4, 4)
    out = w.compose_series(g)
    base = g  # log(1 + x)
    for n in range(5):
        assert out.coeff(n, 0) == base[n]


def test_biseries_reciprocal():
    one = BiSeries.const(1, 3, 3)
    w = one + BiSeries.var_x(3, 3) * 2 + BiSeries.var_u(3, 3)
    assert w * w.reciprocal() == one
