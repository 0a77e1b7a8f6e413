"""Generalized Stirling triangles: the three computation routes, the
parameter symmetries, and the characterizing PDE."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from bosonorder.hsu_shiue import (HSParams, hs_coeff_sum, hs_egf, hs_pair,
                                  hs_pde_residual, hs_triangle_rec)
from bosonorder.riordan import group_inverse
from bosonorder.scalars import binomial, falling

param_st = st.fractions(min_value=-5, max_value=5, max_denominator=3)
nonzero_st = param_st.filter(lambda q: q != 0)


def test_stirling_triangle_frozen():
    tri = hs_triangle_rec(HSParams(0, 1, 0), 5)
    assert tri.row_poly(4) == [0, 1, 7, 6, 1]
    assert tri.row_poly(5) == [0, 1, 15, 25, 10, 1]


def test_shifted_stirling_triangle():
    # HS(0, 1, 1)_{n,k} = S(n+1, k+1)
    big = hs_triangle_rec(HSParams(0, 1, 0), 7)
    tri = hs_triangle_rec(HSParams(0, 1, 1), 6)
    for n in range(7):
        for k in range(n + 1):
            assert tri.entry(n, k) == big.entry(n + 1, k + 1)


def test_signed_laguerre_triangle_frozen():
    # HS(-1, 1, 1)_{n,k} = C(n,k) n!/k!
    tri = hs_triangle_rec(HSParams(-1, 1, 1), 4)
    assert tri.row_poly(4) == [24, 96, 72, 16, 1]


def test_spot_row_with_all_parameters():
    tri = hs_triangle_rec(HSParams(1, 1, 2), 3)
    assert tri.row_poly(2) == [2, 4, 1]
    assert tri.row_poly(3) == [0, 6, 6, 1]


@given(nonzero_st, param_st)
@settings(max_examples=25)
def test_equal_parameters_collapse_to_binomials(b, r):
    # HS(B, B, r)_{n,k} = C(n,k) (r | B)_{n-k}
    tri = hs_triangle_rec(HSParams(b, b, r), 6)
    for n in range(7):
        for k in range(n + 1):
            assert tri.entry(n, k) == binomial(n, k) * falling(r, n - k, b)


@given(param_st, nonzero_st, param_st)
@settings(max_examples=20)
def test_summation_matches_recurrence(a, b, r):
    p = HSParams(a, b, r)
    tri = hs_triangle_rec(p, 6)
    for n in range(7):
        for k in range(n + 1):
            assert tri.entry(n, k) == hs_coeff_sum(p, n, k)


@given(param_st, param_st, param_st)
@settings(max_examples=20)
def test_egf_matches_recurrence(a, b, r):
    # covers the B = 0 and A = 0 limit branches of the pair as well
    p = HSParams(a, b, r)
    tri = hs_triangle_rec(p, 6)
    egf_tri = hs_egf(p, 6).to_triangle()
    for n in range(7):
        for k in range(n + 1):
            assert tri.entry(n, k) == egf_tri.entry(n, k)


def test_summation_requires_nonzero_b():
    with pytest.raises(ValueError):
        hs_coeff_sum(HSParams(1, 0, 2), 3, 1)


@given(param_st, param_st, param_st)
@settings(max_examples=20)
def test_duality_is_group_inversion(a, b, r):
    p = HSParams(a, b, r)
    assert group_inverse(hs_pair(p, 7)) == hs_pair(p.dual(), 7)
    assert p.dual().dual() == p


@given(param_st, param_st, param_st)
@settings(max_examples=20)
def test_negation_symmetry(a, b, r):
    p = HSParams(a, b, r)
    tri = hs_triangle_rec(p, 6)
    neg = hs_triangle_rec(p.negated(), 6)
    for n in range(7):
        for k in range(n + 1):
            assert neg.entry(n, k) == (-1) ** (n - k) * tri.entry(n, k)


@given(param_st, param_st, param_st)
@settings(max_examples=15)
def test_pde_residual_vanishes(a, b, r):
    assert hs_pde_residual(HSParams(a, b, r), 7).is_zero()


def test_params_coercion_and_duality_values():
    p = HSParams(Fraction(1, 2), 2, -1)
    assert p.dual() == HSParams(2, Fraction(1, 2), 1)
    assert p.negated() == HSParams(Fraction(-1, 2), -2, 1)
