"""The two-point generalized Stirling family and its radical closed forms."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from bosonorder.hsu_shiue import HSParams, hs_pair
from bosonorder.riordan import as_riordan
from bosonorder.scalars import SPoly
from bosonorder.series import Series
from bosonorder.two_point import (TwoPointParams, closed_form_e1,
                                  quartic_leading_coeffs, quartic_residual,
                                  two_point_egf, two_point_pair)

S = SPoly.s()

param_st = st.fractions(min_value=-4, max_value=4, max_denominator=3)
nonzero_st = param_st.filter(lambda q: q != 0)


def test_params_coercion():
    p = TwoPointParams(1, 2, -1, 3, "weyl")
    assert p.s == 0
    assert TwoPointParams(0, 1, 0, 1).s == S  # symbolic by default


def test_pair_shape_all_branches():
    for A, B in ((2, 1), (0, 1), (2, 0), (0, 0)):
        p = TwoPointParams(A, B, -1, 2, S)
        pair = two_point_pair(p, 6)
        assert pair.convention == "sheffer"
        assert pair.first[0] == 1
        assert pair.second[0] == 0 and pair.second[1] == 1


def test_weyl_point_f_frozen():
    # at s = 0, e = 1 the lowering series is 4D/(4 - D^2) = sum D^(2k+1)/4^k
    pair = two_point_pair(TwoPointParams(1, 1, -1, 1, 0), 7)
    assert pair.second == Series(
        (0, 1, 0, Fraction(1, 4), 0, Fraction(1, 16), 0, Fraction(1, 64)), 7)


def test_endpoint_reduction_fixed_example():
    # s = -1 collapses to HS(-A, B, r'); s = +1 to HS(A, -B, r)
    A, B, r, rp = Fraction(2), Fraction(1), Fraction(-1), Fraction(3)
    minus = as_riordan(two_point_pair(TwoPointParams(A, B, r, rp, -1), 7))
    assert minus == hs_pair(HSParams(-A, B, rp), 7)
    plus = as_riordan(two_point_pair(TwoPointParams(A, B, r, rp, 1), 7))
    assert plus == hs_pair(HSParams(A, -B, r), 7)


@given(param_st, param_st, param_st, param_st)
@settings(max_examples=15, deadline=None)
def test_endpoint_reduction_random(a, b, r, rp):
    minus = as_riordan(two_point_pair(TwoPointParams(a, b, r, rp, -1), 5))
    assert minus == hs_pair(HSParams(-a, b, rp), 5)
    plus = as_riordan(two_point_pair(TwoPointParams(a, b, r, rp, 1), 5))
    assert plus == hs_pair(HSParams(a, -b, r), 5)


def test_interpolation_in_s_row_one():
    # the row-1 constant interpolates between the two one-point anchors:
    # r' of HS(-A, B, r') at s = -1 and r of HS(A, -B, r) at s = +1
    egf = two_point_egf(TwoPointParams(1, 1, -2, 3, S), 3)
    const = egf.coeff(1, 0)
    assert const.eval(-1) == 3
    assert const.eval(1) == -2
    assert egf.coeff(1, 1) == 1


@pytest.mark.parametrize("L,R", [(2, 0), (1, 1), (0, 2)])
def test_e1_closed_forms_match_inversion(L, R):
    closed = closed_form_e1(L, R, S, 8)
    inverted = as_riordan(two_point_pair(TwoPointParams(1, 1, -L, R, S), 8))
    assert closed.first == inverted.first
    assert closed.second == inverted.second


def test_e1_closed_forms_at_safe_numeric_points():
    assert closed_form_e1(2, 0, -1, 6) == as_riordan(
        two_point_pair(TwoPointParams(1, 1, -2, 0, -1), 6))
    assert closed_form_e1(0, 2, 1, 6) == as_riordan(
        two_point_pair(TwoPointParams(1, 1, 0, 2, 1), 6))


def test_e1_closed_form_degenerate_points():
    with pytest.raises(ValueError):
        closed_form_e1(2, 0, 1, 6)    # 0/0 at s = +1
    with pytest.raises(ValueError):
        closed_form_e1(0, 2, -1, 6)   # 0/0 at s = -1
    with pytest.raises(ValueError):
        closed_form_e1(3, 0, S, 6)    # excess != 1


def test_symbolic_closed_form_evaluates_to_the_limit():
    # the symbolic (2,0) form is finite at s = 1 even though the printed
    # formula is 0/0 there; it must still agree with the inverted pair
    lim = closed_form_e1(2, 0, S, 7).eval_s(1)
    direct = as_riordan(two_point_pair(TwoPointParams(1, 1, -2, 0, 1), 7))
    assert lim == direct


@pytest.mark.parametrize("L,R", [(3, 0), (2, 1), (1, 2), (0, 3)])
def test_quartic_residual_vanishes(L, R):
    assert quartic_residual(L, R, S, 7).is_zero()
    assert quartic_residual(L, R, Fraction(1, 3), 7).is_zero()


def test_quartic_degenerates_at_endpoints():
    for s in (-1, 1):
        c4, c3 = quartic_leading_coeffs(s)
        assert c4.is_zero() and c3.is_zero()
        assert quartic_residual(2, 1, s, 7).is_zero()
    c4, c3 = quartic_leading_coeffs(S)
    assert not c4.is_zero() and not c3.is_zero()


def test_quartic_requires_excess_two():
    with pytest.raises(ValueError):
        quartic_residual(1, 1, S, 6)
