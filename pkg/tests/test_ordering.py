"""Ordered powers and exponentials: closed routes against the rewriting
oracle, plus the adjoint symmetry and the Sheffer exponential identity."""

from fractions import Fraction

import pytest

from bosonorder.ordering import (OperatorSeries, SingleAnnihilatorWord,
                                 SymbolSeries, blasiak_identity_check,
                                 exp_number_closed_form, exp_word_closed_form,
                                 laguerre_power, oracle_exponential,
                                 power_normal_form, power_symbol,
                                 s_ordered_symbol, weyl_power_aaa)
from bosonorder.riordan import as_riordan, catalog
from bosonorder.scalars import SPoly
from bosonorder.weyl import (ClassicalPoly, NormalForm, anti_normal_order,
                             normal_order, s_quantize)

S = SPoly.s()

ALL_SMALL_WORDS = [SingleAnnihilatorWord(L, t - L)
                   for t in range(1, 4) for L in range(t + 1)]


def test_word_validation_and_parameters():
    w = SingleAnnihilatorWord(2, 1)
    assert w.e == 2
    assert str(w.word()) == "a† a† a a†"
    p = w.two_point_params(S)
    assert (p.A, p.B, p.r, p.rp) == (2, 1, -2, 1)
    with pytest.raises(ValueError):
        SingleAnnihilatorWord(0, 0)
    with pytest.raises(ValueError):
        SingleAnnihilatorWord(-1, 2)


def test_oracle_frozen_square():
    # (ad a ad)^2 = ad^4 a^2 + 4 ad^3 a + 2 ad^2
    ser = oracle_exponential(SingleAnnihilatorWord(1, 1), 2)
    assert ser[2].scale(2) == NormalForm({(4, 2): 1, (3, 1): 4, (2, 0): 2})
    assert ser[0] == NormalForm.unit()


@pytest.mark.parametrize("w", ALL_SMALL_WORDS,
                         ids=[f"L{w.L}R{w.R}" for w in ALL_SMALL_WORDS])
def test_symbol_series_quantizes_to_oracle(w):
    got = s_ordered_symbol(w, S, 4).quantize()
    assert got == oracle_exponential(w, 4)


@pytest.mark.parametrize("w", ALL_SMALL_WORDS,
                         ids=[f"L{w.L}R{w.R}" for w in ALL_SMALL_WORDS])
def test_power_theorem_both_variants(w):
    for n in range(5):
        assert power_normal_form(w, n, "normal") == \
            normal_order(w.word().power(n))
        anti = power_normal_form(w, n, "antinormal")
        assert anti.to_normal() == normal_order(w.word().power(n))


@pytest.mark.parametrize("w", ALL_SMALL_WORDS,
                         ids=[f"L{w.L}R{w.R}" for w in ALL_SMALL_WORDS])
def test_adjoint_symmetry_of_power_tables(w):
    # anti-normal table of (L,R) at (k, en+k) carries (-1)^(n-k) times the
    # normal table of the reversed word (R,L) at (en+k, k)
    rev = SingleAnnihilatorWord(w.R, w.L)
    e = w.e
    for n in range(5):
        anti = power_normal_form(w, n, "antinormal")
        norm = power_normal_form(rev, n, "normal")
        for k in range(n + 1):
            assert anti.coeff(k, e * n + k) == \
                (-1) ** (n - k) * norm.coeff(e * n + k, k)


def test_laguerre_power_closed_form():
    w = SingleAnnihilatorWord(1, 1)
    for n in range(6):
        assert laguerre_power(n, "normal") == normal_order(w.word().power(n))
        assert laguerre_power(n, "antinormal") == \
            anti_normal_order(w.word().power(n))


def test_power_symbol_reduces_to_transform():
    w = SingleAnnihilatorWord(2, 0)
    assert power_symbol(w, 0, S) == ClassicalPoly({(0, 0): 1})
    for n in range(4):
        sym = power_symbol(w, n, S)
        assert s_quantize(sym, S) == normal_order(w.word().power(n))


def test_exp_word_closed_forms_match_oracle():
    w = SingleAnnihilatorWord(2, 1)
    normal = exp_word_closed_form(w, "normal", 4)
    assert normal.s == -1
    assert normal.quantize() == oracle_exponential(w, 4)
    anti = exp_word_closed_form(w, "antinormal", 4)
    assert anti.s == 1
    assert anti.quantize() == oracle_exponential(w, 4)
    with pytest.raises(ValueError):
        exp_word_closed_form(w, "weyl", 4)


def test_exp_number_closed_form_first_orders():
    ser = exp_number_closed_form(S, 4)
    assert ser[0] == ClassicalPoly({(0, 0): 1})
    # lambda coefficient: x* x - (1 + s)/2
    assert ser[1] == ClassicalPoly({(1, 1): 1,
                                    (0, 0): Fraction(-1, 2) * (1 + S)})
    assert ser.quantize() == oracle_exponential(SingleAnnihilatorWord(1, 0), 4)


def test_weyl_power_aaa_small():
    w = SingleAnnihilatorWord(1, 1)
    for n in range(5):
        assert s_quantize(weyl_power_aaa(n), 0) == \
            normal_order(w.word().power(n))
    # parity structure: only k = n, n-2, ... appear
    sym = weyl_power_aaa(4)
    assert sym.coeff(7, 3).is_zero()
    assert sym.coeff(8, 4) == 1


def test_blasiak_identity_small():
    for name in ("touchard", "hermite"):
        out = blasiak_identity_check(catalog(name, 9), 4, 4)
        assert out["equal"], out["mismatches"]


def test_blasiak_guards():
    pair = catalog("laguerre", 5)
    with pytest.raises(ValueError):
        blasiak_identity_check(pair, 4, 4)  # order too small
    with pytest.raises(ValueError):
        blasiak_identity_check(as_riordan(catalog("laguerre", 9)), 4, 4)


def test_series_container_guards():
    with pytest.raises(ValueError):
        OperatorSeries([NormalForm.unit()], 3)
    with pytest.raises(ValueError):
        SymbolSeries([ClassicalPoly()], 2, 0)
    ser = s_ordered_symbol(SingleAnnihilatorWord(1, 0), 0, 2)
    with pytest.raises(AttributeError):
        ser.order = 5
