"""The two-point generalization of the Hsu-Shiue family.

Where HS(A, B, r) has a Sheffer pair built from a single binomial factor
(1 + B D), the two-point family splices two such factors at reference
points weighted by (1+s)/2 and (1-s)/2, so that the single parameter s
interpolates continuously between a pair of ordinary Hsu-Shiue families.

With the abbreviations

    P = 1 + ((1-s)/2) B D          M = 1 - ((1+s)/2) B D

the defining series of T(A, B, r, r'; s) in Sheffer convention are

    g(D) = ((1+s)/2) (P/M)^(-r/B) + ((1-s)/2) (M/P)^(r'/B)
    f(D) = (M^(-A/B) - P^(-A/B)) / A

with every limit branch taken analytically:

    A = 0:        f = (log P - log M)/B
    B = 0:        g = ((1+s)/2) e^(-r D) + ((1-s)/2) e^(-r' D)
                  f = (e^(A(1+s)D/2) - e^(-A(1-s)D/2)) / A
    A = B = 0:    f = D

At the endpoints the family collapses onto the one-point one:

    T(A, B, r, r'; -1) = HS(-A, B, r')        T(A, B, r, r'; +1) = HS(A, -B, r)

The bivariate EGF comes from the group inverse of [g, f]: the outer series
is reverted (order-by-order solve) -- no radicals needed at any e.  For the
low excesses e = 1 and e = 2 the reverted pair also has radical/algebraic
closed forms, kept here as independent cross-checks of the reversion path.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .scalars import SPoly, as_s
from .series import Series
from .riordan import SHEFFER, RIORDAN, BivariateEGF, RiordanPair, as_riordan, pair_to_egf


@dataclass(frozen=True)
class TwoPointParams:
    """Parameters (A, B, r, r') plus the ordering parameter s.

    A, B, r, rp are exact rationals; s is an SPoly and defaults to the
    symbol s itself (numeric orderings are evaluations).
    """

    A: Fraction
    B: Fraction
    r: Fraction
    rp: Fraction
    s: SPoly = field(default_factory=SPoly.s)

    def __post_init__(self):
        object.__setattr__(self, "A", Fraction(self.A))
        object.__setattr__(self, "B", Fraction(self.B))
        object.__setattr__(self, "r", Fraction(self.r))
        object.__setattr__(self, "rp", Fraction(self.rp))
        object.__setattr__(self, "s", as_s(self.s))


def two_point_pair(p: TwoPointParams, N: int) -> RiordanPair:
    """The Sheffer-convention pair [g, f] of the two-point family, order N."""
    s = p.s
    wp = (1 + s) / 2
    wm = (1 - s) / 2
    z = Series.variable(N)
    A, B, r, rp = p.A, p.B, p.r, p.rp

    if B != 0:
        pfac = 1 + (wm * B) * z
        mfac = 1 - (wp * B) * z
        g = wp * (pfac / mfac).pow_rational(-r / B) \
            + wm * (mfac / pfac).pow_rational(rp / B)
        if A != 0:
            f = (mfac.pow_rational(-A / B) - pfac.pow_rational(-A / B)) / A
        else:
            f = (pfac.log() - mfac.log()) / B
    else:
        g = wp * ((-r) * z).exp() + wm * ((-rp) * z).exp()
        if A != 0:
            f = (((A * wp) * z).exp() - ((-A * wm) * z).exp()) / A
        else:
            f = z
    pair = RiordanPair(g, f, SHEFFER)
    # Defensive: the constructor has already confirmed g = 1 + O(D) and
    # f = D + O(D^2), which every branch above must produce.
    return pair


def two_point_egf(p: TwoPointParams, N: int) -> BivariateEGF:
    """The bivariate EGF gbar(z) exp(t fbar(z)), with [gbar, fbar] the group
    inverse of [g, f]; fbar comes from series reversion."""
    return pair_to_egf(as_riordan(two_point_pair(p, N)), N)


def _sqrt_kernel(s: SPoly, N: int):
    """The radical kernel shared by every e = 1 closed form:
    Q = 1 + 2 s z + z^2 and its square root with constant term 1."""
    q = Series((1, 2 * s, 1), N)
    return q, q.pow_rational(Fraction(1, 2))


def closed_form_e1(L: int, R: int, s, N: int) -> RiordanPair:
    """The radical closed form of the inverted pair [gbar, fbar] for excess
    e = 1, i.e. (A, B, r, r') = (1, 1, -L, R) with L + R = 2.

    With Q = 1 + 2 s z + z^2:

        fbar = 2 z / (1 + s z + sqrt(Q))
        gbar = (1+s) / (Q + (z+s) sqrt(Q))     for (L, R) = (2, 0)
        gbar = Q^(-1/2)                        for (L, R) = (1, 1)
        gbar = (1-s) / (Q - (z+s) sqrt(Q))     for (L, R) = (0, 2)

    The (2,0) and (0,2) forms carry a factor that cancels only after
    expansion; they are computed division-free by rationalizing with the
    conjugate, which needs an exact polynomial division by (1 -+ s).  At
    the numeric points s = +1 (for (2,0)) and s = -1 (for (0,2)) the
    printed forms are genuine 0/0 limits: keep s symbolic and evaluate.
    """
    if L < 0 or R < 0 or L + R != 2:
        raise ValueError("closed_form_e1 requires L, R >= 0 with L + R = 2")
    s = as_s(s)
    q, sq = _sqrt_kernel(s, N)
    z = Series.variable(N)
    fbar = (2 * z) / (Series((1, s), N) + sq)
    zs = Series((s, 1), N)  # z + s
    if (L, R) == (1, 1):
        gbar = q.pow_rational(Fraction(-1, 2))
    elif (L, R) == (2, 0):
        divisor = SPoly.const(1) - s
        if divisor.is_zero():
            raise ValueError("(2,0) closed form needs a limit at s = 1; "
                             "use symbolic s and evaluate afterwards")
        gbar = (q - zs * sq).exact_scalar_div(divisor) / q
    else:  # (0, 2)
        divisor = SPoly.const(1) + s
        if divisor.is_zero():
            raise ValueError("(0,2) closed form needs a limit at s = -1; "
                             "use symbolic s and evaluate afterwards")
        gbar = (q + zs * sq).exact_scalar_div(divisor) / q
    return RiordanPair(gbar, fbar, RIORDAN)


def quartic_residual(L: int, R: int, s, N: int) -> Series:
    """Residual of the algebraic quartic satisfied by fbar at excess e = 2,
    i.e. (A, B) = (2, 1) with L + R = 3; identically zero iff fbar is a
    root.  In terms of w = fbar(z):

        (1-s^2)^2 z w^4 + 8 s (1-s^2) z w^3 - 8[(1-3s^2) z - s] w^2
            - 16 (1 + 2 s z) w + 16 z  =  0

    At s = +-1 the two leading coefficients vanish and the constraint
    degenerates to a quadratic.
    """
    if L < 0 or R < 0 or L + R != 3:
        raise ValueError("quartic_residual requires L, R >= 0 with L + R = 3")
    s = as_s(s)
    p = TwoPointParams(2, 1, -L, R, s)
    w = as_riordan(two_point_pair(p, N)).second
    z = Series.variable(N)
    one_m_s2 = SPoly.const(1) - s * s
    c4 = one_m_s2 * one_m_s2
    c3 = 8 * s * one_m_s2
    w2 = w * w
    w3 = w2 * w
    w4 = w2 * w2
    lin2 = Series((-s, SPoly.const(1) - 3 * s * s), N)  # (1-3s^2) z - s
    lin1 = Series((1, 2 * s), N)                        # 1 + 2 s z
    return (c4 * (z * w4) + c3 * (z * w3) - 8 * (lin2 * w2)
            - 16 * (lin1 * w) + 16 * z)


def quartic_leading_coeffs(s) -> tuple:
    """The two leading quartic coefficients ((1-s^2)^2, 8 s (1-s^2)); both
    vanish identically at s = +-1, where the quartic degenerates."""
    s = as_s(s)
    one_m_s2 = SPoly.const(1) - s * s
    return (one_m_s2 * one_m_s2, 8 * s * one_m_s2)
