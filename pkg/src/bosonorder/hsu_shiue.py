"""Hsu-Shiue generalized Stirling numbers HS_{n,k}(A, B, r).

The three-parameter family is defined by connecting strided falling
factorials:

    (x + r | A)_n = sum_k HS_{n,k}(A, B, r) (x | B)_k

where (x | h)_n = x (x-h) (x-2h) ... (x-(n-1)h).  Specializations include
both kinds of Stirling numbers, binomial coefficients, and Lah-type and
Laguerre-type triangles.

Three independent computational routes are provided and cross-checked:

* a finite summation formula (valid for B != 0),
* the triangular recurrence
      HS_{n+1,k} = (r - A n + B k) HS_{n,k} + HS_{n,k-1},
* the exponential Riordan pair

      d(z) = (1 + A z)^(r/A)          h(z) = ((1 + A z)^(B/A) - 1)/B

  with the A -> 0 and B -> 0 limit branches taken analytically:
  d = e^(r z) when A = 0; h = (e^(B z) - 1)/B when A = 0;
  h = log(1 + A z)/A when B = 0; h = z when A = B = 0.

Duality: the inverse array of HS(A, B, r) is HS(B, A, -r); negating all
three parameters multiplies entries by (-1)^(n-k).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .scalars import SPoly, binomial, falling
from .riordan import BivariateEGF, RiordanPair, Triangle, pair_to_egf
from .series import Series


@dataclass(frozen=True)
class HSParams:
    """The parameter triple (A, B, r), stored exactly."""

    A: Fraction
    B: Fraction
    r: Fraction

    def __post_init__(self):
        object.__setattr__(self, "A", Fraction(self.A))
        object.__setattr__(self, "B", Fraction(self.B))
        object.__setattr__(self, "r", Fraction(self.r))

    def dual(self) -> "HSParams":
        """Parameters of the inverse array."""
        return HSParams(self.B, self.A, -self.r)

    def negated(self) -> "HSParams":
        return HSParams(-self.A, -self.B, -self.r)


def hs_pair(p: HSParams, N: int) -> RiordanPair:
    """The exponential Riordan pair [d, h] of HS(A, B, r), order N."""
    z = Series.variable(N)
    A, B, r = p.A, p.B, p.r
    if A == 0:
        d = (r * z).exp()
        h = ((B * z).exp() - 1) / B if B != 0 else z
    else:
        d = (1 + A * z).pow_rational(r / A)
        if B != 0:
            h = ((1 + A * z).pow_rational(B / A) - 1) / B
        else:
            h = (1 + A * z).log() / A
    return RiordanPair(d, h, "riordan")


def hs_coeff_sum(p: HSParams, n: int, k: int) -> Fraction:
    """HS_{n,k} by the finite summation formula (requires B != 0):

        (1/(B^k k!)) sum_{j=0}^{k} (-1)^(k-j) C(k,j) (B j + r | A)_n
    """
    if p.B == 0:
        raise ValueError("summation formula requires B != 0")
    if k < 0 or n < 0:
        raise ValueError("indices must be nonnegative")
    if k > n:
        return Fraction(0)
    acc = Fraction(0)
    for j in range(k + 1):
        term = binomial(k, j) * falling(p.B * j + p.r, n, p.A)
        acc += term if (k - j) % 2 == 0 else -term
    return acc / (p.B ** k * factorial(k))


def hs_triangle_rec(p: HSParams, N: int) -> Triangle:
    """The triangle through row N by the recurrence, apex 1."""
    rows = [[Fraction(1)]]
    for n in range(N):
        prev = rows[-1]
        row = []
        for k in range(n + 2):
            val = Fraction(0)
            if k <= n:
                val += (p.r - p.A * n + p.B * k) * prev[k]
            if 1 <= k:
                val += prev[k - 1]
            row.append(val)
        rows.append(row)
    return Triangle(N, rows)


def hs_egf(p: HSParams, N: int) -> BivariateEGF:
    """The bivariate EGF  d(z) exp(t h(z))  expanded through z^N."""
    return pair_to_egf(hs_pair(p, N), N)


def hs_pde_residual(p: HSParams, N: int) -> BivariateEGF:
    """Residual of the characterizing PDE, exact through order N-1.

    The EGF F(t, z) of HS(A, B, r) satisfies
        (-A z - 1) dF/dz + B t dF/dt + (r + t) F = 0.
    """
    egf = hs_egf(p, N)
    dz = egf.dz()
    n1 = N - 1
    res = dz.mul_z().scale(-p.A) - dz
    res = res + egf.dt().mul_t().truncate(n1).scale(p.B)
    res = res + egf.truncate(n1).scale(p.r) + egf.mul_t().truncate(n1)
    return res
