"""Exact truncated power series: arithmetic, exp/log, and reversion.

Everything is a Fraction (or a polynomial in the ordering symbol s), so
printed coefficients are identities, not approximations.
"""

from fractions import Fraction

from bosonorder import RiordanPair, Series

N = 8
z = Series.variable(N)

print("== basic arithmetic ==")
print("exp(z)            :", z.exp())
print("log(1+z)          :", (1 + z).log())
print("sqrt(1+z)         :", (1 + z).pow_rational(Fraction(1, 2)))
print("1/(1-z)           :", (1 - z).reciprocal())

print()
print("== compositional inverse ==")
f = z.exp() - 1
fbar = f.revert()
print("f    = e^z - 1    :", f)
print("fbar = log(1+z)   :", fbar)
print("f(fbar)           :", f.compose(fbar))

print()
print("== a proper Riordan pair and its group inverse ==")
pair = RiordanPair(Series.one(N), f)        # [1, e^z - 1]
from bosonorder import group_inverse, group_product  # noqa: E402
inv = group_inverse(pair)
print("inverse second    :", inv.second)
print("product with inverse is the identity pair:",
      group_product(pair, inv).second)
