"""The three-parameter generalized Stirling triangle HS(A, B, r).

One triangle, three independent computation routes -- a finite double sum,
a two-term recurrence, and a bivariate EGF -- plus a duality that is
literally Riordan group inversion and a characterizing first-order PDE.
"""

from fractions import Fraction

from bosonorder import (HSParams, group_inverse, hs_coeff_sum, hs_egf,
                        hs_pair, hs_pde_residual, hs_triangle_rec)

p = HSParams(Fraction(1, 2), 2, -1)
N = 5

print(f"== HS(A={p.A}, B={p.B}, r={p.r}) ==")
tri = hs_triangle_rec(p, N)
for n in range(N + 1):
    print(f"  row {n}:", [str(c) for c in tri.row_poly(n)])

print()
print("summation route matches:",
      all(tri.entry(n, k) == hs_coeff_sum(p, n, k)
          for n in range(N + 1) for k in range(n + 1)))
print("EGF route matches      :", hs_egf(p, N).to_triangle() == tri)

print()
print("== duality: the inverse array is HS(B, A, -r) ==")
print("group_inverse(pair) == pair of dual params:",
      group_inverse(hs_pair(p, N)) == hs_pair(p.dual(), N))

print()
print("== the characterizing PDE ==")
print("residual of [(-Az-1) d/dz + Bt d/dt + (r+t)] F:",
      "0" if hs_pde_residual(p, N).is_zero() else "NONZERO")

print()
print("== classical specializations ==")
print("HS(0,1,0) row 5 (Stirling subset):",
      [str(c) for c in hs_triangle_rec(HSParams(0, 1, 0), 5).row_poly(5)])
print("HS(-1,1,1) row 3 (Laguerre n! L_n):",
      [str(c) for c in hs_triangle_rec(HSParams(-1, 1, 1), 3).row_poly(3)])
