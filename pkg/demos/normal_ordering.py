"""Brute-force normal ordering and the s-ordering conversion calculus.

Sign convention used everywhere in this package:

    s = -1  normal order      (all creators left)
    s =  0  Weyl / symmetric order
    s = +1  anti-normal order (all annihilators left)

Leaving s symbolic keeps the whole one-parameter family in one object.
"""

from bosonorder import (ClassicalPoly, SPoly, Word, anti_normal_order,
                        convert_order, normal_order, s_quantize, s_transform,
                        weyl_quantize_monomial)

s = SPoly.s()

print("== rewriting a a† a a† to canonical forms ==")
w = Word("acac")
print("normal      :", normal_order(w))
print("anti-normal :", anti_normal_order(w))

print()
print("== the same monomial under different orderings ==")
f = ClassicalPoly.monomial(2, 1)      # x*^2 x
print("symbol                 :", f)
print("quantized at s         :", s_quantize(f, s))
print("quantized normally     :", s_quantize(f, "normal"))
print("quantized Weyl         :", s_quantize(f, "weyl"))
print("Weyl by shuffle average:", weyl_quantize_monomial(2, 1))

print()
print("== symbols of a fixed operator ==")
op = normal_order(Word("cac"))        # ad^2 a + ad
print("operator               :", op)
print("s-ordered symbol       :", s_transform(op, s))

print()
print("== conversion between orderings is a heat flow ==")
g = s_transform(op, "weyl")
print("Weyl symbol            :", g)
print("back to normal symbol  :", convert_order(g, 0, -1))
print("(matches s_transform at s = -1:", s_transform(op, -1), ")")
