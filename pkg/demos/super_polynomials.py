"""
Two alphabets and the cancellation property
===========================================

Evaluating the parameterised expansion at d = n - m and realising each
classical Schur function on a super alphabet (n ordinary variables x, m sign-
flipped variables y) gives super-symmetric polynomials.  Their defining
property: identifying any x with any y at a common value t gives a result
that does not depend on t.
"""

from fractions import Fraction

from gschur import SuperAlphabet, super_schur
from gschur.exactalg import format_poly_text
from gschur.presets import schur
from gschur.stable import super_complete_homogeneous

names = ["x1", "x2", "y1", "y2"]

# The super complete homogeneous functions interleave both alphabets with
# signs; h_1 is just the signed sum of all variables.
hs = super_complete_homogeneous(2, 2, 2)
print("h_1 =", format_poly_text(hs[1], names=names))
print("h_2 =", format_poly_text(hs[2], names=names))
print()

poly = super_schur((2, 1), schur(), SuperAlphabet(2, 2))
print("S_(2,1) on x1, x2 / y1, y2:")
print(" ", format_poly_text(poly, names=names))
print()

# Bind x1 = y1 = t for three values of t; the slices coincide.
slices = [poly.bind(0, Fraction(t)).bind(2, Fraction(t)) for t in (0, 1, -2)]
assert slices[0] == slices[1] == slices[2]
print("after x1 = y1 = t (independent of t):")
print(" ", format_poly_text(slices[0], names=names))
