"""
Factorial Schur polynomials and a family with poles
===================================================

Setting b = 0 makes each phi_i a falling product (z - a(0))...(z - a(i-1)),
and the engine produces factorial Schur polynomials.  A two-parameter
Jacobi-type family shows the other extreme: its closed-form coefficients can
blow up at small indices, and construction refuses those parameter pairs
up front.
"""

from gschur import GschurContext, UniPolySeq, bc_jacobi, factorial
from gschur.coeffseq import PoleError
from gschur.exactalg import format_poly_text

# -- factorial case ---------------------------------------------------------

seq = factorial([0, 1, 2, 3, 4])
phis = UniPolySeq(seq)
print("with a(i) = i and b = 0, the phi_i are falling factorials:")
for i in range(4):
    print(f"  phi_{i} =", format_poly_text(phis.phi(i), names=["z"]))
print()

ctx = GschurContext(2, seq)
print("factorial S_(2,1) =", format_poly_text(ctx.bialternant((2, 1))))
print()

# -- a family that can fail -------------------------------------------------

# The Jacobi-type coefficients are quotients whose denominators vanish when
# 2x hits p + 2q plus a small shift.  The constructor probes indices 0..8 and
# rejects bad parameter pairs immediately, naming the first singular index.
for p, q in ((1, 1), (1, 2), (3, 1)):
    try:
        bc_jacobi(p, q)
        print(f"(p, q) = ({p}, {q}): no pole up to index 8")
    except PoleError as err:
        print(f"(p, q) = ({p}, {q}): pole at index {err.index}")
print()

# With q negative enough every pole moves below zero and the family is usable.
seq = bc_jacobi(1, -3)
print("(p, q) = (1, -3) is pole-free; first coefficients:")
print("  a:", ", ".join(str(seq.a(i)) for i in range(4)))
print("  b:", ", ".join(str(seq.b(i)) for i in range(4)))
ctx = GschurContext(2, seq)
assert ctx.jacobi_trudi((2, 1)) == ctx.bialternant((2, 1))
print("  S_(2,1) =", format_poly_text(ctx.bialternant((2, 1))))
