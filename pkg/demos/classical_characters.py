"""
Characters of the classical groups from one recurrence
======================================================

Three small tweaks of the coefficient sequence turn the generalized Schur
polynomial into irreducible characters of the odd orthogonal, even
orthogonal, and symplectic groups.  The recurrence family itself becomes a
Laurent character after substituting z = x + 1/x.
"""

from gschur import GschurContext, UniPolySeq
from gschur.exactalg import MultiPoly, format_poly_text
from gschur.presets import fh_character_det, so_even, so_odd, sp
from gschur.verify import expected_laurent_phi, laurent_reduce

# The symplectic family: phi_0 = 1, phi_1 = z, then phi_{i+1} = z phi_i - phi_{i-1}.
phis = UniPolySeq(sp())
for i in range(4):
    print(f"sp phi_{i} =", format_poly_text(phis.phi(i), names=["z"]))
print()

# Substituting z = x + 1/x collapses each phi_i to x^i + x^(i-2) + ... + x^(-i),
# the character of an irreducible sp(2) representation.  The variable u below
# stands for 1/x, and laurent_reduce cancels x * u pairs.
z_sub = MultiPoly.variable(2, 0) + MultiPoly.variable(2, 1)
for i in range(1, 5):
    value = laurent_reduce(phis.phi(i).compose([z_sub]))
    assert value == expected_laurent_phi("sp", i)
    print(f"sp phi_{i}(x + 1/x) =", format_poly_text(value, names=["x", "u"]), "  (u = 1/x)")
print()

# For partitions, the same engine produces the full characters; a compact
# determinant with rows h_{m}, h_{m+j-1} + h_{m+1-j} gives a third route
# specific to these presets.
for build in (so_odd, so_even, sp):
    seq = build()
    ctx = GschurContext(2, seq)
    lam = (2, 1)
    value = ctx.bialternant(lam)
    assert value == fh_character_det(ctx, lam)
    assert value == ctx.jacobi_trudi(lam)
    print(f"{seq.name:7} S_(2,1) =", format_poly_text(value))
