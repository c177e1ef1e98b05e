"""
One polynomial, three determinants
==================================

Pick a random coefficient table, pick a partition, and compute the same
generalized Schur polynomial by the bialternant quotient, the determinant in
the one-row functions, and the determinant in hooks.  They agree, coefficient
by coefficient, and the monomial expansion shows the triangular structure.
"""

import random
from gschur import GschurContext, random_coeffseq
from gschur.exactalg import format_poly_text
from gschur.partitions import format_partition

seq = random_coeffseq(random.Random(42))
lam = (3, 1)
n = 3

print(f"coefficient table (first entries): a = {[str(seq.a(i)) for i in range(4)]}")
print(f"                                   b = {[str(seq.b(i)) for i in range(4)]}")
print()

ctx = GschurContext(n, seq)

# Route 1: a ratio of determinants in the recurrence family phi_i(x_k).
bialt = ctx.bialternant(lam)
print("bialternant:     ", format_poly_text(bialt))

# Route 2: a determinant whose entries are shifted one-row polynomials.
det_h = ctx.jacobi_trudi(lam)
print("h-determinant:   ", format_poly_text(det_h))

# Route 3: a determinant of hook polynomials over the diagonal coordinates.
det_hook = ctx.giambelli(lam)
print("hook determinant:", format_poly_text(det_hook))

assert bialt == det_h == det_hook
print()

# The expansion on monomial symmetric polynomials is triangular: the
# partition itself appears with coefficient 1, everything else is dominated.
print(f"monomial expansion of S_({format_partition(lam)}):")
for mu, c in sorted(ctx.monomial_expansion(lam).items(), key=lambda kv: (sum(kv[0]), kv[0])):
    print(f"  m_({format_partition(mu) or 'empty'}) * {c}")
