"""Ready-made coefficient sequences and classical-group specific routines.

The presets cover the classical specialisations of the engine: the ordinary
Schur case (a = b = 0), the three families whose recurrence families are
Laurent characters in disguise (odd/even orthogonal and symplectic), the
factorial case (b = 0, arbitrary a), and a two-parameter Jacobi-type family
whose closed-form coefficients can have genuine poles at small indices.

Also here: the compact character determinant whose rows combine two one-row
polynomials (valid exactly for the orthogonal/symplectic presets), and a
check that the exceptional boundary values a(0) and b(1) of those presets
never reach the shifted families used by the Jacobi-Trudi route.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from typing import Callable

from .coeffseq import CoeffSeq, PoleError
from .engine import GschurContext, shifted_family
from .exactalg import MultiPoly, PolyMatrix, determinant
from .partitions import check_partition

CLASSICAL_PRESETS = ("so_odd", "so_even", "sp")

_F = Fraction


def schur() -> CoeffSeq:
    """a = b = 0: the recurrence family is just the monomials z^i."""
    return CoeffSeq.from_functions(lambda x: _F(0), lambda x: _F(0), name="schur")


def so_odd() -> CoeffSeq:
    """Odd orthogonal sequence: a(0) = -1, b(0) = 0, otherwise a = 0, b = 1."""

    def a(x: Fraction) -> Fraction:
        return _F(-1) if x == 0 else _F(0)

    def b(x: Fraction) -> Fraction:
        return _F(0) if x == 0 else _F(1)

    return CoeffSeq.from_functions(a, b, name="so_odd")


def so_even() -> CoeffSeq:
    """Even orthogonal sequence: a = 0, b(1) = 2, b(i) = 1 for i > 1.

    b(0) is not pinned down by the recurrence family (it multiplies the zero
    polynomial) and is set to 0 here.
    """

    def b(x: Fraction) -> Fraction:
        if x == 0:
            return _F(0)
        return _F(2) if x == 1 else _F(1)

    return CoeffSeq.from_functions(lambda x: _F(0), b, name="so_even")


def sp() -> CoeffSeq:
    """Symplectic sequence: a = 0, b = 1 throughout."""
    return CoeffSeq.from_functions(lambda x: _F(0), lambda x: _F(1), name="sp")


def factorial(a_values) -> CoeffSeq:
    """b = 0 with a prescribed a-table, so phi_i = (z - a(0))...(z - a(i-1)).

    Accepts either a finite table of rationals or a callable closed form.
    """
    if callable(a_values):
        return CoeffSeq.from_functions(a_values, lambda x: _F(0), name="factorial")
    table = [Fraction(v) for v in a_values]
    return CoeffSeq.from_tables(table, [0] * len(table), name="factorial")


def bc_jacobi(p, q, probe_upto: int = 8) -> CoeffSeq:
    """Jacobi-type two-parameter sequence with closed-form coefficients.

        a(x) = -2p(p + 2q + 1) / ((2x - p - 2q - 1)(2x - p - 2q + 1))

        b(x) = 2x(2x - 2q - 1)(2x - 2p - 2q - 1)(2x - 2p - 4q - 2)
               / ((2x - p - 2q)(2x - p - 2q - 1)^2 (2x - p - 2q - 2))

    Both formulas can vanish in the denominator at small indices, depending
    on p and q.  Construction eagerly probes indices 0..probe_upto and fails
    fast with a PoleError naming the first singular index; pass probe_upto=0
    to defer the failure to first use.
    """
    p = Fraction(p)
    q = Fraction(q)

    def a(x: Fraction) -> Fraction:
        d1 = 2 * x - p - 2 * q - 1
        d2 = 2 * x - p - 2 * q + 1
        if d1 == 0 or d2 == 0:
            raise PoleError(x)
        return Fraction(-2) * p * (p + 2 * q + 1) / (d1 * d2)

    def b(x: Fraction) -> Fraction:
        d1 = 2 * x - p - 2 * q
        d2 = 2 * x - p - 2 * q - 1
        d3 = 2 * x - p - 2 * q - 2
        if d1 == 0 or d2 == 0 or d3 == 0:
            raise PoleError(x)
        num = 2 * x * (2 * x - 2 * q - 1) * (2 * x - 2 * p - 2 * q - 1) * (
            2 * x - 2 * p - 4 * q - 2
        )
        return num / (d1 * d2 ** 2 * d3)

    seq = CoeffSeq.from_functions(a, b, name="bc_jacobi")
    for i in range(probe_upto + 1):
        seq.a(i)
        seq.b(i)
    return seq


def make(name: str, **params) -> CoeffSeq:
    """Build a preset by name; used by the command-line front end."""
    if name == "schur":
        return schur()
    if name == "so_odd":
        return so_odd()
    if name == "so_even":
        return so_even()
    if name == "sp":
        return sp()
    if name == "factorial":
        if "a_table" not in params:
            raise ValueError("the factorial preset needs a_table")
        return factorial(params["a_table"])
    if name == "bc_jacobi":
        if "p" not in params or "q" not in params:
            raise ValueError("the bc_jacobi preset needs p and q")
        return bc_jacobi(
            params["p"], params["q"], probe_upto=params.get("probe_upto", 8)
        )
    raise ValueError(f"unknown preset: {name!r}")


def fh_character_det(ctx: GschurContext, lam) -> MultiPoly:
    """Compact character determinant for the orthogonal/symplectic presets.

    Row i has first entry h_{lam_i - i + 1} and later entries
    h_{lam_i - i + j} + h_{lam_i - i + 2 - j} for columns j >= 2 (1-based).
    The column operations that produce this shape from the Jacobi-Trudi
    determinant use b = 1 and a = 0 beyond the boundary, so the construction
    is only claimed, and only allowed, for those presets.
    """
    if ctx.seq.name not in CLASSICAL_PRESETS:
        raise ValueError(
            "the compact character determinant applies only to the "
            f"{'/'.join(CLASSICAL_PRESETS)} presets"
        )
    lam = check_partition(lam)
    l = len(lam)
    if l > ctx.n:
        raise ValueError(f"partition {lam} needs more than {ctx.n} variables")
    if l == 0:
        return MultiPoly.one(ctx.n)
    rows = []
    for i0 in range(l):
        m = lam[i0] - i0  # lam_i - i + 1 in 1-based labels
        row = [ctx.h(m)]
        for j in range(2, l + 1):
            row.append(ctx.h(m + j - 1) + ctx.h(m + 1 - j))
        rows.append(row)
    return determinant(PolyMatrix.from_rows(rows))


def boundary_insensitivity(lam, n: int) -> bool:
    """Check that a(0) and b(1) never reach the Jacobi-Trudi shift entries.

    The shifted families are linear in the underlying one-row polynomials,
    so each h^{(r)}_i is a formal combination sum_j c_j h_j whose scalars c_j
    are built from the recursion coefficients.  This runs that recursion over
    formal symbols standing for the h_j, once for every combination of
    a(0) in {0, -1} and b(1) in {1, 2} (all other indices held at a = 0,
    b = 1), and reports whether the resulting expressions agree for every
    entry with positive shift used by the Jacobi-Trudi determinant of lam.
    """
    lam = check_partition(lam)
    if len(lam) > n:
        raise ValueError(f"partition {lam} needs more than {n} variables")
    l = len(lam)
    if l <= 1:
        return True

    wanted = [
        (lam[j] - j, r) for j in range(l) for r in range(1, l)
    ]

    def coeff_pair(a0: int, b1: int):
        def a_of(k) -> Fraction:
            if k < 0:
                return _F(0)
            return _F(a0) if k == 0 else _F(0)

        def b_of(k) -> Fraction:
            if k < 0:
                return _F(0)
            return _F(b1) if k == 1 else _F(1)

        return a_of, b_of

    for i, r in wanted:
        top = i + r
        if top < 0:
            continue  # identically zero for every variant
        arity = top + 1

        def base(j: int, _arity=arity, _top=top) -> MultiPoly:
            if j < 0 or j > _top:
                return MultiPoly.zero(_arity)
            return MultiPoly.variable(_arity, j)

        seen: list[MultiPoly] = []
        for a0, b1 in product((0, -1), (1, 2)):
            a_of, b_of = coeff_pair(a0, b1)
            value = shifted_family(base, a_of, b_of, n, i, r, {})
            seen.append(value)
        if any(v != seen[0] for v in seen[1:]):
            return False
    return True
