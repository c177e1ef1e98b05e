"""Tests for the ready-made coefficient sequences and classical routines."""

from fractions import Fraction

import pytest

from gschur.coeffseq import PoleError
from gschur.engine import GschurContext
from gschur.exactalg import MultiPoly
from gschur.partitions import partitions_up_to
from gschur.presets import (
    bc_jacobi,
    boundary_insensitivity,
    factorial,
    fh_character_det,
    make,
    schur,
    so_even,
    so_odd,
    sp,
)
from gschur.verify import laurent_identity_holds

F = Fraction


def test_schur_preset_is_zero_everywhere():
    seq = schur()
    assert seq.a(7) == 0 and seq.b(7) == 0
    assert seq.a_at(F(5, 3)) == 0
    assert seq.name == "schur"


def test_so_odd_coefficients():
    seq = so_odd()
    assert seq.a(0) == -1
    assert seq.b(0) == 0
    assert seq.a(3) == 0
    assert seq.b(3) == 1


def test_so_even_coefficients():
    seq = so_even()
    assert seq.b(0) == 0
    assert seq.b(1) == 2
    assert seq.b(2) == 1
    assert seq.a(4) == 0


def test_sp_coefficients():
    seq = sp()
    assert seq.a(0) == 0
    assert all(seq.b(i) == 1 for i in range(6))


def test_factorial_table_form():
    seq = factorial([F(1, 2), 3, -1])
    assert seq.a(1) == 3
    assert seq.b(2) == 0
    with pytest.raises(IndexError):
        seq.a(3)


def test_factorial_callable_form():
    seq = factorial(lambda x: x * x)
    assert seq.a(3) == 9
    assert seq.a_at(F(1, 2)) == F(1, 4)
    assert seq.b(5) == 0


def test_bc_jacobi_probes_fail_fast():
    for (p, q), index in (((1, 1), 1), ((1, 2), 2), ((3, 1), 2)):
        with pytest.raises(PoleError) as err:
            bc_jacobi(p, q)
        assert err.value.index == index


def test_bc_jacobi_deferred_probe():
    seq = bc_jacobi(1, 1, probe_upto=0)
    assert seq.a(0) == -1
    assert seq.a(3) == -1
    with pytest.raises(PoleError):
        seq.a(1)


def test_bc_jacobi_pole_free_instance():
    # both parameter signs negative enough pushes every pole below zero
    seq = bc_jacobi(1, -3)
    values = [seq.a(i) for i in range(9)] + [seq.b(i) for i in range(9)]
    assert all(isinstance(v, Fraction) for v in values)


def test_make_dispatch():
    assert make("sp").name == "sp"
    assert make("factorial", a_table=[1, 2]).a(1) == 2
    assert make("bc_jacobi", p=1, q=-3).name == "bc_jacobi"
    with pytest.raises(ValueError):
        make("factorial")
    with pytest.raises(ValueError):
        make("bc_jacobi", p=1)
    with pytest.raises(ValueError):
        make("no_such_preset")


def test_fh_determinant_matches_other_routes():
    for build in (so_odd, so_even, sp):
        seq = build()
        for n in (2, 3):
            ctx = GschurContext(n, seq)
            for lam in partitions_up_to(4, n):
                value = fh_character_det(ctx, lam)
                assert value == ctx.jacobi_trudi(lam)
                assert value == ctx.bialternant(lam)


def test_fh_determinant_empty_partition():
    ctx = GschurContext(2, sp())
    assert fh_character_det(ctx, ()) == MultiPoly.one(2)


def test_fh_determinant_rejects_other_presets():
    ctx = GschurContext(2, schur())
    with pytest.raises(ValueError):
        fh_character_det(ctx, (1,))
    with pytest.raises(ValueError):
        fh_character_det(GschurContext(2, sp()), (1, 1, 1))


def test_laurent_characters():
    for build in (so_odd, sp):
        seq = build()
        for i in range(0, 11):
            assert laurent_identity_holds(seq, i)
    # the even orthogonal character identity starts at degree one
    seq = so_even()
    for i in range(1, 11):
        assert laurent_identity_holds(seq, i)


def test_boundary_values_never_reach_shift_entries():
    for n in (2, 3):
        for lam in partitions_up_to(4, n):
            assert boundary_insensitivity(lam, n)


def test_boundary_check_short_partitions_trivial():
    assert boundary_insensitivity((), 1)
    assert boundary_insensitivity((4,), 1)
    with pytest.raises(ValueError):
        boundary_insensitivity((1, 1), 1)
