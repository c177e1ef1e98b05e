"""Tests for the any-d layer: expansions, interpolation, super realisation."""

import random
from fractions import Fraction

import pytest

from gschur.coeffseq import PoleError, random_coeffseq, random_polynomial_coeffseq
from gschur.engine import GschurContext
from gschur.exactalg import MultiPoly
from gschur.partitions import contains, partitions_up_to
from gschur.presets import factorial, schur, sp
from gschur.stable import (
    InterpolationInconsistentError,
    RationalFunctionOfD,
    SuperAlphabet,
    classical_schur,
    expand_in_classical_schur,
    gschur_function,
    interpolate_c,
    interpolate_c_family,
    jt_infinite_check,
    realize_expansion,
    schur_expand_at,
    super_complete_homogeneous,
    super_power_sum,
    super_schur,
)

from oracles import schur_by_tableaux

F = Fraction


def seeded_table(seed):
    return random_coeffseq(random.Random(seed))


# -- rational functions of the parameter ------------------------------------


def test_rational_function_reduces_common_factors():
    f = RationalFunctionOfD([-1, 0, 1], [-1, 1])  # (d^2 - 1)/(d - 1)
    assert f.num == (F(1), F(1))
    assert f.den == (F(1),)
    assert repr(f) == "d + 1"
    assert f(4) == 5


def test_rational_function_scalar_equality():
    assert RationalFunctionOfD([3], [1]) == 3
    assert RationalFunctionOfD([], [5]) == 0
    assert RationalFunctionOfD([1, 1], [1]) != 5


def test_rational_function_pole_and_repr():
    f = RationalFunctionOfD([1], [-2, 1])  # 1/(d - 2)
    assert repr(f) == "(1)/(d - 2)"
    assert f(3) == 1
    with pytest.raises(PoleError):
        f(2)
    with pytest.raises(ZeroDivisionError):
        RationalFunctionOfD([1], [0])


# -- classical expansion ----------------------------------------------------


def test_classical_schur_matches_tableaux():
    for k in (1, 2, 3):
        for mu in partitions_up_to(4, k):
            assert classical_schur(k, mu) == schur_by_tableaux(mu, k)
    assert classical_schur(2, (1, 1, 1)).is_zero
    assert classical_schur(0, ()) == MultiPoly.one(0)
    assert classical_schur(0, (1,)).is_zero


def test_expand_in_classical_schur_roundtrip():
    combo = (
        F(3) * classical_schur(2, (2, 1))
        - classical_schur(2, (1,))
        + F(5, 2) * classical_schur(2, ())
    )
    assert expand_in_classical_schur(combo) == {
        (2, 1): F(3),
        (1,): F(-1),
        (): F(5, 2),
    }
    assert expand_in_classical_schur(MultiPoly.zero(3)) == {}


def test_expand_in_classical_schur_rejects_asymmetric_input():
    with pytest.raises(ValueError):
        expand_in_classical_schur(MultiPoly.variable(2, 0))


def test_schur_expand_at_classical_is_delta():
    seq = schur()
    for n in (1, 2, 3):
        for lam in partitions_up_to(4, n):
            assert schur_expand_at(lam, seq, n) == {lam: F(1)}


def test_schur_expand_at_matches_full_expansion():
    for seed in (0, 1):
        seq = seeded_table(seed)
        for n in (2, 3):
            ctx = GschurContext(n, seq)
            for lam in partitions_up_to(4, n):
                direct = expand_in_classical_schur(ctx.bialternant(lam))
                assert schur_expand_at(lam, seq, n) == direct


def test_schur_expand_at_support_and_diagonal():
    seq = seeded_table(2)
    lam = (3, 1)
    expansion = schur_expand_at(lam, seq, 2)
    assert expansion[lam] == 1
    for mu in expansion:
        assert contains(lam, mu)


def test_schur_expand_at_needs_enough_variables():
    with pytest.raises(ValueError):
        schur_expand_at((1, 1), seeded_table(3), 1)
    assert schur_expand_at((), seeded_table(3), 2) == {(): F(1)}


def test_single_box_constant_term_is_negated_partial_sum():
    seq = factorial([2, 3, 5, 7, 11, 13])
    for n in range(1, 6):
        expansion = schur_expand_at((1,), seq, n)
        assert expansion.get((), F(0)) == -sum((seq.a(i) for i in range(n)), F(0))


# -- interpolation in the parameter ----------------------------------------


def test_interpolate_c_linear_a_gives_binomial():
    seq = factorial(lambda x: x)
    func = interpolate_c((1,), (), seq, range(1, 8), degree_bound=2)
    assert func.num == (F(0), F(1, 2), F(-1, 2))  # d/2 - d^2/2
    assert func.den == (F(1),)
    assert func(F(7, 2)) == F(-35, 8)
    assert func(10) == -45  # held out from the samples


def test_interpolate_c_argument_checks():
    seq = factorial(lambda x: x)
    with pytest.raises(ValueError):
        interpolate_c((1,), (), seq, [1, 1, 2, 3, 4, 5, 6], degree_bound=1)
    with pytest.raises(ValueError):
        interpolate_c((1, 1), (), seq, [1, 2, 3, 4, 5, 6, 7], degree_bound=1)
    with pytest.raises(ValueError):
        interpolate_c((1,), (), seq, [1, 2, 3], degree_bound=1)


def test_interpolation_rejects_table_coefficients():
    seq = seeded_table(0)
    with pytest.raises(InterpolationInconsistentError):
        interpolate_c((1,), (), seq, range(1, 8), degree_bound=2)


def test_interpolate_c_family_doubles_the_bound():
    seq = factorial(lambda x: x * x)
    family = interpolate_c_family((1,), seq, degree_bound=1)
    assert family[(1,)] == 1
    assert family[()](4) == -14  # -(0 + 1 + 4 + 9)


def test_gschur_function_integer_arguments():
    seq = seeded_table(4)
    direct = {m: c for m, c in schur_expand_at((2, 1), seq, 3).items() if c}
    assert gschur_function((2, 1), seq, 3) == direct
    assert gschur_function((), seq, F(1, 3)) == {(): F(1)}


def test_gschur_function_classical_off_integer():
    assert gschur_function((2, 1), schur(), F(5, 2)) == {(2, 1): F(1)}


def test_gschur_function_off_integer_matches_closed_form():
    seq = factorial(lambda x: x)
    value = gschur_function((1,), seq, F(7, 2))
    assert value == {(1,): F(1), (): F(-35, 8)}


def test_realize_expansion():
    k = 2
    got = realize_expansion({(): F(2), (1,): F(-1)}, k)
    assert got == MultiPoly.constant(k, 2) - MultiPoly.variable(k, 0) - MultiPoly.variable(k, 1)
    assert realize_expansion({(1, 1, 1): F(5)}, 2).is_zero


# -- the parameterised Jacobi-Trudi identity --------------------------------


def test_jt_infinite_argument_checks():
    with pytest.raises(ValueError):
        jt_infinite_check((1,), seeded_table(5), 2, 2)
    with pytest.raises(ValueError):
        jt_infinite_check((1,), schur(), 2, 0)


def test_jt_infinite_classical_off_integer():
    assert jt_infinite_check((2, 1), schur(), F(5, 2), 2)


def test_jt_infinite_symplectic_off_integer():
    assert jt_infinite_check((2, 1), sp(), F(5, 2), 2)


def test_jt_infinite_factorial_integer():
    assert jt_infinite_check((2,), factorial(lambda x: x), 4, 2)


def test_jt_infinite_random_polynomial_sequence():
    seq = random_polynomial_coeffseq(random.Random(3))
    assert jt_infinite_check((2,), seq, F(1, 2), 2)


# -- super-symmetric realisation -------------------------------------------


def test_super_power_sum_signs():
    p1 = super_power_sum(2, 1, 1)
    x1, x2, y1 = (MultiPoly.variable(3, i) for i in range(3))
    assert p1 == x1 + x2 - y1
    with pytest.raises(ValueError):
        super_power_sum(2, 1, 0)


def test_super_complete_homogeneous_one_one():
    hs = super_complete_homogeneous(1, 1, 3)
    x, y = MultiPoly.variable(2, 0), MultiPoly.variable(2, 1)
    assert hs[0] == MultiPoly.one(2)
    assert hs[1] == x - y
    assert hs[2] == x * x - x * y
    assert hs[3] == x ** 3 - x ** 2 * y


def test_super_alphabet_superdimension():
    assert SuperAlphabet(3, 1).superdimension == 2
    with pytest.raises(ValueError):
        super_schur((1,), schur(), SuperAlphabet(-1, 0))


def test_super_schur_without_odd_variables_is_bialternant():
    seq = seeded_table(6)
    ctx = GschurContext(2, seq)
    for lam in ((2,), (2, 1), (1, 1)):
        assert super_schur(lam, seq, SuperAlphabet(2, 0)) == ctx.bialternant(lam)


def test_super_schur_single_box():
    seq = factorial([2, 3, 5, 7, 11])
    got = super_schur((1,), seq, SuperAlphabet(3, 1))
    assert got == super_power_sum(3, 1, 1) + MultiPoly.constant(4, -5)


def test_super_schur_cancellation():
    # identifying one x variable with one y variable at a common value must
    # reproduce the realisation on the smaller alphabet (binding keeps the
    # arity, so the small realisation is embedded into the surviving slots)
    cases = [
        ((2, 1), schur()),
        ((2,), random_polynomial_coeffseq(random.Random(7))),
    ]
    for lam, seq in cases:
        big = super_schur(lam, seq, SuperAlphabet(2, 2))
        small = super_schur(lam, seq, SuperAlphabet(1, 1))
        embedded = small.compose(
            [MultiPoly.variable(4, 0), MultiPoly.variable(4, 3)]
        )
        for t in (F(0), F(1), F(-2)):
            assert big.bind(1, t).bind(2, t) == embedded
