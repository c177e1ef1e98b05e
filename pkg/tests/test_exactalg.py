"""Tests for the sparse polynomial core and exact determinants."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from gschur.exactalg import (
    DivisionNotExactError,
    MultiPoly,
    PolyMatrix,
    determinant,
    exact_divide,
    format_poly_text,
    grlex_key,
    poly_from_json_terms,
    poly_to_json_terms,
    vandermonde,
)

from oracles import leibniz_det

F = Fraction


def x(i, arity=2):
    return MultiPoly.variable(arity, i)


@st.composite
def small_polys(draw, arity=2, max_exp=3, max_terms=5):
    n_terms = draw(st.integers(min_value=0, max_value=max_terms))
    terms = {}
    for _ in range(n_terms):
        e = tuple(
            draw(st.integers(min_value=0, max_value=max_exp)) for _ in range(arity)
        )
        num = draw(st.integers(min_value=-8, max_value=8))
        den = draw(st.integers(min_value=1, max_value=4))
        terms[e] = F(num, den)
    return MultiPoly(arity, terms)


def test_construction_strips_zero_coefficients():
    p = MultiPoly(2, {(1, 0): F(0), (0, 1): F(3)})
    assert len(p) == 1
    assert p.coefficient((1, 0)) == 0
    assert p.coefficient((0, 1)) == 3


def test_zero_polynomial_degree_convention():
    z = MultiPoly.zero(3)
    assert z.is_zero
    assert z.total_degree == -1
    assert not z


def test_grlex_orders_by_degree_then_lex():
    assert grlex_key((2, 0)) > grlex_key((1, 1)) > grlex_key((0, 2))
    assert grlex_key((0, 3)) > grlex_key((2, 0))


def test_leading_term_of_zero_raises():
    with pytest.raises(ValueError):
        MultiPoly.zero(1).leading_term()


def test_leading_term_pinned():
    p = x(0) ** 2 * x(1) + x(0) * x(1) ** 2 + x(0)
    assert p.leading_term() == ((2, 1), F(1))


@given(small_polys(), small_polys(), small_polys())
@settings(max_examples=60, deadline=None)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == MultiPoly.zero(2)
    assert a * MultiPoly.one(2) == a


@given(small_polys())
@settings(max_examples=40, deadline=None)
def test_scalar_promotion(a):
    assert a + 0 == a
    assert 1 * a == a
    assert a * F(1, 2) + a * F(1, 2) == a
    assert a - F(2) == a + (-2)
    assert 3 - a == -(a - 3)


def test_arity_mismatch_rejected():
    with pytest.raises(ValueError):
        MultiPoly.one(2) + MultiPoly.one(3)


def test_power_and_division_by_scalar():
    p = x(0) + x(1)
    assert p ** 0 == MultiPoly.one(2)
    assert p ** 2 == x(0) ** 2 + 2 * x(0) * x(1) + x(1) ** 2
    assert (2 * p) / 2 == p
    with pytest.raises(ZeroDivisionError):
        p / 0


def test_bind_scalar_and_poly():
    p = x(0) ** 2 * x(1) - x(1)
    assert p.bind(0, 2) == 4 * x(1) - x(1)
    # substituting a polynomial keeps the arity
    assert p.bind(0, x(1)) == x(1) ** 3 - x(1)


def test_compose_matches_manual_substitution():
    p = x(0) ** 2 + x(1)
    q = p.compose([x(1, 3) + x(2, 3), x(0, 3)])
    expected = (x(1, 3) + x(2, 3)) ** 2 + x(0, 3)
    assert q == expected


@given(small_polys(), st.integers(-3, 3), st.integers(-3, 3))
@settings(max_examples=40, deadline=None)
def test_evaluate_agrees_with_bind(p, u, v):
    assert p.evaluate([u, v]) == p.bind(0, u).bind(1, v).constant_term


def test_drop_first_and_prepend_are_inverse():
    p = x(0) + 2 * x(1)
    lifted = p.prepend_variable()
    assert lifted.arity == 3
    assert lifted.drop_first() == p


def test_drop_first_refuses_occupied_variable():
    with pytest.raises(DivisionNotExactError):
        (x(0, 3) ** 2 + x(1, 3)).drop_first()
    # binding the variable away first makes the drop legal
    assert (x(0, 3) + x(1, 3)).bind(0, 0).drop_first() == x(0)


def test_apply_permutation_swaps_variables():
    p = x(0) ** 2 + 3 * x(1)
    assert p.apply_permutation([1, 0]) == x(1) ** 2 + 3 * x(0)
    with pytest.raises(ValueError):
        p.apply_permutation([0, 0])


def test_exact_divide_pinned_product():
    # (x1 + x2)(x1^2 + x1 x2 + x2^2) = x1^3 + 2x1^2 x2 + 2x1 x2^2 + x2^3
    a = x(0) + x(1)
    b = x(0) ** 2 + x(0) * x(1) + x(1) ** 2
    assert exact_divide(a * b, a) == b
    assert exact_divide(a * b, b) == a


@given(small_polys(), small_polys())
@settings(max_examples=60, deadline=None)
def test_exact_divide_roundtrip(a, b):
    if b.is_zero:
        with pytest.raises(ZeroDivisionError):
            exact_divide(a, b)
    else:
        assert exact_divide(a * b, b) == a


def test_exact_divide_rejects_inexact():
    with pytest.raises(DivisionNotExactError):
        exact_divide(x(0) ** 2 + x(1), x(0) + x(1))


def test_determinant_2x2_pinned():
    m = PolyMatrix.from_rows([[x(0), x(1)], [MultiPoly.one(2), x(0)]])
    assert determinant(m) == x(0) ** 2 - x(1)


def test_determinant_row_swap_changes_sign():
    rows = [[x(0), x(1)], [x(1) ** 2, MultiPoly.one(2)]]
    swapped = [rows[1], rows[0]]
    assert determinant(PolyMatrix.from_rows(rows)) == -determinant(
        PolyMatrix.from_rows(swapped)
    )


def test_determinant_with_zero_row_is_zero():
    z = MultiPoly.zero(2)
    rows = [[x(0), x(1)], [z, z]]
    assert determinant(PolyMatrix.from_rows(rows)).is_zero


def test_determinant_methods_agree_with_leibniz():
    rng = random.Random(11)

    def rand_poly():
        terms = {}
        for _ in range(rng.randint(0, 4)):
            e = (rng.randint(0, 2), rng.randint(0, 2))
            terms[e] = F(rng.randint(-5, 5), rng.randint(1, 3))
        return MultiPoly(2, terms)

    for size in (1, 2, 3, 4):
        for _ in range(4):
            rows = [[rand_poly() for _ in range(size)] for _ in range(size)]
            expected = leibniz_det(rows)
            m = PolyMatrix.from_rows(rows)
            assert determinant(m, method="cofactor") == expected
            assert determinant(m, method="bareiss") == expected


def test_determinant_rejects_nonsquare_and_unknown_method():
    m = PolyMatrix.from_rows([[x(0), x(1)]])
    with pytest.raises(ValueError):
        determinant(m)
    sq = PolyMatrix.from_rows([[x(0)]])
    with pytest.raises(ValueError):
        determinant(sq, method="laplace")


def test_vandermonde_matches_leibniz_power_matrix():
    n = 3
    rows = [
        [MultiPoly.variable(n, i) ** (n - 1 - j) for j in range(n)]
        for i in range(n)
    ]
    assert vandermonde(n) == leibniz_det(rows)


def test_polymatrix_shape_checks():
    with pytest.raises(ValueError):
        PolyMatrix.from_rows([])
    with pytest.raises(ValueError):
        PolyMatrix.from_rows([[x(0)], [x(0), x(1)]])
    with pytest.raises(ValueError):
        PolyMatrix.from_rows([[x(0), MultiPoly.one(3)]])


@given(small_polys())
@settings(max_examples=40, deadline=None)
def test_json_roundtrip(p):
    data = poly_to_json_terms(p)
    assert poly_from_json_terms(2, data) == p
    # terms must come out in descending graded-lex order
    keys = [tuple(item["e"]) for item in data]
    assert keys == sorted(keys, key=grlex_key, reverse=True)


def test_json_rejects_duplicate_exponents():
    data = [{"e": [1, 0], "c": "1"}, {"e": [1, 0], "c": "2"}]
    with pytest.raises(ValueError):
        poly_from_json_terms(2, data)


def test_format_poly_text_pinned():
    assert format_poly_text(x(0) ** 2 - MultiPoly.one(2)) == "x1^2 - 1"
    assert format_poly_text(MultiPoly.zero(2)) == "0"
    assert format_poly_text(MultiPoly.constant(2, F(3, 4))) == "3/4"
    assert format_poly_text(-F(1, 2) * x(0) + 2) == "-1/2*x1 + 2"
    assert format_poly_text(2 * x(0) * x(1)) == "2*x1*x2"
    assert format_poly_text(x(0), names=["z"]) == "z"
