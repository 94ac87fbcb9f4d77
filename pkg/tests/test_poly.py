import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from spherotrop.errors import OrderNotWellFounded
from spherotrop.poly import (
    GREVLEX,
    Polynomial,
    TermOrder,
    buchberger_reduced,
    dehomogenize,
    homogenize,
    ideal_member,
    is_groebner_basis,
    leading_term,
    poly_divide,
    s_polynomial,
)

from conftest import polynomials, random_polynomial

XY = ["x", "y"]


def P(text, names=XY):
    return Polynomial.parse(text, names)


def test_leading_term_examples():
    assert leading_term(P("x^2 + x*y + y^3"), TermOrder("grlex")) == ((1, 1), 1)
    assert leading_term(P("7*x^3", ["x"]), GREVLEX) == ((3,), 7)
    assert leading_term(P("x + y"), TermOrder("lex")) == ((0, 1), 1)


def test_division_examples():
    q, r = poly_divide(P("x", ["x"]), [P("x", ["x"])], GREVLEX)
    assert q == [P("1", ["x"])] and not r
    lex = TermOrder("lex")
    q, r = poly_divide(P("x^2 + 1"), [P("x")], lex)
    assert q == [P("x")] and r == P("1")
    with pytest.raises(OrderNotWellFounded):
        poly_divide(P("1"), [P("1 - x")], lex)


def test_buchberger_examples():
    assert buchberger_reduced([P("x")]) == [P("x")]
    assert set(buchberger_reduced([P("x + y"), P("x - y")])) == {P("x"), P("y")}
    order = TermOrder.degree_classical(2)
    gb = buchberger_reduced([P("x^2*y - 1"), P("x*y^2 - 1")], order)
    assert is_groebner_basis(gb, order)
    for i in range(len(gb)):
        for j in range(i + 1, len(gb)):
            assert not poly_divide(s_polynomial(gb[i], gb[j], order), gb, order)[1]


def test_grevlex_refuses_inhomogeneous_local_division():
    with pytest.raises(OrderNotWellFounded):
        buchberger_reduced([P("x^2*y - 1"), P("x*y^2 - 1")], GREVLEX)


def test_unit_ideal():
    assert buchberger_reduced([P("x + 1"), P("x")], TermOrder.degree_classical(2)) == [P("1")]


def test_ideal_member_examples():
    gb = [P("x"), P("y")]
    assert ideal_member(Polynomial.zero(2, XY), gb)
    assert ideal_member(P("x + y"), gb)
    assert not ideal_member(P("1"), gb)


def test_parse_print_round_trip():
    f = P("x^2 - 3/2*x*y + 1")
    assert Polynomial.from_json(f.to_json()) == f
    assert Polynomial.parse(repr(f), XY) == f
    g = P("x/y + 1")
    assert g.laurent and g.terms[(1, -1)] == 1


def test_homogenize_round_trip():
    f = P("x^3 + y - 2")
    h = homogenize(f)
    assert h.is_homogeneous() and h.n == 3
    assert dehomogenize(h) == f


@given(polynomials(), st.lists(polynomials(), min_size=1, max_size=3))
def test_division_identity(f, divisors):
    order = TermOrder.degree_classical(2)
    q, r = poly_divide(f, divisors, order)
    total = r
    for qi, g in zip(q, divisors):
        total = total + qi * g
    assert total == f


@given(st.lists(polynomials(max_terms=3, max_deg=2), min_size=1, max_size=3), st.randoms())
def test_reduced_basis_independent_of_presentation(gens, r):
    order = TermOrder.degree_classical(2)
    gb = buchberger_reduced(gens, order)
    shuffled = [g.scale(Fraction(r.choice([-3, -1, 2, 5]), r.choice([1, 7]))) for g in gens]
    r.shuffle(shuffled)
    assert buchberger_reduced(shuffled + [gens[0] * gens[-1]], order) == gb


def test_membership_agreement(rng):
    order = TermOrder.degree_classical(3)
    for _ in range(10):
        gens = [random_polynomial(rng, 3) for _ in range(2)]
        gb = buchberger_reduced(gens, order)
        f = sum((random_polynomial(rng, 3) * g for g in gens), Polynomial.zero(3))
        assert ideal_member(f, gb, order)


def test_homogeneous_input_accepts_any_order(rng):
    gens = [random_polynomial(rng, 3, homogeneous=2) for _ in range(2)]
    for order in (TermOrder("lex"), TermOrder("grlex"), GREVLEX):
        gb = buchberger_reduced(gens, order)
        assert is_groebner_basis(gb, order)
