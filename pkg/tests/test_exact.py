from fractions import Fraction

import pytest
from hypothesis import assume, given

from spherotrop.errors import DivisionByZero, InputError, PrecisionLoss
from spherotrop.exact import (
    INF,
    T,
    PuiseuxSeries,
    as_fraction,
    fraction_str,
    ps_combine,
    ps_eval_numeric,
    ps_inverse,
    ps_ord,
    series,
)

from conftest import exact_series


def test_ord_examples():
    assert ps_ord(series({"3/2": 1, 2: 1})) == Fraction(3, 2)
    assert ps_ord(PuiseuxSeries.zero()) == INF
    assert ps_ord(PuiseuxSeries.const(5)) == 0


def test_ord_of_truncated_zero_raises():
    with pytest.raises(PrecisionLoss):
        PuiseuxSeries(1, {}, trunc=3).ord()


def test_combine_examples():
    a = series({-1: 1, 0: 1})
    b = series({-1: -1, 1: 1})
    assert ps_combine("add", a, b) == series({0: 1, 1: 1})
    assert ps_combine("mul", 1 + T, 1 - T) == series({0: 1, 2: -1})
    s = ps_combine("add", PuiseuxSeries.const(1, trunc=3), T ** 5)
    assert s.trunc == 3 and s.terms == {0: 1}


def test_product_truncation_rule():
    a = PuiseuxSeries(1, {1: 1}, trunc=4)       # t + O(t^4)
    b = PuiseuxSeries(1, {2: 1, 3: 1}, trunc=6)  # t^2 + t^3 + O(t^6)
    assert (a * b).trunc == min(4 + 2, 6 + 1)


def test_inverse_examples():
    assert ps_inverse(T ** 2, 5) == series({-2: 1})
    inv = ps_inverse(1 - T, 4)
    assert inv.terms == {0: 1, 1: 1, 2: 1, 3: 1}
    assert inv.trunc == 4
    with pytest.raises(DivisionByZero):
        ps_inverse(PuiseuxSeries.zero(), 3)


def test_inverse_refuses_insufficient_precision():
    f = PuiseuxSeries(1, {0: 1, 1: 1}, trunc=2)
    with pytest.raises(PrecisionLoss):
        f.inverse(5)


def test_eval_examples():
    assert ps_eval_numeric(T ** 2, 0.1) == pytest.approx(0.01)
    assert ps_eval_numeric(1 + T, 0.5) == pytest.approx(1.5)
    assert ps_eval_numeric(series({"1/2": 1}), 0.04) == pytest.approx(0.2)


def test_ramification_is_normalised():
    s = PuiseuxSeries(4, {2: 1, 6: 3})
    assert s.k == 2 and s.terms == {1: 1, 3: 3}
    assert s == series({"1/2": 1, "3/2": 3})


def test_parse_and_json_round_trip():
    s = PuiseuxSeries.parse("t^(3/2) - 2/3*t^-1 + 5")
    assert s == series({"3/2": 1, -1: Fraction(-2, 3), 0: 5})
    assert PuiseuxSeries.from_json(s.to_json()) == s
    trunc = PuiseuxSeries(2, {1: 1}, trunc=Fraction(7, 2))
    assert PuiseuxSeries.from_json(trunc.to_json()) == trunc


def test_as_fraction_rejects_floats():
    with pytest.raises(InputError):
        as_fraction(0.5)
    assert as_fraction("3/4") == Fraction(3, 4)
    assert fraction_str(Fraction(-3, 4)) == "-3/4"
    assert fraction_str(Fraction(2)) == "2"


@given(exact_series(nonzero=True), exact_series(nonzero=True))
def test_non_archimedean_law(a, b):
    assert (a * b).ord() == a.ord() + b.ord()
    s = a + b
    assert s.ord() >= min(a.ord(), b.ord())
    if a.ord() != b.ord():
        assert s.ord() == min(a.ord(), b.ord())


@given(exact_series(), exact_series(), exact_series())
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(exact_series(nonzero=True))
def test_inverse_property(f):
    target = f.ord() + 6
    g = f.inverse(target)
    prod = f * g - 1
    assert all(e >= target for e, _ in prod.items())
    assert prod.trunc is None or prod.trunc >= target
