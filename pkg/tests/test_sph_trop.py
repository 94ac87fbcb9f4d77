from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from spherotrop.errors import ConstantPolynomial, UnsupportedHypersurface
from spherotrop.exact import T, PuiseuxSeries
from spherotrop.poly import Polynomial
from spherotrop.polyhedral import Cone
from spherotrop.sph_trop import (
    ANGLE_R1_R2,
    GL2_CONE,
    R1,
    R2,
    Cone2Set,
    RaySet1D,
    chart_unit_certificate,
    curve_sampling_trop,
    default_substitutions,
    delta_polytope,
    gl2_borel_trop,
    inside_exact_set,
    sl2_chart_set,
    sl2_initial_and_unit,
    sl2_spherical_fan,
    sl2_spherical_gb,
    sl2_spherical_initial_ideal,
    sl2_trop_hypersurface,
    sl2_valuations,
)
from spherotrop.spherical import SphericalModel

from conftest import polynomials

XY = ["x", "y"]
ABCD = ["a", "b", "c", "d"]
SL2 = SphericalModel.sl2()
GL2 = SphericalModel.gln(2)


def P(text, names=XY):
    return Polynomial.parse(text, names)


def U(text):
    return Polynomial.parse(text, ["u"])


def test_initial_and_unit_examples():
    for v in (-1, 0, 1):
        assert sl2_initial_and_unit("y", v) == (P("y"), True)
    assert sl2_initial_and_unit("1 + x", 1) == (P("1"), True)
    assert sl2_initial_and_unit("x + y", 1) == (P("x + y"), False)
    assert sl2_initial_and_unit("x + y^2", -1) == (P("y^2"), True)
    assert sl2_initial_and_unit("x + y^2", -1, chart="Bminus") == (P("y^2"), False)


def test_hypersurface_examples():
    assert sl2_trop_hypersurface("x + y - 1").combined == RaySet1D.NONPOSITIVE
    assert sl2_trop_hypersurface("x - y").combined == RaySet1D.Q
    h = sl2_trop_hypersurface("y")
    assert h.charts["B"] == RaySet1D.EMPTY
    assert h.charts["Bminus"] == RaySet1D.Q
    assert h.combined == RaySet1D.Q
    with pytest.raises(ConstantPolynomial):
        sl2_trop_hypersurface("3")


def test_ray_set_names_round_trip():
    for flags in [(a, b, c) for a in (0, 1) for b in (0, 1) for c in (0, 1)]:
        s = RaySet1D(*map(bool, flags))
        assert RaySet1D.from_name(s.name) == s
    assert RaySet1D.NONPOSITIVE.name == "Q_{<=0}"


def test_spherical_gb_examples():
    assert sl2_spherical_gb([P("x")]) == [P("x")]
    assert sl2_spherical_initial_ideal([P("x + y^2")]) == [P("y^2")]
    assert set(sl2_spherical_gb([P("x + y"), P("x - y")])) == {P("x"), P("y")}
    assert set(sl2_spherical_initial_ideal([P("x + y"), P("x - y")])) == {P("x"), P("y")}


def test_spherical_fan_examples():
    fan = sl2_spherical_fan([P("x + y^2")])
    assert fan == {"v>0": [P("x")], "v<0": [P("y^2")], "v=0": [P("x + y^2")]}
    hom = sl2_spherical_fan([P("x^2 - x*y"), P("y^3")])
    assert hom["v<0"] == hom["v=0"] == hom["v>0"]
    unit = sl2_spherical_fan([P("x + 1"), P("x")])
    assert all(ideal == [P("1")] for ideal in unit.values())


def test_delta_examples():
    assert delta_polytope(P("x + y - 1")) == (0, 1)
    assert delta_polytope(P("x^2*y")) == (3, 3)
    assert delta_polytope(P("x^2 + y^5")) == (2, 5)
    assert sl2_valuations(P("x^2 + y^5")) == (2, -5)


def test_gl2_examples():
    c = gl2_borel_trop(Polynomial.parse("c - 1", ABCD))
    d = gl2_borel_trop("d - 1")
    assert c == Cone2Set([R1])
    assert d == Cone2Set([ANGLE_R1_R2])
    assert ANGLE_R1_R2.contains((3, -1)) and not ANGLE_R1_R2.contains((1, 1))
    assert R1.contains((2, 0)) and R2.contains((-1, -1))
    assert Cone2Set([R1, ANGLE_R1_R2]) == d
    with pytest.raises(UnsupportedHypersurface):
        gl2_borel_trop("a - 1")


def test_gl2_sets_inside_valuation_cone():
    for piece in gl2_borel_trop("d - 1").pieces:
        assert all(GL2_CONE.contains(r) for r in piece.rays())


def test_curve_sampling_examples():
    family = [[U("u + 1"), U("u")], [U("u"), U("0")]]
    assert curve_sampling_trop(GL2, family, [[T]]) == [(2, 0)]
    (pt,) = curve_sampling_trop(GL2, family, [[PuiseuxSeries.monomial(1, -1)]])
    assert pt[1] == -1
    assert curve_sampling_trop(SL2, [U("u"), U("u^2")], [[T ** 3]]) == [(3,)]


@given(polynomials(max_terms=4, max_deg=3).filter(lambda f: not f.is_constant()))
def test_chart_union_consistency(f):
    h = sl2_trop_hypersurface(f)
    assert h.combined == h.charts["B"] | h.charts["Bminus"]
    assert sl2_valuations(f) == (h.low_degree, -h.top_degree)


@given(polynomials(max_terms=4, max_deg=3).filter(lambda f: not f.is_constant()),
       st.sampled_from([Fraction(-2), Fraction(-1, 3), Fraction(0), Fraction(1, 2), Fraction(3)]),
       st.sampled_from(["B", "Bminus"]))
def test_unit_detection_matches_certificate(f, v, chart):
    inside = sl2_chart_set(f, chart).contains(v)
    init, is_unit = sl2_initial_and_unit(f, v, chart)
    assert inside == (not is_unit)
    assert chart_unit_certificate(f, v, chart) == is_unit


SL2_CASES = [
    ("x + y - 1", [U("u"), U("1 - u")]),
    ("x - y", [U("u"), U("u")]),
    ("y", [U("u"), U("0")]),
    ("x^2 - y", [U("u"), U("u^2")]),
]


@pytest.mark.parametrize("f, family", SL2_CASES)
def test_curve_sampling_soundness_sl2(f, family):
    exact = sl2_trop_hypersurface(f).combined
    points = curve_sampling_trop(SL2, family, skip_invalid=True)
    assert points
    assert all(inside_exact_set(SL2, p, exact) for p in points)


def test_curve_sampling_soundness_gl2():
    angle = gl2_borel_trop("d - 1")
    family = [[U("u"), U("u + 2")], [U("3*u^2 + 1"), U("1")]]
    points = curve_sampling_trop(GL2, family, skip_invalid=True)
    assert points and all(angle.contains(p) for p in points)
    ray = gl2_borel_trop("c - 1")
    family = [[U("u"), U("2*u + 1")], [U("1"), U("u^2")]]
    subs = default_substitutions(1, exponents=range(0, 4))
    points = curve_sampling_trop(GL2, family, subs, skip_invalid=True)
    assert points and all(ray.contains(p) for p in points)


def test_other_charts_contribute_for_c_minus_one():
    family = [[U("u"), U("0")], [U("1"), U("u^-1")]]
    (pt,) = curve_sampling_trop(GL2, family, [[PuiseuxSeries.monomial(1, -1)]])
    assert pt == (1, -1)
    assert not gl2_borel_trop("c - 1").contains(pt)
