import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from spherotrop.errors import InputError, InvalidPoint, NonGenericWarning, RankMismatch
from spherotrop.exact import T, PuiseuxSeries, series
from spherotrop.poly import Polynomial
from spherotrop.snf import SeriesMatrix
from spherotrop.spherical import (
    SphericalModel,
    ValuationCone,
    cone_membership,
    model_tropicalize,
    sumihiro_estimate,
)

from conftest import random_series

SL2 = SphericalModel.sl2()
GL2 = SphericalModel.gln(2)
Y = Polynomial.parse("y", ["x", "y"])


def test_cone_membership_examples():
    cone = GL2.cone
    assert cone_membership(cone, (1, 0)).kind == "interior"
    face = cone_membership(cone, (1, 1))
    assert face.kind == "face" and face.roots == (0,)
    assert cone_membership(cone, (0, 1)).kind == "outside"
    with pytest.raises(RankMismatch):
        cone.classify((1, 2, 3))


def test_cone_must_be_simplicial():
    with pytest.raises(InputError):
        ValuationCone(2, [(1, 0), (2, 0)])


def test_model_parsing():
    assert SphericalModel.parse("torus:3").n == 3
    assert SphericalModel.parse("gl3").cone.roots == ((-1, 1, 0), (0, -1, 1))
    assert SphericalModel.parse("sl2").rank == 1
    with pytest.raises(InputError):
        SphericalModel.parse("so5")


def test_tropicalize_examples():
    assert model_tropicalize(SL2, [T ** 2, T ** 3]) == (2,)
    assert model_tropicalize(GL2, SeriesMatrix.diagonal([T ** 3, T])) == (3, 1)
    assert model_tropicalize(GL2, [[1 + T, T], [T, 0]]) == (2, 0)
    assert model_tropicalize(SphericalModel.torus(2), [T, series({-2: 5})]) == (1, -2)
    with pytest.raises(InvalidPoint):
        model_tropicalize(SL2, [0, 0])
    with pytest.raises(InvalidPoint):
        model_tropicalize(GL2, [[T, T], [T, T]])


def test_sumihiro_examples():
    res = sumihiro_estimate(SL2, [T ** 2, T ** 3], Y, samples=20, seed=0)
    assert res.value == 2 and res.stable
    assert sumihiro_estimate(SL2, [1, T ** 5], Y, samples=10).value == 0


def test_sumihiro_torus_translation_keeps_order():
    torus = SphericalModel.torus(2)
    f = Polynomial.parse("x*y^2", ["x", "y"])
    point = [1 + T, series({"-1/2": 3})]
    res = sumihiro_estimate(torus, point, f, samples=8, seed=3)
    assert res.values == [-1] * 8 and res.streak == 8


def test_sumihiro_warns_when_unstable(monkeypatch):
    import spherotrop.spherical as sph

    scales = iter([1, 1, 1, 2])
    monkeypatch.setattr(sph, "_translate", lambda model, rng, point: [p * next(scales) for p in point])
    f = Polynomial.parse("x - 1", ["x"])
    with pytest.warns(NonGenericWarning):
        res = sumihiro_estimate(SphericalModel.torus(1), [1 + T], f, samples=4)
    assert res.values == [1, 1, 1, 0]
    assert res.value == 0 and res.streak == 1 and not res.stable


def test_sumihiro_is_deterministic():
    a = sumihiro_estimate(SL2, [series({-1: 2, 0: 1}), T], Y, seed=11)
    b = sumihiro_estimate(SL2, [series({-1: 2, 0: 1}), T], Y, seed=11)
    assert a == b


@given(st.integers(0, 100_000))
def test_sl2_consistency(seed):
    rng = random.Random(seed)
    point = [random_series(rng), random_series(rng)]
    res = sumihiro_estimate(SL2, point, Y, samples=20, seed=seed, warn=False)
    assert res.value == model_tropicalize(SL2, point)[0]


@given(st.integers(0, 100_000), st.sampled_from([2, 3]))
def test_tropicalization_lands_in_cone(seed, n):
    rng = random.Random(seed)
    model = SphericalModel.gln(n)
    A = SeriesMatrix([[random_series(rng) for _ in range(n)] for _ in range(n)])
    try:
        v = model_tropicalize(model, A)
    except InvalidPoint:
        return
    assert model.cone.contains(v)
