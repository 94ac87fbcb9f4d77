import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from spherotrop.amoeba import (
    amoeba_sample,
    grid_values,
    numeric_family,
    snf_svd_limit_check,
    spherical_log,
    svd_values,
)
from spherotrop.errors import DegeneratePoint, InputError
from spherotrop.exact import T
from spherotrop.poly import Polynomial
from spherotrop.snf import SeriesMatrix
from spherotrop.spherical import SphericalModel

SL2 = SphericalModel.sl2()
GL2 = SphericalModel.gln(2)
TORUS2 = SphericalModel.torus(2)


def random_unitary(rng, n):
    z = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def test_svd_examples():
    assert svd_values(np.diag([3.0, 1.0])) == pytest.approx([1.0, 3.0])
    assert svd_values([[0, 2], [1, 0]]) == pytest.approx([1.0, 2.0])
    rng = np.random.default_rng(0)
    A = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    assert np.prod(svd_values(A)) == pytest.approx(abs(np.linalg.det(A)), rel=1e-9)


def test_svd_matches_reference():
    rng = np.random.default_rng(5)
    for n in (1, 2, 3, 5, 8):
        A = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
        ref = np.sort(np.linalg.svd(A, compute_uv=False))
        assert svd_values(A) == pytest.approx(ref, rel=1e-10)


def test_svd_rejects_bad_input():
    with pytest.raises(InputError):
        svd_values(np.zeros((9, 9)))
    with pytest.raises(InputError):
        svd_values(np.zeros((2, 3)))


@given(st.integers(0, 10_000), st.integers(1, 6))
def test_svd_frobenius_and_unitary_invariance(seed, n):
    rng = np.random.default_rng(seed)
    A = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    d = svd_values(A)
    assert np.sum(d ** 2) == pytest.approx(np.linalg.norm(A) ** 2, rel=1e-9)
    B = random_unitary(rng, n) @ A @ random_unitary(rng, n)
    assert np.max(np.abs(svd_values(B) - d)) <= 1e-8 * max(1.0, d[-1])


def test_spherical_log_examples():
    for t in (0.5, 0.1, 0.003):
        assert spherical_log(TORUS2, [t ** 2, t ** -1], t) == pytest.approx([2, -1])
    assert spherical_log(SL2, [3, 4], 0.1) == pytest.approx([-0.69897], abs=1e-5)
    assert spherical_log(GL2, np.diag([0.1 ** 3, 0.1]), 0.1) == pytest.approx([3, 1])
    with pytest.raises(DegeneratePoint):
        spherical_log(TORUS2, [0, 1], 0.1)
    with pytest.raises(InputError):
        spherical_log(SL2, [1, 1], 2.0)


@given(st.integers(0, 10_000), st.integers(2, 4))
def test_spherical_log_unitary_invariance(seed, n):
    rng = np.random.default_rng(seed)
    model = SphericalModel.gln(n)
    A = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    B = random_unitary(rng, n) @ A @ random_unitary(rng, n)
    assert np.max(np.abs(spherical_log(model, A, 0.01) - spherical_log(model, B, 0.01))) <= 1e-8


def test_amoeba_of_line_matrix_approaches_limit():
    family = [[Polynomial.parse(p, ["s"]) for p in row] for row in (["s + 1", "s"], ["s", "0"])]
    param = numeric_family(GL2, family)
    for t in (1e-2, 1e-4):
        cloud = amoeba_sample(GL2, param, t, [t])
        (pt,) = cloud.points
        assert pt == pytest.approx([2, 0], abs=0.1)


def _distance_to_tropical_line(p):
    x, y = p
    d_diag = abs(x - y) / math.sqrt(2) if x + y <= 0 else math.hypot(x, y)
    d_x = abs(y) if x >= 0 else math.hypot(x, y)
    d_y = abs(x) if y >= 0 else math.hypot(x, y)
    return min(d_diag, d_x, d_y)


def test_torus_line_amoeba_has_three_tentacles():
    s = Polynomial.parse("s", ["s"])
    param = numeric_family(TORUS2, [s, Polynomial.parse("-1 - s", ["s"])])
    t = 1e-3
    cloud = amoeba_sample(TORUS2, param, t, {"exponents": [k / 4 for k in range(-12, 13)], "angles": 8})
    assert len(cloud) > 0
    for p in cloud.points:
        assert _distance_to_tropical_line(p) <= math.log(2) / abs(math.log(t)) + 1e-9
    directions = set()
    for x, y in cloud.points:
        if x < -1.5 and abs(x - y) < 0.3:
            directions.add("diag")
        if x > 1.5 and abs(y) < 0.3:
            directions.add("x")
        if y > 1.5 and abs(x) < 0.3:
            directions.add("y")
    assert directions == {"diag", "x", "y"}


def test_empty_grid_gives_empty_cloud():
    cloud = amoeba_sample(GL2, lambda s: np.eye(2), 0.1, [])
    assert len(cloud) == 0 and cloud.skipped == 0
    assert grid_values({}, 0.1) == []


def test_degenerate_samples_are_skipped():
    s = Polynomial.parse("s", ["s"])
    param = numeric_family(TORUS2, [s, s])
    cloud = amoeba_sample(TORUS2, param, 0.1, [0, 1, 2])
    assert len(cloud) == 2 and cloud.skipped == 1


def test_cloud_outputs(tmp_path):
    s = Polynomial.parse("s", ["s"])
    param = numeric_family(GL2, [[s + 1, s], [s, Polynomial.zero(1, ["s"])]])
    cloud = amoeba_sample(GL2, param, 0.01, {"exponents": [0, 0.5, 1], "angles": 4})
    cloud.to_csv(tmp_path / "c.csv")
    cloud.to_svg(tmp_path / "c.svg", GL2)
    lines = (tmp_path / "c.csv").read_text().splitlines()
    assert lines[0] == "param_re,param_im,L1,L2" and len(lines) == len(cloud) + 1
    svg = (tmp_path / "c.svg").read_text()
    assert svg.startswith("<svg") and "stroke-dasharray" in svg


def test_limit_check_examples():
    A = SeriesMatrix([[1 + T, T], [T, 0]])
    report = snf_svd_limit_check(A, [1e-1, 1e-2, 1e-3, 1e-4])
    assert report.factors == [2, 0]
    assert report.final_deviation <= 0.05 and report.monotone and report.passed
    diag = snf_svd_limit_check(SeriesMatrix.diagonal([T ** 3, T]), [1e-1, 1e-2, 1e-3, 1e-4])
    assert diag.deviations == pytest.approx([0, 0, 0, 0], abs=1e-12)
    ident = snf_svd_limit_check(SeriesMatrix.identity(2), [0.5, 0.1])
    assert ident.deviations == [0.0, 0.0]
    with pytest.raises(InputError):
        snf_svd_limit_check(A, [1.5])
