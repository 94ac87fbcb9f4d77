"""Valuation cones and the three homogeneous-space models.

``torus:n``  the torus acting on itself, cone = Q^n;
``sl2``      SL(2) on the punctured plane, cone = Q, weight generator y;
``gl<n>``    GL(n) under left-right multiplication, cone = decreasing tuples.
"""

import random
import warnings
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import (
    InputError,
    InvalidPoint,
    NonGenericWarning,
    RankMismatch,
    SingularMatrix,
)
from .exact import INF, PuiseuxSeries, as_fraction
from .polyhedral import dot, rank
from .snf import SeriesMatrix, default_precision, invariant_factors_minors
from .tropical import trop_point

SAMPLE_BOUND = 10


@dataclass(frozen=True)
class Membership:
    kind: str  # "interior" | "face" | "outside"
    roots: tuple = ()


class ValuationCone:
    """``{v : <v, beta> <= 0 for every spherical root beta}``."""

    def __init__(self, rank_, roots=()):
        self.rank = rank_
        self.roots = tuple(tuple(as_fraction(x) for x in b) for b in roots)
        for b in self.roots:
            if len(b) != rank_:
                raise RankMismatch("spherical root has the wrong length")
        if self.roots and rank(self.roots, rank_) != len(self.roots):
            raise InputError("spherical roots must be linearly independent (simplicial cone)")

    def classify(self, v):
        v = tuple(as_fraction(x) for x in v)
        if len(v) != self.rank:
            raise RankMismatch(f"expected a vector of length {self.rank}")
        vals = [dot(v, b) for b in self.roots]
        bad = tuple(i for i, x in enumerate(vals) if x > 0)
        if bad:
            return Membership("outside", bad)
        tight = tuple(i for i, x in enumerate(vals) if x == 0)
        return Membership("face", tight) if tight else Membership("interior")

    def contains(self, v):
        return self.classify(v).kind != "outside"


def cone_membership(cone, v):
    return cone.classify(v)


@dataclass(frozen=True)
class SphericalModel:
    kind: str  # "torus" | "sl2" | "gln"
    n: int
    cone: ValuationCone = field(compare=False)

    @property
    def name(self):
        if self.kind == "torus":
            return f"torus:{self.n}"
        if self.kind == "sl2":
            return "sl2"
        return f"gl{self.n}"

    @property
    def rank(self):
        return self.cone.rank

    @classmethod
    def torus(cls, n):
        return cls("torus", n, ValuationCone(n))

    @classmethod
    def sl2(cls):
        return cls("sl2", 2, ValuationCone(1))

    @classmethod
    def gln(cls, n):
        roots = []
        for i in range(n - 1):
            b = [0] * n
            b[i], b[i + 1] = -1, 1
            roots.append(b)
        return cls("gln", n, ValuationCone(n, roots))

    @classmethod
    def parse(cls, text):
        text = text.strip().lower()
        if text == "sl2":
            return cls.sl2()
        if text.startswith("torus:"):
            return cls.torus(int(text.split(":", 1)[1]))
        if text.startswith("gl") and text[2:].isdigit():
            return cls.gln(int(text[2:]))
        raise InputError(f"unknown model {text!r} (expected sl2, gl<n> or torus:<n>)")

    @property
    def chart_variables(self):
        if self.kind == "sl2":
            return ("x", "y")
        if self.kind == "torus":
            return tuple(f"x{i + 1}" for i in range(self.n)) if self.n > 3 else ("x", "y", "z")[: self.n]
        return tuple(f"a{i + 1}{j + 1}" for i in range(self.n) for j in range(self.n))


def _as_point(model, point):
    if model.kind == "gln":
        return point if isinstance(point, SeriesMatrix) else SeriesMatrix(point)
    pts = [PuiseuxSeries.coerce(x) for x in point]
    if len(pts) != model.n:
        raise InvalidPoint(f"{model.name} points have {model.n} coordinates")
    return pts


def model_tropicalize(model, point):
    """The invariant valuation attached to a Puiseux point, as a cone vector."""
    point = _as_point(model, point)
    if model.kind == "torus":
        if any(p.is_zero for p in point):
            raise InvalidPoint("torus points need invertible coordinates")
        out = trop_point(point)
    elif model.kind == "sl2":
        if all(p.is_zero for p in point):
            raise InvalidPoint("the origin is not on the punctured plane")
        out = (min(p.ord() for p in point),)
    else:
        try:
            out = tuple(invariant_factors_minors(point))
        except SingularMatrix as exc:
            raise InvalidPoint("matrix is not invertible over the Puiseux field") from exc
    if not model.cone.contains(out):
        raise AssertionError(f"tropicalization {out} left the valuation cone")
    return out


# -- generic translates ------------------------------------------------------


def _random_sl2(rng, bound):
    while True:
        a, b, c, d = (rng.randint(-bound, bound) for _ in range(4))
        det = a * d - b * c
        if det:
            return ((Fraction(a, det), Fraction(b, det)), (Fraction(c), Fraction(d)))


def _random_gl(rng, n, bound):
    from .snf import determinant

    while True:
        g = [[Fraction(rng.randint(-bound, bound)) for _ in range(n)] for _ in range(n)]
        rows = [[PuiseuxSeries.const(x) for x in r] for r in g]
        if not determinant(rows).is_zero:
            return g


def _translate(model, rng, point):
    if model.kind == "torus":
        out = []
        for p in point:
            c = 0
            while c == 0:
                c = rng.randint(-SAMPLE_BOUND, SAMPLE_BOUND)
            out.append(p * c)
        return out
    if model.kind == "sl2":
        (a, b), (c, d) = _random_sl2(rng, SAMPLE_BOUND)
        x, y = point
        return [x * a + y * b, x * c + y * d]
    n = model.n
    g1 = SeriesMatrix(_random_gl(rng, n, SAMPLE_BOUND))
    g2 = SeriesMatrix(_random_gl(rng, n, SAMPLE_BOUND))
    moved = g1 @ point @ g2
    return [moved[i, j] for i in range(n) for j in range(n)]


@dataclass
class SumihiroResult:
    value: object
    streak: int
    samples: int
    values: list

    @property
    def stable(self):
        return 2 * self.streak >= self.samples


def sumihiro_estimate(model, point, f, samples=20, seed=0, precision=None, warn=True):
    """``min ord f(g . point)`` over seeded pseudo-random group elements.

    ``streak`` counts the trailing samples during which the running minimum
    did not move; it is a heuristic genericity certificate.
    """
    if samples < 2:
        raise InputError("need at least two samples")
    point = _as_point(model, point)
    precision = default_precision() if precision is None else as_fraction(precision)
    rng = random.Random(seed)
    values = []
    best = INF
    streak = 0
    for _ in range(samples):
        coords = _translate(model, rng, point)
        val = f.substitute(coords, precision)
        val = PuiseuxSeries.coerce(val).ord()
        values.append(val)
        if val < best:
            best = val
            streak = 1
        else:
            streak += 1
    result = SumihiroResult(best, streak, samples, values)
    if warn and not result.stable:
        warnings.warn(
            f"running minimum stable for only {streak} of {samples} samples",
            NonGenericWarning,
            stacklevel=2,
        )
    return result
