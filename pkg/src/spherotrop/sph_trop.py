"""Spherical tropical varieties on the worked SL(2) and GL(2) examples."""

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .errors import (
    ConstantPolynomial,
    InputError,
    InvalidPoint,
    UnsupportedHypersurface,
    ZeroPolynomial,
)
from .exact import PuiseuxSeries, as_fraction, fraction_str
from .fan import initial_ideal_any
from .poly import Polynomial, TermOrder, buchberger_reduced
from .polyhedral import Cone, in_cone
from .snf import default_precision
from .spherical import SphericalModel, model_tropicalize

SL2_VARS = ("x", "y")
GL2_VARS = ("a", "b", "c", "d")
CHARTS = ("B", "Bminus")


@dataclass(frozen=True)
class RaySet1D:
    """Subset of Q that is a union of the cells Q_{<0}, {0}, Q_{>0}."""

    neg: bool = False
    zero: bool = False
    pos: bool = False

    _NAMES = {
        (False, False, False): "empty",
        (False, True, False): "{0}",
        (True, True, False): "Q_{<=0}",
        (False, True, True): "Q_{>=0}",
        (True, True, True): "Q",
        (True, False, False): "Q_{<0}",
        (False, False, True): "Q_{>0}",
        (True, False, True): "Q\\{0}",
    }

    @property
    def name(self):
        return self._NAMES[(self.neg, self.zero, self.pos)]

    @classmethod
    def from_name(cls, name):
        for flags, label in cls._NAMES.items():
            if label == name:
                return cls(*flags)
        raise InputError(f"unknown ray set {name!r}")

    def contains(self, v):
        v = as_fraction(v)
        return self.neg if v < 0 else self.pos if v > 0 else self.zero

    def union(self, other):
        return RaySet1D(self.neg or other.neg, self.zero or other.zero, self.pos or other.pos)

    __or__ = union

    def __str__(self):
        return self.name


RaySet1D.EMPTY = RaySet1D()
RaySet1D.Q = RaySet1D(True, True, True)
RaySet1D.NONPOSITIVE = RaySet1D(True, True, False)


def _as_sl2(f):
    if isinstance(f, str):
        f = Polynomial.parse(f, SL2_VARS)
    if f.n != 2:
        raise InputError("SL(2) examples use polynomials in x, y")
    return f


def sl2_initial(h, v):
    """Lowest form for ``v > 0``, top form for ``v < 0``, ``h`` itself at 0."""
    if not h:
        raise ZeroPolynomial("initial form of zero")
    v = as_fraction(v)
    if v > 0:
        return h.lowest_form()
    if v < 0:
        return h.top_form()
    return h


def is_chart_unit(h, chart):
    """Scalar times a power of the chart's inverted variable."""
    if chart not in CHARTS:
        raise InputError(f"unknown chart {chart!r}")
    if len(h.terms) != 1:
        return False
    (a,) = h.terms
    other = 0 if chart == "B" else 1
    return a[other] == 0


def sl2_initial_and_unit(h, v, chart="B"):
    h = _as_sl2(h)
    init = sl2_initial(h, v)
    return init, is_chart_unit(init, chart)


def sl2_chart_set(f, chart):
    """``trop_chart`` of ``V(f)``: the cells where in_v(f) is not a unit."""
    flags = [not sl2_initial_and_unit(f, v, chart)[1] for v in (-1, 0, 1)]
    return RaySet1D(*flags)


@dataclass
class Sl2Hypersurface:
    charts: dict
    combined: RaySet1D
    low_degree: int
    top_degree: int

    def to_json(self):
        return {
            "chart_B": self.charts["B"].name,
            "chart_Bminus": self.charts["Bminus"].name,
            "combined": self.combined.name,
            "delta": [self.low_degree, self.top_degree],
        }


def sl2_trop_hypersurface(f):
    f = _as_sl2(f)
    if not f:
        raise ZeroPolynomial("zero polynomial")
    if f.is_constant():
        raise ConstantPolynomial("hypersurface of a constant")
    charts = {c: sl2_chart_set(f, c) for c in CHARTS}
    combined = charts["B"] | charts["Bminus"]
    m, d = delta_polytope(f)
    return Sl2Hypersurface(charts, combined, m, d)


def delta_polytope(f):
    """``[lowest degree, highest degree]`` present in ``f``."""
    if not f:
        raise ZeroPolynomial("zero polynomial")
    return f.low_degree(), f.degree()


def sl2_valuations(f):
    """Values of the two generating valuations: ``(v1(f), v2(f)) = (m, -d)``."""
    m, d = delta_polytope(f)
    return m, -d


def _top_first(n=2):
    return TermOrder.degree_classical(n)


def sl2_spherical_gb(gens):
    """Reduced basis whose leading terms sit in top-degree components."""
    gens = [_as_sl2(g) for g in gens]
    return buchberger_reduced(gens, _top_first())


def sl2_spherical_initial_ideal(gens):
    """Top-degree forms of :func:`sl2_spherical_gb`, reduced."""
    gb = sl2_spherical_gb(gens)
    return buchberger_reduced([g.top_form() for g in gb], _top_first())


def sl2_spherical_fan(gens):
    """Initial ideal on each cell of the rank-one valuation cone."""
    gens = [_as_sl2(g) for g in gens]
    return {
        "v<0": sl2_spherical_initial_ideal(gens),
        "v=0": buchberger_reduced(gens, _top_first()),
        "v>0": initial_ideal_any(gens, (1, 1)),
    }


def chart_unit_certificate(f, v, chart):
    """Does ``in_v`` of the chart-localised ideal ``<f>`` contain a unit?

    Localising at the inverted variable ``z`` means saturating by ``z``;
    the initial ideal contains a unit iff its saturation by ``z`` is 1.
    """
    f = _as_sl2(f)
    init = sl2_initial(f, v)
    z = 1 if chart == "B" else 0
    aux_names = ["x", "y", "_u"]
    ext = init.embed(3, [0, 1], aux_names)
    mono = [0, 0, 1]
    mono[z] = 1
    aux = Polynomial({tuple(mono): 1, (0, 0, 0): -1}, 3, aux_names)
    gb = buchberger_reduced([ext, aux], TermOrder.degree_classical(3))
    return len(gb) == 1 and gb[0].is_constant()


# -- GL(2) --------------------------------------------------------------------

R1 = Cone(2, [(0, 1)], [(1, 0)]).canonical()
R2 = Cone(2, [(1, -1)], [(-1, 0)]).canonical()
ANGLE_R1_R2 = Cone(2, [], [(1, -1), (0, -1)]).canonical()
GL2_CONE = Cone(2, [], [(1, -1)]).canonical()


def _as_gl2(h):
    if isinstance(h, str):
        h = Polynomial.parse(h, GL2_VARS)
    if h.n != 4:
        raise InputError("GL(2) examples use polynomials in a, b, c, d")
    return h


def _gl2_entry_hyperplane(h):
    """``(entry index, coefficient, constant)`` if h = lam*z + mu, else None."""
    const = h.terms.get((0, 0, 0, 0), Fraction(0))
    rest = [(a, c) for a, c in h.terms.items() if any(a)]
    if len(rest) != 1 or const == 0:
        return None
    a, lam = rest[0]
    if sum(a) != 1:
        return None
    return a.index(1), lam, const


def _simplify(pieces):
    pieces = [p.canonical() for p in pieces]
    keep = []
    for i, p in enumerate(pieces):
        if any(j != i and _cone_subset(p, q) and not (p == q and j > i) for j, q in enumerate(pieces)):
            continue
        keep.append(p)
    return keep


def _cone_subset(p, q):
    gens = list(p.rays())
    lin = p.lineality_space()
    for r in gens:
        if not q.contains(r):
            return False
    return all(q.contains(x) and q.contains(tuple(-y for y in x)) for x in lin)


class Cone2Set:
    """Finite union of rational cones inside ``{(x, y) : x >= y}``."""

    def __init__(self, pieces):
        pieces = _simplify(pieces)
        for p in pieces:
            for r in p.rays():
                if not GL2_CONE.contains(r):
                    raise InputError("piece leaves the GL(2) valuation cone")
        self.pieces = sorted(pieces, key=repr)

    def contains(self, v):
        return any(p.contains(v) for p in self.pieces)

    def __eq__(self, other):
        return isinstance(other, Cone2Set) and set(self.pieces) == set(other.pieces)

    def __repr__(self):
        return f"Cone2Set({self.pieces})"

    def to_json(self):
        return [p.to_json() for p in self.pieces]


def gl2_borel_trop(h):
    """``trop_{BxB}`` of the hyperplanes ``c = 1`` and ``d = 1``.

    At ``v = (x, y)`` with ``x >= y`` every matrix coefficient has value
    ``y``, so the initial form of ``lam*z + mu`` is ``lam*z`` (y < 0),
    ``h`` (y = 0) or ``mu`` (y > 0).  Units of the chart ring are the
    scalars times powers of ``c`` and of the determinant.
    """
    h = _as_gl2(h)
    parsed = _gl2_entry_hyperplane(h)
    if parsed is None or parsed[0] not in (2, 3):
        raise UnsupportedHypersurface(
            "only the hyperplanes c = const and d = const of the Borel chart are supported"
        )
    entry = parsed[0]
    pieces = [Cone(2, [(0, 1)], [(1, -1)])]  # y = 0: h itself, never a unit
    entry_is_unit = entry == 2
    if not entry_is_unit:
        pieces.append(Cone(2, [], [(1, -1), (0, -1)]))  # y < 0: lam*z
    return Cone2Set(pieces)


# -- curve sampling -------------------------------------------------------------


def default_substitutions(nparams, exponents=range(-3, 4), coefficients=(1, 2)):
    choices = [PuiseuxSeries.monomial(c, a) for a in exponents for c in coefficients]
    return list(product(choices, repeat=nparams))


def evaluate_family(model, family, subs, precision=None):
    """Substitute Puiseux values for the parameters of a polynomial family."""
    precision = default_precision() if precision is None else precision
    subs = list(subs)

    def ev(p):
        return PuiseuxSeries.coerce(p.substitute(subs, precision))

    if model.kind == "gln":
        return [[ev(p) for p in row] for row in family]
    return [ev(p) for p in family]


def curve_sampling_trop(model, family, substitutions=None, precision=None, skip_invalid=False):
    """Tropicalise a parametrised family at monomial Puiseux substitutions.

    Returns the sorted set of cone points reached (an inner approximation).
    """
    flat = [p for row in family for p in row] if model.kind == "gln" else list(family)
    if not flat:
        raise InputError("empty family")
    nparams = flat[0].n
    if substitutions is None:
        substitutions = default_substitutions(nparams)
    points = set()
    for subs in substitutions:
        if len(subs) != nparams:
            raise InputError("substitution has the wrong number of parameters")
        point = evaluate_family(model, family, subs, precision)
        try:
            points.add(model_tropicalize(model, point))
        except InvalidPoint:
            if not skip_invalid:
                raise
    return sorted(points)


def parse_family(model, obj):
    """``{"params": [...], "entries": [[...]]}`` or ``{"params", "coords"}``."""
    params = obj.get("params", ["u"])
    if model.kind == "gln":
        rows = obj["entries"]
        return [[Polynomial.from_json(p, params) if not isinstance(p, dict)
                 else Polynomial.from_json(p) for p in r] for r in rows]
    return [Polynomial.from_json(p, params) if not isinstance(p, dict)
            else Polynomial.from_json(p) for p in obj["coords"]]


def points_json(points):
    return [[fraction_str(x) for x in p] for p in points]


def inside_exact_set(model, point, exact):
    if isinstance(exact, RaySet1D):
        return exact.contains(point[0])
    return exact.contains(point)


__all__ = [
    "ANGLE_R1_R2",
    "Cone2Set",
    "R1",
    "R2",
    "RaySet1D",
    "SphericalModel",
    "chart_unit_certificate",
    "curve_sampling_trop",
    "delta_polytope",
    "gl2_borel_trop",
    "in_cone",
    "sl2_initial_and_unit",
    "sl2_spherical_fan",
    "sl2_spherical_gb",
    "sl2_spherical_initial_ideal",
    "sl2_trop_hypersurface",
]
