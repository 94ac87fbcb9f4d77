"""Tropical geometry over the Puiseux field (torus case)."""

from fractions import Fraction
from itertools import combinations

from .errors import CurveNotOnVariety, InputError, ZeroPolynomial
from .exact import PuiseuxSeries, as_fraction, fraction_str
from .fan import initial_ideal_any
from .poly import Polynomial, TermOrder, buchberger_reduced
from .polyhedral import Polyhedron, dot


def trop_point(point):
    """Coordinatewise order of a point of the torus over Puiseux series."""
    out = []
    for c in point:
        v = PuiseuxSeries.coerce(c).ord()
        if v == float("inf"):
            raise InputError("torus point has a zero coordinate")
        out.append(v)
    return tuple(out)


def coefficient_ord(c):
    if isinstance(c, PuiseuxSeries):
        return c.ord()
    return Fraction(0)


def residue(c):
    if isinstance(c, PuiseuxSeries):
        return c.leading_coefficient()
    return as_fraction(c)


class TropicalSet:
    """Finite union of rational polyhedra."""

    def __init__(self, dim, pieces):
        self.dim = dim
        uniq = []
        for p in pieces:
            if p not in uniq:
                uniq.append(p)
        self.pieces = uniq

    def contains(self, w):
        return any(p.contains(w) for p in self.pieces)

    __contains__ = contains

    def is_empty(self):
        return not self.pieces

    def __eq__(self, other):
        if not isinstance(other, TropicalSet):
            return NotImplemented
        return self.dim == other.dim and set(self.pieces) == set(other.pieces)

    def __repr__(self):
        return f"TropicalSet({self.pieces})"

    def to_json(self):
        return [p.to_json() for p in self.pieces]

    @classmethod
    def from_json(cls, obj, dim):
        return cls(dim, [Polyhedron.from_json(p, dim) for p in obj])


def trop_hypersurface(f):
    """Weights where ``min ord(c_a) + w.a`` is attained at least twice."""
    if not f:
        raise ZeroPolynomial("tropical hypersurface of the zero polynomial")
    n = f.n
    supp = sorted(f.terms)
    vals = {a: coefficient_ord(f.terms[a]) for a in supp}
    pieces = []
    for a, b in combinations(supp, 2):
        eq = (tuple(x - y for x, y in zip(a, b)), vals[a] - vals[b])
        ins = [
            (tuple(x - y for x, y in zip(g, a)), vals[g] - vals[a])
            for g in supp
            if g != a and g != b
        ]
        piece = Polyhedron(n, [eq], ins)
        if not piece.is_empty():
            pieces.append(piece)
    return TropicalSet(n, pieces)


def initial_form_valued(f, w):
    """Residue polynomial on the argmin of ``ord(c_a) + w.a``."""
    if not f:
        raise ZeroPolynomial("initial form of the zero polynomial")
    w = tuple(as_fraction(x) for x in w)
    vals = {a: coefficient_ord(c) + dot(w, a) for a, c in f.terms.items()}
    m = min(vals.values())
    terms = {a: residue(f.terms[a]) for a in f.terms if vals[a] == m}
    return Polynomial(terms, f.n, f.names, f.laurent)


def _rational_gens(gens):
    out = []
    for g in gens:
        if not g:
            continue
        if g.has_series_coefficients():
            raise InputError("membership test needs constant (rational) coefficients")
        out.append(g.clear_denominators())
    if not out:
        raise ZeroPolynomial("ideal has no nonzero generators")
    return out


def saturate_by_variables(gens):
    """Generators of ``I : (x_1 ... x_n)^infinity`` (one auxiliary variable)."""
    n = gens[0].n
    names = list(gens[0].names)
    ext = [g.embed(n + 1, range(n), names + ["_u"]) for g in gens]
    aux = Polynomial({tuple([1] * n + [1]): 1, (0,) * (n + 1): -1}, n + 1, names + ["_u"])
    gb = buchberger_reduced(ext + [aux], TermOrder.elimination(n + 1, [n]))
    kept = [g for g in gb if all(a[n] == 0 for a in g.terms)]
    return [Polynomial({a[:n]: c for a, c in g.terms.items()}, n, names) for g in kept]


def contains_monomial(gens):
    """Does the ideal contain a monomial (equivalently: is the saturation 1)?"""
    sat = saturate_by_variables(gens)
    return len(sat) == 1 and sat[0].is_constant()


class TorusIdeal:
    """A Laurent ideal given by rational generators; caches its saturation."""

    def __init__(self, gens):
        self.gens = _rational_gens(gens)
        self.n = self.gens[0].n
        self.saturated = saturate_by_variables(self.gens)
        self._memo = {}

    def initial_ideal(self, w):
        return initial_ideal_any(self.saturated, w)

    def in_tropical_variety(self, w):
        w = tuple(as_fraction(x) for x in w)
        if w not in self._memo:
            self._memo[w] = not contains_monomial(self.initial_ideal(w))
        return self._memo[w]


def trop_membership(gens, w):
    """True iff ``in_w(I)`` contains no monomial."""
    ideal = gens if isinstance(gens, TorusIdeal) else TorusIdeal(gens)
    return ideal.in_tropical_variety(w)


def on_variety(gens, point, precision=None):
    """Every generator vanishes at ``point`` up to the available truncation."""
    for g in gens:
        v = g.substitute(list(point), precision)
        v = PuiseuxSeries.coerce(v)
        if v.has_terms():
            return False
    return True


def fundamental_check(gens, curves=(), grid=(), precision=20):
    """Cross-check Trop(V(I)) from curves, initial ideals and hypersurfaces.

    (i) every tropicalised curve passes the monomial-freeness test;
    (ii) every grid weight passing it lies on each generator's hypersurface.
    """
    gens = [g for g in gens if g]
    for idx, curve in enumerate(curves):
        if not on_variety(gens, curve, precision):
            raise CurveNotOnVariety(f"curve #{idx} does not lie on V(I)")
    ideal = TorusIdeal(gens)
    hypers = [trop_hypersurface(g) for g in gens]
    failures = []
    curve_points = []
    for idx, curve in enumerate(curves):
        p = trop_point(curve)
        ok = ideal.in_tropical_variety(p)
        curve_points.append({"curve": idx, "trop": [fraction_str(x) for x in p], "member": ok})
        if not ok:
            failures.append({"kind": "curve", "curve": idx, "trop": [fraction_str(x) for x in p]})
    members = []
    for w in grid:
        w = tuple(as_fraction(x) for x in w)
        if ideal.in_tropical_variety(w):
            members.append(w)
            bad = [i for i, h in enumerate(hypers) if not h.contains(w)]
            if bad:
                failures.append({"kind": "grid", "weight": [fraction_str(x) for x in w],
                                 "generators": bad})
    return {
        "passed": not failures,
        "failures": failures,
        "curve_points": curve_points,
        "grid_members": [[fraction_str(x) for x in w] for w in members],
    }
