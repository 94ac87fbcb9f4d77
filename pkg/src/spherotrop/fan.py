"""Weight initial forms, Groebner cones and desk-scale Groebner fans."""

import random
from collections import deque
from fractions import Fraction

from .errors import DimensionTooLarge, InputError, ZeroPolynomial
from .exact import as_fraction, fraction_str
from .poly import (
    GREVLEX,
    Polynomial,
    TermOrder,
    buchberger_reduced,
    dehomogenize,
    homogenize,
)
from .polyhedral import Cone, convex_hull_vertices, dot

MAX_FAN_DIM = 4


def _weight(w, n):
    w = tuple(as_fraction(x) for x in w)
    if len(w) != n:
        raise InputError(f"weight vector has length {len(w)}, ring has {n} variables")
    return w


def initial_form_weight(f, w):
    """Sum of the terms of ``f`` minimising ``w . alpha``."""
    if not f:
        raise ZeroPolynomial("initial form of the zero polynomial")
    w = _weight(w, f.n)
    vals = {a: dot(w, a) for a in f.terms}
    m = min(vals.values())
    return f._like({a: c for a, c in f.terms.items() if vals[a] == m})


def weight_order(w, tiebreak=GREVLEX):
    return TermOrder.weight_refined(w, tiebreak)


def _canonical_basis(polys, tiebreak):
    polys = [p for p in polys if p]
    order = tiebreak if tiebreak.valid_for(polys) else TermOrder.degree_classical(polys[0].n)
    return buchberger_reduced(polys, order)


def initial_ideal_weight(gens, w, tiebreak=GREVLEX):
    """Initial forms of the reduced basis for ``weight(w) refined by tiebreak``."""
    gens = [g for g in gens if g]
    if not gens:
        raise ZeroPolynomial("ideal has no nonzero generators")
    w = _weight(w, gens[0].n)
    gb = buchberger_reduced(gens, weight_order(w, tiebreak))
    return [initial_form_weight(g, w) for g in gb]


def canonical_initial_ideal(gens, w, tiebreak=GREVLEX):
    """Reduced basis of ``in_w(I)``; equal outputs mean equal initial ideals."""
    return _canonical_basis(initial_ideal_weight(gens, w, tiebreak), tiebreak)


def initial_ideal_any(gens, w):
    """``in_w(I)`` for an arbitrary ideal and arbitrary weight.

    Homogenises a degree-compatible basis, takes the initial ideal for
    ``(0, w)`` and dehomogenises.  Returned as a reduced basis.
    """
    gens = [g for g in gens if g]
    if not gens:
        raise ZeroPolynomial("ideal has no nonzero generators")
    n, names = gens[0].n, gens[0].names
    w = _weight(w, n)
    gb = buchberger_reduced(gens, TermOrder.degree_classical(n))
    hnames = ["_h", *names]
    hom = [homogenize(g, 0, hnames) for g in gb]
    forms = initial_ideal_weight(hom, (Fraction(0),) + w)
    back = [dehomogenize(p, 0, list(names)) for p in forms]
    return buchberger_reduced(back, TermOrder.degree_classical(n))


def groebner_cone(gens, w, tiebreak=GREVLEX):
    """Closure of the set of weights sharing ``in_w(I)``."""
    gens = [g for g in gens if g]
    if not gens:
        raise ZeroPolynomial("ideal has no nonzero generators")
    n = gens[0].n
    w = _weight(w, n)
    gb = buchberger_reduced(gens, weight_order(w, tiebreak))
    eqs, ins = [], []
    for g in gb:
        init = initial_form_weight(g, w)
        tops = sorted(init.terms)
        base = tops[0]
        eqs.extend(tuple(x - y for x, y in zip(a, base)) for a in tops[1:])
        ins.extend(tuple(x - y for x, y in zip(b, base)) for b in g.terms if b not in init.terms)
    return Cone(n, eqs, ins).canonical()


def newton_polytope(f):
    if not f:
        raise ZeroPolynomial("Newton polytope of the zero polynomial")
    return [tuple(int(x) for x in v) for v in convex_hull_vertices(f.terms)]


def normal_fan(vertices):
    """Maximal cones ``{w : w.v <= w.u for all u}`` of the (min) normal fan."""
    vertices = [tuple(v) for v in vertices]
    n = len(vertices[0])
    cones = []
    for v in vertices:
        ins = [tuple(u_i - v_i for u_i, v_i in zip(u, v)) for u in vertices if u != v]
        cones.append(Cone(n, (), ins).canonical())
    return cones


class Fan:
    """Maximal cones with their initial ideals and facet adjacency."""

    def __init__(self, dim, cones, initial_ideals, adjacency):
        self.dim = dim
        self.cones = cones
        self.initial_ideals = initial_ideals
        self.adjacency = adjacency

    def __len__(self):
        return len(self.cones)

    def locate(self, w):
        """Indices of maximal cones whose interior contains ``w``."""
        return [i for i, c in enumerate(self.cones) if c.relative_interior_contains(w)]

    def containing(self, w):
        return [i for i, c in enumerate(self.cones) if c.contains(w)]

    def cone_set(self):
        return set(self.cones)

    def to_json(self):
        return {
            "dim": self.dim,
            "cones": [
                dict(c.to_json(), initial_ideal=[p.to_json() for p in ideal])
                for c, ideal in zip(self.cones, self.initial_ideals)
            ],
            "adjacency": [
                {"cones": [i, j], "normal": [fraction_str(x) for x in a]}
                for i, j, a in self.adjacency
            ],
        }

    @classmethod
    def from_json(cls, obj):
        cones = [Cone.from_json(c, obj["dim"]) for c in obj["cones"]]
        ideals = [[Polynomial.from_json(p) for p in c.get("initial_ideal", [])] for c in obj["cones"]]
        adjacency = [
            (e["cones"][0], e["cones"][1], tuple(as_fraction(x) for x in e["normal"]))
            for e in obj.get("adjacency", [])
        ]
        return cls(obj["dim"], cones, ideals, adjacency)


def _generic_start(gens, n, rng):
    for attempt in range(64):
        if attempt == 0:
            w = tuple(Fraction(1, 2 ** i + 1) * (i + 1) for i in range(n))
        else:
            w = tuple(Fraction(rng.randint(-997, 997), rng.randint(1, 97)) for _ in range(n))
        cone = groebner_cone(gens, w)
        if cone.dimension == n:
            return w, cone
    raise InputError("could not find a generic starting weight")


def groebner_fan_enumerate(gens, seed=0):
    """Complete Groebner fan of a homogeneous ideal by facet crossing."""
    gens = [g for g in gens if g]
    if not gens:
        raise ZeroPolynomial("ideal has no nonzero generators")
    n = gens[0].n
    if n > MAX_FAN_DIM:
        raise DimensionTooLarge(f"fan enumeration supports n <= {MAX_FAN_DIM}, got {n}")
    if not all(g.is_homogeneous() for g in gens):
        raise InputError("Groebner fan enumeration needs a homogeneous ideal")
    rng = random.Random(seed)
    w0, c0 = _generic_start(gens, n, rng)
    cones = [c0]
    ideals = [canonical_initial_ideal(gens, w0)]
    index = {c0: 0}
    adjacency = []
    queue = deque([0])
    while queue:
        i = queue.popleft()
        cone = cones[i]
        for a in cone.facets():
            p = cone.facet(a).relative_interior_point()
            neg = tuple(-x for x in a)
            eps = Fraction(1)
            for _ in range(80):
                w = tuple(x - eps * y for x, y in zip(p, a))
                nb = groebner_cone(gens, w)
                if nb.dimension == n and nb.contains(p) and neg in nb.facets():
                    break
                eps /= 2
            else:
                raise InputError("facet crossing failed to find a neighbouring cone")
            j = index.get(nb)
            if j is None:
                j = len(cones)
                cones.append(nb)
                ideals.append(canonical_initial_ideal(gens, w))
                index[nb] = j
                queue.append(j)
            if i < j:
                adjacency.append((i, j, a))
    return Fan(n, cones, ideals, adjacency)
