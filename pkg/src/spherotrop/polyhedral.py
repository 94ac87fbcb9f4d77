"""Exact rational polyhedral cones and polyhedra in H-representation.

Everything is over :class:`Fraction`.  Implicit equalities and redundant
inequalities are detected with Farkas' lemma, which reduces to conic
feasibility; that is decided by a small exact simplex (Bland's rule).
"""

from fractions import Fraction
from functools import reduce
from math import gcd

from .errors import InputError
from .exact import as_fraction, fraction_str


def _vec(v):
    return tuple(as_fraction(x) for x in v)


def dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def primitive(v):
    """Positive rescaling of ``v`` to a primitive integer vector."""
    v = _vec(v)
    den = reduce(lambda a, b: a * b // gcd(a, b), (x.denominator for x in v), 1)
    ints = [int(x * den) for x in v]
    g = reduce(gcd, (abs(x) for x in ints), 0)
    if g == 0:
        return tuple(Fraction(0) for _ in v)
    return tuple(Fraction(x // g) for x in ints)


def rref(rows, ncols):
    """Reduced row echelon form; returns ``(rows, pivot columns)``."""
    m = [list(_vec(r)) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return [tuple(row) for row in m[:r]], pivots


def rank(rows, ncols):
    return len(rref(rows, ncols)[1])


def nullspace(rows, ncols):
    """Basis of ``{x : row . x = 0 for all rows}``."""
    red, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for row, p in zip(red, pivots):
            x[p] = -row[f]
        basis.append(tuple(x))
    return basis


def solve_nonnegative(columns, b):
    """Find ``x >= 0`` with ``sum x_j columns[j] = b`` or return None.

    Phase-one simplex with Bland's rule over exact rationals.
    """
    b = list(_vec(b))
    m = len(b)
    cols = [list(_vec(c)) for c in columns]
    ncols = len(cols)
    rows = []
    for i in range(m):
        row = [c[i] for c in cols]
        rhs = b[i]
        if rhs < 0:
            row = [-x for x in row]
            rhs = -rhs
        rows.append(row + [Fraction(int(j == i)) for j in range(m)] + [rhs])
    width = ncols + m
    basis = [ncols + i for i in range(m)]
    # objective: minimise the sum of artificials == maximise -sum
    obj = [Fraction(0)] * (width + 1)
    for i in range(m):
        for j in range(width + 1):
            obj[j] -= rows[i][j]
    for j in range(ncols, width):
        obj[j] = Fraction(0)
    while True:
        enter = next((j for j in range(width) if obj[j] < 0), None)
        if enter is None:
            break
        best = None
        for i in range(m):
            a = rows[i][enter]
            if a > 0:
                ratio = rows[i][-1] / a
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:
            break
        i = best[1]
        piv = rows[i][enter]
        rows[i] = [x / piv for x in rows[i]]
        for k in range(m):
            if k != i and rows[k][enter] != 0:
                f = rows[k][enter]
                rows[k] = [x - f * y for x, y in zip(rows[k], rows[i])]
        f = obj[enter]
        obj = [x - f * y for x, y in zip(obj, rows[i])]
        basis[i] = enter
    if obj[-1] != 0:
        return None
    x = [Fraction(0)] * ncols
    for i, j in enumerate(basis):
        if j < ncols:
            x[j] = rows[i][-1]
    return x


def in_cone(b, generators, lineality=()):
    """Is ``b`` in ``cone(generators) + span(lineality)``?"""
    b = _vec(b)
    if all(x == 0 for x in b):
        return True
    cols = [_vec(g) for g in generators]
    for e in lineality:
        e = _vec(e)
        cols.append(e)
        cols.append(tuple(-x for x in e))
    if not cols:
        return False
    return solve_nonnegative(cols, b) is not None


def _reduce_mod(v, eq_rows, pivots):
    v = list(v)
    for row, p in zip(eq_rows, pivots):
        if v[p] != 0:
            f = v[p]
            v = [x - f * y for x, y in zip(v, row)]
    return tuple(v)


class Cone:
    """``{w : e.w = 0 for e in equalities, a.w >= 0 for a in inequalities}``.

    Construct freely; :meth:`canonical` returns the unique representation
    (RREF equalities, primitive irredundant facet normals reduced modulo
    the equalities), which is what ``==`` and ``hash`` use.
    """

    def __init__(self, dim, equalities=(), inequalities=(), _canonical=False):
        self.ambient = dim
        self.equalities = tuple(_vec(e) for e in equalities)
        self.inequalities = tuple(_vec(a) for a in inequalities)
        for v in self.equalities + self.inequalities:
            if len(v) != dim:
                raise InputError("constraint length does not match ambient dimension")
        self._is_canonical = _canonical
        self._canon = self if _canonical else None

    @classmethod
    def whole_space(cls, dim):
        return cls(dim, (), (), _canonical=True)

    # -- canonical form -----------------------------------------------

    def canonical(self):
        if self._canon is not None:
            return self._canon
        n = self.ambient
        ineqs = [a for a in self.inequalities if any(a)]
        eqs = [e for e in self.equalities if any(e)]
        implicit = [a for a in ineqs if in_cone(tuple(-x for x in a), ineqs, eqs)]
        eqs = eqs + implicit
        ineqs = [a for a in ineqs if a not in implicit]
        eq_rows, pivots = rref(eqs, n)
        eq_rows = [primitive(r) for r in eq_rows]
        # primitive rescaling keeps pivots nonzero; renormalise for reduction
        unit_rows = [tuple(x / r[p] for x in r) for r, p in zip(eq_rows, pivots)]
        reduced = []
        for a in ineqs:
            r = primitive(_reduce_mod(a, unit_rows, pivots))
            if any(r) and r not in reduced:
                reduced.append(r)
        reduced.sort()
        kept = list(reduced)
        for a in reduced:
            others = [b for b in kept if b != a]
            if in_cone(a, others, eq_rows):
                kept = others
        canon = Cone(n, sorted(eq_rows), sorted(kept), _canonical=True)
        self._canon = canon
        return canon

    @property
    def dimension(self):
        return self.ambient - len(self.canonical().equalities)

    def lineality_space(self):
        c = self.canonical()
        return nullspace(list(c.equalities) + list(c.inequalities), self.ambient)

    def facets(self):
        """Facet normals (canonical inequalities)."""
        return list(self.canonical().inequalities)

    def facet(self, normal):
        c = self.canonical()
        others = [a for a in c.inequalities if a != normal]
        return Cone(self.ambient, list(c.equalities) + [normal], others)

    def is_empty_interior(self):
        return self.dimension < self.ambient

    # -- points -------------------------------------------------------

    def contains(self, w):
        w = _vec(w)
        return all(dot(e, w) == 0 for e in self.equalities) and all(
            dot(a, w) >= 0 for a in self.inequalities
        )

    __contains__ = contains

    def relative_interior_contains(self, w):
        c = self.canonical()
        w = _vec(w)
        return all(dot(e, w) == 0 for e in c.equalities) and all(
            dot(a, w) > 0 for a in c.inequalities
        )

    def relative_interior_point(self):
        """An exact point strictly inside every facet inequality."""
        c = self.canonical()
        n = self.ambient
        if not c.inequalities:
            return tuple(Fraction(0) for _ in range(n))
        # variables: w+ (n), w- (n), slacks (m); a.w - s = 1, e.w = 0
        m = len(c.inequalities)
        cols = []
        rows_a = list(c.inequalities)
        rows_e = list(c.equalities)
        for j in range(n):
            col = [a[j] for a in rows_a] + [e[j] for e in rows_e]
            cols.append(col)
        for j in range(n):
            cols.append([-x for x in cols[j]])
        for i in range(m):
            cols.append([Fraction(-int(i == k)) for k in range(m)] + [Fraction(0)] * len(rows_e))
        b = [Fraction(1)] * m + [Fraction(0)] * len(rows_e)
        x = solve_nonnegative(cols, b)
        if x is None:
            raise InputError("cone has empty relative interior")
        return tuple(x[j] - x[n + j] for j in range(n))

    def rays(self):
        """Extreme rays of the pointed part (display only; brute force)."""
        c = self.canonical()
        n = self.ambient
        lin = self.lineality_space()
        base = list(c.equalities) + list(lin)
        out = []
        from itertools import combinations

        target = n - rank(base, n) - 1
        if target < 0:
            return []
        for sub in combinations(c.inequalities, target):
            ns = nullspace(base + list(sub), n)
            if len(ns) != 1:
                continue
            r = ns[0]
            for cand in (r, tuple(-x for x in r)):
                if all(dot(a, cand) >= 0 for a in c.inequalities):
                    p = primitive(cand)
                    if p not in out:
                        out.append(p)
        return sorted(out)

    def intersect(self, other):
        return Cone(
            self.ambient,
            self.equalities + other.equalities,
            self.inequalities + other.inequalities,
        )

    # -- identity -------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Cone):
            return NotImplemented
        a, b = self.canonical(), other.canonical()
        return a.ambient == b.ambient and a.equalities == b.equalities and a.inequalities == b.inequalities

    def __hash__(self):
        c = self.canonical()
        return hash((c.ambient, c.equalities, c.inequalities))

    def __repr__(self):
        c = self.canonical()

        def fmt(v):
            return "(" + ",".join(fraction_str(x) for x in v) + ")"

        eqs = " ".join(fmt(e) + "=0" for e in c.equalities)
        ins = " ".join(fmt(a) + ">=0" for a in c.inequalities)
        return f"Cone[{c.ambient}]({' '.join(s for s in (eqs, ins) if s) or 'all'})"

    def to_json(self):
        c = self.canonical()
        return {
            "normals": [[fraction_str(x) for x in v] for v in c.equalities + c.inequalities],
            "relations": ["=0"] * len(c.equalities) + [">=0"] * len(c.inequalities),
        }

    @classmethod
    def from_json(cls, obj, dim=None):
        normals = [_vec(v) for v in obj["normals"]]
        rels = obj["relations"]
        if len(rels) != len(normals) or any(r not in ("=0", ">=0") for r in rels):
            raise InputError("cone relations must be '=0' or '>=0', one per normal")
        if normals:
            dim = len(normals[0])
        elif dim is None:
            raise InputError("cannot infer dimension from an empty cone description")
        eqs = [v for v, r in zip(normals, rels) if r == "=0"]
        ins = [v for v, r in zip(normals, rels) if r == ">=0"]
        return cls(dim, eqs, ins)


class Polyhedron:
    """``{w : a.w + b = 0 (equalities), a.w + b >= 0 (inequalities)}``.

    Constraints are pairs ``(a, b)``.  Identity is that of the homogenised
    cone over ``{(w, s) : s >= 0}``.
    """

    def __init__(self, dim, equalities=(), inequalities=()):
        self.ambient = dim
        self.equalities = tuple((_vec(a), as_fraction(b)) for a, b in equalities)
        self.inequalities = tuple((_vec(a), as_fraction(b)) for a, b in inequalities)
        self._cone = None

    def homogenized(self):
        if self._cone is None:
            n = self.ambient
            eqs = [a + (b,) for a, b in self.equalities]
            ins = [a + (b,) for a, b in self.inequalities]
            ins.append(tuple([Fraction(0)] * n + [Fraction(1)]))
            self._cone = Cone(n + 1, eqs, ins).canonical()
        return self._cone

    def is_empty(self):
        c = self.homogenized()
        n = self.ambient + 1
        s_axis = tuple([Fraction(0)] * self.ambient + [Fraction(1)])
        eqs = list(c.equalities)
        return rank(eqs + [s_axis], n) == rank(eqs, n)

    def contains(self, w):
        w = _vec(w)
        return all(dot(a, w) + b == 0 for a, b in self.equalities) and all(
            dot(a, w) + b >= 0 for a, b in self.inequalities
        )

    __contains__ = contains

    def canonical_constraints(self):
        """``(equalities, inequalities)`` as ``(a, b)`` pairs, without ``s >= 0``."""
        c = self.homogenized()
        n = self.ambient
        s_axis = tuple([Fraction(0)] * n + [Fraction(1)])
        eqs = [(v[:n], v[n]) for v in c.equalities]
        ins = [(v[:n], v[n]) for v in c.inequalities if v != s_axis]
        return eqs, ins

    def __eq__(self, other):
        if not isinstance(other, Polyhedron):
            return NotImplemented
        return self.homogenized() == other.homogenized()

    def __hash__(self):
        return hash(self.homogenized())

    def __repr__(self):
        eqs, ins = self.canonical_constraints()

        def fmt(a, b):
            return "(" + ",".join(fraction_str(x) for x in a) + f")·w+{fraction_str(b)}"

        parts = [fmt(a, b) + "=0" for a, b in eqs] + [fmt(a, b) + ">=0" for a, b in ins]
        return "Polyhedron(" + ", ".join(parts) + ")"

    def to_json(self):
        eqs, ins = self.canonical_constraints()

        def enc(a, b):
            return {"normal": [fraction_str(x) for x in a], "offset": fraction_str(b)}

        return {"equalities": [enc(a, b) for a, b in eqs], "inequalities": [enc(a, b) for a, b in ins]}

    @classmethod
    def from_json(cls, obj, dim=None):
        def dec(items):
            return [(_vec(d["normal"]), as_fraction(d["offset"])) for d in items]

        eqs, ins = dec(obj.get("equalities", [])), dec(obj.get("inequalities", []))
        if dim is None:
            first = (eqs + ins)[0][0] if (eqs or ins) else None
            if first is None:
                raise InputError("cannot infer dimension")
            dim = len(first)
        return cls(dim, eqs, ins)


def convex_hull_vertices(points):
    """Vertices of ``conv(points)`` for exact rational points."""
    pts = sorted(set(_vec(p) for p in points))
    verts = []
    for i, p in enumerate(pts):
        others = [q + (Fraction(1),) for j, q in enumerate(pts) if j != i]
        if not others or not in_cone(p + (Fraction(1),), others):
            verts.append(p)
    return verts
