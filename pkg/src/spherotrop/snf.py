"""Invariant factors of square matrices over truncated Puiseux series.

Two routes: determinantal divisors (the definition, used as the oracle)
and elimination over the valuation ring, which also returns transforms
``A = A1 * diag(t^v) * A2`` with ``A1``, ``A2`` invertible over the ring.
"""

import os
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations

from .errors import InputError, PrecisionLoss, SingularMatrix
from .exact import INF, PuiseuxSeries, as_fraction, fraction_str

DEFAULT_PRECISION = 20


def default_precision():
    raw = os.environ.get("SPHEROTROP_PRECISION")
    if raw is None:
        return Fraction(DEFAULT_PRECISION)
    return as_fraction(raw)


class SeriesMatrix:
    """Square matrix with PuiseuxSeries entries (row-major, immutable)."""

    def __init__(self, rows):
        rows = [[PuiseuxSeries.coerce(x) for x in r] for r in rows]
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise InputError("series matrix must be square and nonempty")
        self.n = n
        self.rows = tuple(tuple(r) for r in rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    @classmethod
    def identity(cls, n):
        return cls([[PuiseuxSeries.one() if i == j else PuiseuxSeries.zero() for j in range(n)]
                    for i in range(n)])

    @classmethod
    def diagonal(cls, entries):
        n = len(entries)
        return cls([[entries[i] if i == j else PuiseuxSeries.zero() for j in range(n)]
                    for i in range(n)])

    def __matmul__(self, other):
        n = self.n
        if other.n != n:
            raise InputError("size mismatch")
        out = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = PuiseuxSeries.zero()
                for k in range(n):
                    acc = acc + self.rows[i][k] * other.rows[k][j]
                row.append(acc)
            out.append(row)
        return SeriesMatrix(out)

    def __sub__(self, other):
        return SeriesMatrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __eq__(self, other):
        return isinstance(other, SeriesMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def minor(self, rows, cols):
        return determinant([[self.rows[i][j] for j in cols] for i in rows])

    def det(self):
        return determinant(self.rows)

    def evaluate(self, t):
        import numpy as np

        return np.array([[x.eval(t) for x in r] for r in self.rows], dtype=complex)

    def is_zero_mod_truncation(self):
        return all(not x.has_terms() for r in self.rows for x in r)

    def __repr__(self):
        return "SeriesMatrix(" + repr([list(r) for r in self.rows]) + ")"

    def to_json(self):
        return {"entries": [[x.to_json() for x in r] for r in self.rows]}

    @classmethod
    def from_json(cls, obj):
        rows = obj["entries"] if isinstance(obj, dict) else obj
        if not isinstance(rows, list):
            raise InputError("matrix must be a list of rows")
        return cls([[PuiseuxSeries.from_json(x) for x in r] for r in rows])


def _perm_sign(p):
    sign = 1
    p = list(p)
    for i in range(len(p)):
        while p[i] != i:
            j = p[i]
            p[i], p[j] = p[j], p[i]
            sign = -sign
    return sign


def determinant(rows):
    """Leibniz expansion; fine for the n <= 4 matrices used here."""
    n = len(rows)
    total = PuiseuxSeries.zero()
    for p in permutations(range(n)):
        term = PuiseuxSeries.const(_perm_sign(p))
        for i in range(n):
            term = term * rows[i][p[i]]
            if term.is_zero:
                break
        total = total + term
    return total


def _min_order(values, what):
    """Least order among series, refusing to guess below a truncation."""
    known = []
    bounds = []
    for v in values:
        if v.has_terms():
            known.append(v.ord())
        elif not v.is_exact:
            bounds.append(v.trunc)
    if not known:
        if bounds:
            raise PrecisionLoss(f"all {what} vanish modulo the truncation", bound=min(bounds))
        return INF
    m = min(known)
    if bounds and min(bounds) < m:
        raise PrecisionLoss(
            f"some {what} is zero modulo t^{fraction_str(min(bounds))} below the "
            f"candidate order {fraction_str(m)}",
            bound=min(bounds),
        )
    return m


def determinantal_divisors(A):
    """``d_k`` = least order of a k x k minor, for k = 1..n."""
    n = A.n
    out = []
    for k in range(1, n + 1):
        minors = [A.minor(r, c) for r in combinations(range(n), k)
                  for c in combinations(range(n), k)]
        d = _min_order(minors, f"{k}x{k} minor")
        if d == INF:
            raise SingularMatrix("matrix is singular (a determinantal divisor is infinite)")
        out.append(d)
    return out


def invariant_factors_minors(A):
    """Invariant factors from determinantal divisors, decreasing."""
    d = determinantal_divisors(A)
    factors = [d[0]] + [d[k] - d[k - 1] for k in range(1, len(d))]
    return sorted(factors, reverse=True)


def ord_det(A):
    v = _min_order([A.det()], "determinant")
    if v == INF:
        raise SingularMatrix("determinant is exactly zero")
    return v


@dataclass
class Elimination:
    factors: list
    left: SeriesMatrix
    tau: SeriesMatrix
    right: SeriesMatrix

    def reconstruct(self):
        return self.left @ self.tau @ self.right


def invariant_factors_elimination(A, precision=None, transforms=False):
    """Invariant factors by pivoting on least-order entries, decreasing.

    With ``transforms=True`` returns an :class:`Elimination` carrying
    ``A1, tau, A2`` with ``A == A1 tau A2`` up to truncation.
    """
    target = as_fraction(precision) if precision is not None else default_precision()
    n = A.n
    M = [list(r) for r in A.rows]
    one, zero = PuiseuxSeries.one(), PuiseuxSeries.zero()
    L = [[one if i == j else zero for j in range(n)] for i in range(n)]
    R = [[one if i == j else zero for j in range(n)] for i in range(n)]
    for s in range(n):
        cands = [(i, j) for i in range(s, n) for j in range(s, n)]
        values = [M[i][j] for i, j in cands]
        q = _min_order(values, "remaining entry")
        if q == INF:
            raise SingularMatrix("matrix is singular")
        pi, pj = next((i, j) for i, j in cands if M[i][j].has_terms() and M[i][j].ord() == q)
        if pi != s:
            M[s], M[pi] = M[pi], M[s]
            for row in L:
                row[s], row[pi] = row[pi], row[s]
        if pj != s:
            for row in M:
                row[s], row[pj] = row[pj], row[s]
            R[s], R[pj] = R[pj], R[s]
        piv = M[s][s]
        inv_target = target if piv.is_exact else min(target, piv.trunc - q)
        pinv = piv.inverse(inv_target)
        for i in range(s + 1, n):
            if M[i][s].is_zero:
                continue
            m = M[i][s] * pinv
            M[i] = [M[i][k] - m * M[s][k] if k > s else M[i][k] for k in range(n)]
            M[i][s] = zero
            for row in L:
                row[s] = row[s] + m * row[i]
        for j in range(s + 1, n):
            if M[s][j].is_zero:
                continue
            m = M[s][j] * pinv
            M[s][j] = zero
            R[s] = [a + m * b for a, b in zip(R[s], R[j])]
    exps = []
    units = []
    for s in range(n):
        v = M[s][s].ord()
        exps.append(v)
        units.append(M[s][s].shift(-v))
    perm = sorted(range(n), key=lambda i: (-exps[i], i))
    factors = [exps[i] for i in perm]
    if not transforms:
        return factors
    left = [[L[i][perm[c]] * units[perm[c]] for c in range(n)] for i in range(n)]
    right = [list(R[perm[r]]) for r in range(n)]
    tau = SeriesMatrix.diagonal([PuiseuxSeries.monomial(1, v) for v in factors])
    return Elimination(factors, SeriesMatrix(left), tau, SeriesMatrix(right))


def snf_summary(A):
    """JSON-ready ``{"factors": [...], "ord_det": "p/q"}`` (minors route)."""
    factors = invariant_factors_minors(A)
    return {"factors": [fraction_str(v) for v in factors], "ord_det": fraction_str(ord_det(A))}
