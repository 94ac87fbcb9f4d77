"""Numeric spherical amoebas and the singular-value limit check."""

import csv
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DegeneratePoint, InputError, NoConvergence
from .exact import fraction_str
from .snf import SeriesMatrix, invariant_factors_minors

MAX_N = 8
JACOBI_TOL = 1e-12
MAX_SWEEPS = 60


def svd_values(A, tol=JACOBI_TOL, max_sweeps=MAX_SWEEPS):
    """Singular values by one-sided (Hestenes) Jacobi rotations, increasing."""
    A = np.array(A, dtype=complex)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise InputError("svd_values expects a square matrix")
    n = A.shape[0]
    if n > MAX_N:
        raise InputError(f"matrices up to {MAX_N}x{MAX_N} only")
    if not np.all(np.isfinite(A)):
        raise InputError("matrix has non-finite entries")
    U = A.copy()
    residual = 0.0
    for _ in range(max_sweeps):
        residual = 0.0
        for p in range(n - 1):
            for q in range(p + 1, n):
                up, uq = U[:, p].copy(), U[:, q].copy()
                alpha = np.vdot(up, up).real
                beta = np.vdot(uq, uq).real
                gamma = np.vdot(up, uq)
                g = abs(gamma)
                if alpha == 0.0 or beta == 0.0 or g == 0.0:
                    continue
                off = g / math.sqrt(alpha * beta)
                residual = max(residual, off)
                if off <= tol:
                    continue
                phase = gamma / g
                zeta = (beta - alpha) / (2.0 * g)
                t = math.copysign(1.0, zeta) / (abs(zeta) + math.sqrt(1.0 + zeta * zeta))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = c * t
                uq_rot = uq * np.conj(phase)
                U[:, p] = c * up - s * uq_rot
                U[:, q] = (s * up + c * uq_rot) * phase
        if residual <= tol:
            return np.sort(np.linalg.norm(U, axis=0))
    raise NoConvergence(f"Jacobi SVD did not converge in {max_sweeps} sweeps", residual)


def log_base(x, t):
    return math.log(x) / math.log(t)


def spherical_log(model, p, t):
    """Spherical logarithm at base ``t`` in (0, 1)."""
    t = float(t)
    if not 0 < t < 1:
        raise InputError("base t must lie in (0, 1)")
    if model.kind == "torus":
        z = np.asarray(p, dtype=complex).ravel()
        if len(z) != model.n:
            raise InputError("wrong number of coordinates")
        if np.any(np.abs(z) == 0):
            raise DegeneratePoint("torus point with a zero coordinate")
        return np.array([log_base(abs(x), t) for x in z])
    if model.kind == "sl2":
        z = np.asarray(p, dtype=complex).ravel()
        r = float(np.linalg.norm(z))
        if r == 0:
            raise DegeneratePoint("origin of the plane")
        return np.array([log_base(r, t)])
    A = np.asarray(p, dtype=complex)
    d = svd_values(A)
    if d[0] <= np.finfo(float).tiny or d[0] <= d[-1] * 1e-15:
        raise DegeneratePoint("matrix is numerically singular")
    return np.array([log_base(x, t) for x in d])


@dataclass
class AmoebaCloud:
    t: float
    points: list = field(default_factory=list)
    params: list = field(default_factory=list)
    skipped: int = 0

    def __len__(self):
        return len(self.points)

    def to_csv(self, path):
        dim = len(self.points[0]) if self.points else 0
        with open(path, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["param_re", "param_im"] + [f"L{i + 1}" for i in range(dim)])
            for s, pt in zip(self.params, self.points):
                w.writerow([repr(s.real), repr(s.imag)] + [repr(float(x)) for x in pt])

    def to_svg(self, path, model, size=480):
        with open(path, "w") as fh:
            fh.write(render_svg(self, model, size))


def render_svg(cloud, model, size=480):
    """Scatter plot; GL(2) gets the valuation-cone boundary x = y."""
    pts = [list(map(float, p)) for p in cloud.points]
    if pts and len(pts[0]) == 1:
        pts = [[p[0], 0.0] for p in pts]
    xs = [p[0] for p in pts] or [0.0]
    ys = [p[1] for p in pts] or [0.0]
    lo = min(min(xs), min(ys), -1.0)
    hi = max(max(xs), max(ys), 1.0)
    pad = 0.05 * (hi - lo)
    lo, hi = lo - pad, hi + pad

    def sx(x):
        return (x - lo) / (hi - lo) * size

    def sy(y):
        return size - (y - lo) / (hi - lo) * size

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        f'<rect width="{size}" height="{size}" fill="white"/>',
        f'<line x1="{sx(lo):.2f}" y1="{sy(0):.2f}" x2="{sx(hi):.2f}" y2="{sy(0):.2f}" stroke="#999"/>',
        f'<line x1="{sx(0):.2f}" y1="{sy(lo):.2f}" x2="{sx(0):.2f}" y2="{sy(hi):.2f}" stroke="#999"/>',
    ]
    if model.kind == "gln" and model.n == 2:
        out.append(
            f'<line x1="{sx(lo):.2f}" y1="{sy(lo):.2f}" x2="{sx(hi):.2f}" y2="{sy(hi):.2f}" '
            f'stroke="#c33" stroke-dasharray="4 3"/>'
        )
    for x, y in pts:
        out.append(f'<circle cx="{sx(x):.2f}" cy="{sy(y):.2f}" r="1.5" fill="#236"/>')
    out.append(f'<text x="6" y="16" font-size="12">{model.name}, t = {cloud.t:g}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def grid_values(grid, t):
    """Parameter values from ``{"values": [[re, im], ...]}`` or
    ``{"exponents": [...], "angles": k}`` meaning ``t^r * exp(2 pi i j / k)``."""
    if not grid:
        return []
    if "values" in grid:
        return [complex(*v) if isinstance(v, (list, tuple)) else complex(v) for v in grid["values"]]
    angles = int(grid.get("angles", 1))
    out = []
    for r in grid.get("exponents", []):
        for j in range(angles):
            out.append(float(t) ** float(r) * complex(math.cos(2 * math.pi * j / angles),
                                                      math.sin(2 * math.pi * j / angles)))
    return out


def numeric_family(model, family):
    """Callable ``s -> numeric model point`` from a polynomial family."""

    def ev(p, s):
        return complex(p.substitute([s]))

    if model.kind == "gln":
        return lambda s: np.array([[ev(p, s) for p in row] for row in family])
    return lambda s: np.array([ev(p, s) for p in family])


def amoeba_sample(model, param, t, grid):
    """Apply the spherical logarithm to ``param(s)`` over the grid."""
    cloud = AmoebaCloud(float(t))
    for s in grid_values(grid, t) if isinstance(grid, dict) else list(grid):
        try:
            pt = spherical_log(model, param(s), t)
        except (DegeneratePoint, ZeroDivisionError, ValueError):
            cloud.skipped += 1
            continue
        if not np.all(np.isfinite(pt)):
            cloud.skipped += 1
            continue
        cloud.points.append(pt)
        cloud.params.append(complex(s))
    return cloud


@dataclass
class LimitReport:
    factors: list
    rows: list
    tolerance: float

    @property
    def deviations(self):
        return [r["deviation"] for r in self.rows]

    @property
    def final_deviation(self):
        return self.deviations[-1] if self.rows else 0.0

    @property
    def monotone(self):
        d = self.deviations
        return all(b <= a + 1e-12 for a, b in zip(d, d[1:]))

    @property
    def passed(self):
        return self.monotone and self.final_deviation <= self.tolerance

    def to_json(self):
        return {
            "factors": [fraction_str(v) for v in self.factors],
            "rows": [
                {"t": r["t"], "log_singular_values": list(r["logs"]), "deviation": r["deviation"]}
                for r in self.rows
            ],
            "final_deviation": self.final_deviation,
            "monotone": self.monotone,
            "tolerance": self.tolerance,
            "passed": self.passed,
        }


def snf_svd_limit_check(A, t_values, tolerance=0.05):
    """Compare ``log_t`` of increasing singular values with decreasing
    invariant factors along a decreasing list of ``t``."""
    if not isinstance(A, SeriesMatrix):
        A = SeriesMatrix(A)
    factors = invariant_factors_minors(A)
    target = np.array([float(v) for v in factors])
    rows = []
    for t in t_values:
        t = float(t)
        if not 0 < t < 1:
            raise InputError("t values must lie in (0, 1)")
        logs = np.array([log_base(d, t) for d in svd_values(A.evaluate(t))])
        dev = float(np.max(np.abs(logs - target)))
        rows.append({"t": t, "logs": [float(x) for x in logs], "deviation": dev})
    return LimitReport(factors, rows, tolerance)
