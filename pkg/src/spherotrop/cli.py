"""Command-line front end: JSON in, JSON / CSV / SVG out.

Exit codes: 0 success, 2 input error, 3 precision loss, 4 a ``check``
subcommand found a property violation.  Diagnostics go to standard error
as one JSON object per line.
"""

import argparse
import json
import os
import sys
import time
import warnings
from fractions import Fraction

from . import io
from .amoeba import amoeba_sample, numeric_family, snf_svd_limit_check
from .errors import InputError, PrecisionLoss
from .exact import PuiseuxSeries, as_fraction, fraction_str
from .fan import groebner_fan_enumerate
from .poly import Polynomial
from .snf import default_precision, invariant_factors_elimination, ord_det, snf_summary
from .sph_trop import (
    ANGLE_R1_R2,
    GL2_VARS,
    R1,
    SL2_VARS,
    RaySet1D,
    curve_sampling_trop,
    gl2_borel_trop,
    parse_family,
    points_json,
    sl2_spherical_fan,
    sl2_spherical_gb,
    sl2_trop_hypersurface,
)
from .spherical import SphericalModel, model_tropicalize, sumihiro_estimate
from .tropical import TorusIdeal, fundamental_check, trop_hypersurface

EXIT_OK, EXIT_INPUT, EXIT_PRECISION, EXIT_CHECK = 0, 2, 3, 4

DEFAULT_AMOEBA_GRID = {"exponents": [x / 4 for x in range(-12, 13)], "angles": 12}


class CheckFailed(Exception):
    """Raised by ``check`` subcommands after printing their report."""


def diag(level, **fields):
    sys.stderr.write(json.dumps(dict(level=level, **fields), sort_keys=True) + "\n")


def emit(obj):
    sys.stdout.write(io.dumps(obj))


# -- subcommands ----------------------------------------------------------------


def cmd_gfan(args):
    gens = io.parse_ideal(io.load(args.ideal))
    fan = groebner_fan_enumerate(gens, seed=args.seed)
    emit(fan.to_json())


def cmd_trop(args):
    gens = io.parse_ideal(io.load(args.ideal))
    out = {"hypersurfaces": [trop_hypersurface(g).to_json() for g in gens]}
    if args.grid:
        ideal = TorusIdeal(gens)
        out["members"] = [
            [fraction_str(x) for x in w]
            for w in io.parse_grid(io.load(args.grid))
            if ideal.in_tropical_variety(w)
        ]
    emit(out)


def cmd_trop_point(args):
    model = SphericalModel.parse(args.model)
    point = io.parse_point(model, io.load(args.point))
    v = model_tropicalize(model, point)
    emit({"model": model.name, "point": [fraction_str(x) for x in v],
          "membership": model.cone.classify(v).kind})


def cmd_sph_trop(args):
    obj = io.load(args.input)
    if args.example == "sl2":
        f = io.parse_polynomial(obj, list(SL2_VARS))
        emit(sl2_trop_hypersurface(f).to_json())
        return
    f = io.parse_polynomial(obj, list(GL2_VARS))
    emit({"pieces": gl2_borel_trop(f).to_json()})


def cmd_sph_gb(args):
    gens = io.parse_ideal(io.load(args.ideal), list(SL2_VARS))
    fan = sl2_spherical_fan(gens)
    emit({
        "basis": [g.to_json() for g in sl2_spherical_gb(gens)],
        "fan": {cell: [g.to_json() for g in ideal] for cell, ideal in fan.items()},
    })


def cmd_snf(args):
    A = io.parse_matrix(io.load(args.matrix))
    if args.algorithm == "minors":
        emit(snf_summary(A))
        return
    factors = invariant_factors_elimination(A, precision=args.precision)
    emit({"factors": [fraction_str(v) for v in factors], "ord_det": fraction_str(ord_det(A))})


def _float_list(text):
    try:
        return [float(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise InputError(f"cannot parse number list {text!r}") from exc


def cmd_svd_limit(args):
    A = io.parse_matrix(io.load(args.matrix))
    report = snf_svd_limit_check(A, _float_list(args.ts), args.tolerance)
    emit(report.to_json())


def cmd_amoeba(args):
    model = SphericalModel.parse(args.model)
    family = parse_family(model, io.load(args.param))
    grid = io.load(args.grid) if args.grid else DEFAULT_AMOEBA_GRID
    cloud = amoeba_sample(model, numeric_family(model, family), args.t, grid)
    outputs = [p for p in (args.out or "").split(",") if p]
    for path in outputs:
        if path.endswith(".csv"):
            cloud.to_csv(path)
        elif path.endswith(".svg"):
            cloud.to_svg(path, model)
        else:
            raise InputError(f"unsupported output type for {path!r} (use .csv or .svg)")
    summary = {"model": model.name, "t": args.t, "points": len(cloud),
               "skipped": cloud.skipped, "outputs": outputs}
    if model.kind != "torus":
        summary["tropical_points"] = points_json(
            curve_sampling_trop(model, family, precision=args.precision, skip_invalid=True)
        )
    emit(summary)


def cmd_check_fundamental(args):
    gens = io.parse_ideal(io.load(args.ideal))
    curves = io.parse_curves(io.load(args.curves)) if args.curves else []
    grid = io.parse_grid(io.load(args.grid)) if args.grid else []
    precision = args.precision if args.precision is not None else default_precision()
    report = fundamental_check(gens, curves, grid, precision)
    emit(report)
    if not report["passed"]:
        raise CheckFailed("fundamental check failed")


# -- bundled golden checks ---------------------------------------------------------


def _check_sl2():
    got = {
        name: sl2_trop_hypersurface(io.parse_polynomial(io.load_data(name), list(SL2_VARS))).combined
        for name in ("f_xplusyminus1.json", "f_xminusy.json")
    }
    ok = got["f_xplusyminus1.json"] == RaySet1D.NONPOSITIVE and got["f_xminusy.json"] == RaySet1D.Q
    return ok, {k: v.name for k, v in got.items()}


def _check_gl2():
    c = gl2_borel_trop(io.parse_polynomial(io.load_data("gl2_c_minus_1.json"), list(GL2_VARS)))
    d = gl2_borel_trop(io.parse_polynomial(io.load_data("gl2_d_minus_1.json"), list(GL2_VARS)))
    ok = c.pieces == [R1] and d.pieces == [ANGLE_R1_R2]
    return ok, {"c-1": c.to_json(), "d-1": d.to_json()}


def _check_snf():
    A = io.parse_matrix(io.load_data("fig1.json"))
    minors = snf_summary(A)["factors"]
    elim = [fraction_str(v) for v in invariant_factors_elimination(A)]
    return minors == elim == ["2", "0"], {"minors": minors, "elimination": elim}


def _check_svd_limit():
    A = io.parse_matrix(io.load_data("fig1.json"))
    report = snf_svd_limit_check(A, [1e-1, 1e-2, 1e-3, 1e-4])
    return report.passed, {"final_deviation": report.final_deviation, "monotone": report.monotone}


def _check_fundamental():
    gens = io.parse_ideal(io.load_data("line.json"))
    curves = io.parse_curves(io.load_data("line_curves.json"))
    grid = [(Fraction(i, 2), Fraction(j, 2)) for i in range(-4, 5) for j in range(-4, 5)]
    report = fundamental_check(gens, curves, grid, default_precision())
    return report["passed"], {"grid_members": len(report["grid_members"]),
                              "curves": len(report["curve_points"])}


def _check_sumihiro():
    model = SphericalModel.sl2()
    point = [PuiseuxSeries.monomial(1, 2), PuiseuxSeries.monomial(1, 3)]
    f = Polynomial.parse("x + y", list(SL2_VARS))
    res = sumihiro_estimate(model, point, f, samples=20, seed=0, warn=False)
    target = model_tropicalize(model, point)[0]
    return res.value == target and res.stable, {"value": fraction_str(res.value), "streak": res.streak}


GOLDEN_CHECKS = (
    ("sl2-hypersurfaces", _check_sl2),
    ("gl2-borel-chart", _check_gl2),
    ("snf-example", _check_snf),
    ("svd-limit", _check_svd_limit),
    ("torus-fundamental", _check_fundamental),
    ("sumihiro-sl2", _check_sumihiro),
)


def run_golden_checks():
    results = []
    for name, fn in GOLDEN_CHECKS:
        start = time.perf_counter()
        ok, detail = fn()
        results.append({"check": name, "passed": bool(ok), "detail": detail,
                        "seconds": round(time.perf_counter() - start, 3)})
    return results


def cmd_check_all(args):
    results = run_golden_checks()
    for r in results:
        r.pop("seconds")
    emit({"passed": all(r["passed"] for r in results), "checks": results})
    if not all(r["passed"] for r in results):
        raise CheckFailed("golden checks failed")


# -- parser and dispatch ---------------------------------------------------------------


def _precision(text):
    try:
        value = as_fraction(text)
    except (InputError, ValueError) as exc:
        raise argparse.ArgumentTypeError(f"bad precision {text!r}") from exc
    if value <= 0:
        raise argparse.ArgumentTypeError("precision must be positive")
    return value


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="random seed (default 0)")
    common.add_argument("--precision", type=_precision, default=None,
                        help="series truncation order (default: SPHEROTROP_PRECISION or 20)")

    parser = _Parser(prog="spherotrop", description="Spherical tropical geometry toolkit.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, fn, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.set_defaults(func=fn)
        return p

    p = add("gfan", cmd_gfan, "Groebner fan of a homogeneous ideal")
    p.add_argument("--ideal", required=True)
    p = add("trop", cmd_trop, "tropical hypersurfaces and grid membership")
    p.add_argument("--ideal", required=True)
    p.add_argument("--grid")
    p = add("trop-point", cmd_trop_point, "tropicalize a point of a model")
    p.add_argument("--model", required=True)
    p.add_argument("--point", required=True)
    p = add("sph-trop", cmd_sph_trop, "spherical tropical hypersurface on a worked model")
    p.add_argument("--example", choices=["sl2", "gl2"], required=True)
    p.add_argument("--input", required=True)
    p = add("sph-gb", cmd_sph_gb, "spherical Groebner data for SL(2) ideals")
    p.add_argument("--ideal", required=True)
    p = add("snf", cmd_snf, "invariant factors of a series matrix")
    p.add_argument("--matrix", required=True)
    p.add_argument("--algorithm", choices=["minors", "elimination"], default="minors")
    p = add("svd-limit", cmd_svd_limit, "singular values against invariant factors")
    p.add_argument("--matrix", required=True)
    p.add_argument("--ts", default="1e-1,1e-2,1e-3,1e-4")
    p.add_argument("--tolerance", type=float, default=0.05)
    p = add("amoeba", cmd_amoeba, "sample a spherical amoeba")
    p.add_argument("--model", required=True)
    p.add_argument("--param", required=True)
    p.add_argument("--t", type=float, default=0.01)
    p.add_argument("--grid")
    p.add_argument("--out")
    p = add("check-fundamental", cmd_check_fundamental, "torus fundamental-theorem harness")
    p.add_argument("--ideal", required=True)
    p.add_argument("--curves")
    p.add_argument("--grid")
    add("check-all", cmd_check_all, "run the bundled golden checks")
    return parser


def cli_dispatch(argv=None):
    saved = os.environ.get("SPHEROTROP_PRECISION")
    try:
        args = build_parser().parse_args(argv)
        if args.precision is not None:
            os.environ["SPHEROTROP_PRECISION"] = fraction_str(args.precision)
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            args.func(args)
        for w in caught:
            diag("warning", category=w.category.__name__, message=str(w.message))
        return EXIT_OK
    except CheckFailed as exc:
        diag("error", error="CheckFailed", message=str(exc))
        return EXIT_CHECK
    except PrecisionLoss as exc:
        diag("error", error=type(exc).__name__, message=str(exc))
        return EXIT_PRECISION
    except (InputError, KeyError, TypeError, ValueError) as exc:
        diag("error", error=type(exc).__name__, message=str(exc))
        return EXIT_INPUT
    finally:
        if saved is None:
            os.environ.pop("SPHEROTROP_PRECISION", None)
        else:
            os.environ["SPHEROTROP_PRECISION"] = saved


def main():
    sys.exit(cli_dispatch())


if __name__ == "__main__":
    main()
