"""JSON readers for the CLI input files.

Rationals are ``"p/q"`` strings.  Polynomials may be given either as
``{"vars", "mode", "terms"}`` objects or as strings such as ``"x + y - 1"``;
series either as ``{"k", "terms", "trunc"}`` objects or strings in ``t``.
"""

import json
from importlib import resources

from .errors import InputError
from .exact import PuiseuxSeries, as_fraction
from .poly import Polynomial
from .snf import SeriesMatrix


def load(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from exc


def load_data(name):
    """A file bundled with the package (``spherotrop/data``)."""
    return json.loads(resources.files("spherotrop").joinpath("data", name).read_text())


def dumps(obj):
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def parse_ideal(obj, default_vars=None):
    """``{"vars": [...], "mode": ..., "generators": [...]}`` to polynomials."""
    if isinstance(obj, list):
        obj = {"generators": obj}
    if not isinstance(obj, dict) or "generators" not in obj:
        raise InputError("ideal files need a 'generators' list")
    names = obj.get("vars", default_vars)
    laurent = obj.get("mode", "poly") == "laurent"
    gens = []
    for g in obj["generators"]:
        if isinstance(g, str) and names is None:
            raise InputError("string generators need a 'vars' list")
        gens.append(Polynomial.from_json(g, names, laurent))
    if not gens:
        raise InputError("ideal has no generators")
    n = gens[0].n
    if any(g.n != n for g in gens):
        raise InputError("generators live in different rings")
    return gens


def parse_polynomial(obj, default_vars=None):
    if isinstance(obj, dict) and "generators" in obj:
        gens = parse_ideal(obj, default_vars)
        if len(gens) != 1:
            raise InputError("expected a single polynomial")
        return gens[0]
    if isinstance(obj, dict) and "polynomial" in obj:
        return Polynomial.from_json(obj["polynomial"], obj.get("vars", default_vars))
    return Polynomial.from_json(obj, default_vars)


def parse_weight(v):
    if not isinstance(v, (list, tuple)):
        raise InputError("weight vectors are lists of rationals")
    return tuple(as_fraction(x) for x in v)


def parse_grid(obj):
    if isinstance(obj, dict):
        obj = obj.get("weights", [])
    return [parse_weight(w) for w in obj]


def parse_series_list(obj):
    if isinstance(obj, dict):
        obj = obj.get("coords", obj.get("point"))
    if not isinstance(obj, list):
        raise InputError("expected a list of series")
    return [PuiseuxSeries.from_json(x) for x in obj]


def parse_matrix(obj):
    try:
        return SeriesMatrix.from_json(obj)
    except (KeyError, TypeError) as exc:
        raise InputError("bad matrix object") from exc


def parse_point(model, obj):
    if model.kind == "gln":
        return parse_matrix(obj)
    return parse_series_list(obj)


def parse_curves(obj):
    if isinstance(obj, dict):
        obj = obj.get("curves", [])
    return [parse_series_list(c) for c in obj]
